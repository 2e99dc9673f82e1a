#include "rootcover/error.hpp"

namespace rootcover {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::BadSignature: return "BadSignature";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::IncompatiblePartition: return "IncompatiblePartition";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

} // namespace rootcover
