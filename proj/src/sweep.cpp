#include "rootcover/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "rootcover/asympt.hpp"
#include "rootcover/error.hpp"
#include "rootcover/io.hpp"

namespace rootcover {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& key, const std::string& v)
{
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        config_error("key '" + key + "' expects an integer, got '" + v + "'");
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& key, const std::string& v)
{
    auto dots = v.find("..");
    if (dots == std::string::npos) {
        std::int64_t x = parse_int(key, v);
        return {x, x};
    }
    return {parse_int(key, trim(v.substr(0, dots))), parse_int(key, trim(v.substr(dots + 2)))};
}

std::vector<std::int64_t> parse_list(const std::string& key, const std::string& v)
{
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ','))
        out.push_back(parse_int(key, trim(item)));
    return out;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string join_nu(const std::vector<std::int64_t>& nu)
{
    std::string out;
    for (std::size_t i = 0; i < nu.size(); ++i)
        out += (i ? ";" : "") + std::to_string(nu[i]);
    return out;
}

struct Cell {
    std::optional<int> d;
    std::int64_t n;
};

SweepRow run_cell(const SweepConfig& cfg, const Cell& cell, const BasePair& pair)
{
    SweepRow row;
    row.n = cell.n;
    row.d = cell.d;
    row.r = pair.r;
    try {
        Partition part;
        if (cfg.policy == PartitionPolicy::Explicit) {
            row.nu = cfg.nu;
            part = make_partition(cell.n, cfg.nu);
        } else {
            part = find_asymptotic_partition(cell.n, pair.r, cell_seed(cfg.seed, cell.n), cfg.trials);
            row.nu = part.nu;
        }
        row.report = invariant_report(pair, part, cfg.strategy);
        row.status = "ok";
    } catch (const Error& e) {
        row.status = std::string(to_string(e.code()));
        row.message = e.what();
    }
    return row;
}

} // namespace

SweepConfig parse_config(const std::string& text)
{
    SweepConfig cfg;
    std::map<std::string, std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            config_error("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!seen.emplace(key, val).second)
            config_error("duplicate key '" + key + "'");
    }

    for (const auto& [key, val] : seen) {
        if (key == "preset") {
            if (val == "planes_p3")
                cfg.preset = PresetKind::PlanesP3;
            else if (val == "hypersurface_p4")
                cfg.preset = PresetKind::HypersurfaceP4;
            else
                config_error("unknown preset '" + val + "'");
        } else if (key == "basepair") {
            cfg.basepair_path = val;
        } else if (key == "d") {
            auto [lo, hi] = parse_range(key, val);
            cfg.d_min = static_cast<int>(lo);
            cfg.d_max = static_cast<int>(hi);
        } else if (key == "r") {
            cfg.r = static_cast<int>(parse_int(key, val));
        } else if (key == "n") {
            std::tie(cfg.n_min, cfg.n_max) = parse_range(key, val);
        } else if (key == "n_min") {
            cfg.n_min = parse_int(key, val);
        } else if (key == "n_max") {
            cfg.n_max = parse_int(key, val);
        } else if (key == "partition") {
            if (val == "explicit")
                cfg.policy = PartitionPolicy::Explicit;
            else if (val == "asymptotic")
                cfg.policy = PartitionPolicy::Asymptotic;
            else
                config_error("partition must be explicit or asymptotic");
        } else if (key == "nu") {
            cfg.nu = parse_list(key, val);
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(key, val));
        } else if (key == "trials") {
            cfg.trials = parse_int(key, val);
        } else if (key == "strategy") {
            try {
                cfg.strategy = strategy_from_string(val);
            } catch (const Error&) {
                config_error("strategy must be minimal or balanced");
            }
        } else if (key == "format") {
            if (val == "csv")
                cfg.format = OutputFormat::Csv;
            else if (val == "json")
                cfg.format = OutputFormat::Json;
            else
                config_error("format must be csv or json");
        } else if (key == "output") {
            cfg.output = val;
        } else if (key == "digits") {
            cfg.digits = static_cast<int>(parse_int(key, val));
        } else if (key == "workers") {
            cfg.workers = static_cast<int>(parse_int(key, val));
        } else {
            config_error("unknown key '" + key + "'");
        }
    }

    if (cfg.n_min > cfg.n_max || cfg.n_max < 3)
        config_error("empty prime range");
    if (cfg.d_min < 1 || cfg.d_min > cfg.d_max)
        config_error("degree range must be positive and non-empty");
    if (cfg.r < 1)
        config_error("r must be positive");
    if (cfg.policy == PartitionPolicy::Explicit) {
        if (cfg.nu.empty())
            config_error("explicit partition needs nu");
        cfg.r = static_cast<int>(cfg.nu.size());
    }
    if (cfg.trials < 1)
        config_error("trials must be positive");
    if (cfg.digits < 0 || cfg.digits > 60)
        config_error("digits must be in [0, 60]");
    return cfg;
}

SweepConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        config_error("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

std::uint64_t cell_seed(std::uint64_t seed, std::int64_t n)
{
    return splitmix64(seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL));
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("ROOTCOVER_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0)
            return w;
    }
    return 1;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config)
{
    std::vector<std::pair<std::optional<int>, BasePair>> pairs;
    if (!config.basepair_path.empty()) {
        try {
            pairs.emplace_back(std::nullopt, load_basepair(config.basepair_path));
        } catch (const Error& e) {
            config_error(e.what());
        }
    } else if (config.preset == PresetKind::PlanesP3) {
        pairs.emplace_back(std::nullopt, planes_p3(config.r));
    } else {
        for (int d = config.d_min; d <= config.d_max; ++d)
            pairs.emplace_back(d, hypersurface_p4(d, config.r));
    }

    std::vector<std::int64_t> primes = primes_in(config.n_min, config.n_max);
    std::vector<std::pair<std::size_t, Cell>> cells;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::int64_t n : primes)
            cells.push_back({p, Cell{pairs[p].first, n}});

    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            rows[i] = run_cell(config, cells[i].second, pairs[cells[i].first].second);
    };
    int w = std::min<int>(resolve_workers(config.workers), static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < w; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows, int digits)
{
    static const char* kValueColumns[] = {"chi",        "K3",         "euler",        "slope1", "slope2",
                                          "log_slope1", "log_slope2", "chi_err_bound"};
    std::ostringstream out;
    out << "n,d,r,nu,status";
    for (const char* c : kValueColumns)
        out << ',' << c;
    for (const char* c : kValueColumns)
        out << ',' << c << "_rat";
    out << '\n';
    for (const SweepRow& row : rows) {
        std::vector<std::optional<Rat>> vals(8);
        if (row.report) {
            const InvariantReport& rep = *row.report;
            vals[0] = rep.chi.chi;
            vals[1] = rep.k3.K3;
            vals[2] = rep.euler;
            if (rep.slopes) {
                vals[3] = rep.slopes->first;
                vals[4] = rep.slopes->second;
            }
            if (rep.log_slopes) {
                vals[5] = rep.log_slopes->first;
                vals[6] = rep.log_slopes->second;
            }
            vals[7] = rep.chi_error_bound;
        }
        out << row.n << ',' << (row.d ? std::to_string(*row.d) : "") << ',' << row.r << ','
            << join_nu(row.nu) << ',' << row.status;
        for (const auto& v : vals)
            out << ',' << (v ? to_decimal(*v, digits) : "");
        for (const auto& v : vals)
            out << ',' << (v ? to_string(*v) : "");
        out << '\n';
    }
    return out.str();
}

std::string rows_to_json(const std::vector<SweepRow>& rows)
{
    Json arr = Json::array();
    for (const SweepRow& row : rows) {
        Json j = row.report ? to_json(*row.report) : Json{{"n", row.n}, {"nu", row.nu}};
        j["status"] = row.status;
        j["d"] = row.d ? Json(*row.d) : Json(nullptr);
        j["r"] = row.r;
        if (!row.message.empty())
            j["message"] = row.message;
        arr.push_back(std::move(j));
    }
    Json env{{"schema", kReportSchema}, {"rows", arr}};
    return env.dump(2) + "\n";
}

} // namespace rootcover
