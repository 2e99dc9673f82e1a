#include "rootcover/io.hpp"

#include <fstream>

#include "rootcover/error.hpp"

namespace rootcover {

namespace {

Json rats(const std::vector<Rat>& xs)
{
    Json out = Json::array();
    for (const Rat& x : xs)
        out.push_back(rat_json(x));
    return out;
}

Json point_json(const LatticePoint& v) { return Json::array({v.v1, v.v2, v.v3}); }

Json pair_json(const std::optional<std::pair<Rat, Rat>>& p)
{
    if (!p)
        return nullptr;
    return Json::array({rat_json(p->first), rat_json(p->second)});
}

} // namespace

Json rat_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j)
{
    if (j.is_number_integer())
        return make_rat(j.get<std::int64_t>(), 1);
    if (!j.is_string())
        throw Error(ErrorCode::BadInput, "rational must be a \"num/den\" string");
    return rat_from_string(j.get<std::string>());
}

Json to_json(const HJExpansion& hj)
{
    return Json{{"n", hj.n},      {"q", hj.q},          {"ks", hj.ks},          {"m", hj.m_seq},
                {"nn", hj.n_seq}, {"q_inv", hj.q_inv}, {"length", hj.length()}, {"excess", hj.excess}};
}

Json to_json(const BasePair& pair)
{
    Json curves = Json::array();
    for (int j = 0; j < pair.r; ++j)
        for (int k = j + 1; k < pair.r; ++k)
            for (const CurveComponent& c : pair.pair_curves[j][k])
                curves.push_back({{"j", j}, {"k", k}, {"genus", c.genus}, {"count", c.count}});
    return Json{{"schema", kBasePairSchema},
                {"label", pair.label},
                {"r", pair.r},
                {"c1_cubed", pair.c1_cubed},
                {"c1c2", pair.c1c2},
                {"c3", pair.c3},
                {"D3", pair.D3},
                {"c1sq_D", pair.c1sq_D},
                {"c2_D", pair.c2_D},
                {"c1_DD", pair.c1_DD},
                {"DD2", pair.DD2},
                {"pair_curves", curves},
                {"T", pair.T},
                {"e_D", pair.e_D},
                {"e_singD", pair.e_singD},
                {"requires_sum_congruence", pair.requires_sum_congruence}};
}

BasePair basepair_from_json(const Json& j)
{
    try {
        if (j.value("schema", std::string()) != kBasePairSchema)
            throw Error(ErrorCode::BadParams, std::string("expected schema ") + kBasePairSchema);
        BasePair pair;
        pair.resize(j.at("r").get<int>());
        pair.label = j.value("label", std::string("custom"));
        pair.c1_cubed = j.at("c1_cubed").get<std::int64_t>();
        pair.c1c2 = j.at("c1c2").get<std::int64_t>();
        pair.c3 = j.at("c3").get<std::int64_t>();
        j.at("D3").get_to(pair.D3);
        j.at("c1sq_D").get_to(pair.c1sq_D);
        j.at("c2_D").get_to(pair.c2_D);
        j.at("c1_DD").get_to(pair.c1_DD);
        j.at("DD2").get_to(pair.DD2);
        j.at("T").get_to(pair.T);
        pair.e_D = j.at("e_D").get<std::int64_t>();
        pair.e_singD = j.at("e_singD").get<std::int64_t>();
        pair.requires_sum_congruence = j.value("requires_sum_congruence", false);
        for (const Json& c : j.value("pair_curves", Json::array())) {
            int a = c.at("j").get<int>(), b = c.at("k").get<int>();
            if (a < 0 || b <= a || b >= pair.r)
                throw Error(ErrorCode::BadParams, "pair curve indices must satisfy 0 <= j < k < r");
            pair.pair_curves[a][b].push_back(
                CurveComponent{c.at("genus").get<std::int64_t>(), c.at("count").get<std::int64_t>()});
        }
        validate(pair);
        return pair;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadParams, std::string("malformed base pair: ") + e.what());
    }
}

BasePair load_basepair(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::BadParams, "cannot open " + path);
    try {
        return basepair_from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadParams, std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

Json to_json(const CyclicResolution& res)
{
    Json walls = Json::array();
    for (const WallData& w : res.walls)
        walls.push_back({{"j", w.j + 1},
                         {"k", w.k + 1},
                         {"l", w.l + 1},
                         {"hj", to_json(w.hj)},
                         {"inner_mults", w.inner_mults},
                         {"N", rats(w.N)},
                         {"effective", w.effective}});
    Json cones = Json::array();
    for (const ConeRecord& c : res.cones)
        cones.push_back({{"wall", {c.j + 1, c.k + 1}},
                         {"alpha", c.alpha},
                         {"mult", c.mult},
                         {"type", {c.type_a, c.type_b, 1}},
                         {"weights", {c.weight_a, c.weight_b, 1}}});
    LocalIntersections li = local_intersection_table(res);
    Json kcl = Json::array();
    for (const Rat& x : li.K_Cl)
        kcl.push_back(rat_json(x));
    Json kcjk = Json::array();
    for (const auto& w : li.K_Cjk)
        kcjk.push_back(rats(w));
    ResolutionCheck chk = check_resolution(res);
    return Json{{"schema", kResolutionSchema},
                {"n", res.spec.n},
                {"p", res.spec.p},
                {"q", res.spec.q},
                {"v", point_json(res.v)},
                {"V", rat_json(res.V)},
                {"effective_F", res.effective_F},
                {"walls", walls},
                {"cones", cones},
                {"intersections",
                 {{"F3", rat_json(li.F3)},
                  {"KF2", rat_json(li.KF2)},
                  {"K2F", rat_json(li.K2F)},
                  {"K_Cl", kcl},
                  {"K_Cjk", kcjk}}},
                {"check",
                 {{"determinants", chk.determinants},
                  {"exterior_unimodular", chk.exterior_unimodular},
                  {"inner_mults", chk.inner_mults},
                  {"type_divisibility", chk.type_divisibility},
                  {"effective", chk.effective}}}};
}

Json to_json(const InvariantReport& report)
{
    Json points = Json::array();
    for (const LatticePoint& v : report.k3.points)
        points.push_back(point_json(v));
    Json residuals = Json::array();
    for (const WallResidual& w : report.k3.residuals)
        residuals.push_back({{"j", w.j + 1}, {"k", w.k + 1}, {"residual", rat_json(w.residual)}});
    return Json{{"preset", report.label},
                {"n", report.n},
                {"nu", report.nu},
                {"asymptotic", report.asymptotic},
                {"chi", {{"value", rat_json(report.chi.chi)},
                         {"R1", rat_json(report.chi.R1)},
                         {"R2", rat_json(report.chi.R2)},
                         {"R3", rat_json(report.chi.R3)}}},
                {"K3", {{"value", rat_json(report.k3.K3)},
                        {"strategy", std::string(to_string(report.strategy))},
                        {"nK_cubed", rat_json(report.k3.nK_cubed)},
                        {"points", points},
                        {"x_residuals", residuals}}},
                {"euler", rat_json(report.euler)},
                {"euler_printed_formula", rat_json(report.euler_printed)},
                {"log_chern", {{"c1_cubed_bar", rat_json(report.log_chern.c1_cubed_bar)},
                               {"c1c2_bar", rat_json(report.log_chern.c1c2_bar)},
                               {"c3_bar", rat_json(report.log_chern.c3_bar)}}},
                {"slopes", pair_json(report.slopes)},
                {"log_slopes", pair_json(report.log_slopes)},
                {"error_bounds", {{"chi", rat_json(report.chi_error_bound)}}}};
}

} // namespace rootcover
