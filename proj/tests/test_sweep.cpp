#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "rootcover/error.hpp"
#include "rootcover/io.hpp"
#include "rootcover/sweep.hpp"

using namespace rootcover;

namespace {

ErrorCode config_code(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::BadInput;
}

} // namespace

TEST_CASE("config parsing")
{
    SweepConfig c = parse_config("# fixture\npreset = planes_p3\nn = 7\nnu = 1, 2, 4\nstrategy = minimal\n");
    CHECK(c.preset == PresetKind::PlanesP3);
    CHECK(c.n_min == 7);
    CHECK(c.n_max == 7);
    CHECK(c.nu == std::vector<std::int64_t>{1, 2, 4});
    CHECK(c.r == 3);

    SweepConfig h = parse_config("preset = hypersurface_p4\nd = 6..8\nr = 3\nn_min = 100\nn_max = 200\n"
                                 "partition = asymptotic\nseed = 5\nformat = json\n");
    CHECK(h.d_min == 6);
    CHECK(h.d_max == 8);
    CHECK(h.policy == PartitionPolicy::Asymptotic);
    CHECK(h.format == OutputFormat::Json);

    CHECK(config_code("preset = planes_p3\nwidth = 3\n") == ErrorCode::ConfigError);
    CHECK(config_code("preset = cubes\n") == ErrorCode::ConfigError);
    CHECK(config_code("n = 7\nn = 11\nnu = 1\n") == ErrorCode::ConfigError);
    CHECK(config_code("n = seven\n") == ErrorCode::ConfigError);
    CHECK(config_code("n = 7\n") == ErrorCode::ConfigError);
    CHECK(config_code("just words\n") == ErrorCode::ConfigError);
}

TEST_CASE("primes and seeds")
{
    CHECK(primes_in(1, 20) == std::vector<std::int64_t>{3, 5, 7, 11, 13, 17, 19});
    CHECK(cell_seed(1, 7) == cell_seed(1, 7));
    CHECK(cell_seed(1, 7) != cell_seed(1, 11));
    CHECK(cell_seed(1, 7) != cell_seed(2, 7));
}

TEST_CASE("fixture row")
{
    SweepConfig c = parse_config("preset = planes_p3\nn = 7\nnu = 1,2,4\n");
    auto rows = run_sweep(c);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].report);
    CHECK(rows[0].status == "ok");
    CHECK(rows[0].report->chi.chi == 1);
    CHECK(rows[0].report->k3.K3 == -14);
    std::string csv = rows_to_csv(rows, 4);
    CHECK(csv.rfind("n,d,r,nu,status,chi,K3,euler,slope1,slope2,log_slope1,log_slope2,chi_err_bound,chi_rat,", 0) == 0);
    CHECK(csv.find("7,,3,1;2;4,ok,1.0000,-14.0000,") != std::string::npos);
    CHECK(csv.find(",1,-14,24,7/12,1,") != std::string::npos);
}

TEST_CASE("failed cells keep their row")
{
    SweepConfig c = parse_config("preset = planes_p3\nn = 5..7\nnu = 1,1,3\n");
    auto rows = run_sweep(c);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 5);
    CHECK(rows[0].status == "DegenerateCone");
    CHECK(rows[1].status == "IncompatiblePartition");
    CHECK(rows_to_csv(rows, 3).find("5,,3,1;1;3,DegenerateCone,,,") != std::string::npos);

    SweepConfig e = parse_config("preset = planes_p3\nn = 17\nr = 16\npartition = asymptotic\ntrials = 1\n");
    auto ex = run_sweep(e);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].status == "Exhausted");
}

TEST_CASE("sweeps are deterministic and worker-count independent")
{
    std::string text = "preset = hypersurface_p4\nd = 5..7\nr = 3\nn = 100..160\npartition = asymptotic\nseed = 9\n";
    SweepConfig one = parse_config(text + "workers = 1\n");
    SweepConfig four = parse_config(text + "workers = 4\n");
    std::string a = rows_to_csv(run_sweep(one), 6);
    std::string b = rows_to_csv(run_sweep(four), 6);
    std::string c = rows_to_csv(run_sweep(one), 6);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(rows_to_json(run_sweep(one)) == rows_to_json(run_sweep(four)));
}

TEST_CASE("JSON rationals round trip")
{
    SweepConfig c = parse_config("preset = hypersurface_p4\nd = 6\nr = 3\nn = 101..131\npartition = asymptotic\n");
    auto rows = run_sweep(c);
    Json doc = Json::parse(rows_to_json(rows));
    CHECK(doc["schema"] == kReportSchema);
    REQUIRE(doc["rows"].size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].report)
            continue;
        const Json& j = doc["rows"][i];
        const InvariantReport& rep = *rows[i].report;
        CHECK(rat_from_json(j["chi"]["value"]) == rep.chi.chi);
        CHECK(rat_from_json(j["chi"]["R1"]) == rep.chi.R1);
        CHECK(rat_from_json(j["K3"]["value"]) == rep.k3.K3);
        CHECK(rat_from_json(j["euler"]) == rep.euler);
        CHECK(rat_from_json(j["slopes"][0]) == rep.slopes->first);
        CHECK(rat_from_json(j["error_bounds"]["chi"]) == rep.chi_error_bound);
    }
}

TEST_CASE("base pair JSON round trip")
{
    for (const BasePair& p : {planes_p3(4), hypersurface_p4(6, 3)}) {
        BasePair back = basepair_from_json(Json::parse(to_json(p).dump()));
        CHECK(back.label == p.label);
        CHECK(back.c1_cubed == p.c1_cubed);
        CHECK(back.DD2 == p.DD2);
        CHECK(back.T == p.T);
        CHECK(back.pair_curves == p.pair_curves);
        CHECK(back.e_singD == p.e_singD);
        CHECK(back.requires_sum_congruence == p.requires_sum_congruence);
    }
    Json bad = to_json(planes_p3(3));
    bad["schema"] = "rootcover-basepair/0";
    CHECK_THROWS_AS(basepair_from_json(bad), Error);
    Json broken = to_json(planes_p3(3));
    broken["T"] = Json::array({1, 2});
    CHECK_THROWS_AS(basepair_from_json(broken), Error);
}

TEST_CASE("sweep over a base pair file")
{
    std::string path = "test_sweep_pair.json";
    {
        std::ofstream out(path);
        out << to_json(planes_p3(3)).dump(2);
    }
    auto rows = run_sweep(parse_config("basepair = " + path + "\nn = 7\nnu = 1,2,4\n"));
    std::remove(path.c_str());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].report->chi.chi == 1);
}

TEST_CASE("resolution JSON")
{
    LocalConeSpec s = make_cone_spec(7, 2, 3);
    Json j = to_json(cyclic_resolution(s, {1, 1, 5}));
    CHECK(j["schema"] == kResolutionSchema);
    CHECK(j["cones"][0]["type"] == Json::array({1, 2, 1}));
    CHECK(j["check"]["determinants"] == true);
}
