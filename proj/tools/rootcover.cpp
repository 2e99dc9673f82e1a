#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rootcover/asympt.hpp"
#include "rootcover/dedekind.hpp"
#include "rootcover/error.hpp"
#include "rootcover/hj.hpp"
#include "rootcover/io.hpp"
#include "rootcover/sweep.hpp"

using namespace rootcover;

namespace {

std::vector<std::int64_t> parse_nu(const std::string& s)
{
    std::vector<std::int64_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(std::stoll(item));
    return out;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::ConfigError, "cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rootcover: invariants of cyclic root covers of 3-folds"};
    app.require_subcommand(1);

    std::int64_t n = 0, q = 0, a = 0, b = 0, p = 0, r = 3, trials = 10000;
    std::uint64_t seed = 1;
    std::string strategy = "minimal";

    auto* hj_cmd = app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/q");
    hj_cmd->add_option("n", n)->required();
    hj_cmd->add_option("q", q)->required();

    bool naive = false;
    auto* ded_cmd = app.add_subcommand("dedekind", "Dedekind sum d(a,b,n)");
    ded_cmd->add_option("a", a)->required();
    ded_cmd->add_option("b", b)->required();
    ded_cmd->add_option("n", n)->required();
    ded_cmd->add_flag("--naive", naive, "Use the O(n) product sum");

    bool members = false;
    auto* gir_cmd = app.add_subcommand("girstmair", "The set O_n for a prime n >= 17");
    gir_cmd->add_option("n", n)->required();
    gir_cmd->add_flag("--members", members, "List all members");

    auto* part_cmd = app.add_subcommand("partition", "Find an asymptotic partition");
    part_cmd->add_option("n", n)->required();
    part_cmd->add_option("r", r)->required();
    part_cmd->add_option("--seed", seed);
    part_cmd->add_option("--trials", trials);

    auto* res_cmd = app.add_subcommand("resolve", "Cyclic resolution of one triple-point cone");
    res_cmd->add_option("n", n)->required();
    res_cmd->add_option("p", p)->required();
    res_cmd->add_option("q", q)->required();
    res_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"minimal", "balanced"}));

    std::string preset = "planes_p3", nu_text, basepair_path;
    int d = 1;
    int pr = 3;
    auto* inv_cmd = app.add_subcommand("invariants", "Invariant report for one cell");
    inv_cmd->add_option("--preset", preset)->check(CLI::IsMember({"planes_p3", "hypersurface_p4"}));
    inv_cmd->add_option("--basepair", basepair_path, "BasePair JSON file");
    inv_cmd->add_option("--d", d);
    inv_cmd->add_option("--r", pr);
    inv_cmd->add_option("--n", n)->required();
    inv_cmd->add_option("--nu", nu_text, "Comma-separated nu; omit to search an asymptotic one");
    inv_cmd->add_option("--seed", seed);
    inv_cmd->add_option("--trials", trials);
    inv_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"minimal", "balanced"}));

    std::string config_path, format, output;
    int digits = -1, workers = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a configured sweep");
    sweep_cmd->add_option("--config", config_path)->required();
    sweep_cmd->add_option("--digits", digits, "Decimal places in CSV");
    sweep_cmd->add_option("--workers", workers, "Worker threads (default $ROOTCOVER_WORKERS or 1)");
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hj_cmd) {
            HJExpansion e = hj_expand(n, q);
            Json j = to_json(e);
            j["dual"] = to_json(hj_dual(e));
            std::cout << j.dump(2) << '\n';
        } else if (*ded_cmd) {
            Rat v = naive ? dedekind_sum(std::vector<std::int64_t>{a, b}, n) : dedekind_fast(a, b, n);
            std::cout << to_string(v) << '\n';
        } else if (*gir_cmd) {
            ONSet set = girstmair_set(n);
            Json j{{"n", set.n},
                   {"size", set.members.size()},
                   {"complement_size", set.complement_size},
                   {"complement_bound_holds", set.complement_bound_holds}};
            if (members)
                j["members"] = set.members;
            std::cout << j.dump(2) << '\n';
        } else if (*part_cmd) {
            Partition part = find_asymptotic_partition(n, r, seed, trials);
            std::cout << Json{{"n", part.n}, {"nu", part.nu}, {"q", part.q_matrix}}.dump(2) << '\n';
        } else if (*res_cmd) {
            LocalConeSpec spec = make_cone_spec(n, p, q);
            CyclicResolution res = cyclic_resolution(spec, select_v(spec, strategy_from_string(strategy)));
            std::cout << to_json(res).dump(2) << '\n';
        } else if (*inv_cmd) {
            BasePair pair = !basepair_path.empty()   ? load_basepair(basepair_path)
                            : preset == "planes_p3" ? planes_p3(pr)
                                                    : hypersurface_p4(d, pr);
            Partition part = nu_text.empty() ? find_asymptotic_partition(n, pair.r, seed, trials)
                                             : make_partition(n, parse_nu(nu_text));
            InvariantReport rep = invariant_report(pair, part, strategy_from_string(strategy));
            std::cout << to_json(rep).dump(2) << '\n';
        } else if (*sweep_cmd) {
            SweepConfig cfg = load_config(config_path);
            if (digits >= 0)
                cfg.digits = digits;
            if (workers > 0)
                cfg.workers = workers;
            if (!format.empty())
                cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
            if (!output.empty())
                cfg.output = output;
            std::vector<SweepRow> rows = run_sweep(cfg);
            emit(cfg.format == OutputFormat::Json ? rows_to_json(rows) : rows_to_csv(rows, cfg.digits),
                 cfg.output);
            for (const SweepRow& row : rows)
                if (row.status != "ok")
                    return 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
