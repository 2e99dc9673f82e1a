#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootcover/asympt.hpp"
#include "rootcover/dedekind.hpp"
#include "rootcover/error.hpp"
#include "rootcover/hj.hpp"
#include "rootcover/invariants.hpp"
#include "rootcover/io.hpp"
#include "rootcover/logchern.hpp"
#include "rootcover/toric.hpp"

namespace py = pybind11;
using namespace rootcover;

// Rat <-> fractions.Fraction
namespace pybind11::detail {
template <> struct type_caster<Rat> {
    PYBIND11_TYPE_CASTER(Rat, const_name("fractions.Fraction"));

    bool load(handle src, bool)
    {
        object fraction = module_::import("fractions").attr("Fraction");
        if (!isinstance<int_>(src) && !isinstance(src, fraction))
            return false;
        object f = fraction(src);
        std::string num = str(f.attr("numerator")), den = str(f.attr("denominator"));
        value = Rat(Int(num), Int(den));
        value.canonicalize();
        return true;
    }

    static handle cast(const Rat& x, return_value_policy, handle)
    {
        object fraction = module_::import("fractions").attr("Fraction");
        int_ num(str(x.get_num().get_str())), den(str(x.get_den().get_str()));
        return fraction(num, den).release();
    }
};
} // namespace pybind11::detail

namespace {

Strategy parse_strategy(const std::string& s) { return strategy_from_string(s); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Invariants of cyclic root covers of threefolds";

    py::register_exception<Error>(m, "RootcoverError", PyExc_ValueError);

    py::class_<HJExpansion>(m, "HJExpansion")
        .def_readonly("n", &HJExpansion::n)
        .def_readonly("q", &HJExpansion::q)
        .def_readonly("ks", &HJExpansion::ks)
        .def_readonly("m", &HJExpansion::m_seq)
        .def_readonly("n_seq", &HJExpansion::n_seq)
        .def_readonly("q_inv", &HJExpansion::q_inv)
        .def_readonly("excess", &HJExpansion::excess)
        .def("__len__", &HJExpansion::length)
        .def("__repr__", [](const HJExpansion& e) {
            return "HJExpansion(n=" + std::to_string(e.n) + ", q=" + std::to_string(e.q) +
                   ", length=" + std::to_string(e.length()) + ")";
        });

    m.def("hj_expand", &hj_expand, py::arg("n"), py::arg("q"));
    m.def("hj_evaluate", [](const std::vector<std::int64_t>& ks) { return hj_evaluate(ks); }, py::arg("ks"));
    m.def("hj_dual", &hj_dual, py::arg("expansion"));
    m.def("hj_length", &hj_length, py::arg("n"), py::arg("q"));

    m.def("dedekind_sum", [](const std::vector<std::int64_t>& a, std::int64_t n) { return dedekind_sum(a, n); },
          py::arg("a"), py::arg("n"));
    m.def("dedekind_fast", &dedekind_fast, py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("barkan_residual", &barkan_residual, py::arg("n"), py::arg("q"));

    m.def("girstmair_member", &girstmair_member, py::arg("n"), py::arg("q"));
    m.def("girstmair_set", [](std::int64_t n) {
        ONSet s = girstmair_set(n);
        py::dict d;
        d["n"] = s.n;
        d["members"] = s.members;
        d["complement_size"] = s.complement_size;
        d["complement_bound_holds"] = s.complement_bound_holds;
        return d;
    }, py::arg("n"));

    py::class_<Partition>(m, "Partition")
        .def_readonly("n", &Partition::n)
        .def_readonly("nu", &Partition::nu)
        .def("q", &Partition::q, py::arg("j"), py::arg("k"))
        .def("__repr__", [](const Partition& p) {
            std::string s = "Partition(n=" + std::to_string(p.n) + ", nu=[";
            for (std::size_t i = 0; i < p.nu.size(); ++i)
                s += (i ? ", " : "") + std::to_string(p.nu[i]);
            return s + "])";
        });
    m.def("make_partition", &make_partition, py::arg("n"), py::arg("nu"));
    m.def("is_asymptotic", py::overload_cast<const Partition&>(&is_asymptotic), py::arg("partition"));
    m.def("find_asymptotic_partition", &find_asymptotic_partition, py::arg("n"), py::arg("r"), py::arg("seed") = 0,
          py::arg("max_trials") = 100000);

    m.def("resolve", [](std::int64_t n, std::int64_t p, std::int64_t q, const std::string& strategy) {
        LocalConeSpec spec = make_cone_spec(n, p, q);
        return json_to_py(to_json(cyclic_resolution(spec, select_v(spec, parse_strategy(strategy)))));
    }, py::arg("n"), py::arg("p"), py::arg("q"), py::arg("strategy") = "minimal");

    py::class_<BasePair>(m, "BasePair")
        .def_readonly("label", &BasePair::label)
        .def_readonly("r", &BasePair::r)
        .def("to_dict", [](const BasePair& p) { return json_to_py(to_json(p)); })
        .def_static("from_dict", [](const py::object& d) {
            std::string text = py::str(py::module_::import("json").attr("dumps")(d));
            return basepair_from_json(Json::parse(text));
        }, py::arg("data"))
        .def("__repr__", [](const BasePair& p) { return "BasePair(" + p.label + ")"; });
    m.def("planes_p3", &planes_p3, py::arg("r"));
    m.def("hypersurface_p4", &hypersurface_p4, py::arg("d"), py::arg("r"));
    m.def("load_basepair", &load_basepair, py::arg("path"));

    m.def("log_chern_numbers", [](const BasePair& p) {
        LogChernNumbers c = log_chern_numbers(p);
        return py::make_tuple(c.c1_cubed_bar, c.c1c2_bar, c.c3_bar);
    }, py::arg("pair"));
    m.def("nonsingular_cover_chern", [](const BasePair& p, std::int64_t n) {
        ChernTriple c = nonsingular_cover_chern(p, n);
        return py::make_tuple(c.c1_cubed, c.c1c2, c.c3);
    }, py::arg("pair"), py::arg("n"));

    py::class_<ChiResult>(m, "ChiResult")
        .def_readonly("chi", &ChiResult::chi)
        .def_readonly("R1", &ChiResult::R1)
        .def_readonly("R2", &ChiResult::R2)
        .def_readonly("R3", &ChiResult::R3);
    m.def("chi", &chi_root_cover, py::arg("pair"), py::arg("partition"));
    m.def("chi_eigenspace_oracle", &chi_eigenspace_oracle, py::arg("pair"), py::arg("partition"));
    m.def("k3", [](const BasePair& p, const Partition& part, const std::string& strategy) {
        return k3_root_cover(p, part, parse_strategy(strategy)).K3;
    }, py::arg("pair"), py::arg("partition"), py::arg("strategy") = "minimal");
    m.def("euler", &euler_root_cover, py::arg("pair"), py::arg("partition"));

    m.def("closed_forms_p4", [](int d, std::int64_t n, const Partition& part) {
        ClosedFormsP4 c = closed_forms_p4(d, n, part);
        py::dict out;
        out["K3"] = c.K3;
        out["chi"] = c.chi;
        out["R1"] = c.R1;
        out["R2"] = c.R2;
        out["R3"] = c.R3;
        out["euler_limit"] = c.euler_limit;
        out["slope_pair"] = c.slope_pair;
        out["excess"] = c.excess;
        return out;
    }, py::arg("d"), py::arg("n"), py::arg("partition"));

    m.def("invariant_report", [](const BasePair& p, const Partition& part, const std::string& strategy) {
        return json_to_py(to_json(invariant_report(p, part, parse_strategy(strategy))));
    }, py::arg("pair"), py::arg("partition"), py::arg("strategy") = "minimal");
}
