#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bggwb/bgg.hpp"
#include "bggwb/errors.hpp"
#include "bggwb/io.hpp"
#include "bggwb/models.hpp"
#include "bggwb/pages.hpp"

namespace py = pybind11;
using namespace bggwb;

namespace {

std::optional<Field> field_arg(const std::optional<std::string>& f) {
    if (!f) return std::nullopt;
    return Field::parse(*f);
}

GradedEModule module_from(const std::string& text, const std::optional<std::string>& field) {
    auto obj = parse_workbench(text, field_arg(field));
    if (!std::holds_alternative<GradedEModule>(obj)) throw ParseError("expected an emodule/1 document");
    return std::get<GradedEModule>(obj);
}

FilteredFreeComplex complex_from(const std::string& text, const std::optional<std::string>& field) {
    auto obj = parse_workbench(text, field_arg(field));
    if (!std::holds_alternative<FilteredFreeComplex>(obj)) throw ParseError("expected an rcomplex/1 document");
    return std::get<FilteredFreeComplex>(obj);
}

py::dict betti_dict(const BettiTable& b) {
    py::dict d;
    for (const auto& [k, v] : b.entries) d[py::make_tuple(k.first, k.second)] = v;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exterior-module regularity, BGG linearization and m-adic spectral sequences";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
    py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<FieldMismatch>(m, "FieldMismatch", base.ptr());

    py::class_<GradedEModule>(m, "EModule")
        .def_static("from_json", &module_from, py::arg("text"), py::arg("field") = py::none())
        .def("to_json", [](const GradedEModule& x) { return serialize(x); })
        .def_property_readonly("q", &GradedEModule::q)
        .def_property_readonly("lo", &GradedEModule::lo)
        .def_property_readonly("hi", &GradedEModule::hi)
        .def_property_readonly("dims", &GradedEModule::dims)
        .def_property_readonly("field", [](const GradedEModule& x) { return x.field().to_string(); })
        .def("dual", [](const GradedEModule& x) { return dual_module(x); })
        .def("shift", [](const GradedEModule& x, int j) { return shift(x, j); })
        .def("is_valid", [](const GradedEModule& x) { return validate_module(x).valid(); })
        .def("__eq__", [](const GradedEModule& a, const GradedEModule& b) { return a == b; });

    py::class_<FilteredFreeComplex>(m, "FilteredComplex")
        .def_static("from_json", &complex_from, py::arg("text"), py::arg("field") = py::none())
        .def("to_json", [](const FilteredFreeComplex& x) { return serialize(x); })
        .def_property_readonly("precision", &FilteredFreeComplex::precision)
        .def_property_readonly("n_lo", &FilteredFreeComplex::n_lo)
        .def_property_readonly("n_hi", &FilteredFreeComplex::n_hi)
        .def_property_readonly("ranks", &FilteredFreeComplex::ranks)
        .def("is_valid", [](const FilteredFreeComplex& x) { return validate_complex(x).valid(); })
        .def("reduced_homology",
             [](const FilteredFreeComplex& x) {
                 const auto r = reduce_mod_m(x);
                 std::map<int, std::size_t> out;
                 for (int n = x.n_lo(); n <= x.n_hi(); ++n) out[n] = r.at(n);
                 return out;
             })
        .def("induce_emodule", [](const FilteredFreeComplex& x, int d) { return induce_emodule(x, d); });

    m.def(
        "model",
        [](const std::string& kind, int param, const std::string& field) {
            ModelSpec s;
            s.kind = parse_model_kind(kind);
            s.param = param;
            s.field = Field::parse(field);
            auto g = generate(s);
            return py::make_tuple(g.p, g.q);
        },
        py::arg("kind"), py::arg("param") = 0, py::arg("field") = "QQ", "(P_X, Q_X) for a geometric model");
    m.def(
        "expected_k",
        [](const std::string& kind, int param) {
            ModelSpec s;
            s.kind = parse_model_kind(kind);
            s.param = param;
            return expected_k(s);
        },
        py::arg("kind"), py::arg("param") = 0);

    m.def("exterior_algebra", [](int q) { return exterior_algebra({q, Field::rationals()}); });
    m.def("residue_field", [](int q) { return residue_field({q, Field::rationals()}); });
    m.def("direct_sum", [](const std::vector<GradedEModule>& v) { return direct_sum(v); });

    m.def(
        "betti_table",
        [](const GradedEModule& x, int i_max, const std::string& method) {
            return betti_dict(
                betti_table(x, i_max, method == "syzygies" ? BettiMethod::syzygies : BettiMethod::koszul));
        },
        py::arg("module"), py::arg("i_max"), py::arg("method") = "koszul");
    m.def("default_imax", &default_imax);
    m.def("default_truncation", &default_truncation);
    m.def(
        "regularity", [](const GradedEModule& q, int i_max) { return regularity_definition_route(q, i_max).m; },
        py::arg("q"), py::arg("i_max"), "Regularity of Q by the definition route");
    m.def(
        "regularity_via_bgg", [](const GradedEModule& p, int t) { return regularity_via_bgg(p, t).m; },
        py::arg("p"), py::arg("truncation"), "Regularity of dual(P) from the exactness of L(P)");
    m.def("build_bgg", [](const GradedEModule& p) { return serialize(build_bgg(p)); });
    m.def(
        "verify_theorem_a",
        [](const std::vector<GradedEModule>& summands, int t, int i_max) {
            const auto r = verify_theorem_a(summands, t, i_max);
            py::dict d;
            d["passed"] = r.passed;
            d["regularity"] = r.regularity;
            d["strands"] = r.strands;
            d["summary"] = r.summary();
            d["failures"] = r.failures;
            return d;
        },
        py::arg("summands"), py::arg("truncation") = 0, py::arg("i_max") = 0);

    m.def(
        "page",
        [](const FilteredFreeComplex& k, int r, int p_max) {
            const auto t = compute_page(k, r, p_max);
            std::map<std::pair<int, int>, std::size_t> dims;  // (p, q)
            for (const auto& [key, e] : t.entries)
                if (e.dim()) dims[{key.first, key.second - key.first}] = e.dim();
            return dims;
        },
        py::arg("complex"), py::arg("r"), py::arg("p_max"), "Nonzero dims of E_r^{p,q}");
    m.def(
        "degenerates_at", [](const FilteredFreeComplex& k, int r, int p_max) { return degenerates_at(k, r, p_max).degenerates; },
        py::arg("complex"), py::arg("r"), py::arg("p_max"));
    m.def(
        "criterion",
        [](const FilteredFreeComplex& k, int r, int k_max) {
            const auto v = check_degeneration_criterion(k, r, k_max);
            return py::make_tuple(v.holds, v.to_string());
        },
        py::arg("complex"), py::arg("r"), py::arg("k_max"));
    m.def(
        "e1_check", [](const FilteredFreeComplex& k, int p_max) { return e1_total_complex(k, p_max).isomorphic; },
        py::arg("complex"), py::arg("p_max"));
    m.def(
        "predict_vanishing",
        [](const FilteredFreeComplex& k, int t) { return predict_vanishing(k, t).predicted; }, py::arg("complex"),
        py::arg("truncation"));
    m.def("sum_complexes", [](const std::vector<FilteredFreeComplex>& v) { return sum_complexes(v); });
}
