#include "bggwb/models.hpp"

#include "bggwb/errors.hpp"
#include "bggwb/io.hpp"

namespace bggwb {

namespace {

constexpr int kMaxDim = 6;
constexpr int kMaxGenus = 8;

void check_range(int v, int lo, int hi, const char* what) {
    if (v < lo || v > hi)
        throw PreconditionError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "], got " + std::to_string(v));
}

// Abelian variety of dimension d: H^i(O) = Λ^i H^1(O) and cup product with
// H^1(O) = V is wedge multiplication, so P_{d-i} = Λ^i V with e_a acting by e_a ∧.
GradedEModule abelian_p(int d, Field f) {
    ExteriorContext ctx{d, f};
    std::vector<std::size_t> dims;
    for (int j = 0; j <= d; ++j) dims.push_back(binomial(d, d - j));
    GradedEModule p(ctx, 0, dims);
    for (int a = 0; a < d; ++a)
        for (int j = 1; j <= d; ++j) p.set_action(a, j, wedge_matrix(f, d, a, d - j));
    return p;
}

// Curve of genus g (top degree d): H^0(O) = k in degree d, H^1(O) = V in
// degree d - 1, and cup product k (x) V -> V is e_a . 1 = e_a.
GradedEModule curve_like_p(int g, int d, Field f) {
    ExteriorContext ctx{g, f};
    std::vector<std::size_t> dims(static_cast<std::size_t>(d + 1), 0);
    dims[static_cast<std::size_t>(d)] = 1;
    dims[static_cast<std::size_t>(d - 1)] = static_cast<std::size_t>(g);
    GradedEModule p(ctx, 0, dims);
    for (int a = 0; a < g; ++a) {
        Matrix col(f, static_cast<std::size_t>(g), 1);
        col.set(static_cast<std::size_t>(a), 0, 1);
        p.set_action(a, d, col);
    }
    return p;
}

}  // namespace

std::string ModelSpec::name() const {
    switch (kind) {
        case ModelKind::point: return "point";
        case ModelKind::abelian: return "abelian(" + std::to_string(param) + ")";
        case ModelKind::curve: return "curve(" + std::to_string(param) + ")";
        case ModelKind::curve_times_p1: return "curve_times_p1(" + std::to_string(param) + ")";
        case ModelKind::synthetic_kollar: return "synthetic_kollar";
        case ModelKind::custom: return "custom";
    }
    return "?";
}

Model generate(const ModelSpec& spec) {
    Model m;
    switch (spec.kind) {
        case ModelKind::point:
            m.p = residue_field({0, spec.field});
            break;
        case ModelKind::abelian:
            check_range(spec.param, 1, kMaxDim, "abelian dimension d");
            m.p = abelian_p(spec.param, spec.field);
            break;
        case ModelKind::curve:
            check_range(spec.param, 1, kMaxGenus, "genus g");
            m.p = curve_like_p(spec.param, 1, spec.field);
            break;
        case ModelKind::curve_times_p1:
            // C x P^1: H^0 = k (degree 2), H^1 = H^1(C) (degree 1), H^2 = 0.
            check_range(spec.param, 1, kMaxGenus, "genus g");
            m.p = curve_like_p(spec.param, 2, spec.field);
            break;
        case ModelKind::synthetic_kollar: {
            // Q = sum_j Q^j(j), summand files in order j = 0, 1, ...
            if (spec.files.empty()) throw PreconditionError("synthetic_kollar needs summand files");
            std::vector<GradedEModule> parts;
            for (std::size_t j = 0; j < spec.files.size(); ++j)
                parts.push_back(shift(read_emodule_file(spec.files[j]), static_cast<int>(j)));
            m.q = direct_sum(parts);
            m.p = dual_module(m.q);
            return m;
        }
        case ModelKind::custom:
            if (spec.files.size() != 1) throw PreconditionError("custom model needs exactly one module file");
            m.p = read_emodule_file(spec.files.front());
            m.q = dual_module(m.p);
            return m;
    }
    m.q = dual_module(m.p);
    return m;
}

int expected_k(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::point:
        case ModelKind::abelian:
        case ModelKind::curve: return 0;
        case ModelKind::curve_times_p1: return 1;
        default: throw PreconditionError("expected_k is not defined for " + spec.name() + " models");
    }
}

ModelKind parse_model_kind(const std::string& text) {
    if (text == "point") return ModelKind::point;
    if (text == "abelian") return ModelKind::abelian;
    if (text == "curve") return ModelKind::curve;
    if (text == "curve_times_p1" || text == "curve-times-p1") return ModelKind::curve_times_p1;
    throw ParseError("unknown model kind '" + text + "'");
}

}  // namespace bggwb
