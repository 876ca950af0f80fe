#include "bggwb/filtered.hpp"

#include <algorithm>
#include <sstream>

#include "bggwb/errors.hpp"

namespace bggwb {

FilteredFreeComplex::FilteredFreeComplex(Field f, int nvars, int precision, int n_lo, std::vector<std::size_t> ranks)
    : field_(f), nvars_(nvars), precision_(precision), n_lo_(n_lo), ranks_(std::move(ranks)) {
    if (nvars_ < 0) throw PreconditionError("negative variable count");
    if (precision_ < 0) throw PreconditionError("negative precision");
    for (std::size_t i = 0; i + 1 < ranks_.size(); ++i) d_.emplace_back(f, nvars_, ranks_[i + 1], ranks_[i]);
}

std::size_t FilteredFreeComplex::rank(int n) const {
    if (n < n_lo_ || n > n_hi()) return 0;
    return ranks_[static_cast<std::size_t>(n - n_lo_)];
}

PolyMatrix FilteredFreeComplex::differential(int n) const {
    if (n < n_lo_ || n >= n_hi()) return PolyMatrix(field_, nvars_, rank(n + 1), rank(n));
    return d_[static_cast<std::size_t>(n - n_lo_)];
}

void FilteredFreeComplex::set_differential(int n, const PolyMatrix& m) {
    const std::string where = "d^" + std::to_string(n);
    if (m.nvars() != nvars_)
        throw DimensionMismatch(where + ": entries in " + std::to_string(m.nvars()) + " variables, complex has " +
                                std::to_string(nvars_));
    require_same_field(field_, m.field(), "set_differential");
    if (m.rows() != rank(n + 1) || m.cols() != rank(n))
        throw DimensionMismatch(where + ": expected " + std::to_string(rank(n + 1)) + "x" + std::to_string(rank(n)) +
                                ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (n < n_lo_ || n >= n_hi()) {
        if (!m.is_zero()) throw DimensionMismatch(where + " lies outside the spot range");
        return;
    }
    d_[static_cast<std::size_t>(n - n_lo_)] = m.truncated(precision_);
}

int FilteredFreeComplex::max_entry_degree() const {
    int r = -1;
    for (const auto& m : d_) r = std::max(r, m.max_degree());
    return r;
}

bool operator==(const FilteredFreeComplex& a, const FilteredFreeComplex& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.precision_ == b.precision_ && a.n_lo_ == b.n_lo_ &&
           a.ranks_ == b.ranks_ && a.d_ == b.d_;
}

ComplexValidation validate_complex(const FilteredFreeComplex& k) {
    ComplexValidation out;
    for (int n = k.n_lo(); n + 2 <= k.n_hi(); ++n) {
        const PolyMatrix sq = PolyMatrix::mul_truncated(k.differential(n + 1), k.differential(n), k.precision());
        for (std::size_t i = 0; i < sq.rows(); ++i)
            for (std::size_t j = 0; j < sq.cols(); ++j)
                if (!sq(i, j).is_zero()) out.violations.push_back({n, i, j, sq(i, j)});
    }
    return out;
}

std::string ComplexValidation::to_string() const {
    if (valid()) return "valid";
    std::ostringstream os;
    os << "invalid: d^2 != 0 mod m^(N+1) in " << violations.size() << " entr" << (violations.size() == 1 ? "y" : "ies");
    for (const auto& v : violations)
        os << "\n  (d^" << v.spot + 1 << " d^" << v.spot << ")[" << v.row << "][" << v.col << "] = " << v.entry.to_string();
    return os.str();
}

void require_valid(const FilteredFreeComplex& k, const char* context) {
    auto v = validate_complex(k);
    if (!v.valid()) throw InvariantViolation(std::string(context) + ": " + v.to_string());
}

std::size_t Reduction::at(int n) const {
    if (n < n_lo || n >= n_lo + static_cast<int>(homology.size())) return 0;
    return homology[static_cast<std::size_t>(n - n_lo)];
}

Reduction reduce_mod_m(const FilteredFreeComplex& k) {
    require_valid(k, "reduce_mod_m");
    Reduction r;
    r.n_lo = k.n_lo();
    for (int n = k.n_lo(); n <= k.n_hi(); ++n) {
        if (n < k.n_hi()) r.constant.push_back(k.differential(n).constant_part());
        const std::size_t out = mat_rank(k.differential(n).constant_part());
        const std::size_t in = mat_rank(k.differential(n - 1).constant_part());
        r.homology.push_back(k.rank(n) - out - in);
    }
    return r;
}

std::string Homogeneity::to_string() const {
    if (degree) return "homogeneous of degree " + std::to_string(*degree);
    return zero ? "zero differentials" : "not homogeneous";
}

Homogeneity homogeneous_degree(const FilteredFreeComplex& k) {
    Homogeneity h;
    bool seen = false;
    for (int n = k.n_lo(); n < k.n_hi(); ++n) {
        const PolyMatrix d = k.differential(n);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) {
                if (d(i, j).is_zero()) continue;
                const auto r = d(i, j).homogeneous_degree();
                if (!r || (seen && *r != *h.degree)) return Homogeneity{};
                h.degree = r;
                seen = true;
            }
    }
    if (!seen) h.zero = true;
    return h;
}

GradedEModule induce_emodule(const FilteredFreeComplex& k, int d_top) {
    require_valid(k, "induce_emodule");
    const Field f = k.field();
    const int e = k.nvars();
    // H^n(K (x) k) with a complement basis of im D_0 inside ker D_0
    std::map<int, Matrix> basis;
    std::map<int, QuotientCoords> coords;
    for (int n = k.n_lo(); n <= k.n_hi(); ++n) {
        const Matrix z = kernel_columns(k.differential(n).constant_part());
        Matrix b = k.differential(n - 1).constant_part();
        b = b.select_columns(independent_columns(b));
        const Matrix aug = hstack(b, z);
        std::vector<std::size_t> pick;
        for (auto c : independent_columns(aug))
            if (c >= b.cols()) pick.push_back(c - b.cols());
        Matrix c = z.select_columns(pick);
        basis[n] = c;
        coords.emplace(n, QuotientCoords(b, c));
    }
    std::vector<std::size_t> dims;
    for (int n = k.n_hi(); n >= k.n_lo(); --n) dims.push_back(basis[n].cols());
    GradedEModule p(ExteriorContext{e, f}, d_top - k.n_hi(), dims);
    for (int a = 0; a < e; ++a) {
        Exponents ea(static_cast<std::size_t>(e), 0);
        ea[static_cast<std::size_t>(a)] = 1;
        for (int n = k.n_lo(); n < k.n_hi(); ++n) {
            const Matrix lin = k.differential(n).coefficient(ea);
            const Matrix images = lin * basis[n];
            for (std::size_t c = 0; c < images.cols(); ++c)
                if (!coords.at(n + 1).in_span(images.column(c)))
                    throw InvariantViolation("induce_emodule: linear part does not preserve cycles at spot " +
                                             std::to_string(n) + " (d^2 != 0?)");
            p.set_action(a, d_top - n, coords.at(n + 1).coords(images));
        }
    }
    auto v = validate_module(p);
    if (!v.valid()) throw InvariantViolation("induce_emodule: induced action is not an E-module: " + v.to_string());
    return p;
}

FilteredFreeComplex sum_complexes(const std::vector<FilteredFreeComplex>& parts) {
    if (parts.empty()) throw PreconditionError("sum_complexes: empty list");
    const auto& first = parts.front();
    int lo = first.n_lo(), hi = first.n_hi();
    for (const auto& k : parts) {
        if (k.nvars() != first.nvars())
            throw PreconditionError("sum_complexes: variable counts differ (" + std::to_string(first.nvars()) + " vs " +
                                    std::to_string(k.nvars()) + ")");
        if (k.precision() != first.precision())
            throw PreconditionError("sum_complexes: precisions differ (" + std::to_string(first.precision()) + " vs " +
                                    std::to_string(k.precision()) + ")");
        require_same_field(first.field(), k.field(), "sum_complexes");
        if (k.ranks().empty()) continue;
        lo = std::min(lo, k.n_lo());
        hi = std::max(hi, k.n_hi());
    }
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = 0;
        for (const auto& k : parts) r += k.rank(n);
        ranks.push_back(r);
    }
    FilteredFreeComplex out(first.field(), first.nvars(), first.precision(), lo, ranks);
    for (int n = lo; n < hi; ++n) {
        PolyMatrix acc(first.field(), first.nvars(), 0, 0);
        for (const auto& k : parts) acc = poly_block_diag(acc, k.differential(n));
        out.set_differential(n, acc);
    }
    return out;
}

}  // namespace bggwb
