#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bggwb/matrix.hpp"

namespace bggwb {

/// V = span(e_1..e_q) in degree -1, W = V^dual = span(x_1..x_q) in degree 1,
/// E = Λ V and S = Sym W.
struct ExteriorContext {
    int q = 0;
    Field field;

    friend bool operator==(const ExteriorContext&, const ExteriorContext&) = default;
};

/// Finite-dimensional graded module over E.
///
/// Components live on the integer interval [lo, hi] (zero-dimensional
/// components are allowed, so the interval carries the degree bookkeeping).
/// The action of e_a is stored per source degree j as a matrix
/// M_j -> M_{j-1}, i.e. of shape dim(j-1) x dim(j).
class GradedEModule {
public:
    GradedEModule() = default;
    /// Zero action on the given components; dims[k] is the dimension in degree lo + k.
    GradedEModule(ExteriorContext ctx, int lo, std::vector<std::size_t> dims);

    static GradedEModule zero(ExteriorContext ctx) { return GradedEModule(ctx, 0, {}); }

    const ExteriorContext& context() const noexcept { return ctx_; }
    int q() const noexcept { return ctx_.q; }
    Field field() const noexcept { return ctx_.field; }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool has_interval() const noexcept { return !dims_.empty(); }
    std::size_t dim(int j) const;
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    /// Action of e_a (0-based a) out of degree j; a correctly shaped zero
    /// matrix when j or j-1 lies outside the interval.
    Matrix action(int a, int j) const;
    /// Throws DimensionMismatch naming j when the shape is wrong.
    void set_action(int a, int j, const Matrix& m);

    /// Same module on a wider interval (zero components added).
    GradedEModule widened(int lo, int hi) const;
    /// Interval shrunk to the nonzero components.
    GradedEModule trimmed() const;

    friend bool operator==(const GradedEModule& a, const GradedEModule& b);

private:
    std::size_t slot(int j) const { return static_cast<std::size_t>(j - lo_ - 1); }

    ExteriorContext ctx_;
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> act_;  // act_[a][j - lo - 1], j in [lo + 1, hi]
};

struct AnticommutationViolation {
    int a = 0, b = 0;  // 0-based; a == b reports a nonzero square
    int degree = 0;    // source degree j of the composite M_j -> M_{j-2}
    Matrix residual;
};

struct ModuleValidation {
    std::vector<AnticommutationViolation> violations;
    bool valid() const { return violations.empty(); }
    std::string to_string() const;
};

ModuleValidation validate_module(const GradedEModule& m);
/// Throws InvariantViolation with the validation text when m is invalid.
void require_valid(const GradedEModule& m, const char* context);

/// Q_j = (P_{-j})^dual with the transposed action (no sign twist).
GradedEModule dual_module(const GradedEModule& p);
/// M(j)_l = M_{j+l}.
GradedEModule shift(const GradedEModule& m, int j);
GradedEModule direct_sum(const std::vector<GradedEModule>& summands);

/// E itself, generated by 1 in degree 0 (Λ^i V sits in degree -i).
GradedEModule exterior_algebra(ExteriorContext ctx);
/// k concentrated in degree 0.
GradedEModule residue_field(ExteriorContext ctx);
/// Matrix of left multiplication by e_a from Λ^i to Λ^{i+1} in the sorted-subset basis.
Matrix wedge_matrix(Field f, int q, int a, int i);

/// Degree -> number of minimal generators (dimension of M / V*M), nonzero entries only.
std::map<int, std::size_t> minimal_generators(const GradedEModule& m);

/// dim Tor_i^E(M, k)_t for 0 <= i <= i_max.
struct BettiTable {
    std::map<std::pair<int, int>, std::size_t> entries;  // (i, t) -> dim, nonzero only
    int i_max = 0;

    std::size_t at(int i, int t) const;
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
    /// Entrywise sum; i_max is the smaller of the two.
    friend BettiTable operator+(const BettiTable& a, const BettiTable& b);
    /// Table of M(j) from the table of M.
    BettiTable shifted(int j) const;

    std::string to_text() const;
    std::string to_csv() const;
};

/// Default homological bound: q + (support width) + 2.
int default_imax(const GradedEModule& m);

enum class BettiMethod {
    /// Homology of M (x) S_i^*, the tensor product with the linear resolution of k.
    koszul,
    /// Iterated minimal syzygies: F_i is free on the minimal generators of the
    /// current kernel; kernels are computed degree by degree with the support
    /// tracked exactly. Exact but expensive once q >= 4.
    syzygies,
};

BettiTable betti_table(const GradedEModule& m, int i_max, BettiMethod method = BettiMethod::koszul);

enum class RegularityMethod { definition, bgg };

struct RegularityReport {
    int m = 0;
    RegularityMethod method = RegularityMethod::definition;
    int truncation = 0;  // i_max for the definition route, T for the BGG route
    std::vector<std::string> evidence;

    std::string method_name() const { return method == RegularityMethod::definition ? "definition" : "bgg"; }
    std::string summary() const;
};

/// Smallest m with every nonzero Tor_i entry in degree >= -i-m, for i <= i_max.
/// Throws PreconditionError if m has a nonzero component of positive degree.
RegularityReport regularity_definition_route(const GradedEModule& m, int i_max);

}  // namespace bggwb
