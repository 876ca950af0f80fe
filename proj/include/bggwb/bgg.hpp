#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bggwb/emodule.hpp"

namespace bggwb {

/// Complex of free graded S-modules G_0 -> G_1 -> ... with linear
/// differential g |-> sum_a x_a (x) C_a g. Spot n is generated in internal
/// degree c_n = first_degree + n, so every differential raises internal
/// degree by one.
class LinearSComplex {
public:
    LinearSComplex() = default;
    LinearSComplex(ExteriorContext ctx, std::vector<std::size_t> ranks, int first_degree = 0);

    const ExteriorContext& context() const noexcept { return ctx_; }
    int q() const noexcept { return ctx_.q; }
    Field field() const noexcept { return ctx_.field; }
    std::size_t spots() const noexcept { return ranks_.size(); }
    std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    int first_degree() const noexcept { return first_degree_; }
    int generation_degree(std::size_t n) const { return first_degree_ + static_cast<int>(n); }

    /// C_a : G_n -> G_{n+1}, shape rank(n+1) x rank(n).
    const Matrix& coefficient(int a, std::size_t n) const;
    void set_coefficient(int a, std::size_t n, const Matrix& m);

    /// Optional per-spot names used by renderers ("P_2", "H^0", ...).
    std::vector<std::string> labels;

    /// The degree-p strand G_n (x) Sym^p W -> G_{n+1} (x) Sym^{p+1} W.
    /// Coordinates are component-major: index = i * |Sym^p| + monomial rank.
    Matrix strand(std::size_t n, int p) const;

    /// Every (a, b, n) with C_a C_b + C_b C_a != 0 from spot n to n + 2.
    std::vector<std::string> square_violations() const;
    bool is_complex() const { return square_violations().empty(); }

    friend bool operator==(const LinearSComplex& a, const LinearSComplex& b);

    std::string to_string() const;

private:
    ExteriorContext ctx_;
    std::vector<std::size_t> ranks_;
    int first_degree_ = 0;
    std::vector<std::vector<Matrix>> coeff_;  // coeff_[a][n]
};

/// L(P): spot n houses P_{d-n} for d = top degree of P (interval widened to 0).
LinearSComplex build_bgg(const GradedEModule& p);

/// Homology dimensions of a linear complex, keyed (spot, internal degree),
/// for internal degrees up to the truncation T.
struct HomologyProfile {
    std::map<std::pair<int, int>, std::size_t> dims;
    int truncation = 0;

    std::size_t at(int spot, int t) const;
    std::size_t total(int spot) const;
    std::string to_text(const LinearSComplex& l) const;
    std::string to_csv() const;
};

HomologyProfile homology_dims(const LinearSComplex& l, std::size_t n, int truncation);
HomologyProfile homology_profile(const LinearSComplex& l, int truncation);

struct ExactnessVerdict {
    bool exact = true;
    std::size_t steps = 0;
    int truncation = 0;
    /// First spot/degree with nonzero homology, and its dimension.
    std::optional<std::pair<int, int>> failure;
    std::size_t failure_dim = 0;

    std::string to_string() const;
};

/// Homology vanishes at spots 0..steps-1 in every internal degree <= T.
ExactnessVerdict is_exact_first_steps(const LinearSComplex& l, std::size_t steps, int truncation);

/// Default truncation d + q + 4.
int default_truncation(const GradedEModule& p);

/// Smallest m such that L(P) is exact (through T) at its first d - m spots.
/// P is supported in degrees [0, d]; the result is the regularity of dual(P).
RegularityReport regularity_via_bgg(const GradedEModule& p, int truncation);

struct TheoremAReport {
    bool passed = true;
    int regularity = 0;           // of Q = sum Q^j(j)
    int expected_regularity = 0;  // max{j : Q^j != 0}
    std::size_t strands = 0;      // nonzero summands
    int truncation = 0;
    int i_max = 0;
    BettiTable betti;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    std::string summary() const;
};

/// summands[j] plays Q^j; each must sit in non-positive degrees.
/// truncation/i_max <= 0 select the defaults.
TheoremAReport verify_theorem_a(const std::vector<GradedEModule>& summands, int truncation = 0, int i_max = 0);

}  // namespace bggwb
