#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bggwb/emodule.hpp"
#include "bggwb/polynomial.hpp"

namespace bggwb {

/// Bounded complex of free modules over R = k[[t_1..t_e]], entries stored as
/// jets modulo m^{N+1}. Spots n_lo..n_hi; d^n : K^n -> K^{n+1}.
class FilteredFreeComplex {
public:
    FilteredFreeComplex() = default;
    FilteredFreeComplex(Field f, int nvars, int precision, int n_lo, std::vector<std::size_t> ranks);

    Field field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    int precision() const noexcept { return precision_; }
    int n_lo() const noexcept { return n_lo_; }
    int n_hi() const noexcept { return n_lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int n) const;
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

    /// d^n as a rank(n+1) x rank(n) matrix; zero outside the stored range.
    PolyMatrix differential(int n) const;
    /// Entries are truncated to the precision. Throws DimensionMismatch on shape errors.
    void set_differential(int n, const PolyMatrix& m);

    /// Largest total degree of a nonzero entry (-1 if all differentials vanish).
    int max_entry_degree() const;

    friend bool operator==(const FilteredFreeComplex& a, const FilteredFreeComplex& b);

private:
    Field field_;
    int nvars_ = 0;
    int precision_ = 0;
    int n_lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<PolyMatrix> d_;  // d_[n - n_lo] for n in [n_lo, n_hi - 1]
};

struct SquareViolation {
    int spot = 0;  // d^{n+1} d^n != 0
    std::size_t row = 0, col = 0;
    Polynomial entry;
};

struct ComplexValidation {
    std::vector<SquareViolation> violations;
    bool valid() const { return violations.empty(); }
    std::string to_string() const;
};

ComplexValidation validate_complex(const FilteredFreeComplex& k);
void require_valid(const FilteredFreeComplex& k, const char* context);

/// K (x)_R k: constant parts and homology dimensions per spot.
struct Reduction {
    int n_lo = 0;
    std::vector<Matrix> constant;        // constant[n - n_lo] = d^n(0)
    std::vector<std::size_t> homology;   // homology[n - n_lo] = dim H^n(K (x) k)
    std::size_t at(int n) const;
};

Reduction reduce_mod_m(const FilteredFreeComplex& k);

/// r when every nonzero entry of every differential is homogeneous of degree
/// r; nullopt otherwise. An all-zero complex reports nullopt with zero = true.
struct Homogeneity {
    std::optional<int> degree;
    bool zero = false;
    std::string to_string() const;
};

Homogeneity homogeneous_degree(const FilteredFreeComplex& k);

/// P_K = sum_n H^n(K (x) k) with H^n in degree d_top - n. e_a acts through the
/// coefficient of t_a in the linear part of d.
GradedEModule induce_emodule(const FilteredFreeComplex& k, int d_top);

/// Blockwise direct sum (spot ranges are padded with zero ranks).
FilteredFreeComplex sum_complexes(const std::vector<FilteredFreeComplex>& parts);

}  // namespace bggwb
