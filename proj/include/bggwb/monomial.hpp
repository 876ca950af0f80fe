#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bggwb {

/// Exponent vector of a commutative monomial.
using Exponents = std::vector<int>;

enum class MonomialKind { symmetric, exterior };

/// Ordered monomial basis of Sym^degree or Λ^degree on nvars generators.
///
/// Symmetric monomials are listed in lexicographic order with the largest
/// power of the first variable first (x1^2, x1 x2, x2^2). Exterior
/// monomials are sorted index subsets in lexicographic order
/// (e1e2, e1e3, e2e3); indices are zero-based.
struct MonomialBasis {
    MonomialKind kind = MonomialKind::symmetric;
    int nvars = 0;
    int degree = 0;
    std::vector<Exponents> symmetric;            // kind == symmetric
    std::vector<std::vector<int>> exterior;      // kind == exterior

    std::size_t size() const {
        return kind == MonomialKind::symmetric ? symmetric.size() : exterior.size();
    }
    std::string label(std::size_t i, const std::string& var = "") const;
};

MonomialBasis monomial_basis(MonomialKind kind, int nvars, int degree);

std::size_t binomial(long n, long k);
/// dim Sym^degree of an nvars-dimensional space.
std::size_t sym_count(int nvars, int degree);
/// Position of an exponent vector inside monomial_basis(symmetric, n, |e|).
std::size_t sym_rank(const Exponents& e);
/// Position of a sorted subset inside monomial_basis(exterior, n, |s|).
std::size_t ext_rank(const std::vector<int>& subset, int nvars);

/// Graded lexicographic comparison: lower total degree first, then larger
/// leading exponents first inside a degree.
bool grlex_less(const Exponents& a, const Exponents& b);
int total_degree(const Exponents& e);

}  // namespace bggwb
