#pragma once

// Degreewise pieces of a filtered free complex: gr^s K^n = k^{r_n} (x) Sym^s W,
// component-major (index = i * |Sym^s| + monomial rank).

#include <map>
#include <tuple>
#include <vector>

#include "bggwb/filtered.hpp"
#include "bggwb/monomial.hpp"

namespace bggwb::detail {

/// The degree-k part of m as a map gr^s -> gr^{s+k}.
Matrix graded_block(const PolyMatrix& m, int k, int s);

/// Polynomial vector of length `rank` from stacked graded pieces
/// x_{s0}, x_{s0+1}, ... (each of size rank * |Sym^s|).
std::vector<Polynomial> to_polynomials(Field f, int nvars, std::size_t rank, int s0, const Vec& stacked);

class GradedComplex {
public:
    explicit GradedComplex(const FilteredFreeComplex& k) : k_(k) {}

    const FilteredFreeComplex& complex() const { return k_; }
    Field field() const { return k_.field(); }
    int nvars() const { return k_.nvars(); }

    std::size_t piece_dim(int n, int s) const {
        return s < 0 ? 0 : k_.rank(n) * sym_count(k_.nvars(), s);
    }
    /// D_k^n : gr^s K^n -> gr^{s+k} K^{n+1}.
    const Matrix& block(int n, int k, int s);

    /// Leading parts in gr^p K^n of Z_r^p: classes x_p of x in F^p with dx in F^{p+r}.
    /// Returns the kernel of the defining system (unknowns x_p..x_{p+r-1}).
    Matrix cycle_system_kernel(int n, int p, int r);
    /// Stacked system (dx)_u for u in [p, p + r - 1] over unknowns x_p..x_{p+r-1}.
    Matrix cycle_system(int n, int p, int r);
    /// Column span (independent columns) of Zimg_r^{p,n}.
    Matrix zimg(int n, int p, int r);
    /// Column span (independent columns) of Bimg_r^{p,n}: leading parts at p
    /// of d(F^{p-r+1} K^{n-1}) intersected with F^p.
    Matrix bimg(int n, int p, int r);
    /// y in F^{p-r+1} K^{n-1} (stacked from degree s0) with dy in F^p, and the
    /// leading parts (dy)_p of a kernel basis.
    struct BoundarySystem {
        int s0 = 0;
        Matrix kernel;
        Matrix image;
    };
    BoundarySystem boundary_system(int n, int p, int r);
    /// (dx)_{p+r} for stacked x = (x_p..x_{p+r-1}) in K^n.
    Vec leading_image(int n, int p, int r, const Vec& stacked);
    /// The same for every column of a stacked matrix.
    Matrix leading_images(int n, int p, int r, const Matrix& stacked);

private:
    const FilteredFreeComplex& k_;
    std::map<std::tuple<int, int, int>, Matrix> blocks_;
    std::map<std::tuple<int, int, int>, Matrix> zimg_, bimg_;
};

}  // namespace bggwb::detail
