#include "graded.hpp"

#include <algorithm>

#include "bggwb/errors.hpp"

namespace bggwb::detail {

Matrix graded_block(const PolyMatrix& m, int k, int s) {
    const int e = m.nvars();
    const Field f = m.field();
    const std::size_t src_mon = sym_count(e, s), dst_mon = sym_count(e, s + k);
    Matrix out(f, m.rows() * dst_mon, m.cols() * src_mon);
    if (out.empty() || k < 0) return out;
    const auto src = monomial_basis(MonomialKind::symmetric, e, s);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [gamma, c] : m(i, j).terms()) {
                if (total_degree(gamma) != k) continue;
                for (std::size_t b = 0; b < src_mon; ++b) {
                    Exponents sum = src.symmetric[b];
                    for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += gamma[v];
                    auto& cell = out.raw(i * dst_mon + sym_rank(sum), j * src_mon + b);
                    cell = field_add(cell, c, f);
                }
            }
    return out;
}

std::vector<Polynomial> to_polynomials(Field f, int nvars, std::size_t rank, int s0, const Vec& stacked) {
    std::vector<Polynomial> out(rank, Polynomial(f, nvars));
    std::size_t pos = 0;
    for (int s = s0; pos < stacked.size(); ++s) {
        const auto basis = monomial_basis(MonomialKind::symmetric, nvars, s);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t m = 0; m < basis.size(); ++m, ++pos)
                if (sgn(stacked[pos]) != 0) out[i].add_term(basis.symmetric[m], stacked[pos]);
        if (basis.size() == 0 || rank == 0) break;
    }
    return out;
}

const Matrix& GradedComplex::block(int n, int k, int s) {
    const auto key = std::make_tuple(n, k, s);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
    return blocks_.emplace(key, graded_block(k_.differential(n), k, s)).first->second;
}

Matrix GradedComplex::cycle_system(int n, int p, int r) {
    std::vector<std::size_t> col_off{0}, row_off{0};
    for (int s = p; s < p + r; ++s) col_off.push_back(col_off.back() + piece_dim(n, s));
    for (int u = p; u < p + r; ++u) row_off.push_back(row_off.back() + piece_dim(n + 1, u));
    Matrix sys(field(), row_off.back(), col_off.back());
    for (int u = p; u < p + r; ++u)
        for (int s = p; s <= u; ++s) {
            const Matrix& b = block(n, u - s, s);
            if (!b.empty() && !b.is_zero()) sys.set_block(row_off[static_cast<std::size_t>(u - p)], col_off[static_cast<std::size_t>(s - p)], b);
        }
    return sys;
}

Matrix GradedComplex::cycle_system_kernel(int n, int p, int r) { return kernel_columns(cycle_system(n, p, r)); }

Matrix GradedComplex::zimg(int n, int p, int r) {
    const auto key = std::make_tuple(n, p, r);
    auto it = zimg_.find(key);
    if (it != zimg_.end()) return it->second;
    const Matrix ker = cycle_system_kernel(n, p, r);
    const Matrix proj = ker.block(0, 0, piece_dim(n, p), ker.cols());
    Matrix out = proj.select_columns(independent_columns(proj));
    zimg_.emplace(key, out);
    return out;
}

GradedComplex::BoundarySystem GradedComplex::boundary_system(int n, int p, int r) {
    const int m = n - 1;
    BoundarySystem out;
    out.s0 = std::max(0, p - r + 1);
    const int s0 = out.s0;
    std::vector<std::size_t> col_off{0}, row_off{0};
    for (int s = s0; s <= p; ++s) col_off.push_back(col_off.back() + piece_dim(m, s));
    for (int u = s0; u < p; ++u) row_off.push_back(row_off.back() + piece_dim(n, u));
    Matrix sys(field(), row_off.back(), col_off.back());
    for (int u = s0; u < p; ++u)
        for (int s = s0; s <= u; ++s) {
            const Matrix& b = block(m, u - s, s);
            if (!b.empty() && !b.is_zero()) sys.set_block(row_off[static_cast<std::size_t>(u - s0)], col_off[static_cast<std::size_t>(s - s0)], b);
        }
    Matrix lead(field(), piece_dim(n, p), col_off.back());
    for (int s = s0; s <= p; ++s) {
        const Matrix& b = block(m, p - s, s);
        if (!b.empty() && !b.is_zero()) lead.set_block(0, col_off[static_cast<std::size_t>(s - s0)], b);
    }
    out.kernel = kernel_columns(sys);
    out.image = lead * out.kernel;
    return out;
}

Matrix GradedComplex::bimg(int n, int p, int r) {
    const auto key = std::make_tuple(n, p, r);
    auto it = bimg_.find(key);
    if (it != bimg_.end()) return it->second;
    const Matrix image = boundary_system(n, p, r).image;
    Matrix out = image.select_columns(independent_columns(image));
    bimg_.emplace(key, out);
    return out;
}

Vec GradedComplex::leading_image(int n, int p, int r, const Vec& stacked) {
    Vec out(piece_dim(n + 1, p + r));
    std::size_t pos = 0;
    for (int s = p; s < p + r; ++s) {
        const std::size_t len = piece_dim(n, s);
        Vec xs(stacked.begin() + static_cast<long>(pos), stacked.begin() + static_cast<long>(pos + len));
        pos += len;
        const Matrix& b = block(n, p + r - s, s);
        if (b.empty()) continue;
        const Vec y = b.apply(xs);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_add(out[i], y[i], field());
    }
    return out;
}

}  // namespace bggwb::detail

namespace bggwb::detail {

Matrix GradedComplex::leading_images(int n, int p, int r, const Matrix& stacked) {
    Matrix out(field(), piece_dim(n + 1, p + r), stacked.cols());
    std::size_t pos = 0;
    for (int s = p; s < p + r; ++s) {
        const std::size_t len = piece_dim(n, s);
        const Matrix& b = block(n, p + r - s, s);
        if (!b.empty() && stacked.cols() > 0 && !b.is_zero()) out = out + b * stacked.block(pos, 0, len, stacked.cols());
        pos += len;
    }
    return out;
}

}  // namespace bggwb::detail
