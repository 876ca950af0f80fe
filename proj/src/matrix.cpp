#include "bggwb/matrix.hpp"

#include <cstdint>
#include <sstream>

#include "bggwb/errors.hpp"

namespace bggwb {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<std::vector<mpq_class>>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_scalars(std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
    std::optional<Field> f;
    for (const auto& r : rows)
        for (const auto& s : r) {
            if (!f) f = s.field();
            require_same_field(*f, s.field(), "matrix entries");
        }
    Matrix m(f.value_or(Field::rationals()), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.raw(i, j) = rows[i][j].value();
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(f, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.raw(i, j) = columns[j][i];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vec> Matrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.raw(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) m.raw(i, k) = (*this)(i, idx[k]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(field_, idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) m.raw(k, j) = (*this)(idx[k], j);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.raw(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require_same_field(field_, b.field_, "set_block");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) raw(r0 + i, c0 + j) = b(i, j);
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& a = (*this)(i, j);
            if (sgn(a) == 0 || sgn(v[j]) == 0) continue;
            acc = field_add(acc, field_mul(a, v[j], field_), field_);
        }
        out[i] = acc;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix product");
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    const Field f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    if (f.is_rational()) {
        mpq_class prod;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                if (sgn(x) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const auto& y = b(k, j);
                    if (sgn(y) == 0) continue;
                    mpq_mul(prod.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                    mpq_add(c.raw(i, j).get_mpq_t(), c(i, j).get_mpq_t(), prod.get_mpq_t());
                }
            }
        return c;
    }
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t x = a(i, k).get_num().get_ui();
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const std::uint64_t y = b(k, j).get_num().get_ui();
                if (y) acc[j] = (acc[j] + x * y) % p;
            }
        }
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (acc[j]) c.raw(i, j) = static_cast<unsigned long>(acc[j]);
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        if (sgn(b.data_[k]) != 0) c.data_[k] = field_add(a.data_[k], b.data_[k], a.field_);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_, "matrix difference");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = field_sub(a.data_[k], b.data_[k], a.field_);
    return c;
}

Matrix Matrix::operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = normalize(-x, field_);
    return c;
}

Matrix Matrix::scaled(const mpq_class& s) const {
    Matrix c = *this;
    const mpq_class sn = normalize(s, field_);
    for (auto& x : c.data_) x = field_mul(x, sn, field_);
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "hstack");
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "vstack");
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "block_diag");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;

// r - f * p, both sorted by column; the leading column cancels.
SparseRow subtract_row(const SparseRow& r, const mpq_class& f, const SparseRow& p, const Field& fld) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, normalize(-f * p[j].second, fld));
            ++j;
        } else {
            mpq_class v = normalize(r[i].second - f * p[j].second, fld);
            if (sgn(v) != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<std::size_t> rref_rational(Matrix& m, std::size_t limit) {
    const std::size_t R = m.rows(), C = m.cols();
    const Field f = m.field();
    std::vector<SparseRow> pivot(limit);
    std::vector<char> has(limit, 0);
    std::vector<SparseRow> rest;
    for (std::size_t i = 0; i < R; ++i) {
        SparseRow r;
        for (std::size_t j = 0; j < C; ++j)
            if (sgn(m(i, j)) != 0) r.emplace_back(j, m(i, j));
        while (!r.empty() && r.front().first < limit && has[r.front().first]) {
            const mpq_class x = r.front().second;
            r = subtract_row(r, x, pivot[r.front().first], f);
        }
        if (!r.empty() && r.front().first < limit) {
            const mpq_class inv = field_inv(r.front().second, f);
            for (auto& e : r) e.second = normalize(e.second * inv, f);
            const std::size_t c = r.front().first;
            pivot[c] = std::move(r);
            has[c] = 1;
        } else {
            rest.push_back(std::move(r));
        }
    }
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < limit; ++c)
        if (has[c]) pivots.push_back(c);
    // back substitution, largest pivot first
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseRow& r = pivot[*it];
        for (std::size_t k = 1; k < r.size();) {
            const std::size_t c = r[k].first;
            if (c < limit && has[c] && c != *it) {
                const mpq_class x = r[k].second;
                SparseRow head(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
                SparseRow tail(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
                tail = subtract_row(tail, x, pivot[c], f);
                head.insert(head.end(), tail.begin(), tail.end());
                r = std::move(head);
            } else {
                ++k;
            }
        }
    }
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) m.raw(i, j) = 0;
    std::size_t row = 0;
    for (std::size_t c : pivots) {
        for (const auto& [j, v] : pivot[c]) m.raw(row, j) = v;
        ++row;
    }
    for (const auto& r : rest) {
        for (const auto& [j, v] : r) m.raw(row, j) = v;
        ++row;
    }
    return pivots;
}

std::vector<std::size_t> rref_modular(Matrix& m, std::size_t limit) {
    const std::size_t R = m.rows(), C = m.cols();
    const std::uint64_t p = m.field().characteristic();
    std::vector<std::uint64_t> a(R * C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m(i, j).get_num().get_ui();
    auto inv_mod = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < limit && rank < R; ++c) {
        std::size_t piv = R;
        for (std::size_t r = rank; r < R; ++r)
            if (a[r * C + c]) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        if (piv != rank)
            for (std::size_t j = c; j < C; ++j) std::swap(a[piv * C + j], a[rank * C + j]);
        const std::uint64_t inv = inv_mod(a[rank * C + c]);
        support.clear();
        for (std::size_t j = c; j < C; ++j)
            if (a[rank * C + j]) {
                a[rank * C + j] = a[rank * C + j] * inv % p;
                support.push_back(j);
            }
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank) continue;
            const std::uint64_t f = a[r * C + c];
            if (!f) continue;
            const std::uint64_t nf = p - f;
            for (std::size_t j : support) a[r * C + j] = (a[r * C + j] + nf * a[rank * C + j]) % p;
        }
        pivots.push_back(c);
        ++rank;
    }
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) m.raw(i, j) = static_cast<unsigned long>(a[i * C + j]);
    return pivots;
}

}  // namespace

std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t pivot_limit) {
    if (pivot_limit > m.cols()) pivot_limit = m.cols();
    return m.field().is_rational() ? rref_rational(m, pivot_limit) : rref_modular(m, pivot_limit);
}

std::size_t mat_rank(const Matrix& m) {
    if (m.empty()) return 0;
    const Field f = m.field();
    const bool by_rows = m.rows() <= m.cols();
    const std::size_t n = by_rows ? m.rows() : m.cols(), len = by_rows ? m.cols() : m.rows();
    std::vector<SparseRow> pivot(len);
    std::vector<char> has(len, 0);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        SparseRow r;
        for (std::size_t j = 0; j < len; ++j) {
            const auto& x = by_rows ? m(k, j) : m(j, k);
            if (sgn(x) != 0) r.emplace_back(j, x);
        }
        while (!r.empty() && has[r.front().first]) {
            const mpq_class c = r.front().second;
            r = subtract_row(r, c, pivot[r.front().first], f);
        }
        if (r.empty()) continue;
        const mpq_class inv = field_inv(r.front().second, f);
        for (auto& e : r) e.second = normalize(e.second * inv, f);
        const std::size_t lead = r.front().first;
        pivot[lead] = std::move(r);
        has[lead] = 1;
        ++rank;
    }
    return rank;
}

std::vector<Vec> mat_kernel_basis(const Matrix& m) {
    return kernel_columns(m).columns();
}

Matrix kernel_columns(const Matrix& m) {
    std::vector<std::size_t> free_cols;
    return kernel_columns(m, free_cols);
}

Matrix kernel_columns(const Matrix& m, std::vector<std::size_t>& free_cols) {
    const std::size_t C = m.cols();
    Matrix w = m;
    const auto pivots = rref_in_place(w);
    std::vector<char> is_pivot(C, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    free_cols.clear();
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.field(), C, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t f = free_cols[t];
        k.raw(f, t) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (sgn(w(i, f)) != 0) k.raw(pivots[i], t) = normalize(-w(i, f), m.field());
    }
    return k;
}

SolveResult solve_in_image(const Matrix& m, const Vec& v) {
    if (v.size() != m.rows())
        throw DimensionMismatch("solve_in_image: vector of length " + std::to_string(v.size()) +
                                " against " + std::to_string(m.rows()) + " rows");
    const std::size_t R = m.rows(), C = m.cols();
    Matrix aug(m.field(), R, C + 1 + R);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < R; ++i) {
        aug.raw(i, C) = normalize(v[i], m.field());
        aug.raw(i, C + 1 + i) = 1;
    }
    const auto pivots = rref_in_place(aug, C + 1);
    SolveResult out;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == C) {
            Vec y(R);
            for (std::size_t j = 0; j < R; ++j) y[j] = aug(i, C + 1 + j);
            out.certificate = std::move(y);
            return out;
        }
    Vec u(C);
    for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = aug(i, C);
    out.preimage = std::move(u);
    return out;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
    Matrix w = m;
    return rref_in_place(w);
}

QuotientCoords::QuotientCoords(const Matrix& b, const Matrix& c)
    : field_(b.field()), ambient_(b.rows()), nb_(b.cols()), nc_(c.cols()) {
    require_same_field(b.field(), c.field(), "QuotientCoords");
    if (b.rows() != c.rows()) throw DimensionMismatch("QuotientCoords: ambient dimensions differ");
    const std::size_t k = nb_ + nc_;
    Matrix aug(field_, ambient_, k + ambient_);
    aug.set_block(0, 0, b);
    aug.set_block(0, nb_, c);
    for (std::size_t i = 0; i < ambient_; ++i) aug.raw(i, k + i) = 1;
    const auto pivots = rref_in_place(aug, k);
    if (pivots.size() != k) throw PreconditionError("QuotientCoords: columns of [B | C] are dependent");
    transform_ = aug.block(0, k, ambient_, ambient_);
}

bool QuotientCoords::in_span(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("QuotientCoords: vector length mismatch");
    // Rows of T past the splitting annihilate span(B, C) and nothing else.
    for (std::size_t i = nb_ + nc_; i < ambient_; ++i) {
        mpq_class acc = 0;
        for (std::size_t l = 0; l < ambient_; ++l)
            if (sgn(v[l]) != 0 && sgn(transform_(i, l)) != 0)
                acc = field_add(acc, field_mul(transform_(i, l), v[l], field_), field_);
        if (sgn(acc) != 0) return false;
    }
    return true;
}

Vec QuotientCoords::coords(const Vec& v) const {
    if (!in_span(v)) throw PreconditionError("QuotientCoords: vector outside the splitting");
    Vec out(nc_);
    for (std::size_t i = 0; i < nc_; ++i) {
        mpq_class acc = 0;
        for (std::size_t l = 0; l < ambient_; ++l)
            if (sgn(v[l]) != 0 && sgn(transform_(nb_ + i, l)) != 0)
                acc = field_add(acc, field_mul(transform_(nb_ + i, l), v[l], field_), field_);
        out[i] = acc;
    }
    return out;
}

Matrix QuotientCoords::coords(const Matrix& m) const {
    Matrix out(field_, nc_, m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Vec c = coords(m.column(j));
        for (std::size_t i = 0; i < nc_; ++i) out.raw(i, j) = c[i];
    }
    return out;
}

}  // namespace bggwb
