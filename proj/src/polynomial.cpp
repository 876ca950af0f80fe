#include "bggwb/polynomial.hpp"

#include <cctype>

#include "bggwb/errors.hpp"

namespace bggwb {

Polynomial Polynomial::constant(Field f, int nvars, const mpq_class& c) {
    Polynomial p(f, nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(Field f, int nvars, int index) {
    if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(f, e, 1);
}

Polynomial Polynomial::monomial(Field f, const Exponents& e, const mpq_class& c) {
    Polynomial p(f, static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int Polynomial::order() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || order() != degree()) return std::nullopt;
    return order();
}

mpq_class Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class Polynomial::constant_term() const {
    return coefficient(Exponents(static_cast<std::size_t>(nvars_), 0));
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("monomial has the wrong number of variables");
    const mpq_class cn = normalize(c, field_);
    if (sgn(cn) == 0) return;
    auto [it, inserted] = terms_.emplace(e, cn);
    if (!inserted) {
        it->second = field_add(it->second, cn, field_);
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::homogeneous_part(int k) const {
    Polynomial p(field_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == k) p.terms_.emplace(e, c);
    return p;
}

Polynomial Polynomial::truncated(int n) const {
    Polynomial p(field_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= n) p.terms_.emplace(e, c);
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_, "polynomial sum");
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial sum: variable counts differ");
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, normalize(-c, field_));
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& s) const {
    Polynomial r(field_, nvars_);
    const mpq_class sn = normalize(s, field_);
    if (sgn(sn) == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_mul(c, sn, field_));
    return r;
}

Polynomial Polynomial::mul_truncated(const Polynomial& a, const Polynomial& b, int n) {
    require_same_field(a.field_, b.field_, "polynomial product");
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial product: variable counts differ");
    Polynomial r(a.field_, a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (n >= 0 && da + total_degree(eb) > n) break;  // terms of b ascend in degree
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, field_mul(ca, cb, a.field_));
        }
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return Polynomial::mul_truncated(a, b, -1); }

namespace {

std::string var_name(int nvars, int i) { return nvars == 1 ? std::string("t") : "t" + std::to_string(i + 1); }

std::string monomial_text(const Exponents& e) {
    const int n = static_cast<int>(e.size());
    std::string out;
    for (int i = 0; i < n; ++i) {
        const int a = e[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += '*';
        out += var_name(n, i);
        if (a > 1) out += '^' + std::to_string(a);
    }
    return out;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = sgn(c) < 0;
        const mpq_class mag = neg ? mpq_class(-c) : c;
        const std::string mono = monomial_text(e);
        std::string body;
        if (mono.empty())
            body = mag.get_str();
        else if (mag == 1)
            body = mono;
        else
            body = mag.get_str() + "*" + mono;
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(Field f, int nvars, std::string_view s) : f_(f), n_(nvars), s_(s) {}

    Polynomial run() {
        Polynomial acc(f_, n_);
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [e, c] = term();
            acc.add_term(e, sign * c);
            first = false;
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("polynomial '" + std::string(s_) + "': " + msg + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::pair<Exponents, mpq_class> term() {
        Exponents e(static_cast<std::size_t>(n_), 0);
        mpq_class c = 1;
        while (true) {
            skip();
            if (pos_ >= s_.size()) fail("dangling operator");
            const char ch = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                    ++pos_;
                c *= parse_rational(s_.substr(start, pos_ - start));
            } else if (ch == 't') {
                ++pos_;
                int idx = 0;
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    idx = idx * 10 + (s_[pos_++] - '0');
                if (start == pos_) {
                    if (n_ != 1) fail("bare 't' needs exactly one variable");
                    idx = 1;
                }
                if (idx < 1 || idx > n_) fail("variable t" + std::to_string(idx) + " out of range");
                int power = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    std::size_t ps = pos_;
                    power = 0;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        power = power * 10 + (s_[pos_++] - '0');
                    if (ps == pos_) fail("missing exponent");
                }
                e[static_cast<std::size_t>(idx - 1)] += power;
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            return {e, c};
        }
    }

    Field f_;
    int n_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(Field f, int nvars, std::string_view text) { return PolyParser(f, nvars, text).run(); }

PolyMatrix::PolyMatrix(Field f, int nvars, std::size_t rows, std::size_t cols)
    : field_(f), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(f, nvars)) {}

PolyMatrix PolyMatrix::from_constant(const Matrix& m, int nvars) {
    PolyMatrix p(m.field(), nvars, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Polynomial::constant(m.field(), nvars, m(i, j));
    return p;
}

PolyMatrix PolyMatrix::identity(Field f, int nvars, std::size_t n) {
    return from_constant(Matrix::identity(f, n), nvars);
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::truncated(int n) const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = p.truncated(n);
    return r;
}

Matrix PolyMatrix::constant_part() const { return coefficient(Exponents(static_cast<std::size_t>(nvars_), 0)); }

Matrix PolyMatrix::coefficient(const Exponents& e) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.raw(i, j) = (*this)(i, j).coefficient(e);
    return m;
}

std::vector<std::pair<Exponents, Matrix>> PolyMatrix::homogeneous_components(int k) const {
    std::map<Exponents, Matrix, GrlexLess> acc;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [e, c] : (*this)(i, j).terms()) {
                if (total_degree(e) != k) continue;
                auto it = acc.find(e);
                if (it == acc.end()) it = acc.emplace(e, Matrix(field_, rows_, cols_)).first;
                it->second.raw(i, j) = c;
            }
    return {acc.begin(), acc.end()};
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : data_) d = std::max(d, p.degree());
    return d;
}

int PolyMatrix::order() const {
    int d = -1;
    for (const auto& p : data_)
        if (!p.is_zero()) d = d < 0 ? p.order() : std::min(d, p.order());
    return d;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = -p;
    return r;
}

PolyMatrix PolyMatrix::scaled(const mpq_class& c) const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = p.scaled(c);
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(field_, nvars_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a.field_, b.field_, "polynomial matrix sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.nvars_ != b.nvars_)
        throw DimensionMismatch("polynomial matrix sum: shape mismatch");
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix PolyMatrix::mul_truncated(const PolyMatrix& a, const PolyMatrix& b, int n) {
    require_same_field(a.field_, b.field_, "polynomial matrix product");
    if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_)
        throw DimensionMismatch("polynomial matrix product: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    PolyMatrix r(a.field_, a.nvars_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (y.is_zero()) continue;
                r(i, j) = r(i, j) + Polynomial::mul_truncated(x, y, n);
            }
        }
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v, int n) const {
    if (v.size() != cols_) throw DimensionMismatch("polynomial matrix apply: length mismatch");
    std::vector<Polynomial> out(rows_, Polynomial(field_, nvars_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero())
                out[i] = out[i] + Polynomial::mul_truncated((*this)(i, j), v[j], n);
    return out;
}

PolyMatrix poly_block_diag(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a.field(), b.field(), "poly_block_diag");
    PolyMatrix r(a.field(), a.nvars(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

std::string vector_to_string(const std::vector<Polynomial>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].to_string();
    }
    return out + ")";
}

}  // namespace bggwb
