#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bggwb/matrix.hpp"
#include "bggwb/monomial.hpp"

namespace bggwb {

struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(a, b); }
};

/// Polynomial in t1..tn over an exact field, used as a jet representative
/// of a power series.
class Polynomial {
public:
    using Terms = std::map<Exponents, mpq_class, GrlexLess>;

    Polynomial() = default;
    Polynomial(Field f, int nvars) : field_(f), nvars_(nvars) {}

    static Polynomial constant(Field f, int nvars, const mpq_class& c);
    static Polynomial variable(Field f, int nvars, int index);
    static Polynomial monomial(Field f, const Exponents& e, const mpq_class& c);
    /// Accepts sums of terms like "3/2*t1^2*t2 - t3"; "t" is allowed for t1
    /// when nvars == 1.
    static Polynomial parse(Field f, int nvars, std::string_view text);

    Field field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Lowest total degree of a term; -1 for the zero polynomial.
    int order() const;
    /// Highest total degree of a term; -1 for the zero polynomial.
    int degree() const;
    /// Degree r when every term has degree r; nullopt otherwise (and for zero).
    std::optional<int> homogeneous_degree() const;

    mpq_class coefficient(const Exponents& e) const;
    mpq_class constant_term() const;
    void add_term(const Exponents& e, const mpq_class& c);

    Polynomial homogeneous_part(int k) const;
    /// Drops every term of degree > n.
    Polynomial truncated(int n) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const mpq_class& c) const;
    /// Product with every term of degree > n dropped.
    static Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int n);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Canonical text: terms in decreasing graded-lex order.
    std::string to_string() const;

private:
    Field field_;
    int nvars_ = 0;
    Terms terms_;
};

/// Matrix with polynomial entries; row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Field f, int nvars, std::size_t rows, std::size_t cols);

    static PolyMatrix from_constant(const Matrix& m, int nvars);
    static PolyMatrix identity(Field f, int nvars, std::size_t n);

    Field field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool is_zero() const;
    PolyMatrix truncated(int n) const;
    Matrix constant_part() const;
    /// Coefficient matrix of the monomial t^e.
    Matrix coefficient(const Exponents& e) const;
    /// The monomials of degree k that occur, with their coefficient matrices.
    std::vector<std::pair<Exponents, Matrix>> homogeneous_components(int k) const;
    int max_degree() const;
    int order() const;

    PolyMatrix operator-() const;
    PolyMatrix scaled(const mpq_class& c) const;
    PolyMatrix transpose() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix mul_truncated(const PolyMatrix& a, const PolyMatrix& b, int n);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    /// Applies the matrix to a vector of polynomials, truncating at degree n.
    std::vector<Polynomial> apply(const std::vector<Polynomial>& v, int n) const;

private:
    Field field_;
    int nvars_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
};

PolyMatrix poly_block_diag(const PolyMatrix& a, const PolyMatrix& b);

/// "(t,1)" style rendering of a polynomial vector.
std::string vector_to_string(const std::vector<Polynomial>& v);

}  // namespace bggwb
