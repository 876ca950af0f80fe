#include <random>

#include "bggwb/errors.hpp"
#include "bggwb/polynomial.hpp"
#include "doctest.h"
#include "support/testing.hpp"

using namespace bggwb;
using testing::mat;
using testing::QQ;

TEST_CASE("field and scalar basics") {
    CHECK(Field::parse("QQ").is_rational());
    CHECK(Field::parse("fp:7").characteristic() == 7);
    CHECK(Field::prime(7).to_string() == "fp:7");
    CHECK_THROWS_AS(Field::parse("fp:8"), ParseError);
    CHECK_THROWS_AS(Field::parse("RR"), ParseError);

    Scalar a = Scalar::parse(QQ, "6/4");
    CHECK(a.to_string() == "3/2");
    CHECK((a * a.inverse()).to_string() == "1");
    Scalar b = Scalar::parse(Field::prime(5), "3");
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK((b * b).to_string() == "4");
    CHECK(Scalar::parse(Field::prime(5), "1/2").to_string() == "3");
    CHECK(Scalar::parse(QQ, "-2/4").to_string() == "-1/2");
    CHECK_THROWS_AS(Scalar::parse(QQ, "1/0"), ParseError);
}

TEST_CASE("rank examples") {
    CHECK(mat_rank(mat(2, {{1, 2}, {2, 4}})) == 1);
    CHECK(mat_rank(Matrix(QQ, 0, 0)) == 0);
    CHECK(mat_rank(mat(2, {{1, 2}, {2, 4}}, Field::prime(2))) == 1);
    CHECK(mat_rank(mat(2, {{1, 1}, {1, -1}}, Field::prime(2))) == 1);
    CHECK(mat_rank(mat(2, {{1, 1}, {1, -1}})) == 2);
}

TEST_CASE("mixed-field entries are rejected") {
    std::vector<std::vector<Scalar>> rows{{Scalar(QQ, 1), Scalar(Field::prime(3), 1)}};
    CHECK_THROWS_AS(Matrix::from_scalars(2, rows), FieldMismatch);
}

TEST_CASE("kernel examples") {
    auto k = mat_kernel_basis(mat(2, {{1, 2}, {2, 4}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -2);
    CHECK(k[0][1] == 1);
    CHECK(mat_kernel_basis(Matrix::identity(QQ, 3)).empty());
}

TEST_CASE("kernel over F_3 agrees with enumeration") {
    const Field f3 = Field::prime(3);
    std::mt19937_64 rng(3);
    std::vector<Matrix> cases{mat(3, {{1, 1, 1}}, f3)};
    for (int i = 0; i < 30; ++i) cases.push_back(testing::random_matrix(rng, f3, 1 + i % 3, 1 + i % 4));
    for (const auto& m : cases) {
        const std::size_t n = m.cols();
        std::size_t zeros = 0, total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Vec v(n);
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) v[i] = static_cast<long>(c % 3);
            bool zero = true;
            for (const auto& x : m.apply(v)) zero = zero && sgn(x) == 0;
            zeros += zero;
        }
        const auto k = mat_kernel_basis(m);
        std::size_t expect = 1;
        for (std::size_t i = 0; i < k.size(); ++i) expect *= 3;
        CHECK(zeros == expect);
        for (const auto& v : k)
            for (const auto& x : m.apply(v)) CHECK(sgn(x) == 0);
    }
    CHECK(mat_kernel_basis(mat(3, {{1, 1, 1}}, f3)).size() == 2);
}

TEST_CASE("solve_in_image examples") {
    auto m = mat(2, {{1, 0}, {0, 0}});
    auto r = solve_in_image(m, {1, 0});
    REQUIRE(r.in_image());
    CHECK(*r.preimage == Vec{1, 0});

    r = solve_in_image(m, {0, 1});
    REQUIRE_FALSE(r.in_image());
    CHECK(*r.certificate == Vec{0, 1});

    r = solve_in_image(mat(1, {{2}}), {3});
    REQUIRE(r.in_image());
    CHECK((*r.preimage)[0] == mpq_class(3, 2));

    CHECK_THROWS_AS(solve_in_image(m, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("rank-nullity and solve round trip on random matrices") {
    std::mt19937_64 rng(11);
    for (Field f : {QQ, Field::prime(5), Field::prime(32003)}) {
        for (int i = 0; i < 60; ++i) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m = testing::random_matrix(rng, f, r, c, 0.5);
            const auto k = mat_kernel_basis(m);
            CHECK(mat_rank(m) + k.size() == c);
            CHECK(mat_rank(m) == mat_rank(m.transpose()));
            Vec u(c);
            for (auto& x : u) x = normalize(testing::small_scalar(rng), f);
            const Vec v = m.apply(u);
            auto s = solve_in_image(m, v);
            REQUIRE(s.in_image());
            CHECK(m.apply(*s.preimage) == v);

            Vec w(r);
            for (auto& x : w) x = normalize(testing::small_scalar(rng), f);
            auto s2 = solve_in_image(m, w);
            if (!s2.in_image()) {
                const Vec& y = *s2.certificate;
                mpq_class yw = 0;
                for (std::size_t j = 0; j < r; ++j) yw = field_add(yw, field_mul(y[j], w[j], f), f);
                CHECK(yw == 1);
                for (std::size_t j = 0; j < c; ++j) {
                    mpq_class s0 = 0;
                    for (std::size_t i2 = 0; i2 < r; ++i2) s0 = field_add(s0, field_mul(y[i2], m(i2, j), f), f);
                    CHECK(sgn(s0) == 0);
                }
            }
        }
    }
}

TEST_CASE("quotient coordinates") {
    auto b = mat(1, {{1}, {1}, {0}});
    auto c = mat(1, {{0}, {1}, {0}});
    QuotientCoords qc(b, c);
    CHECK(qc.in_span({2, 5, 0}));
    CHECK_FALSE(qc.in_span({0, 0, 1}));
    CHECK(qc.coords(Vec{2, 5, 0}) == Vec{3});
    CHECK_THROWS(QuotientCoords(b, b));
}

TEST_CASE("monomial bases") {
    auto s = monomial_basis(MonomialKind::symmetric, 2, 2);
    REQUIRE(s.size() == 3);
    CHECK(s.label(0) == "x1^2");
    CHECK(s.label(1) == "x1x2");
    CHECK(s.label(2) == "x2^2");
    auto e = monomial_basis(MonomialKind::exterior, 3, 2);
    REQUIRE(e.size() == 3);
    CHECK(e.label(0) == "e1e2");
    CHECK(e.label(1) == "e1e3");
    CHECK(e.label(2) == "e2e3");
    CHECK(monomial_basis(MonomialKind::exterior, 2, 3).size() == 0);
    CHECK(monomial_basis(MonomialKind::symmetric, 0, 0).size() == 1);
    CHECK(monomial_basis(MonomialKind::symmetric, 0, 2).size() == 0);

    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= 6; ++d) {
            auto sb = monomial_basis(MonomialKind::symmetric, n, d);
            auto eb = monomial_basis(MonomialKind::exterior, n, d);
            CHECK(sb.size() == (n == 0 ? (d == 0 ? 1u : 0u) : binomial(n + d - 1, d)));
            CHECK(eb.size() == binomial(n, d));
            for (std::size_t i = 0; i < sb.size(); ++i) {
                CHECK(sym_rank(sb.symmetric[i]) == i);
                if (i + 1 < sb.size()) CHECK(grlex_less(sb.symmetric[i + 1], sb.symmetric[i]));
            }
            for (std::size_t i = 0; i < eb.size(); ++i) CHECK(ext_rank(eb.exterior[i], n) == i);
        }
}

TEST_CASE("polynomial parsing and printing") {
    auto p = Polynomial::parse(QQ, 2, "t1^2 - 2/3*t2");
    CHECK(p.terms().size() == 2);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 1}) == mpq_class(-2, 3));
    CHECK(p.to_string() == "t1^2 - 2/3*t2");
    CHECK_FALSE(p.homogeneous_degree().has_value());

    auto q = Polynomial::parse(QQ, 3, "3/2*t1^2*t2 - t3");
    CHECK(q.to_string() == "3/2*t1^2*t2 - t3");
    CHECK(Polynomial::parse(QQ, 1, "-t").to_string() == "-t");
    CHECK(Polynomial::parse(QQ, 1, "0").is_zero());
    CHECK(Polynomial::parse(QQ, 1, "t^2").homogeneous_degree() == 2);
    CHECK_THROWS_AS(Polynomial::parse(QQ, 2, "t"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(QQ, 1, "t^"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(QQ, 2, "t3"), ParseError);

    auto a = Polynomial::parse(QQ, 1, "1 + t");
    auto sq = a * a;
    CHECK(sq.to_string() == "t^2 + 2*t + 1");
    CHECK(Polynomial::mul_truncated(a, a, 1).to_string() == "2*t + 1");
    CHECK((sq - a * a).is_zero());
    CHECK(sq.order() == 0);
    CHECK(sq.degree() == 2);

    auto f5 = Polynomial::parse(Field::prime(5), 1, "1/2*t");
    CHECK(f5.to_string() == "3*t");
}
