#include <random>

#include "bggwb/errors.hpp"
#include "bggwb/pages.hpp"
#include "doctest.h"
#include "support/complexes.hpp"

using namespace bggwb;
using testing::QQ;

namespace {

PolyMatrix pm(int e, std::size_t rows, std::size_t cols, std::vector<std::string> entries) {
    PolyMatrix m(QQ, e, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Polynomial::parse(QQ, e, entries[i * cols + j]);
    return m;
}

FilteredFreeComplex single_map(int e, int N, std::size_t r0, std::size_t r1, std::vector<std::string> entries) {
    FilteredFreeComplex k(QQ, e, N, 0, {r0, r1});
    k.set_differential(0, pm(e, r1, r0, std::move(entries)));
    return k;
}

FilteredFreeComplex two_by_two(int N = 6) { return single_map(1, N, 2, 2, {"1", "-t", "t", "0"}); }

}  // namespace

TEST_CASE("validate_complex examples") {
    CHECK(validate_complex(single_map(1, 4, 1, 1, {"t"})).valid());
    FilteredFreeComplex k(QQ, 1, 4, 0, {1, 1, 1});
    k.set_differential(0, pm(1, 1, 1, {"1"}));
    k.set_differential(1, pm(1, 1, 1, {"1"}));
    auto v = validate_complex(k);
    REQUIRE_FALSE(v.valid());
    CHECK(v.violations.front().entry.to_string() == "1");
    CHECK(validate_complex(two_by_two()).valid());
    CHECK_THROWS_AS(k.set_differential(0, pm(1, 2, 1, {"1", "0"})), DimensionMismatch);

    // vanishing only modulo the precision
    FilteredFreeComplex j(QQ, 1, 2, 0, {1, 1, 1});
    j.set_differential(0, pm(1, 1, 1, {"t^2"}));
    j.set_differential(1, pm(1, 1, 1, {"t"}));
    CHECK(validate_complex(j).valid());
}

TEST_CASE("reduce_mod_m examples") {
    auto r = reduce_mod_m(two_by_two());
    CHECK(r.constant.front() == testing::mat(2, {{1, 0}, {0, 0}}));
    CHECK(r.at(0) == 1);
    CHECK(r.at(1) == 1);
    auto t = reduce_mod_m(single_map(1, 4, 2, 2, {"t", "0", "0", "t"}));
    CHECK(t.at(0) == 2);
    CHECK(t.at(1) == 2);
    auto id = reduce_mod_m(single_map(1, 4, 2, 2, {"1", "0", "0", "1"}));
    CHECK(id.at(0) == 0);
    CHECK(id.at(1) == 0);
}

TEST_CASE("homogeneous_degree examples") {
    CHECK(homogeneous_degree(single_map(1, 4, 1, 1, {"t^2"})).degree == 2);
    CHECK(homogeneous_degree(single_map(2, 4, 1, 2, {"t1", "-t2"})).degree == 1);
    auto h = homogeneous_degree(two_by_two());
    CHECK_FALSE(h.degree.has_value());
    CHECK_FALSE(h.zero);
    CHECK(homogeneous_degree(single_map(1, 4, 1, 1, {"0"})).zero);
    CHECK(homogeneous_degree(single_map(1, 4, 1, 1, {"t + t^2"})).to_string() == "not homogeneous");
}

TEST_CASE("induce_emodule examples") {
    auto p = induce_emodule(single_map(1, 4, 1, 1, {"t"}), 1);
    CHECK(p.lo() == 0);
    CHECK(p.hi() == 1);
    CHECK(p.action(0, 1) == testing::mat(1, {{1}}));

    auto z = induce_emodule(single_map(1, 4, 1, 1, {"t^2"}), 1);
    CHECK(z.action(0, 1).is_zero());

    auto pe = induce_emodule(two_by_two(), 1);
    CHECK(pe.dim(1) == 1);
    CHECK(pe.dim(0) == 1);
    CHECK(pe.action(0, 1).is_zero());
}

TEST_CASE("compute_page examples") {
    // zero differential: every page equals E_1
    auto zero = single_map(2, 6, 1, 2, {"0", "0"});
    for (int r = 1; r <= 3; ++r) {
        auto t = compute_page(zero, r, 3);
        CHECK(t.differentials_vanish());
        for (int p = 0; p <= 3; ++p) {
            CHECK(t.dim(p, 0) == testing::binomial(p + 1, p));
            CHECK(t.dim(p, 1) == 2 * testing::binomial(p + 1, p));
        }
    }
    // R --t--> R: E_2^{p,-p} = 0 for p >= 1
    auto kt = single_map(1, 8, 1, 1, {"t"});
    auto e2 = compute_page(kt, 2, 5);
    for (int p = 0; p <= 5; ++p) CHECK(e2.dim(p, 0) == 0);
    CHECK(e2.dim(0, 1) == 1);
    for (int p = 1; p <= 5; ++p) CHECK(e2.dim(p, 1) == 0);

    // two_by_two example: d_1 = 0 and d_2 != 0
    auto k = two_by_two(8);
    auto e1 = compute_page(k, 1, 6);
    CHECK(e1.differentials_vanish());
    auto p2 = compute_page(k, 2, 6);
    for (int p = 0; p <= 6; ++p) {
        CHECK(p2.dim(p, 0) == e1.dim(p, 0));
        CHECK(p2.dim(p, 1) == e1.dim(p, 1));
    }
    bool nonzero = false;
    for (int p = 0; p + 2 <= 6; ++p) {
        const Matrix* d = p2.differential(p, 0);
        REQUIRE(d != nullptr);
        nonzero = nonzero || !d->is_zero();
    }
    CHECK(nonzero);
    CHECK(p2.to_text().find("d_2") != std::string::npos);
    CHECK(p2.to_csv().rfind("r,p,q,dim\n", 0) == 0);

    try {
        compute_page(k, 3, 6);
        FAIL("expected a precision error");
    } catch (const PrecisionError& e) {
        CHECK(e.required_precision() == 9);
    }
}

TEST_CASE("criterion and degeneration on the two_by_two example") {
    auto k = two_by_two(6);
    auto c = check_degeneration_criterion(k, 1, 6);
    REQUIRE_FALSE(c.holds);
    CHECK(c.witness->k == 2);
    CHECK(c.witness->n == 1);
    CHECK(vector_to_string(c.witness->x) == "(t,1)");
    CHECK(vector_to_string(c.witness->dx) == "(0,t^2)");
    CHECK(c.to_string().find("x=(t,1), dx=(0,t^2)") != std::string::npos);
    CHECK_FALSE(degenerates_at(k, 2, 6).degenerates);
    CHECK(degenerates_at(k, 3, 6).degenerates);
    CHECK(check_degeneration_criterion(k, 2, 6).holds);
}

TEST_CASE("criterion on d = t^2 and linear complexes") {
    auto k = single_map(1, 6, 1, 1, {"t^2"});
    CHECK(check_degeneration_criterion(k, 2, 6).holds);
    auto c1 = check_degeneration_criterion(k, 1, 6);
    REQUIRE_FALSE(c1.holds);
    CHECK(vector_to_string(c1.witness->x) == "(1)");
    CHECK(vector_to_string(c1.witness->dx) == "(t^2)");
    CHECK(degenerates_at(k, 3, 6).degenerates);
    auto v = degenerates_at(k, 2, 6);
    REQUIRE_FALSE(v.degenerates);
    CHECK(v.offender->s == 2);

    auto lin = single_map(2, 6, 1, 2, {"t1", "t2"});
    auto cl = check_degeneration_criterion(lin, 1, 6);
    CHECK(cl.holds);
    CHECK(cl.homogeneous_split_checked);
    CHECK(degenerates_at(lin, 2, 6).degenerates);
}

TEST_CASE("E_1 bridge examples") {
    auto b = e1_total_complex(single_map(1, 6, 1, 1, {"t"}), 4);
    CHECK(b.isomorphic);
    CHECK(b.total.coefficient(0, 0) == testing::mat(1, {{1}}));
    CHECK(b.total == b.expected);

    auto z = e1_total_complex(single_map(1, 6, 1, 1, {"0"}), 4);
    CHECK(z.isomorphic);
    CHECK(z.total.coefficient(0, 0).is_zero());

    auto g2 = e1_total_complex(single_map(2, 6, 1, 2, {"t1", "t2"}), 4);
    CHECK(g2.isomorphic);
    CHECK(g2.total.coefficient(0, 0) == testing::mat(1, {{1}, {0}}));
    CHECK(g2.total.coefficient(1, 0) == testing::mat(1, {{0}, {1}}));

    CHECK(e1_total_complex(two_by_two(6), 5).isomorphic);
}

TEST_CASE("predict_vanishing examples") {
    auto v = predict_vanishing(single_map(1, 8, 1, 1, {"t"}), 6);
    CHECK(v.predicted == std::vector<int>{0});
    CHECK(v.consistent());

    FilteredFreeComplex zero(QQ, 1, 6, 0, {0, 0});
    CHECK(predict_vanishing(zero, 4).predicted == std::vector<int>{0, 1});

    FilteredFreeComplex single(QQ, 1, 6, 0, {1});
    CHECK(predict_vanishing(single, 4).predicted.empty());

    CHECK_THROWS_AS(predict_vanishing(single_map(1, 4, 1, 1, {"t^2"}), 3), PrecisionError);
}

TEST_CASE("maps on pages") {
    auto k = single_map(1, 6, 1, 1, {"t"});
    // h = (t, t) = d s + s d with s^1 = 1
    ChainMap h{k, k, {{0, pm(1, 1, 1, {"t"})}, {1, pm(1, 1, 1, {"t"})}}};
    Homotopy s{k, k, {{1, pm(1, 1, 1, {"1"})}}};
    auto v = is_null_homotopic_action(h, s, 3, 3);
    CHECK(v.identity_holds);
    CHECK(v.pages_zero);

    // 2t needs s^1 = 2
    ChainMap two_t{k, k, {{0, pm(1, 1, 1, {"2*t"})}, {1, pm(1, 1, 1, {"2*t"})}}};
    CHECK_FALSE(is_null_homotopic_action(two_t, s, 1, 2).identity_holds);
    Homotopy s2{k, k, {{1, pm(1, 1, 1, {"2"})}}};
    CHECK(is_null_homotopic_action(two_t, s2, 1, 2).identity_holds);

    auto pe = two_by_two(8);
    auto id = map_on_pages(identity_map(pe), 2, 4);
    for (const auto& [key, m] : id) CHECK(m == Matrix::identity(QQ, m.rows()));
    ChainMap zero{pe, pe, {}};
    for (const auto& [key, m] : map_on_pages(zero, 2, 4)) CHECK(m.is_zero());

    ChainMap bad{k, k, {{0, pm(1, 1, 1, {"1"})}}};
    CHECK_THROWS_AS(map_on_pages(bad, 1, 2), PreconditionError);
}

TEST_CASE("sums of complexes") {
    auto a = single_map(1, 8, 1, 1, {"t"});
    auto b = single_map(1, 8, 1, 1, {"t^2"});
    FilteredFreeComplex zero(QQ, 1, 8, 0, {0, 0});
    CHECK(compute_page(sum_complexes({a, zero}), 2, 5).entries.size() == compute_page(a, 2, 5).entries.size());
    auto s = sum_complexes({a, b});
    CHECK(check_page_additivity({a, b}, 1, 5).additive);
    CHECK(check_page_additivity({a, b}, 2, 5).additive);
    CHECK_FALSE(degenerates_at(s, 2, 6).degenerates);
    CHECK(degenerates_at(s, 3, 6).degenerates);
    CHECK(degenerates_at(a, 2, 6).degenerates);
    auto l2 = single_map(2, 6, 1, 2, {"t1", "t2"});
    auto l3 = single_map(2, 6, 2, 1, {"t1", "t2"});
    CHECK(degenerates_at(sum_complexes({l2, l3}), 2, 6).degenerates);
    CHECK_THROWS_AS(sum_complexes({a, l2}), PreconditionError);
}
