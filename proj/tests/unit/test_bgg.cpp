#include <random>

#include "bggwb/bgg.hpp"
#include "bggwb/errors.hpp"
#include "bggwb/models.hpp"
#include "doctest.h"
#include "support/testing.hpp"

using namespace bggwb;
using testing::mat;
using testing::QQ;

namespace {

ExteriorContext ctx(int q) { return {q, QQ}; }

GradedEModule model_p(const ModelSpec& s) { return generate(s).p; }

// Random valid module moved to degrees [0, d].
GradedEModule random_p(std::mt19937_64& rng, int q) {
    auto m = testing::random_module(rng, ctx(q), 3);
    if (!m.has_interval()) return residue_field(ctx(q));
    return shift(m, m.lo());
}

}  // namespace

TEST_CASE("build_bgg examples") {
    auto l = build_bgg(model_p(ModelSpec::abelian(1)));
    CHECK(l.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(l.coefficient(0, 0) == mat(1, {{1}}));
    CHECK(l.labels == std::vector<std::string>{"P_1", "P_0"});
    CHECK(l.is_complex());

    auto k = build_bgg(residue_field(ctx(2)));
    CHECK(k.spots() == 1);
    CHECK(k.rank(0) == 1);

    GradedEModule z(ctx(2), 0, {2, 1});
    auto lz = build_bgg(z);
    CHECK(lz.ranks() == std::vector<std::size_t>{1, 2});
    CHECK(lz.coefficient(0, 0).is_zero());
    CHECK(lz.coefficient(1, 0).is_zero());

    CHECK_THROWS_AS(build_bgg(shift(residue_field(ctx(1)), 1)), PreconditionError);
}

TEST_CASE("build_bgg rejects invalid modules") {
    GradedEModule bad(ctx(1), 0, {1, 1, 1});
    bad.set_action(0, 1, mat(1, {{1}}));
    bad.set_action(0, 2, mat(1, {{1}}));
    REQUIRE_FALSE(validate_module(bad).valid());
    CHECK_THROWS_AS(build_bgg(bad), InvariantViolation);
}

TEST_CASE("homology_dims examples") {
    auto l = build_bgg(model_p(ModelSpec::abelian(1)));
    auto left = homology_dims(l, 0, 6);
    CHECK(left.total(0) == 0);
    auto right = homology_dims(l, 1, 6);
    CHECK(right.total(1) == 1);
    CHECK(right.at(1, l.generation_degree(1)) == 1);

    LinearSComplex s(ctx(2), {1});
    auto h = homology_dims(s, 0, 5);
    for (int t = 0; t <= 5; ++t) CHECK(h.at(0, t) == sym_count(2, t));
    CHECK(h.to_csv().rfind("spot,t,dim\n", 0) == 0);
    CHECK(homology_profile(l, 6).to_text(l).find("P_0") != std::string::npos);
}

TEST_CASE("is_exact_first_steps examples") {
    auto c2 = build_bgg(model_p(ModelSpec::curve(2)));
    CHECK(is_exact_first_steps(c2, 1, 7).exact);
    auto cp = build_bgg(model_p(ModelSpec::curve_times_p1(2)));
    CHECK(is_exact_first_steps(cp, 1, 8).exact);
    auto v = is_exact_first_steps(cp, 2, 8);
    CHECK_FALSE(v.exact);
    REQUIRE(v.failure);
    CHECK(v.failure->first == 1);
    auto ab = build_bgg(model_p(ModelSpec::abelian(2)));
    auto e = is_exact_first_steps(ab, 2, 8);
    CHECK(e.exact);
    CHECK(e.to_string().find("T=8") != std::string::npos);
}

TEST_CASE("regularity_via_bgg examples") {
    for (int d = 1; d <= 3; ++d) CHECK(regularity_via_bgg(model_p(ModelSpec::abelian(d)), 0).m == 0);
    for (int g = 1; g <= 5; ++g) {
        auto p = model_p(ModelSpec::curve(g));
        CHECK(regularity_via_bgg(p, default_truncation(p)).m == 0);
    }
    auto p = model_p(ModelSpec::curve_times_p1(2));
    auto r = regularity_via_bgg(p, default_truncation(p));
    CHECK(r.m == 1);
    CHECK(r.method_name() == "bgg");
    CHECK(r.truncation == 2 + 2 + 4);
    CHECK(r.summary().find("exact through T=8") != std::string::npos);
}

TEST_CASE("verify_theorem_a examples") {
    auto e = exterior_algebra(ctx(2));
    auto one = verify_theorem_a({e});
    CHECK(one.passed);
    CHECK(one.regularity == 0);
    CHECK(one.summary() == "reg = 0; Betti splits into 1 linear strand");

    auto qc = generate(ModelSpec::curve(2)).q;
    auto kollar = verify_theorem_a({GradedEModule::zero(qc.context()), qc});
    CHECK(kollar.passed);
    CHECK(kollar.regularity == 1);
    CHECK(kollar.betti == betti_table(qc, kollar.i_max).shifted(1));

    auto two = verify_theorem_a({e, e});
    CHECK(two.passed);
    CHECK(two.regularity == 1);
    CHECK(two.strands == 2);
    CHECK(two.betti.entries == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}, {{0, -1}, 1}});

    // a summand that is not 0-regular is pinpointed
    auto bad = verify_theorem_a({shift(residue_field(ctx(2)), 1)});
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.failures.empty());
    CHECK_THROWS_AS(verify_theorem_a({shift(residue_field(ctx(2)), -1)}), PreconditionError);
}

TEST_CASE("property: d^2 = 0 and functoriality of sums") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 30; ++iter) {
        const int q = 1 + iter % 3;
        auto a = random_p(rng, q), b = random_p(rng, q);
        auto la = build_bgg(a), lb = build_bgg(b);
        CHECK(la.is_complex());
        const int top = std::max(a.hi(), b.hi());
        auto wa = a.widened(0, top), wb = b.widened(0, top);
        auto ls = build_bgg(direct_sum({wa, wb}));
        auto lwa = build_bgg(wa), lwb = build_bgg(wb);
        REQUIRE(ls.spots() == lwa.spots());
        for (std::size_t n = 0; n < ls.spots(); ++n) CHECK(ls.rank(n) == lwa.rank(n) + lwb.rank(n));
        for (int aa = 0; aa < q; ++aa)
            for (std::size_t n = 0; n + 1 < ls.spots(); ++n)
                CHECK(ls.coefficient(aa, n) == block_diag(lwa.coefficient(aa, n), lwb.coefficient(aa, n)));
        const int T = top + q + 2;
        auto hs = homology_profile(ls, T), ha = homology_profile(lwa, T), hb = homology_profile(lwb, T);
        for (std::size_t n = 0; n < ls.spots(); ++n)
            for (int t = 0; t <= T; ++t) {
                const int sp = static_cast<int>(n);
                CHECK(hs.at(sp, t) == ha.at(sp, t) + hb.at(sp, t));
            }
    }
}

TEST_CASE("property: Koszul exactness for the exterior algebra") {
    for (int q = 1; q <= 4; ++q) {
        auto p = model_p(ModelSpec::abelian(q));
        auto l = build_bgg(p);
        const int T = default_truncation(p);
        auto h = homology_profile(l, T);
        for (std::size_t n = 0; n + 1 < l.spots(); ++n) CHECK(h.total(static_cast<int>(n)) == 0);
        CHECK(h.total(static_cast<int>(l.spots() - 1)) == 1);
    }
}

TEST_CASE("property: both regularity routes agree on random modules") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 30; ++iter) {
        const int q = 1 + iter % 3;
        auto p = random_p(rng, q);
        if (p.is_zero()) continue;
        const int T = default_truncation(p);
        auto q_mod = dual_module(p);
        CHECK(regularity_via_bgg(p, T).m == regularity_definition_route(q_mod, std::max(default_imax(q_mod), T)).m);
    }
}
