#pragma once

#include <random>
#include <vector>

#include "bggwb/emodule.hpp"
#include "bggwb/matrix.hpp"
#include "bggwb/monomial.hpp"

namespace testing {

using namespace bggwb;

inline const Field QQ = Field::rationals();

inline Matrix mat(std::size_t cols, std::vector<std::vector<mpq_class>> rows, Field f = QQ) {
    return Matrix::from_rows(f, cols, rows);
}

inline mpq_class small_scalar(std::mt19937_64& rng, int span = 3) {
    std::uniform_int_distribution<int> d(-span, span);
    return mpq_class(d(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t r, std::size_t c, double density = 0.6,
                            int span = 3) {
    std::bernoulli_distribution keep(density);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng)) m.set(i, j, small_scalar(rng, span));
    return m;
}

// Quotient of a free module F = sum E(-g_k) by the E-span of a few random
// homogeneous elements. Always a valid module.
inline GradedEModule random_module_once(std::mt19937_64& rng, ExteriorContext ctx) {
    std::uniform_int_distribution<int> ngen(1, 2), gdeg(-1, 1), nrel(0, 3);
    const int q = ctx.q;
    std::vector<int> gens;
    for (int k = ngen(rng); k > 0; --k) gens.push_back(gdeg(rng));
    int lo = 0, hi = 0;
    bool first = true;
    for (int g : gens) {
        lo = first ? g - q : std::min(lo, g - q);
        hi = first ? g : std::max(hi, g);
        first = false;
    }
    std::vector<std::size_t> dims;
    for (int t = lo; t <= hi; ++t) {
        std::size_t s = 0;
        for (int g : gens) s += binomial(q, g - t);
        dims.push_back(s);
    }
    // free module action
    GradedEModule free_m(ctx, lo, dims);
    auto offset = [&](int t, std::size_t which) {
        std::size_t o = 0;
        for (std::size_t k = 0; k < which; ++k) o += binomial(q, gens[k] - t);
        return o;
    };
    for (int a = 0; a < q; ++a)
        for (int t = lo + 1; t <= hi; ++t) {
            Matrix m(ctx.field, free_m.dim(t - 1), free_m.dim(t));
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const int i = gens[k] - t;
                if (i < 0 || i >= q) continue;
                m.set_block(offset(t - 1, k), offset(t, k), wedge_matrix(ctx.field, q, a, i));
            }
            free_m.set_action(a, t, m);
        }
    // relations: E-span of random elements
    std::map<int, Matrix> sub;
    for (int t = lo; t <= hi; ++t) sub[t] = Matrix(ctx.field, free_m.dim(t), 0);
    std::uniform_int_distribution<int> rdeg(lo, hi);
    for (int k = nrel(rng); k > 0; --k) {
        const int t0 = rdeg(rng);
        if (free_m.dim(t0) == 0) continue;
        Matrix v = random_matrix(rng, ctx.field, free_m.dim(t0), 1, 0.5, 2);
        // close up under the action
        std::map<int, Matrix> layer{{t0, v}};
        for (int t = t0; t > lo; --t) {
            Matrix next(ctx.field, free_m.dim(t - 1), 0);
            for (int a = 0; a < q; ++a) next = hstack(next, free_m.action(a, t) * layer[t]);
            layer[t - 1] = next;
        }
        for (auto& [t, m] : layer) sub[t] = hstack(sub[t], m);
    }
    std::vector<std::size_t> qdims;
    std::map<int, QuotientCoords> coords;
    std::map<int, Matrix> compl_basis;
    for (int t = lo; t <= hi; ++t) {
        Matrix b = sub[t].select_columns(independent_columns(sub[t]));
        Matrix aug = hstack(b, Matrix::identity(ctx.field, free_m.dim(t)));
        std::vector<std::size_t> pick;
        for (auto c : independent_columns(aug))
            if (c >= b.cols()) pick.push_back(c - b.cols());
        Matrix c = Matrix::identity(ctx.field, free_m.dim(t)).select_columns(pick);
        coords.emplace(t, QuotientCoords(b, c));
        compl_basis[t] = c;
        qdims.push_back(c.cols());
    }
    GradedEModule out(ctx, lo, qdims);
    for (int a = 0; a < q; ++a)
        for (int t = lo + 1; t <= hi; ++t)
            out.set_action(a, t, coords.at(t - 1).coords(free_m.action(a, t) * compl_basis[t]));
    return out.trimmed();
}

// Support width (hi - lo) at most max_width.
inline GradedEModule random_module(std::mt19937_64& rng, ExteriorContext ctx, int max_width = 4) {
    for (;;) {
        auto m = random_module_once(rng, ctx);
        if (!m.has_interval() || m.hi() - m.lo() <= max_width) return m;
    }
}

}  // namespace testing
