#include "bggwb/monomial.hpp"

#include <numeric>

#include "bggwb/errors.hpp"

namespace bggwb {

std::size_t binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

std::size_t sym_count(int nvars, int degree) {
    if (degree < 0 || nvars < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return binomial(nvars + degree - 1, degree);
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::size_t sym_rank(const Exponents& e) {
    const int n = static_cast<int>(e.size());
    int rem = total_degree(e);
    std::size_t rank = 0;
    for (int i = 0; i + 1 < n; ++i) {
        // monomials sharing the prefix but with a larger exponent at i come first
        for (int b = e[i] + 1; b <= rem; ++b) rank += sym_count(n - i - 1, rem - b);
        rem -= e[i];
    }
    return rank;
}

std::size_t ext_rank(const std::vector<int>& subset, int nvars) {
    const long k = static_cast<long>(subset.size());
    std::size_t rank = 0;
    int prev = -1;
    for (long i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v) rank += binomial(nvars - v - 1, k - i - 1);
        prev = subset[i];
    }
    return rank;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // inside one degree, x1^2 ranks above x1 x2
    return a < b;
}

namespace {

void gen_sym(int nvars, int i, int rem, Exponents& cur, std::vector<Exponents>& out) {
    if (i == nvars - 1) {
        cur[i] = rem;
        out.push_back(cur);
        return;
    }
    for (int a = rem; a >= 0; --a) {
        cur[i] = a;
        gen_sym(nvars, i + 1, rem - a, cur, out);
    }
}

void gen_ext(int nvars, int start, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= nvars - left; ++v) {
        cur.push_back(v);
        gen_ext(nvars, v + 1, left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialBasis monomial_basis(MonomialKind kind, int nvars, int degree) {
    if (nvars < 0 || degree < 0) throw PreconditionError("monomial_basis: negative nvars or degree");
    MonomialBasis b;
    b.kind = kind;
    b.nvars = nvars;
    b.degree = degree;
    if (kind == MonomialKind::symmetric) {
        if (nvars == 0) {
            if (degree == 0) b.symmetric.emplace_back();
            return b;
        }
        Exponents cur(static_cast<std::size_t>(nvars), 0);
        gen_sym(nvars, 0, degree, cur, b.symmetric);
    } else {
        if (degree > nvars) return b;
        std::vector<int> cur;
        gen_ext(nvars, 0, degree, cur, b.exterior);
    }
    return b;
}

std::string MonomialBasis::label(std::size_t i, const std::string& var) const {
    std::string out;
    if (kind == MonomialKind::symmetric) {
        const std::string v = var.empty() ? "x" : var;
        for (int k = 0; k < nvars; ++k) {
            const int a = symmetric[i][static_cast<std::size_t>(k)];
            if (a == 0) continue;
            out += v + std::to_string(k + 1);
            if (a > 1) out += "^" + std::to_string(a);
        }
    } else {
        const std::string v = var.empty() ? "e" : var;
        for (int k : exterior[i]) out += v + std::to_string(k + 1);
    }
    return out.empty() ? "1" : out;
}

}  // namespace bggwb
