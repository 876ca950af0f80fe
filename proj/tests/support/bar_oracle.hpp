#pragma once

// Tor^E(k,k) from the normalized bar complex, over F_32003.
// Self-contained: its own exterior multiplication and elimination, so it
// shares no code with the syzygy engine it is used to check.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

constexpr std::int64_t kPrime = 32003;

inline std::int64_t mod(std::int64_t x) {
    x %= kPrime;
    return x < 0 ? x + kPrime : x;
}

inline std::int64_t inv(std::int64_t a) {
    std::int64_t r = 1, e = kPrime - 2;
    a = mod(a);
    while (e) {
        if (e & 1) r = r * a % kPrime;
        a = a * a % kPrime;
        e >>= 1;
    }
    return r;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t iv = inv(m[rank][c]);
        for (auto& x : m[rank]) x = x * iv % kPrime;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::int64_t f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k]);
        }
        ++rank;
    }
    return rank;
}

// Nonempty subsets of {0..q-1} as bitmasks; the augmentation ideal basis.
inline std::vector<unsigned> ideal_basis(int q) {
    std::vector<unsigned> out;
    for (unsigned s = 1; s < (1u << q); ++s) out.push_back(s);
    return out;
}

// e_S * e_T in E: zero if they meet, otherwise +-e_{S|T}.
inline int wedge_sign(unsigned s, unsigned t) {
    if (s & t) return 0;
    int inversions = 0;
    for (int i = 0; i < 32; ++i)
        if (t >> i & 1)
            for (int j = i + 1; j < 32; ++j)
                if (s >> j & 1) ++inversions;
    return inversions % 2 ? -1 : 1;
}

using Word = std::vector<unsigned>;

// Words of length i whose letters have total wedge degree w.
inline std::vector<Word> words(int q, int i, int w) {
    std::vector<Word> out;
    Word cur;
    const auto letters = ideal_basis(q);
    auto rec = [&](auto&& self, int left, int deg) -> void {
        if (left == 0) {
            if (deg == 0) out.push_back(cur);
            return;
        }
        for (unsigned l : letters) {
            const int d = __builtin_popcount(l);
            if (d > deg) continue;
            cur.push_back(l);
            self(self, left - 1, deg - d);
            cur.pop_back();
        }
    };
    rec(rec, i, w);
    return out;
}

// Bar differential B_i -> B_{i-1} restricted to total wedge degree w.
inline std::vector<std::vector<std::int64_t>> bar_differential(int q, int i, int w) {
    const auto src = words(q, i, w);
    const auto dst = words(q, i - 1, w);
    std::map<Word, std::size_t> index;
    for (std::size_t k = 0; k < dst.size(); ++k) index[dst[k]] = k;
    std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Word& a = src[c];
        for (int j = 0; j + 1 < i; ++j) {
            const int s = wedge_sign(a[j], a[j + 1]);
            if (s == 0) continue;
            Word b;
            for (int k = 0; k < i; ++k) {
                if (k == j) {
                    b.push_back(a[j] | a[j + 1]);
                    ++k;
                } else {
                    b.push_back(a[k]);
                }
            }
            const int sign = (j % 2 ? -1 : 1) * s;
            auto& cell = m[index.at(b)][c];
            cell = mod(cell + sign);
        }
    }
    return m;
}

inline std::size_t rank_of(const std::vector<std::vector<std::int64_t>>& m) { return m.empty() ? 0 : rank_mod_p(m); }

// dim Tor_i^E(k,k) in internal degree t = -w.
inline std::size_t tor_kk(int q, int i, int w) {
    const std::size_t n = words(q, i, w).size();
    if (n == 0) return 0;
    const std::size_t out = i >= 1 ? rank_of(bar_differential(q, i, w)) : 0;
    const std::size_t in = rank_of(bar_differential(q, i + 1, w));
    return n - out - in;
}

}  // namespace oracle
