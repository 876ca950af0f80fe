#include "bggwb/pages.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

#include "bggwb/errors.hpp"
#include "graded.hpp"

namespace bggwb {

using detail::GradedComplex;

namespace {

struct PageData {
    Matrix basis;  // leading parts, complement of Bimg in Zimg
    Matrix lifts;  // stacked x_p..x_{p+r-1} for each basis vector
    QuotientCoords coords;
};

class PageBuilder {
public:
    PageBuilder(const FilteredFreeComplex& k, int r) : g_(k), r_(r) {}

    GradedComplex& graded() { return g_; }

    const PageData& at(int n, int p) {
        const auto key = std::make_pair(n, p);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const Matrix ker = g_.cycle_system_kernel(n, p, r_);
        const std::size_t lead = g_.piece_dim(n, p);
        const Matrix proj = ker.block(0, 0, lead, ker.cols());
        const Matrix b = g_.bimg(n, p, r_);
        std::vector<std::size_t> pick;
        for (auto c : independent_columns(hstack(b, proj)))
            if (c >= b.cols()) pick.push_back(c - b.cols());
        PageData d;
        d.basis = proj.select_columns(pick);
        d.lifts = ker.select_columns(pick);
        d.coords = QuotientCoords(b, d.basis);
        return cache_.emplace(key, std::move(d)).first->second;
    }

private:
    GradedComplex g_;
    int r_;
    std::map<std::pair<int, int>, PageData> cache_;
};

void require_window(const FilteredFreeComplex& k, int needed, const std::string& what) {
    if (needed > k.precision())
        throw PrecisionError(what + " needs precision N >= " + std::to_string(needed) + " (complex has N=" +
                                 std::to_string(k.precision()) + ")",
                             needed);
}

}  // namespace

std::size_t PageTable::dim(int p, int n) const {
    auto it = entries.find({p, n});
    return it == entries.end() ? 0 : it->second.dim();
}

const Matrix* PageTable::differential(int p, int n) const {
    auto it = differentials.find({p, n});
    return it == differentials.end() ? nullptr : &it->second;
}

bool PageTable::differentials_vanish() const {
    return std::all_of(differentials.begin(), differentials.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::string PageTable::to_text() const {
    std::ostringstream os;
    os << "E_" << r << " page (p = 0.." << p_max << ", certified with N = " << precision << "); rows n = p+q, columns p\n";
    os << "n\\p";
    for (int p = 0; p <= p_max; ++p) os << '\t' << p;
    os << '\n';
    for (int n = n_hi; n >= n_lo; --n) {
        os << n;
        for (int p = 0; p <= p_max; ++p) os << '\t' << dim(p, n);
        os << '\n';
    }
    bool any = false;
    for (const auto& [key, m] : differentials) {
        if (m.is_zero()) continue;
        if (!any) os << "nonzero differentials:\n";
        any = true;
        os << "  d_" << r << ": E^(" << key.first << "," << key.second - key.first << ") -> E^(" << key.first + r << ","
           << key.second - key.first - r + 1 << ")  rank " << mat_rank(m) << '\n';
    }
    if (!any) os << "all differentials d_" << r << " inside the window vanish\n";
    return os.str();
}

std::string PageTable::to_csv() const {
    std::ostringstream os;
    os << "r,p,q,dim\n";
    for (const auto& [key, e] : entries) os << r << ',' << key.first << ',' << key.second - key.first << ',' << e.dim() << '\n';
    return os.str();
}

PageTable compute_page(const FilteredFreeComplex& k, int r, int p_max) {
    require_valid(k, "compute_page");
    if (r < 1) throw PreconditionError("compute_page: r must be at least 1");
    if (p_max < 0) throw PreconditionError("compute_page: p_max must be nonnegative");
    require_window(k, p_max + r, "page E_" + std::to_string(r) + " with p_max=" + std::to_string(p_max));
    PageBuilder pb(k, r);
    PageTable t;
    t.r = r;
    t.p_max = p_max;
    t.n_lo = k.n_lo();
    t.n_hi = k.n_hi();
    t.precision = k.precision();
    for (int n = k.n_lo(); n <= k.n_hi(); ++n)
        for (int p = 0; p <= p_max; ++p) t.entries[{p, n}] = PageEntry{p, n, pb.at(n, p).basis};
    for (int n = k.n_lo(); n < k.n_hi(); ++n)
        for (int p = 0; p + r <= p_max; ++p) {
            const PageData& src = pb.at(n, p);
            const PageData& dst = pb.at(n + 1, p + r);
            const Matrix images = pb.graded().leading_images(n, p, r, src.lifts);
            t.differentials[{p, n}] = dst.coords.coords(images);
        }
    return t;
}

std::string DegenerationVerdict::to_string() const {
    std::ostringstream os;
    if (degenerates)
        os << "degenerates at E_" << r << ": d_s = 0 for s = " << r << ".." << r_stop << " within p <= " << p_max;
    else
        os << "does not degenerate at E_" << r << ": d_" << offender->s << " from E^(" << offender->p << ","
           << offender->n - offender->p << ") has rank " << offender->rank << " (window p <= " << p_max << ")";
    return os.str();
}

namespace {

// Trailing degree components of a stacked family of vectors in K^n.
struct Tail {
    int lo = 0;
    std::deque<Matrix> comps;  // comps[i] lives in degree lo + i
    std::size_t width = 0;

    // degree-P part of d applied to the family, components below P only
    Matrix image(GradedComplex& g, int n, int P) const {
        Matrix out(g.field(), g.piece_dim(n + 1, P), width);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const int t = lo + static_cast<int>(i);
            const Matrix& b = g.block(n, P - t, t);
            if (b.empty() || comps[i].empty() || b.is_zero()) continue;
            out = out + b * comps[i];
        }
        return out;
    }
    // adjoins the degree-P unknown and keeps the solutions of the degree-P row
    void advance(GradedComplex& g, int n, int P, const Matrix& img, int depth) {
        const Matrix step = kernel_columns(hstack(img, g.block(n, 0, P)));
        for (auto& c : comps) c = c * step.block(0, 0, width, step.cols());
        comps.push_back(step.block(width, 0, step.rows() - width, step.cols()));
        width = step.cols();
        while (lo <= P - depth) {
            comps.pop_front();
            ++lo;
        }
    }
};

}  // namespace

DegenerationVerdict degenerates_at(const FilteredFreeComplex& k, int r, int p_max) {
    require_valid(k, "degenerates_at");
    if (r < 1) throw PreconditionError("degenerates_at: r must be at least 1");
    require_window(k, p_max, "degeneration check with p_max=" + std::to_string(p_max));
    GradedComplex g(k);
    DegenerationVerdict v;
    v.r = r;
    v.r_stop = std::max(r, p_max);
    v.p_max = p_max;
    // For fixed (n, p) both systems grow one degree at a time. Cycles: x_{p+s}
    // solves the new constraint row over the old kernel. Boundaries of
    // F^{p+1}K^n: the old leading image must vanish, y_{P+1} is free.
    // Only the last D components can reach later degrees.
    const int depth = std::max(1, k.max_entry_degree());
    std::optional<DegenerationVerdict::Offender> first;
    for (int n = k.n_lo(); n < k.n_hi(); ++n)
        for (int p = 0; p + r <= p_max; ++p) {
            if (g.piece_dim(n, p) == 0) continue;
            Tail cyc{p, {}, 0};
            cyc.advance(g, n, p, Matrix(k.field(), g.piece_dim(n + 1, p), 0), depth);
            Tail bnd{p + 1, {}, 0};
            for (int s = 1; s <= p_max - p && cyc.width > 0; ++s) {
                const int P = p + s;
                const Matrix images = cyc.image(g, n, P);
                const Matrix bprev = bnd.image(g, n, P);
                if (s >= r && g.piece_dim(n + 1, P) > 0) {
                    const Matrix bimage = hstack(bprev, g.block(n, 0, P));
                    const std::size_t rk = mat_rank(hstack(bimage, images)) - mat_rank(bimage);
                    if (rk != 0) {
                        const DegenerationVerdict::Offender o{s, p, n, rk};
                        if (!first || std::tie(o.s, o.p, o.n) < std::tie(first->s, first->p, first->n)) first = o;
                        break;
                    }
                }
                if (P == p_max) break;
                cyc.advance(g, n, P, images, depth);
                bnd.advance(g, n, P, bprev, depth);
            }
        }
    if (first) {
        v.degenerates = false;
        v.offender = first;
    }
    return v;
}

std::string CriterionVerdict::to_string() const {
    std::ostringstream os;
    if (holds) {
        os << "criterion holds for r=" << r << " through k=" << k_max;
        if (homogeneous_split_checked) os << " (x = x' + x'' split verified)";
    } else {
        const auto& w = *witness;
        os << "criterion fails for r=" << r << " at k=" << w.k << ", n=" << w.n << ": x=" << vector_to_string(w.x)
           << ", dx=" << vector_to_string(w.dx) << " lies in F^" << w.k << " but not in d(F^" << w.k - r << ")";
    }
    return os.str();
}

CriterionVerdict check_degeneration_criterion(const FilteredFreeComplex& k, int r, int k_max) {
    require_valid(k, "check_degeneration_criterion");
    if (r < 1) throw PreconditionError("criterion: r must be at least 1");
    require_window(k, k_max, "criterion check with k_max=" + std::to_string(k_max));
    GradedComplex g(k);
    CriterionVerdict v;
    v.r = r;
    v.k_max = k_max;
    const auto hom = homogeneous_degree(k);
    const bool split = hom.degree && *hom.degree <= r;
    for (int kk = 0; kk <= k_max; ++kk)
        for (int n = k.n_lo() + 1; n <= k.n_hi(); ++n) {
            if (g.piece_dim(n, kk) == 0) continue;
            const auto all = g.boundary_system(n, kk, kk + 1);
            if (all.image.cols() == 0) continue;
            const Matrix allowed = g.bimg(n, kk, r + 1);
            if (split) {
                // x' = part of x in degrees < k - r; dx' has degrees < k, so it must vanish
                const int cut = kk - r;
                std::size_t len = 0;
                for (int s = 0; s < cut; ++s) len += g.piece_dim(n - 1, s);
                for (std::size_t c = 0; c < all.kernel.cols() && len > 0; ++c) {
                    Vec xprime(len);
                    for (std::size_t i = 0; i < len; ++i) xprime[i] = all.kernel(i, c);
                    const auto px = detail::to_polynomials(k.field(), k.nvars(), k.rank(n - 1), 0, xprime);
                    for (const auto& comp : k.differential(n - 1).apply(px, k.precision()))
                        if (!comp.is_zero())
                            throw InvariantViolation("homogeneous split: d x' != 0 at k=" + std::to_string(kk));
                }
            }
            if (mat_rank(hstack(allowed, all.image)) == allowed.cols()) continue;
            for (std::size_t c = 0; c < all.image.cols(); ++c) {
                auto res = solve_in_image(allowed, all.image.column(c));
                if (res.in_image()) continue;
                CriterionWitness w;
                w.n = n;
                w.k = kk;
                w.x = detail::to_polynomials(k.field(), k.nvars(), k.rank(n - 1), all.s0, all.kernel.column(c));
                w.dx = k.differential(n - 1).apply(w.x, k.precision());
                w.certificate = *res.certificate;
                v.holds = false;
                v.witness = std::move(w);
                return v;
            }
        }
    v.homogeneous_split_checked = split;
    return v;
}

std::string E1Bridge::to_string() const {
    std::ostringstream os;
    if (isomorphic)
        os << "E_1 total complex is isomorphic to L(P_K) through polynomial degree " << p_max;
    else {
        os << "E_1 bridge FAILED:";
        for (const auto& f : failures) os << "\n  " << f;
    }
    return os.str();
}

E1Bridge e1_total_complex(const FilteredFreeComplex& k, int p_max) {
    require_valid(k, "e1_total_complex");
    if (p_max < 1) throw PreconditionError("e1_total_complex: p_max must be at least 1");
    require_window(k, p_max + 1, "E_1 bridge with p_max=" + std::to_string(p_max));
    const int e = k.nvars();
    const Field f = k.field();
    PageBuilder pb(k, 1);
    E1Bridge out;
    out.p_max = p_max;

    // H^n = E_1^{0,n}
    std::vector<std::size_t> ranks;
    for (int n = k.n_lo(); n <= k.n_hi(); ++n) ranks.push_back(pb.at(n, 0).basis.cols());

    // Phi_p: H^n (x) Sym^p -> E_1^{p,n}, z (x) x^a |-> class of z t^a
    auto phi = [&](int n, int p) {
        const Matrix& h = pb.at(n, 0).basis;
        const std::size_t mons = sym_count(e, p);
        Matrix raw(f, k.rank(n) * mons, h.cols() * mons);
        for (std::size_t i = 0; i < h.cols(); ++i)
            for (std::size_t c = 0; c < h.rows(); ++c)
                if (sgn(h(c, i)) != 0)
                    for (std::size_t m = 0; m < mons; ++m) raw.raw(c * mons + m, i * mons + m) = h(c, i);
        const PageData& page = pb.at(n, p);
        for (std::size_t col = 0; col < raw.cols(); ++col)
            if (!page.coords.in_span(raw.column(col)))
                throw InvariantViolation("E_1 bridge: z t^a is not a d_0-cycle");
        return page.coords.coords(raw);
    };

    auto d1 = [&](int n, int p) {
        const PageData& src = pb.at(n, p);
        const PageData& dst = pb.at(n + 1, p + 1);
        return dst.coords.coords(pb.graded().leading_images(n, p, 1, src.lifts));
    };

    LinearSComplex total({e, f}, ranks, 0);
    for (int n = k.n_lo(); n <= k.n_hi(); ++n) total.labels[static_cast<std::size_t>(n - k.n_lo())] = "H^" + std::to_string(n);
    std::map<std::pair<int, int>, Matrix> phis;
    for (int n = k.n_lo(); n <= k.n_hi(); ++n)
        for (int p = 0; p <= p_max; ++p) {
            Matrix m = phi(n, p);
            if (m.rows() != m.cols() || mat_rank(m) != m.cols()) {
                out.failures.push_back("Phi_" + std::to_string(p) + " at n=" + std::to_string(n) +
                                       " is not invertible (" + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + ", rank " + std::to_string(mat_rank(m)) + ")");
            }
            phis[{n, p}] = std::move(m);
        }
    if (!out.failures.empty()) {
        out.expected = build_bgg(induce_emodule(k, k.n_hi()));
        out.total = total;
        return out;
    }
    for (int n = k.n_lo(); n < k.n_hi(); ++n) {
        // C_a from d_1 on E_1^{0,n}: Phi_1^{-1} d_1 Phi_0
        const Matrix m0 = d1(n, 0) * phis[{n, 0}];
        const Matrix& p1 = phis[{n + 1, 1}];
        Matrix sol(f, p1.cols(), m0.cols());
        for (std::size_t c = 0; c < m0.cols(); ++c) {
            auto res = solve_in_image(p1, m0.column(c));
            if (!res.in_image()) throw InvariantViolation("E_1 bridge: Phi_1 is not surjective");
            for (std::size_t i = 0; i < sol.rows(); ++i) sol.raw(i, c) = (*res.preimage)[i];
        }
        const std::size_t s = static_cast<std::size_t>(n - k.n_lo());
        for (int a = 0; a < e; ++a) {
            Matrix c(f, ranks[s + 1], ranks[s]);
            for (std::size_t i = 0; i < c.rows(); ++i)
                for (std::size_t j = 0; j < c.cols(); ++j)
                    c.raw(i, j) = sol(i * static_cast<std::size_t>(e) + static_cast<std::size_t>(a), j);
            total.set_coefficient(a, s, c);
        }
    }
    out.total = total;
    out.expected = build_bgg(induce_emodule(k, k.n_hi()));
    const auto& l = out.expected;
    if (l.ranks() != total.ranks()) out.failures.push_back("spot ranks differ between E_1 and L(P_K)");
    if (out.failures.empty())
        for (int n = k.n_lo(); n < k.n_hi(); ++n)
            for (int p = 0; p + 1 <= p_max; ++p) {
                const std::size_t s = static_cast<std::size_t>(n - k.n_lo());
                const Matrix lhs = d1(n, p) * phis[{n, p}];
                const Matrix rhs = phis[{n + 1, p + 1}] * l.strand(s, p);
                if (!(lhs == rhs))
                    out.failures.push_back("square at n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                                           " does not commute");
            }
    if (out.failures.empty() && !l.square_violations().empty())
        out.failures.push_back("L(P_K) is not a complex");
    out.isomorphic = out.failures.empty();
    return out;
}

int default_vanishing_truncation(const FilteredFreeComplex& k) {
    return k.precision() - std::max(1, k.max_entry_degree());
}

std::string VanishingPrediction::to_string() const {
    std::ostringstream os;
    os << "certified H^n(K) = 0 (E_1 total complex exact through T=" << truncation << ") at n in {";
    for (std::size_t i = 0; i < predicted.size(); ++i) os << (i ? ", " : "") << predicted[i];
    os << "}";
    for (const auto& [n, ok] : direct_check)
        os << "\n  n=" << n << ": direct truncated check " << (ok ? "confirms" : "CONTRADICTS") << " H^n = 0";
    return os.str();
}

bool VanishingPrediction::consistent() const {
    return std::all_of(direct_check.begin(), direct_check.end(), [](const auto& kv) { return kv.second; });
}

VanishingPrediction predict_vanishing(const FilteredFreeComplex& k, int truncation) {
    require_valid(k, "predict_vanishing");
    const int slack = std::max(1, k.max_entry_degree());
    require_window(k, truncation + slack, "vanishing check with T=" + std::to_string(truncation));
    VanishingPrediction out;
    out.truncation = truncation;
    const LinearSComplex l = build_bgg(induce_emodule(k, k.n_hi()));
    GradedComplex g(k);
    for (int n = k.n_lo(); n <= k.n_hi(); ++n) {
        const std::size_t s = static_cast<std::size_t>(n - k.n_lo());
        if (!homology_dims(l, s, truncation).dims.empty()) continue;
        out.predicted.push_back(n);
        // truncated cycles modulo truncated boundaries in degrees < M
        const int m = truncation - l.generation_degree(s) + 1;
        if (m <= 0 || k.rank(n) == 0) {
            out.direct_check[n] = true;
            continue;
        }
        const Matrix z = g.cycle_system_kernel(n, 0, m + slack);
        std::size_t len = 0;
        for (int u = 0; u < m; ++u) len += g.piece_dim(n, u);
        const Matrix zproj = z.block(0, 0, len, z.cols());
        const Matrix b = g.cycle_system(n - 1, 0, m);
        const std::size_t rb = b.empty() ? 0 : mat_rank(b);
        const Matrix bb = b.cols() == 0 ? Matrix(k.field(), len, 0) : b;
        out.direct_check[n] = mat_rank(hstack(bb, zproj)) == rb;
    }
    return out;
}

PolyMatrix ChainMap::at(int n) const {
    auto it = maps.find(n);
    if (it != maps.end()) return it->second;
    return PolyMatrix(source.field(), source.nvars(), target.rank(n), source.rank(n));
}

PolyMatrix Homotopy::at(int n) const {
    auto it = maps.find(n);
    if (it != maps.end()) return it->second;
    return PolyMatrix(source.field(), source.nvars(), target.rank(n - 1), source.rank(n));
}

namespace {

int common_precision(const FilteredFreeComplex& a, const FilteredFreeComplex& b) {
    if (a.nvars() != b.nvars()) throw PreconditionError("maps between complexes over different rings");
    require_same_field(a.field(), b.field(), "chain map");
    return std::min(a.precision(), b.precision());
}

std::pair<int, int> joint_range(const FilteredFreeComplex& a, const FilteredFreeComplex& b) {
    return {std::min(a.n_lo(), b.n_lo()) - 1, std::max(a.n_hi(), b.n_hi()) + 1};
}

}  // namespace

void require_chain_map(const ChainMap& f) {
    const int N = common_precision(f.source, f.target);
    for (const auto& [n, m] : f.maps)
        if (m.rows() != f.target.rank(n) || m.cols() != f.source.rank(n))
            throw DimensionMismatch("chain map component f^" + std::to_string(n) + " has the wrong shape");
    const auto [lo, hi] = joint_range(f.source, f.target);
    for (int n = lo; n <= hi; ++n) {
        const PolyMatrix lhs = PolyMatrix::mul_truncated(f.target.differential(n), f.at(n), N);
        const PolyMatrix rhs = PolyMatrix::mul_truncated(f.at(n + 1), f.source.differential(n), N);
        if (!(lhs - rhs).is_zero()) throw PreconditionError("not a chain map: d f != f d at spot " + std::to_string(n));
    }
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    const int N = common_precision(f.source, g.target);
    ChainMap h{f.source, g.target, {}};
    const auto [lo, hi] = joint_range(f.source, g.target);
    for (int n = lo; n <= hi; ++n) {
        PolyMatrix m = PolyMatrix::mul_truncated(g.at(n), f.at(n), N);
        if (!m.is_zero()) h.maps[n] = m;
    }
    return h;
}

ChainMap identity_map(const FilteredFreeComplex& k) {
    ChainMap f{k, k, {}};
    for (int n = k.n_lo(); n <= k.n_hi(); ++n) f.maps[n] = PolyMatrix::identity(k.field(), k.nvars(), k.rank(n));
    return f;
}

ChainMap homotopy_boundary(const Homotopy& s) {
    const int N = common_precision(s.source, s.target);
    ChainMap h{s.source, s.target, {}};
    const auto [lo, hi] = joint_range(s.source, s.target);
    for (int n = lo; n <= hi; ++n) {
        PolyMatrix m = PolyMatrix::mul_truncated(s.target.differential(n - 1), s.at(n), N) +
                       PolyMatrix::mul_truncated(s.at(n + 1), s.source.differential(n), N);
        if (!m.is_zero()) h.maps[n] = m;
    }
    return h;
}

std::map<std::pair<int, int>, Matrix> map_on_pages(const ChainMap& f, int r, int p_max) {
    require_chain_map(f);
    require_valid(f.source, "map_on_pages");
    require_valid(f.target, "map_on_pages");
    if (r < 1) throw PreconditionError("map_on_pages: r must be at least 1");
    require_window(f.source, p_max + r, "page maps");
    require_window(f.target, p_max + r, "page maps");
    PageBuilder src(f.source, r), dst(f.target, r);
    std::map<std::pair<int, int>, Matrix> out;
    const int lo = std::min(f.source.n_lo(), f.target.n_lo());
    const int hi = std::max(f.source.n_hi(), f.target.n_hi());
    for (int n = lo; n <= hi; ++n) {
        const PolyMatrix fn = f.at(n);
        for (int p = 0; p <= p_max; ++p) {
            const PageData& a = src.at(n, p);
            const PageData& b = dst.at(n, p);
            Matrix lead = detail::graded_block(fn, 0, p) * a.basis;
            if (lead.rows() == 0) lead = Matrix(f.target.field(), b.coords.ambient_dim(), a.basis.cols());
            for (std::size_t c = 0; c < lead.cols(); ++c)
                if (!b.coords.in_span(lead.column(c)))
                    throw InvariantViolation("map_on_pages: image of a cycle is not a cycle (not a chain map?)");
            out[{p, n}] = b.coords.coords(lead);
        }
    }
    return out;
}

NullHomotopyVerdict is_null_homotopic_action(const ChainMap& f, const Homotopy& s, int r_max, int p_max) {
    NullHomotopyVerdict v;
    v.r_max = r_max;
    v.p_max = p_max;
    const ChainMap h = homotopy_boundary(s);
    const int N = common_precision(f.source, f.target);
    const auto [lo, hi] = joint_range(f.source, f.target);
    v.identity_holds = true;
    for (int n = lo; n <= hi; ++n)
        if (!(f.at(n).truncated(N) - h.at(n).truncated(N)).is_zero()) {
            v.identity_holds = false;
            v.notes.push_back("f^" + std::to_string(n) + " != (d s + s d)^" + std::to_string(n));
        }
    v.pages_zero = true;
    for (int r = 1; r <= r_max; ++r)
        for (const auto& [key, m] : map_on_pages(f, r, p_max))
            if (!m.is_zero()) {
                v.pages_zero = false;
                v.notes.push_back("nonzero induced map on E_" + std::to_string(r) + " at p=" + std::to_string(key.first) +
                                  ", n=" + std::to_string(key.second));
            }
    return v;
}

AdditivityReport check_page_additivity(const std::vector<FilteredFreeComplex>& parts, int r, int p_max) {
    AdditivityReport rep;
    const FilteredFreeComplex sum = sum_complexes(parts);
    const PageTable total = compute_page(sum, r, p_max);
    std::vector<PageTable> pieces;
    for (const auto& k : parts) pieces.push_back(compute_page(k, r, p_max));
    for (int n = sum.n_lo(); n <= sum.n_hi(); ++n)
        for (int p = 0; p <= p_max; ++p) {
            std::size_t s = 0;
            for (const auto& t : pieces) s += t.dim(p, n);
            if (s != total.dim(p, n)) {
                rep.additive = false;
                rep.mismatches.push_back("E_" + std::to_string(r) + "^(" + std::to_string(p) + "," +
                                         std::to_string(n - p) + "): sum has " + std::to_string(total.dim(p, n)) +
                                         ", summands add to " + std::to_string(s));
            }
        }
    return rep;
}

}  // namespace bggwb
