#include "bggwb/emodule.hpp"

#include <algorithm>
#include <sstream>

#include "bggwb/errors.hpp"
#include "bggwb/monomial.hpp"

namespace bggwb {

GradedEModule::GradedEModule(ExteriorContext ctx, int lo, std::vector<std::size_t> dims)
    : ctx_(ctx), lo_(lo), dims_(std::move(dims)) {
    if (ctx_.q < 0) throw PreconditionError("exterior context with negative q");
    act_.resize(static_cast<std::size_t>(ctx_.q));
    const std::size_t steps = dims_.empty() ? 0 : dims_.size() - 1;
    for (auto& per_a : act_) {
        per_a.reserve(steps);
        for (std::size_t k = 0; k < steps; ++k) per_a.emplace_back(ctx_.field, dims_[k], dims_[k + 1]);
    }
}

std::size_t GradedEModule::dim(int j) const {
    if (dims_.empty() || j < lo_ || j > hi()) return 0;
    return dims_[static_cast<std::size_t>(j - lo_)];
}

std::size_t GradedEModule::total_dim() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
}

Matrix GradedEModule::action(int a, int j) const {
    if (a < 0 || a >= ctx_.q) throw PreconditionError("action index out of range");
    if (dims_.empty() || j - 1 < lo_ || j > hi()) return Matrix(ctx_.field, dim(j - 1), dim(j));
    return act_[static_cast<std::size_t>(a)][slot(j)];
}

void GradedEModule::set_action(int a, int j, const Matrix& m) {
    if (a < 0 || a >= ctx_.q)
        throw DimensionMismatch("action e" + std::to_string(a + 1) + " out of range for q=" + std::to_string(ctx_.q));
    require_same_field(ctx_.field, m.field(), "set_action");
    if (m.rows() != dim(j - 1) || m.cols() != dim(j))
        throw DimensionMismatch("action e" + std::to_string(a + 1) + " at degree " + std::to_string(j) +
                                ": expected " + std::to_string(dim(j - 1)) + "x" + std::to_string(dim(j)) +
                                ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (dims_.empty() || j - 1 < lo_ || j > hi()) {
        if (!m.empty())
            throw DimensionMismatch("action e" + std::to_string(a + 1) + " at degree " + std::to_string(j) +
                                    " lies outside the support");
        return;
    }
    act_[static_cast<std::size_t>(a)][slot(j)] = m;
}

GradedEModule GradedEModule::widened(int lo, int hi) const {
    if (has_interval()) {
        lo = std::min(lo, lo_);
        hi = std::max(hi, this->hi());
    }
    std::vector<std::size_t> d;
    for (int j = lo; j <= hi; ++j) d.push_back(dim(j));
    GradedEModule out(ctx_, lo, d);
    for (int a = 0; a < ctx_.q; ++a)
        for (int j = lo + 1; j <= hi; ++j) out.set_action(a, j, action(a, j));
    return out;
}

GradedEModule GradedEModule::trimmed() const {
    int lo = lo_, hi = this->hi();
    while (lo <= hi && dim(lo) == 0) ++lo;
    while (hi >= lo && dim(hi) == 0) --hi;
    if (lo > hi) return zero(ctx_);
    std::vector<std::size_t> d;
    for (int j = lo; j <= hi; ++j) d.push_back(dim(j));
    GradedEModule out(ctx_, lo, d);
    for (int a = 0; a < ctx_.q; ++a)
        for (int j = lo + 1; j <= hi; ++j) out.set_action(a, j, action(a, j));
    return out;
}

bool operator==(const GradedEModule& a, const GradedEModule& b) {
    if (!(a.ctx_ == b.ctx_) || a.lo_ != b.lo_ || a.dims_ != b.dims_) return false;
    return a.act_ == b.act_;
}

ModuleValidation validate_module(const GradedEModule& m) {
    ModuleValidation out;
    if (!m.has_interval()) return out;
    for (int j = m.lo() + 2; j <= m.hi(); ++j)
        for (int a = 0; a < m.q(); ++a)
            for (int b = a; b < m.q(); ++b) {
                Matrix r = m.action(a, j - 1) * m.action(b, j);
                if (a != b) r = r + m.action(b, j - 1) * m.action(a, j);
                if (!r.is_zero()) out.violations.push_back({a, b, j, std::move(r)});
            }
    return out;
}

std::string ModuleValidation::to_string() const {
    if (valid()) return "valid";
    std::ostringstream os;
    os << "invalid: " << violations.size() << " anticommutation failure(s)";
    for (const auto& v : violations) {
        os << "\n  degree " << v.degree << ": ";
        if (v.a == v.b)
            os << "e" << v.a + 1 << "*e" << v.a + 1 << " = " << v.residual.to_string() << " != 0";
        else
            os << "e" << v.a + 1 << "*e" << v.b + 1 << " + e" << v.b + 1 << "*e" << v.a + 1 << " = "
               << v.residual.to_string() << " != 0";
    }
    return os.str();
}

void require_valid(const GradedEModule& m, const char* context) {
    auto v = validate_module(m);
    if (!v.valid()) throw InvariantViolation(std::string(context) + ": module is not an E-module: " + v.to_string());
}

GradedEModule dual_module(const GradedEModule& p) {
    require_valid(p, "dual_module");
    if (!p.has_interval()) return GradedEModule::zero(p.context());
    std::vector<std::size_t> d;
    for (int j = -p.hi(); j <= -p.lo(); ++j) d.push_back(p.dim(-j));
    GradedEModule q(p.context(), -p.hi(), d);
    // e_a : Q_j -> Q_{j-1} is the transpose of e_a : P_{1-j} -> P_{-j}
    for (int a = 0; a < p.q(); ++a)
        for (int j = q.lo() + 1; j <= q.hi(); ++j) q.set_action(a, j, p.action(a, 1 - j).transpose());
    return q;
}

GradedEModule shift(const GradedEModule& m, int j) {
    if (!m.has_interval()) return m;
    GradedEModule out(m.context(), m.lo() - j, m.dims());
    for (int a = 0; a < m.q(); ++a)
        for (int l = out.lo() + 1; l <= out.hi(); ++l) out.set_action(a, l, m.action(a, l + j));
    return out;
}

GradedEModule direct_sum(const std::vector<GradedEModule>& summands) {
    if (summands.empty()) throw PreconditionError("direct_sum of an empty list");
    const auto ctx = summands.front().context();
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& s : summands) {
        if (!(s.context() == ctx))
            throw PreconditionError("direct_sum: summands live over different exterior contexts");
        if (!s.has_interval()) continue;
        lo = any ? std::min(lo, s.lo()) : s.lo();
        hi = any ? std::max(hi, s.hi()) : s.hi();
        any = true;
    }
    if (!any) return GradedEModule::zero(ctx);
    std::vector<std::size_t> d;
    for (int j = lo; j <= hi; ++j) {
        std::size_t t = 0;
        for (const auto& s : summands) t += s.dim(j);
        d.push_back(t);
    }
    GradedEModule out(ctx, lo, d);
    for (int a = 0; a < ctx.q; ++a)
        for (int j = lo + 1; j <= hi; ++j) {
            Matrix acc(ctx.field, 0, 0);
            for (const auto& s : summands) acc = block_diag(acc, s.action(a, j));
            out.set_action(a, j, acc);
        }
    return out;
}

Matrix wedge_matrix(Field f, int q, int a, int i) {
    const auto src = monomial_basis(MonomialKind::exterior, q, i);
    Matrix m(f, binomial(q, i + 1), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto& s = src.exterior[c];
        if (std::find(s.begin(), s.end(), a) != s.end()) continue;
        std::vector<int> t = s;
        t.insert(std::upper_bound(t.begin(), t.end(), a), a);
        const auto below = std::count_if(s.begin(), s.end(), [a](int x) { return x < a; });
        m.set(ext_rank(t, q), c, below % 2 ? -1 : 1);
    }
    return m;
}

GradedEModule exterior_algebra(ExteriorContext ctx) {
    std::vector<std::size_t> d;
    for (int j = -ctx.q; j <= 0; ++j) d.push_back(binomial(ctx.q, -j));
    GradedEModule e(ctx, -ctx.q, d);
    for (int a = 0; a < ctx.q; ++a)
        for (int j = -ctx.q + 1; j <= 0; ++j) e.set_action(a, j, wedge_matrix(ctx.field, ctx.q, a, -j));
    return e;
}

GradedEModule residue_field(ExteriorContext ctx) { return GradedEModule(ctx, 0, {1}); }

namespace {

// Span of V*M_{j+1} inside M_j, as columns.
Matrix image_of_v(const GradedEModule& m, int j) {
    Matrix acc(m.field(), m.dim(j), 0);
    for (int a = 0; a < m.q(); ++a) acc = hstack(acc, m.action(a, j + 1));
    return acc;
}

// Canonical basis vectors of M_j completing V*M_{j+1} to a basis.
std::vector<std::size_t> generator_indices(const GradedEModule& m, int j) {
    const Matrix img = image_of_v(m, j);
    const std::size_t n = m.dim(j);
    Matrix aug = hstack(img, Matrix::identity(m.field(), n));
    std::vector<std::size_t> out;
    for (auto c : independent_columns(aug))
        if (c >= img.cols()) out.push_back(c - img.cols());
    return out;
}

struct Generator {
    int degree;
    std::size_t index;  // canonical basis vector of M_degree
};

// One minimal-syzygy step: kernel of the minimal free cover F -> M, as a module.
GradedEModule syzygy_module(const GradedEModule& m, const std::vector<Generator>& gens) {
    const int q = m.q();
    const Field f = m.field();
    const int lo = m.lo() - q, hi = m.hi();

    // F_t basis: generator-major, then subsets in sorted order
    struct Block {
        std::size_t gen;
        std::size_t offset;
        int k;
    };
    std::map<int, std::vector<Block>> layout;
    std::map<int, std::size_t> fdim;
    for (int t = lo; t <= hi; ++t) {
        std::size_t off = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const int k = gens[g].degree - t;
            if (k < 0 || k > q) continue;
            layout[t].push_back({g, off, k});
            off += binomial(q, k);
        }
        fdim[t] = off;
    }
    auto position = [&](int t, std::size_t g, const std::vector<int>& subset) -> std::size_t {
        for (const auto& b : layout[t])
            if (b.gen == g) return b.offset + ext_rank(subset, q);
        throw PreconditionError("internal: generator block missing");
    };

    // images e_S * m_g, built from e_{S \ s1} * m_g one degree up
    std::vector<std::map<std::vector<int>, Vec>> images(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Vec unit(m.dim(gens[g].degree));
        unit[gens[g].index] = 1;
        images[g][{}] = unit;
        for (int k = 1; k <= q; ++k) {
            const int t = gens[g].degree - k;
            for (const auto& s : monomial_basis(MonomialKind::exterior, q, k).exterior) {
                std::vector<int> rest(s.begin() + 1, s.end());
                images[g][s] = m.action(s.front(), t + 1).apply(images[g][rest]);
            }
        }
    }

    std::map<int, Matrix> kernels;
    std::map<int, std::vector<std::size_t>> free_positions;
    std::vector<std::size_t> kdims;
    for (int t = lo; t <= hi; ++t) {
        Matrix phi(f, m.dim(t), fdim[t]);
        for (const auto& b : layout[t]) {
            const auto subsets = monomial_basis(MonomialKind::exterior, q, b.k).exterior;
            for (std::size_t c = 0; c < subsets.size(); ++c) {
                const Vec& v = images[b.gen][subsets[c]];
                for (std::size_t r = 0; r < v.size(); ++r) phi.raw(r, b.offset + c) = v[r];
            }
        }
        std::vector<std::size_t> fp;
        Matrix k = kernel_columns(phi, fp);
        kdims.push_back(k.cols());
        free_positions[t] = std::move(fp);
        kernels[t] = std::move(k);
    }

    GradedEModule out(m.context(), lo, kdims);
    for (int t = lo + 1; t <= hi; ++t) {
        const Matrix& ksrc = kernels[t];
        const auto& fp_dst = free_positions[t - 1];
        for (int a = 0; a < q; ++a) {
            Matrix act(f, fp_dst.size(), ksrc.cols());
            std::vector<Vec> image_cols(ksrc.cols(), Vec(fdim[t - 1]));
            for (const auto& b : layout[t]) {
                if (b.k == q) continue;
                const auto subsets = monomial_basis(MonomialKind::exterior, q, b.k).exterior;
                for (std::size_t c = 0; c < subsets.size(); ++c) {
                    const auto& s = subsets[c];
                    if (std::find(s.begin(), s.end(), a) != s.end()) continue;
                    std::vector<int> u = s;
                    u.insert(std::upper_bound(u.begin(), u.end(), a), a);
                    const bool neg = std::count_if(s.begin(), s.end(), [a](int x) { return x < a; }) % 2;
                    const std::size_t dst = position(t - 1, b.gen, u);
                    for (std::size_t col = 0; col < ksrc.cols(); ++col) {
                        const auto& x = ksrc(b.offset + c, col);
                        if (sgn(x) == 0) continue;
                        image_cols[col][dst] = neg ? field_sub(image_cols[col][dst], x, f)
                                                   : field_add(image_cols[col][dst], x, f);
                    }
                }
            }
            for (std::size_t col = 0; col < ksrc.cols(); ++col)
                for (std::size_t r = 0; r < fp_dst.size(); ++r) act.raw(r, col) = image_cols[col][fp_dst[r]];
            out.set_action(a, t, act);
        }
    }
    return out.trimmed();
}

}  // namespace

std::map<int, std::size_t> minimal_generators(const GradedEModule& m) {
    std::map<int, std::size_t> out;
    if (!m.has_interval()) return out;
    for (int j = m.lo(); j <= m.hi(); ++j) {
        const std::size_t n = m.dim(j);
        if (n == 0) continue;
        const std::size_t g = n - mat_rank(image_of_v(m, j));
        if (g) out[j] = g;
    }
    return out;
}

std::size_t BettiTable::at(int i, int t) const {
    auto it = entries.find({i, t});
    return it == entries.end() ? 0 : it->second;
}

BettiTable operator+(const BettiTable& a, const BettiTable& b) {
    BettiTable r;
    r.i_max = std::min(a.i_max, b.i_max);
    for (const auto* tab : {&a, &b})
        for (const auto& [k, v] : tab->entries)
            if (k.first <= r.i_max) r.entries[k] += v;
    return r;
}

BettiTable BettiTable::shifted(int j) const {
    BettiTable r;
    r.i_max = i_max;
    for (const auto& [k, v] : entries) r.entries[{k.first, k.second - j}] = v;
    return r;
}

std::string BettiTable::to_text() const {
    std::ostringstream os;
    if (entries.empty()) {
        os << "(zero table through i=" << i_max << ")\n";
        return os.str();
    }
    // rows indexed by the strand j = -i - t, columns by i
    int jmin = 0, jmax = 0;
    bool first = true;
    for (const auto& [k, v] : entries) {
        const int j = -k.first - k.second;
        jmin = first ? j : std::min(jmin, j);
        jmax = first ? j : std::max(jmax, j);
        first = false;
    }
    os << "strand\\i";
    for (int i = 0; i <= i_max; ++i) os << '\t' << i;
    os << '\n';
    for (int j = jmin; j <= jmax; ++j) {
        os << j;
        for (int i = 0; i <= i_max; ++i) {
            const auto v = at(i, -i - j);
            os << '\t' << (v ? std::to_string(v) : std::string("-"));
        }
        os << '\n';
    }
    return os.str();
}

std::string BettiTable::to_csv() const {
    std::ostringstream os;
    os << "i,t,dim\n";
    for (const auto& [k, v] : entries) os << k.first << ',' << k.second << ',' << v << '\n';
    return os.str();
}

int default_imax(const GradedEModule& m) {
    const auto t = m.trimmed();
    const int width = t.has_interval() ? t.hi() - t.lo() : 0;
    return m.q() + width + 2;
}

namespace {

BettiTable betti_by_syzygies(const GradedEModule& m, int i_max) {
    BettiTable table;
    table.i_max = i_max;
    GradedEModule current = m.trimmed();
    for (int i = 0; i <= i_max; ++i) {
        if (current.is_zero()) break;
        std::vector<Generator> gens;
        for (int j = current.hi(); j >= current.lo(); --j)
            for (auto idx : generator_indices(current, j)) gens.push_back({j, idx});
        for (const auto& g : gens) table.entries[{i, g.degree}] += 1;
        if (i == i_max) break;
        current = syzygy_module(current, gens);
    }
    return table;
}

// M (x) S_i^* in degree t is M_{t+i} (x) S_i^*; the differential sends
// m (x) mu^* to sum_a e_a m (x) (mu / x_a)^*.
Matrix koszul_differential(const GradedEModule& m, int i, int t) {
    const int q = m.q();
    const int u = t + i;
    const auto src = monomial_basis(MonomialKind::symmetric, q, i).symmetric;
    const std::size_t ns = src.size(), nt = sym_count(q, i - 1);
    Matrix out(m.field(), m.dim(u - 1) * nt, m.dim(u) * ns);
    if (out.rows() == 0 || out.cols() == 0) return out;
    for (int a = 0; a < q; ++a) {
        const Matrix act = m.action(a, u);
        for (std::size_t c = 0; c < ns; ++c) {
            if (src[c][static_cast<std::size_t>(a)] == 0) continue;
            Exponents nu = src[c];
            --nu[static_cast<std::size_t>(a)];
            const std::size_t r = sym_rank(nu);
            for (std::size_t jc = 0; jc < act.cols(); ++jc)
                for (std::size_t jr = 0; jr < act.rows(); ++jr) {
                    const auto& x = act(jr, jc);
                    if (sgn(x) == 0) continue;
                    auto& y = out.raw(jr * nt + r, jc * ns + c);
                    y = field_add(y, x, m.field());
                }
        }
    }
    return out;
}

BettiTable betti_by_koszul(const GradedEModule& m, int i_max) {
    BettiTable table;
    table.i_max = i_max;
    const GradedEModule t = m.trimmed();
    if (!t.has_interval()) return table;
    std::map<std::pair<int, int>, std::size_t> ranks;
    auto rank = [&](int i, int deg) -> std::size_t {
        if (i == 0) return 0;
        auto it = ranks.find({i, deg});
        if (it != ranks.end()) return it->second;
        const std::size_t r = mat_rank(koszul_differential(t, i, deg));
        ranks[{i, deg}] = r;
        return r;
    };
    for (int i = 0; i <= i_max; ++i)
        for (int deg = t.lo() - i; deg <= t.hi() - i; ++deg) {
            const std::size_t n = t.dim(deg + i) * sym_count(t.q(), i);
            if (n == 0) continue;
            const std::size_t v = n - rank(i, deg) - rank(i + 1, deg);
            if (v) table.entries[{i, deg}] = v;
        }
    return table;
}

}  // namespace

BettiTable betti_table(const GradedEModule& m, int i_max, BettiMethod method) {
    if (i_max < 0) throw PreconditionError("betti_table: i_max must be nonnegative");
    require_valid(m, "betti_table");
    return method == BettiMethod::syzygies ? betti_by_syzygies(m, i_max) : betti_by_koszul(m, i_max);
}

std::string RegularityReport::summary() const {
    std::ostringstream os;
    os << "m = " << m << " (" << method_name() << " route; "
       << (method == RegularityMethod::definition ? "verified through i_max=" : "exact through T=") << truncation
       << ")";
    return os.str();
}

RegularityReport regularity_definition_route(const GradedEModule& m, int i_max) {
    for (int j = 1; m.has_interval() && j <= m.hi(); ++j)
        if (m.dim(j) != 0)
            throw PreconditionError("regularity: module has a nonzero component in positive degree " +
                                    std::to_string(j));
    RegularityReport r;
    r.method = RegularityMethod::definition;
    r.truncation = i_max;
    const auto table = betti_table(m, i_max);
    int worst = 0;
    std::pair<int, int> where{0, 0};
    bool seen = false;
    for (const auto& [k, v] : table.entries) {
        const int j = -k.first - k.second;
        if (!seen || j > worst) {
            worst = std::max(j, 0);
            where = k;
            seen = true;
        }
    }
    r.m = worst;
    if (seen)
        r.evidence.push_back("extremal Tor entry: Tor_" + std::to_string(where.first) + " in degree " +
                             std::to_string(where.second) + " (strand " + std::to_string(-where.first - where.second) +
                             ")");
    else
        r.evidence.push_back("zero module: all Tor vanish");
    r.evidence.push_back("verified through homological index i_max=" + std::to_string(i_max));
    return r;
}

}  // namespace bggwb
