#include "bggwb/bgg.hpp"

#include <algorithm>
#include <sstream>

#include "bggwb/errors.hpp"
#include "bggwb/monomial.hpp"

namespace bggwb {

LinearSComplex::LinearSComplex(ExteriorContext ctx, std::vector<std::size_t> ranks, int first_degree)
    : ctx_(ctx), ranks_(std::move(ranks)), first_degree_(first_degree) {
    coeff_.resize(static_cast<std::size_t>(ctx_.q));
    for (auto& per_a : coeff_)
        for (std::size_t n = 0; n + 1 < ranks_.size(); ++n) per_a.emplace_back(ctx_.field, ranks_[n + 1], ranks_[n]);
    labels.resize(ranks_.size());
}

const Matrix& LinearSComplex::coefficient(int a, std::size_t n) const {
    if (a < 0 || a >= ctx_.q || n + 1 >= ranks_.size())
        throw PreconditionError("coefficient index out of range");
    return coeff_[static_cast<std::size_t>(a)][n];
}

void LinearSComplex::set_coefficient(int a, std::size_t n, const Matrix& m) {
    if (a < 0 || a >= ctx_.q || n + 1 >= ranks_.size())
        throw DimensionMismatch("coefficient C" + std::to_string(a + 1) + " at spot " + std::to_string(n) +
                                " out of range");
    require_same_field(ctx_.field, m.field(), "set_coefficient");
    if (m.rows() != ranks_[n + 1] || m.cols() != ranks_[n])
        throw DimensionMismatch("coefficient C" + std::to_string(a + 1) + " at spot " + std::to_string(n) +
                                ": expected " + std::to_string(ranks_[n + 1]) + "x" + std::to_string(ranks_[n]));
    coeff_[static_cast<std::size_t>(a)][n] = m;
}

Matrix LinearSComplex::strand(std::size_t n, int p) const {
    const int q = ctx_.q;
    const std::size_t src_mon = sym_count(q, p), dst_mon = sym_count(q, p + 1);
    Matrix out(ctx_.field, rank(n + 1) * dst_mon, rank(n) * src_mon);
    if (p < 0 || n + 1 >= ranks_.size() || out.empty()) return out;
    const auto basis = monomial_basis(MonomialKind::symmetric, q, p);
    std::vector<std::vector<std::size_t>> raised(basis.size(), std::vector<std::size_t>(static_cast<std::size_t>(q)));
    for (std::size_t m = 0; m < basis.size(); ++m)
        for (int a = 0; a < q; ++a) {
            Exponents e = basis.symmetric[m];
            ++e[static_cast<std::size_t>(a)];
            raised[m][static_cast<std::size_t>(a)] = sym_rank(e);
        }
    for (int a = 0; a < q; ++a) {
        const Matrix& c = coeff_[static_cast<std::size_t>(a)][n];
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) {
                const auto& v = c(i, j);
                if (sgn(v) == 0) continue;
                for (std::size_t m = 0; m < src_mon; ++m) {
                    auto& cell = out.raw(i * dst_mon + raised[m][static_cast<std::size_t>(a)], j * src_mon + m);
                    cell = field_add(cell, v, ctx_.field);
                }
            }
    }
    return out;
}

std::vector<std::string> LinearSComplex::square_violations() const {
    std::vector<std::string> out;
    for (std::size_t n = 0; n + 2 < ranks_.size(); ++n)
        for (int a = 0; a < ctx_.q; ++a)
            for (int b = a; b < ctx_.q; ++b) {
                Matrix r = coefficient(a, n + 1) * coefficient(b, n);
                if (a != b) r = r + coefficient(b, n + 1) * coefficient(a, n);
                if (!r.is_zero())
                    out.push_back("spot " + std::to_string(n) + ": C" + std::to_string(a + 1) + "C" +
                                  std::to_string(b + 1) + (a == b ? "" : " + C" + std::to_string(b + 1) + "C" +
                                                                             std::to_string(a + 1)) +
                                  " = " + r.to_string());
            }
    return out;
}

bool operator==(const LinearSComplex& a, const LinearSComplex& b) {
    return a.ctx_ == b.ctx_ && a.ranks_ == b.ranks_ && a.first_degree_ == b.first_degree_ && a.coeff_ == b.coeff_;
}

std::string LinearSComplex::to_string() const {
    std::ostringstream os;
    os << "linear complex over S (q=" << ctx_.q << ", " << ctx_.field.to_string() << ")\n";
    for (std::size_t n = 0; n < ranks_.size(); ++n) {
        os << "  spot " << n;
        if (!labels[n].empty()) os << " [" << labels[n] << "]";
        os << ": S(-" << generation_degree(n) << ")^" << ranks_[n] << '\n';
        if (n + 1 < ranks_.size())
            for (int a = 0; a < ctx_.q; ++a) {
                const auto& c = coefficient(a, n);
                if (!c.is_zero()) os << "    x" << a + 1 << ": " << c.to_string() << '\n';
            }
    }
    return os.str();
}

LinearSComplex build_bgg(const GradedEModule& p) {
    require_valid(p, "build_bgg");
    if (p.has_interval() && p.lo() < 0)
        for (int j = p.lo(); j < 0; ++j)
            if (p.dim(j) != 0)
                throw PreconditionError("build_bgg: module has a nonzero component in negative degree " +
                                        std::to_string(j));
    const int d = p.has_interval() ? std::max(p.hi(), 0) : 0;
    std::vector<std::size_t> ranks;
    for (int j = d; j >= 0; --j) ranks.push_back(p.dim(j));
    LinearSComplex l(p.context(), ranks, 0);
    for (std::size_t n = 0; n < ranks.size(); ++n) l.labels[n] = "P_" + std::to_string(d - static_cast<int>(n));
    for (int a = 0; a < p.q(); ++a)
        for (std::size_t n = 0; n + 1 < ranks.size(); ++n) l.set_coefficient(a, n, p.action(a, d - static_cast<int>(n)));
    return l;
}

std::size_t HomologyProfile::at(int spot, int t) const {
    auto it = dims.find({spot, t});
    return it == dims.end() ? 0 : it->second;
}

std::size_t HomologyProfile::total(int spot) const {
    std::size_t s = 0;
    for (const auto& [k, v] : dims)
        if (k.first == spot) s += v;
    return s;
}

std::string HomologyProfile::to_text(const LinearSComplex& l) const {
    std::ostringstream os;
    int tmin = 0;
    bool first = true;
    for (std::size_t n = 0; n < l.spots(); ++n) {
        tmin = first ? l.generation_degree(n) : std::min(tmin, l.generation_degree(n));
        first = false;
    }
    os << "homology through internal degree T=" << truncation << "\nspot\\t";
    for (int t = tmin; t <= truncation; ++t) os << '\t' << t;
    os << '\n';
    for (std::size_t n = 0; n < l.spots(); ++n) {
        os << n;
        if (!l.labels[n].empty()) os << ' ' << l.labels[n];
        for (int t = tmin; t <= truncation; ++t) {
            const auto v = at(static_cast<int>(n), t);
            os << '\t' << (v ? std::to_string(v) : std::string("."));
        }
        os << '\n';
    }
    return os.str();
}

std::string HomologyProfile::to_csv() const {
    std::ostringstream os;
    os << "spot,t,dim\n";
    for (const auto& [k, v] : dims) os << k.first << ',' << k.second << ',' << v << '\n';
    return os.str();
}

namespace {

class StrandRanks {
public:
    explicit StrandRanks(const LinearSComplex& l) : l_(l) {}

    // rank of the strand out of spot n in polynomial degree p
    std::size_t out(long n, int p) {
        if (n < 0 || p < 0 || static_cast<std::size_t>(n) + 1 >= l_.spots()) return 0;
        auto key = std::make_pair(n, p);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const std::size_t r = mat_rank(l_.strand(static_cast<std::size_t>(n), p));
        cache_[key] = r;
        return r;
    }

    std::size_t homology(std::size_t n, int p) {
        if (p < 0) return 0;
        const std::size_t total = l_.rank(n) * sym_count(l_.q(), p);
        if (total == 0) return 0;
        return total - out(static_cast<long>(n), p) - out(static_cast<long>(n) - 1, p - 1);
    }

private:
    const LinearSComplex& l_;
    std::map<std::pair<long, int>, std::size_t> cache_;
};

}  // namespace

HomologyProfile homology_dims(const LinearSComplex& l, std::size_t n, int truncation) {
    if (n >= l.spots()) throw PreconditionError("homology_dims: spot out of range");
    HomologyProfile h;
    h.truncation = truncation;
    StrandRanks ranks(l);
    for (int t = l.generation_degree(n); t <= truncation; ++t) {
        const auto v = ranks.homology(n, t - l.generation_degree(n));
        if (v) h.dims[{static_cast<int>(n), t}] = v;
    }
    return h;
}

HomologyProfile homology_profile(const LinearSComplex& l, int truncation) {
    HomologyProfile h;
    h.truncation = truncation;
    StrandRanks ranks(l);
    for (std::size_t n = 0; n < l.spots(); ++n)
        for (int t = l.generation_degree(n); t <= truncation; ++t) {
            const auto v = ranks.homology(n, t - l.generation_degree(n));
            if (v) h.dims[{static_cast<int>(n), t}] = v;
        }
    return h;
}

std::string ExactnessVerdict::to_string() const {
    std::ostringstream os;
    if (exact)
        os << "exact at the first " << steps << " spot(s) through internal degree T=" << truncation;
    else
        os << "not exact: homology of dimension " << failure_dim << " at spot " << failure->first
           << " in internal degree " << failure->second << " (checked through T=" << truncation << ")";
    return os.str();
}

ExactnessVerdict is_exact_first_steps(const LinearSComplex& l, std::size_t steps, int truncation) {
    if (steps > l.spots()) throw PreconditionError("is_exact_first_steps: more steps than spots");
    ExactnessVerdict v;
    v.steps = steps;
    v.truncation = truncation;
    StrandRanks ranks(l);
    for (std::size_t n = 0; n < steps; ++n)
        for (int t = l.generation_degree(n); t <= truncation; ++t) {
            const auto h = ranks.homology(n, t - l.generation_degree(n));
            if (h) {
                v.exact = false;
                v.failure = std::make_pair(static_cast<int>(n), t);
                v.failure_dim = h;
                return v;
            }
        }
    return v;
}

int default_truncation(const GradedEModule& p) {
    const int d = p.has_interval() ? std::max(p.hi(), 0) : 0;
    return d + p.q() + 4;
}

RegularityReport regularity_via_bgg(const GradedEModule& p, int truncation) {
    const LinearSComplex l = build_bgg(p);
    const int d = static_cast<int>(l.spots()) - 1;
    RegularityReport r;
    r.method = RegularityMethod::bgg;
    r.truncation = truncation;
    StrandRanks ranks(l);
    int first_bad = d;
    for (int n = 0; n < d && first_bad == d; ++n)
        for (int t = n; t <= truncation; ++t) {
            const auto h = ranks.homology(static_cast<std::size_t>(n), t - n);
            if (h) {
                first_bad = n;
                r.evidence.push_back("homology of dimension " + std::to_string(h) + " at spot " + std::to_string(n) +
                                     " (" + l.labels[static_cast<std::size_t>(n)] + ") in internal degree " +
                                     std::to_string(t));
                break;
            }
        }
    r.m = d - first_bad;
    r.evidence.push_back("L(P) exact at the first " + std::to_string(first_bad) + " of " + std::to_string(d) +
                         " step(s) through internal degree T=" + std::to_string(truncation));
    return r;
}

std::string TheoremAReport::summary() const {
    std::ostringstream os;
    os << "reg = " << regularity << "; Betti splits into " << strands << " linear strand" << (strands == 1 ? "" : "s");
    if (!passed) os << " [FAILED]";
    return os.str();
}

TheoremAReport verify_theorem_a(const std::vector<GradedEModule>& summands, int truncation, int i_max) {
    if (summands.empty()) throw PreconditionError("verify_theorem_a: no summands");
    const auto ctx = summands.front().context();
    TheoremAReport rep;
    std::vector<GradedEModule> shifted;
    bool any = false;
    for (std::size_t j = 0; j < summands.size(); ++j) {
        const auto& s = summands[j];
        if (!(s.context() == ctx)) throw PreconditionError("verify_theorem_a: summands over different contexts");
        for (int t = 1; s.has_interval() && t <= s.hi(); ++t)
            if (s.dim(t) != 0)
                throw PreconditionError("verify_theorem_a: summand Q^" + std::to_string(j) +
                                        " has a component in positive degree " + std::to_string(t));
        require_valid(s, "verify_theorem_a");
        if (s.is_zero()) continue;
        any = true;
        ++rep.strands;
        rep.expected_regularity = static_cast<int>(j);
        shifted.push_back(shift(s, static_cast<int>(j)));
    }
    if (!any) throw PreconditionError("verify_theorem_a: every summand is zero");

    const GradedEModule total = direct_sum(shifted);
    const GradedEModule total_p = dual_module(total);
    rep.truncation = truncation > 0 ? truncation : default_truncation(total_p);
    rep.i_max = i_max > 0 ? i_max : std::max(default_imax(total), rep.truncation);

    BettiTable expected;
    expected.i_max = rep.i_max;
    for (std::size_t j = 0; j < summands.size(); ++j) {
        const auto& s = summands[j];
        if (s.is_zero()) continue;
        const std::string name = "Q^" + std::to_string(j);
        const auto def = regularity_definition_route(s, rep.i_max);
        const auto bgg = regularity_via_bgg(dual_module(s), rep.truncation);
        if (def.m != 0 || bgg.m != 0) {
            rep.passed = false;
            rep.failures.push_back(name + " is not 0-regular: definition route m=" + std::to_string(def.m) +
                                   ", bgg route m=" + std::to_string(bgg.m));
        } else {
            rep.notes.push_back(name + " is 0-regular (both routes)");
        }
        expected = expected + betti_table(s, rep.i_max).shifted(static_cast<int>(j));
    }

    const auto def = regularity_definition_route(total, rep.i_max);
    const auto bgg = regularity_via_bgg(total_p, rep.truncation);
    rep.regularity = def.m;
    if (def.m != bgg.m) {
        rep.passed = false;
        rep.failures.push_back("routes disagree on Q: definition m=" + std::to_string(def.m) +
                               ", bgg m=" + std::to_string(bgg.m));
    }
    if (def.m != rep.expected_regularity) {
        rep.passed = false;
        rep.failures.push_back("regularity of Q is " + std::to_string(def.m) + ", expected max{j : Q^j != 0} = " +
                               std::to_string(rep.expected_regularity));
    }
    rep.betti = betti_table(total, rep.i_max);
    if (!(rep.betti == expected)) {
        rep.passed = false;
        rep.failures.push_back("Betti table of Q differs from the sum of the shifted summand tables");
    }
    for (const auto& [k, v] : rep.betti.entries) {
        const int strand = -k.first - k.second;
        if (strand < 0 || strand >= static_cast<int>(summands.size()) || summands[static_cast<std::size_t>(strand)].is_zero()) {
            rep.passed = false;
            rep.failures.push_back("Tor_" + std::to_string(k.first) + " in degree " + std::to_string(k.second) +
                                   " lies off the strands of the summands");
        }
    }
    return rep;
}

}  // namespace bggwb
