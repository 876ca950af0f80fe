#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bggwb/bgg.hpp"
#include "bggwb/filtered.hpp"

namespace bggwb {

/// E_r^{p,q} of the m-adic spectral sequence, n = p + q. Classes are stored
/// as leading parts in gr^p K^n = k^{r_n} (x) Sym^p W.
struct PageEntry {
    int p = 0;
    int n = 0;
    Matrix basis;  // columns span a complement of Bimg_r inside Zimg_r
    std::size_t dim() const { return basis.cols(); }
};

struct PageTable {
    int r = 1;
    int p_max = 0;
    int n_lo = 0, n_hi = 0;
    int precision = 0;
    std::map<std::pair<int, int>, PageEntry> entries;    // (p, n)
    std::map<std::pair<int, int>, Matrix> differentials;  // source (p, n) -> matrix into (p + r, n + 1)

    std::size_t dim(int p, int n) const;
    const Matrix* differential(int p, int n) const;
    bool differentials_vanish() const;

    /// Rows n, columns p.
    std::string to_text() const;
    /// r,p,q,dim rows.
    std::string to_csv() const;
};

/// Requires p_max + r <= N (PrecisionError names the required N).
PageTable compute_page(const FilteredFreeComplex& k, int r, int p_max);

struct DegenerationVerdict {
    bool degenerates = true;
    int r = 1;       // pages r..r_stop checked
    int r_stop = 0;
    int p_max = 0;
    /// First nonzero differential d_s from (p, n), with its rank.
    struct Offender {
        int s = 0, p = 0, n = 0;
        std::size_t rank = 0;
    };
    std::optional<Offender> offender;

    std::string to_string() const;
};

/// d_s = 0 for every s in [r, p_max] on every source/target pair inside the
/// window p in [0, p_max]. Requires p_max <= N.
DegenerationVerdict degenerates_at(const FilteredFreeComplex& k, int r, int p_max);

struct CriterionWitness {
    int n = 0;  // dx lives in K^n
    int k = 0;  // dx lies in F^k
    std::vector<Polynomial> x;
    std::vector<Polynomial> dx;
    Vec certificate;  // functional on gr^k K^n killing the leading parts of d(F^{k-r}) but not dx
};

struct CriterionVerdict {
    bool holds = true;
    int r = 1;
    int k_max = 0;
    std::optional<CriterionWitness> witness;
    /// Set when the x = x' + x'' split certified the pass for homogeneous differentials.
    bool homogeneous_split_checked = false;

    std::string to_string() const;
};

/// F^k K^n ∩ d(K^{n-1}) ⊆ d(F^{k-r} K^{n-1}) for all n and 0 <= k <= k_max
/// (k_max <= N), tested on leading parts.
CriterionVerdict check_degeneration_criterion(const FilteredFreeComplex& k, int r, int k_max);

/// Totalization of (E_1, d_1) along p, and the check that it is isomorphic to
/// L(induce_emodule(K, n_hi)) through polynomial degree p_max.
struct E1Bridge {
    LinearSComplex total;     // from the computed E_1 page
    LinearSComplex expected;  // build_bgg(induce_emodule(K, n_hi))
    bool isomorphic = false;
    int p_max = 0;
    std::vector<std::string> failures;

    std::string to_string() const;
};

/// Requires p_max + 1 <= N.
E1Bridge e1_total_complex(const FilteredFreeComplex& k, int p_max);

struct VanishingPrediction {
    int truncation = 0;
    std::vector<int> predicted;           // spots n with H^n(K) = 0 certified through T
    std::map<int, bool> direct_check;     // truncated H^n(K) = 0 confirmed directly
    std::string to_string() const;
    bool consistent() const;
};

/// Default truncation: N - max(1, max entry degree).
int default_vanishing_truncation(const FilteredFreeComplex& k);
VanishingPrediction predict_vanishing(const FilteredFreeComplex& k, int truncation);

/// Maps f^n : K^n -> L^n of complexes over the same R.
struct ChainMap {
    FilteredFreeComplex source, target;
    std::map<int, PolyMatrix> maps;

    PolyMatrix at(int n) const;
};

/// s^n : K^n -> L^{n-1}; the homotopy convention is h = d s + s d.
struct Homotopy {
    FilteredFreeComplex source, target;
    std::map<int, PolyMatrix> maps;

    PolyMatrix at(int n) const;
};

/// Throws PreconditionError("not a chain map ...") when d f != f d mod m^{N+1}.
void require_chain_map(const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const FilteredFreeComplex& k);
/// d s + s d.
ChainMap homotopy_boundary(const Homotopy& s);

/// Induced maps E_r^{p,n}(K) -> E_r^{p,n}(L) for p in [0, p_max], keyed (p, n).
std::map<std::pair<int, int>, Matrix> map_on_pages(const ChainMap& f, int r, int p_max);

struct NullHomotopyVerdict {
    bool identity_holds = false;  // f = d s + s d mod m^{N+1}
    bool pages_zero = false;      // induced maps vanish on pages 1..r_max
    int r_max = 0;
    int p_max = 0;
    std::vector<std::string> notes;
};

NullHomotopyVerdict is_null_homotopic_action(const ChainMap& f, const Homotopy& s, int r_max, int p_max);

/// Dimensions of the pages of the sum against the sum of the pages.
struct AdditivityReport {
    bool additive = true;
    std::vector<std::string> mismatches;
};

AdditivityReport check_page_additivity(const std::vector<FilteredFreeComplex>& parts, int r, int p_max);

}  // namespace bggwb
