#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnlab/core_bn.hpp"
#include "bnlab/lattice.hpp"

namespace bnlab {

// ---- Donagi-Morrison lift candidates ----

struct LiftWindow {
    std::optional<i64> gamma_low;  // default floor((g-1)/2)
    std::optional<i64> e_cap;      // default floor((3g-3)/2), or 2g-4 when wide
    bool wide = false;
};

struct LiftCandidate {
    i64 s = 0;
    i64 e = 0;
    GramLattice2 lattice;
};

i64 lift_degree_cap(i64 g, const LiftWindow& w);
std::vector<LiftCandidate> potential_dm_lifts(i64 g, i64 r, i64 d, const LiftWindow& w = {});

// ---- L1 / L2 / L3 ----

enum class Mode { L1, L2, L3 };
enum class Strength { DiscRatio, ExactH };

const char* mode_name(Mode m);
const char* strength_name(Strength s);

struct ConditionOptions {
    // lower end of the L2/L3 Clifford window; default floor((g+1)/2)
    std::optional<i64> gamma_low;
};

struct ConditionHit {
    LinearSeries candidate;
    i64 disc_ratio = 0;  // disc(candidate) / disc(fixed) when integral, else 0
    bool isomorphic = false;  // ratio 1
    std::optional<LatticeVector> witness;  // ExactH only
};

struct ConditionReport {
    Mode mode = Mode::L1;
    Strength strength = Strength::DiscRatio;
    LinearSeries fixed;
    std::optional<LinearSeries> other;
    i64 candidates_checked = 0;
    std::vector<ConditionHit> hits;
    bool holds() const { return hits.empty(); }
    // reading where a lattice isomorphic to the fixed one does not count as contained
    bool holds_excluding_isomorphic() const;
};

ConditionReport check_condition(Mode mode, i64 g, const LinearSeries& fixed, const std::optional<LinearSeries>& other,
                                Strength strength, const ConditionOptions& opts = {});

struct L2GenusResult {
    i64 g = 0;
    std::vector<std::pair<LinearSeries, ConditionHit>> failures;
};

std::vector<L2GenusResult> scan_l2(i64 g_from, i64 g_to, Strength strength, int jobs = 1,
                                   const ConditionOptions& opts = {});

// ---- terminal filtrations and thresholds ----

enum class FiltrationType { F14, F24, F34, F124, F134, F234, F1234 };
inline constexpr FiltrationType kAllFiltrations[] = {FiltrationType::F14,  FiltrationType::F24,  FiltrationType::F34,
                                                     FiltrationType::F124, FiltrationType::F134, FiltrationType::F234,
                                                     FiltrationType::F1234};
const char* filtration_name(FiltrationType f);
const char* filtration_flag(FiltrationType f);
std::optional<FiltrationType> parse_filtration(const std::string& s);

std::optional<Rat> filtration_bound(FiltrationType f, i64 g, i64 gamma, i64 m, i64 mu);
std::vector<FiltrationType> admissible_filtrations(i64 g, i64 d, i64 gamma, i64 m, i64 mu);

struct Threshold {
    Rat value;
    bool applicable = true;  // the rank-3 lifting theorem excludes g in {2,3,4,8}
};
Threshold dm_threshold(i64 g, i64 gamma, i64 m, i64 mu);
Rat strategy_threshold(i64 g, i64 r);
// Clifford index bound d - r - 3 for the lift H - N produced by a destabilizing line bundle N.
i64 strategy_gamma_bound(i64 r, i64 d);

// ---- Lazarsfeld-Mukai bundles ----

struct LMInvariants {
    i64 rank = 0;
    LatticeVector c1{1, 0};
    i64 c2 = 0;
    i64 h0 = 0;
    i64 chi_f_tensor_e = 0;
    i64 clifford = 0;
};
LMInvariants lm_invariants(i64 g, i64 r, i64 d);

struct QuotientInvariants {
    LatticeVector c1;
    Int c2 = 0;
    Int clifford = 0;
};
QuotientInvariants quotient_invariants(i64 g, i64 r, i64 d, const LatticeVector& N, const GramLattice2& L);

struct MukaiVector {
    i64 rank = 0;
    LatticeVector c1;
    Int s = 0;  // chi - rank
};
Int mukai_pairing(const GramLattice2& L, const MukaiVector& v, const MukaiVector& w);
Int moduli_dim(const GramLattice2& L, const MukaiVector& v);
Rat stable_c2_lower_bound(i64 rank, i64 c1sq);

struct KnutsenCounterexample {
    i64 a = 0, b = 0;
    GramLattice2 lattice;       // basis (H, L)
    LatticeVector curve_class;  // H + L
    i64 curve_square = 0;
    i64 genus = 0;
    LinearSeries series;
    i64 rho = 0;
    GramLattice2 curve_lattice;  // basis (H + L, L)
    bool no_minus_two = false;
    bool no_isotropic = false;
};
KnutsenCounterexample knutsen_counterexample(i64 a, i64 b);

// ---- per-genus non-containment ----

enum class Verdict { NonContainmentShown, Inconclusive };
const char* verdict_name(Verdict v);

struct ProofStep {
    std::string rule;
    std::string anchor;
    std::string evidence;
    bool conclusive = false;
};

struct ProofTrace {
    i64 g = 0;
    LinearSeries A, B;  // claim: M(A) is not contained in M(B)
    Verdict verdict = Verdict::Inconclusive;
    std::vector<ProofStep> steps;
    std::string claim() const;
};

struct DistinguishOptions {
    i64 nef_cap = 10000;
    bool wide_lift_cap = false;
};

ProofTrace distinguish_pair(i64 g, const LinearSeries& A, const LinearSeries& B, const DistinguishOptions& opts = {});

}  // namespace bnlab
