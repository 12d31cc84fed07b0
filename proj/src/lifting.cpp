#include "bnlab/lifting.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace bnlab {

i64 lift_degree_cap(i64 g, const LiftWindow& w) {
    if (w.e_cap) return *w.e_cap;
    return w.wide ? 2 * g - 4 : (3 * g - 3) / 2;
}

std::vector<LiftCandidate> potential_dm_lifts(i64 g, i64 r, i64 d, const LiftWindow& w) {
    if (rho(g, r, d) >= 0) throw Error(ErrorKind::NotSpecial, "rho(" + std::to_string(g) + "," + std::to_string(r) + "," +
                                                                  std::to_string(d) + ") >= 0");
    i64 lo = w.gamma_low.value_or(general_clifford(g));
    i64 hi = clifford_gamma(r, d);
    i64 cap = lift_degree_cap(g, w);
    std::vector<LiftCandidate> out;
    for (i64 e = d; e <= cap; ++e) {
        for (i64 s = 1; 2 * s <= e; ++s) {
            i64 gam = e - 2 * s;
            if (gam < lo || gam > hi) continue;
            if (s > (g - 1 - gam) / 2 || g - 1 - gam < 0) continue;
            out.push_back({s, e, gram_of(g, s, e)});
        }
    }
    return out;
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::L1: return "L1";
        case Mode::L2: return "L2";
        case Mode::L3: return "L3";
    }
    return "?";
}

const char* strength_name(Strength s) { return s == Strength::DiscRatio ? "DiscRatio" : "ExactH"; }

bool ConditionReport::holds_excluding_isomorphic() const {
    return std::all_of(hits.begin(), hits.end(), [](const ConditionHit& h) { return h.isomorphic; });
}

namespace {

std::optional<ConditionHit> test_candidate(i64 g, const GramLattice2& host, const LinearSeries& cand, Strength strength) {
    GramLattice2 sub = gram_of(g, cand.r, cand.d);
    ConditionHit hit;
    hit.candidate = cand;
    i64 ds = sub.disc(), dh = host.disc();
    if (ds < 0 && ds % dh == 0) hit.disc_ratio = ds / dh;
    hit.isomorphic = hit.disc_ratio == 1;
    if (strength == Strength::DiscRatio) {
        if (!disc_ratio_containment_possible(sub, host)) return std::nullopt;
        return hit;
    }
    auto emb = embeds_preserving_H(host, cand.r, cand.d);
    if (!emb) return std::nullopt;
    hit.witness = emb->v;
    return hit;
}

}  // namespace

ConditionReport check_condition(Mode mode, i64 g, const LinearSeries& fixed, const std::optional<LinearSeries>& other,
                                Strength strength, const ConditionOptions& opts) {
    if (fixed.g != g || !is_expected_maximal(fixed))
        throw Error(ErrorKind::NotExpectedMaximal, describe(fixed) + " is not expected maximal");
    if (mode == Mode::L3 && (!other || other->g != g || !is_expected_maximal(*other)))
        throw Error(ErrorKind::NotExpectedMaximal, "L3 needs a second expected maximal series");
    ConditionReport rep;
    rep.mode = mode;
    rep.strength = strength;
    rep.fixed = fixed;
    rep.other = other;
    GramLattice2 host = gram_of(g, fixed.r, fixed.d);
    auto consider = [&](const LinearSeries& cand) {
        if (cand == fixed) return;
        ++rep.candidates_checked;
        if (auto h = test_candidate(g, host, cand, strength)) rep.hits.push_back(*h);
    };
    i64 lo = opts.gamma_low.value_or((g + 1) / 2);
    switch (mode) {
        case Mode::L1:
            for (const auto& s : expected_maximal_loci(g)) consider(s);
            break;
        case Mode::L2: {
            i64 hi = l2_gamma_upper(g);
            for (i64 gam = lo; gam <= hi; ++gam)
                for (i64 r = 1; r <= (g - 1 - gam) / 2; ++r) consider({g, r, gam + 2 * r});
            break;
        }
        case Mode::L3: {
            i64 hi = clifford_gamma(other->r, other->d);
            for (i64 gam = lo; gam <= hi; ++gam)
                for (i64 s = 1; s <= (g - 1 - gam) / 2; ++s) consider({g, s, gam + 2 * s});
            break;
        }
    }
    return rep;
}

std::vector<L2GenusResult> scan_l2(i64 g_from, i64 g_to, Strength strength, int jobs, const ConditionOptions& opts) {
    if (g_from < 2 || g_from > g_to) throw Error(ErrorKind::BadParameters, "need 2 <= from <= to");
    std::size_t n = static_cast<std::size_t>(g_to - g_from + 1);
    std::vector<L2GenusResult> per(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < n; i = next++) {
                i64 g = g_from + static_cast<i64>(i);
                per[i].g = g;
                for (const auto& fixed : expected_maximal_loci(g)) {
                    auto rep = check_condition(Mode::L2, g, fixed, std::nullopt, strength, opts);
                    for (auto& h : rep.hits) per[i].failures.emplace_back(fixed, h);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    };
    int k = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < k; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::vector<L2GenusResult> out;
    for (auto& r : per)
        if (!r.failures.empty()) out.push_back(std::move(r));
    return out;
}

const char* filtration_name(FiltrationType f) {
    switch (f) {
        case FiltrationType::F14: return "F14";
        case FiltrationType::F24: return "F24";
        case FiltrationType::F34: return "F34";
        case FiltrationType::F124: return "F124";
        case FiltrationType::F134: return "F134";
        case FiltrationType::F234: return "F234";
        case FiltrationType::F1234: return "F1234";
    }
    return "?";
}

const char* filtration_flag(FiltrationType f) {
    switch (f) {
        case FiltrationType::F14: return "1<4";
        case FiltrationType::F24: return "2<4";
        case FiltrationType::F34: return "3<4";
        case FiltrationType::F124: return "1<2<4";
        case FiltrationType::F134: return "1<3<4";
        case FiltrationType::F234: return "2<3<4";
        case FiltrationType::F1234: return "1<2<3<4";
    }
    return "?";
}

std::optional<FiltrationType> parse_filtration(const std::string& s) {
    for (auto f : kAllFiltrations)
        if (s == filtration_name(f) || s == filtration_flag(f)) return f;
    return std::nullopt;
}

std::optional<Rat> filtration_bound(FiltrationType f, i64 g, i64 gamma, i64 m, i64 mu) {
    const Rat G(gamma);
    switch (f) {
        case FiltrationType::F14: return std::nullopt;
        case FiltrationType::F24: return G / 2 + 4 + Rat(g - 1, 2);
        case FiltrationType::F34: return Rat(2, 3) * (G + 2) + Rat(g, 2) + Rat(13, 6);
        case FiltrationType::F124: return std::min(Rat(5, 4) * G + Rat(m, 2) + 5, 5 + Rat(3, 2) * G);
        case FiltrationType::F134: return Rat(3, 2) * G + 5;
        case FiltrationType::F234: return 5 + Rat(3, 2) * G;
        case FiltrationType::F1234: return Rat(5, 4) * G + Rat(mu, 2) + Rat(m, 2) + Rat(9, 2);
    }
    return std::nullopt;
}

std::vector<FiltrationType> admissible_filtrations(i64 g, i64 d, i64 gamma, i64 m, i64 mu) {
    std::vector<FiltrationType> out;
    for (auto f : kAllFiltrations) {
        auto b = filtration_bound(f, g, gamma, m, mu);
        if (!b || *b <= Rat(d)) out.push_back(f);
    }
    return out;
}

Threshold dm_threshold(i64 g, i64 gamma, i64 m, i64 mu) {
    const Rat G(gamma);
    Rat t = Rat(5, 4) * G + Rat(mu, 2) + Rat(m, 2) + Rat(9, 2);
    t = std::min(t, Rat(5, 4) * G + Rat(m, 2) + 5);
    t = std::min(t, Rat(3, 2) * G + 5);
    t = std::min(t, G / 2 + Rat(g - 1, 2) + 4);
    return {t, !(g == 2 || g == 3 || g == 4 || g == 8)};
}

Rat strategy_threshold(i64 g, i64 r) {
    if (r < 1 || g < 2) throw Error(ErrorKind::BadParameters, "need r >= 1 and g >= 2");
    return Rat(g * (r - 1), r) + Rat(2 * g - 2, r * (r + 1)) + Rat(r) - Rat(1, r);
}

i64 strategy_gamma_bound(i64 r, i64 d) { return d - r - 3; }

LMInvariants lm_invariants(i64 g, i64 r, i64 d) {
    LMInvariants lm;
    lm.rank = r + 1;
    lm.c2 = d;
    lm.h0 = g - (d - 2 * r) + 1;
    lm.chi_f_tensor_e = 2 * (1 - rho(g, r, d));
    lm.clifford = d - 2 * r;
    return lm;
}

QuotientInvariants quotient_invariants(i64 g, i64 r, i64 d, const LatticeVector& N, const GramLattice2& L) {
    (void)g;
    QuotientInvariants q;
    q.c1 = {1 - N.a, -N.b};
    Int n2 = norm(L, N), hn = pair_H(L, N);
    q.c2 = Int(d) + n2 - hn;
    q.clifford = Int(clifford_gamma(r, d)) + n2 - hn + 2;
    return q;
}

Int mukai_pairing(const GramLattice2& L, const MukaiVector& v, const MukaiVector& w) {
    return evaluate(L, v.c1, w.c1) - Int(v.rank) * w.s - v.s * Int(w.rank);
}

Int moduli_dim(const GramLattice2& L, const MukaiVector& v) { return 2 + mukai_pairing(L, v, v); }

Rat stable_c2_lower_bound(i64 rank, i64 c1sq) {
    if (rank < 1) throw Error(ErrorKind::BadParameters, "rank must be positive");
    return Rat((rank - 1) * c1sq + 2 * rank * rank - 2, 2 * rank);
}

KnutsenCounterexample knutsen_counterexample(i64 a, i64 b) {
    if (a % 2 != 0 || b % 2 != 0 || b < 4 || a < b)
        throw Error(ErrorKind::BadParameters, "need a, b even with a >= b >= 4");
    KnutsenCounterexample k;
    k.a = a;
    k.b = b;
    k.lattice = gram_of(a, b, a + b);
    k.curve_class = {1, 1};
    k.curve_square = static_cast<i64>(norm(k.lattice, k.curve_class));
    k.genus = k.curve_square / 2 + 1;
    k.series = {k.genus, 3, (a + 2) / 2 + (b + 2) / 2 + a + b};
    k.rho = rho(k.series.g, k.series.r, k.series.d);
    if (k.genus != 2 * (a + b) - 1 || k.rho != -1) throw Error(ErrorKind::BadParameters, "unexpected numerics");
    i64 cl = static_cast<i64>(evaluate(k.lattice, k.curve_class, {0, 1}));
    k.curve_lattice = {k.curve_square, cl, k.lattice.l2};
    if (k.lattice.disc() >= 0) throw Error(ErrorKind::BadParameters, "lattice is not hyperbolic");
    k.no_minus_two = !represents(k.lattice, -2).has_value();
    k.no_isotropic = !isotropic_exists(k.lattice);
    if (!k.no_minus_two || !k.no_isotropic)
        throw Error(ErrorKind::BadParameters, "lattice has (-2) or isotropic classes");
    return k;
}

const char* verdict_name(Verdict v) {
    return v == Verdict::NonContainmentShown ? "NonContainmentShown" : "Inconclusive";
}

std::string ProofTrace::claim() const {
    auto loc = [](const LinearSeries& s) {
        return "M^" + std::to_string(s.r) + "_{" + std::to_string(s.g) + "," + std::to_string(s.d) + "}";
    };
    return loc(A) + " not in " + loc(B);
}

}  // namespace bnlab
