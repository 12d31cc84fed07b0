#include <algorithm>
#include <sstream>

#include "bnlab/lifting.hpp"

namespace bnlab {

namespace {

std::string series_str(i64 r, i64 d) { return "g^" + std::to_string(r) + "_" + std::to_string(d); }

// What the very general K3 surface with Picard lattice Lambda(A) says about a curve C in |H|.
struct SurfaceView {
    GramLattice2 L;
    SurfaceInvariants si;
    bool restricts = false;  // L|C is a g^r_d
    std::string restricts_evidence;
    bool low_excluded = false;  // no BN special lattice of Clifford index <= floor((g-1)/2) other than Lambda(A) embeds
    std::string low_evidence;
    std::optional<i64> gamma_C;
    std::optional<i64> gonality_lb;
    std::string gonality_reason;
};

SurfaceView view_surface(i64 g, const LinearSeries& A, const DistinguishOptions& opts) {
    SurfaceView v;
    v.L = gram_of(g, A.r, A.d);
    v.si = surface_invariants(v.L, {opts.nef_cap});
    if (A.r >= 2 && A.d >= 1 && A.d <= g - 1) {
        if (!v.si.minus_two_exists) {
            v.restricts = true;
            v.restricts_evidence = "no (-2)-classes, so L and H-L are base point free";
        } else {
            auto nl = nef_violation(v.L, {0, 1}, opts.nef_cap);
            auto nhl = nef_violation(v.L, {1, -1}, opts.nef_cap);
            bool nef_l = nl.complete && !nl.violation;
            bool nef_hl = nhl.complete && !nhl.violation;
            v.restricts = nef_l && nef_hl && !v.si.has_isotropic;
            v.restricts_evidence = std::string("(-2)-classes exist; L nef=") + (nef_l ? "yes" : "no/unknown") +
                                   ", H-L nef=" + (nef_hl ? "yes" : "no/unknown") +
                                   ", elliptic classes=" + (v.si.has_isotropic ? "yes" : "no");
        }
    } else {
        v.restricts_evidence = "needs r >= 2 and 0 < d <= g-1";
    }

    i64 gen = general_clifford(g);
    std::string blocker;
    for (i64 e = 2; e <= g - 1 && blocker.empty(); ++e) {
        for (i64 s = 1; 2 * s <= e; ++s) {
            if (rho(g, s, e) >= 0 || clifford_gamma(s, e) > gen) continue;
            if (s == A.r && e == A.d) continue;
            if (embeds_preserving_H(v.L, s, e)) {
                blocker = series_str(s, e);
                break;
            }
        }
    }
    v.low_excluded = blocker.empty();
    v.low_evidence = v.low_excluded ? "no special lattice of Clifford index <= " + std::to_string(gen) + " embeds"
                                    : "lattice of " + blocker + " embeds";
    if (!v.restricts || !v.low_excluded) return v;

    i64 gA = clifford_gamma(A.r, A.d);
    if (gA > gen && rho(g, A.r, A.d) < 0) {
        v.gamma_C = gen;
        v.gonality_lb = (g + 3) / 2;
        v.gonality_reason = "C has general Clifford index and maximal gonality " + std::to_string((g + 3) / 2);
    } else {
        v.gamma_C = gA;
        v.gonality_lb = gA + 2;
        v.gonality_reason = "C has Clifford index " + std::to_string(gA) + ", gonality >= " + std::to_string(gA + 2);
        if (A.r == 2 && (A.d - 1) * (A.d - 2) / 2 == g) {
            // the g^2_d maps C birationally onto a smooth plane curve
            v.gonality_lb = A.d - 1;
            v.gonality_reason = "C is a smooth plane curve of degree " + std::to_string(A.d) + ", gonality " +
                                std::to_string(A.d - 1);
        }
    }
    return v;
}

// Saint-Donat: a curve D on a K3 surface is hyperelliptic only if some elliptic E has E.D = 2
// or D = 2B with B^2 = 2.
std::string hyperelliptic_sources(const GramLattice2& L, const LatticeVector& D) {
    for (const auto& e : isotropic_directions(L)) {
        Int ed = evaluate(L, e, D);
        if (ed == 1 || ed == 2) return "elliptic class " + describe(e) + " meets it in " + ed.str();
    }
    if (D.a % 2 == 0 && D.b % 2 == 0) {
        LatticeVector B{D.a / 2, D.b / 2};
        if (norm(L, B) == 2) return "it is twice the genus-2 class " + describe(B);
    }
    return "not hyperelliptic";
}

struct LiftCheck {
    bool all_excluded = true;
    std::string evidence;
};

// Excludes every potential lift of B from Pic(S) = L, allowing the residual test for a lift of L's own type.
LiftCheck exclude_lifts(i64 g, const LinearSeries& A, i64 r, i64 d, const GramLattice2& L,
                        bool wide, bool residual_allowed) {
    LiftCheck out;
    std::ostringstream ev;
    LiftWindow w;
    w.gamma_low = 0;
    w.wide = wide;
    auto cands = potential_dm_lifts(g, r, d, w);
    i64 lattice_excluded = 0;
    for (const auto& c : cands) {
        auto emb = embeds_preserving_H(L, c.s, c.e);
        if (!emb) {
            ++lattice_excluded;
            continue;
        }
        if (residual_allowed && c.s == A.r && c.e == A.d) {
            LatticeVector N{1 - emb->v.a, -emb->v.b};
            auto q = quotient_invariants(g, r, d, N, L);
            auto hyp = hyperelliptic_sources(L, q.c1);
            ev << "lift " << series_str(c.s, c.e) << " embeds as " << describe(emb->v) << "; E/N Clifford index "
               << q.clifford.str() << ", det(E/N) = " << describe(q.c1) << ", " << hyp << "; ";
            if (q.clifford == 0 && hyp == "not hyperelliptic") continue;
        } else {
            ev << "lift " << series_str(c.s, c.e) << " embeds as " << describe(emb->v) << "; ";
        }
        out.all_excluded = false;
    }
    ev << lattice_excluded << " of " << cands.size() << " potential lifts have no H-preserving embedding";
    out.evidence = ev.str();
    return out;
}

}  // namespace

ProofTrace distinguish_pair(i64 g, const LinearSeries& A, const LinearSeries& B, const DistinguishOptions& opts) {
    for (const auto* s : {&A, &B})
        if (s->g != g || !is_expected_maximal(*s))
            throw Error(ErrorKind::NotExpectedMaximal, describe(*s) + " is not expected maximal");
    if (A == B) throw Error(ErrorKind::BadParameters, "distinguish_pair needs two distinct loci");

    ProofTrace t;
    t.g = g;
    t.A = A;
    t.B = B;
    auto finish = [&](Verdict v) {
        t.verdict = v;
        return t;
    };
    auto step = [&](std::string rule, std::string anchor, std::string evidence, bool conclusive) {
        t.steps.push_back({std::move(rule), std::move(anchor), std::move(evidence), conclusive});
        return conclusive;
    };

    // (1) codimension
    i64 rA = rho(g, A.r, A.d), rB = rho(g, B.r, B.d);
    i64 codimA = -rA;
    i64 lowB = std::min<i64>(-rB, 3);
    {
        std::ostringstream ev;
        ev << "codim(A) " << (rA >= -3 ? "= " : "<= ") << codimA << ", codim(B) >= " << lowB;
        if (step("codimension", "components of M^r_{g,d} have codimension -rho for -3 <= rho <= -1, at most -rho always",
                 ev.str(), codimA < lowB))
            return finish(Verdict::NonContainmentShown);
    }

    // (2) gonality, A a pencil locus
    if (A.r == 1 && B.r >= 2) {
        i64 rk = rho_pflueger(g, B.r, B.d, A.d);
        std::ostringstream ev;
        ev << "rho_k(" << g << "," << B.r << "," << B.d << "," << A.d << ") = " << rk;
        if (step("gonality", "general k-gonal curves have dim W^r_d = rho_k", ev.str(), rk < 0))
            return finish(Verdict::NonContainmentShown);
    }
    if (A.r == 1) {
        step("lift-exclusion", "lattice-polarized K3 surfaces", "A is a pencil; no surface model is used", false);
        return finish(Verdict::Inconclusive);
    }

    SurfaceView sv = view_surface(g, A, opts);
    step("restriction", "L|C is a g^r_d when L and H-L are base point free", sv.restricts_evidence, false);
    step("clifford-index", "special lattices of small Clifford index are excluded from Pic(S)", sv.low_evidence, false);

    // (2) gonality, B a pencil locus
    if (B.r == 1) {
        bool ok = sv.gonality_lb && *sv.gonality_lb > B.d;
        std::string ev = sv.gonality_lb ? sv.gonality_reason + "; B needs a g^1_" + std::to_string(B.d)
                                        : "Clifford index of C not determined";
        if (step("gonality", "Clifford index and gonality of curves on the very general lattice-polarized K3", ev, ok))
            return finish(Verdict::NonContainmentShown);
    }

    // (3) lift exclusion
    if (!sv.restricts || !sv.gamma_C) {
        step("lift-exclusion", "Donagi-Morrison lifts", "surface model not certified", false);
        return finish(Verdict::Inconclusive);
    }
    i64 m = sv.si.m.value_or(0);
    i64 mu = sv.si.mu;
    i64 gC = *sv.gamma_C;
    switch (B.r) {
        case 1:
            step("lifting", "pencils lift (Donagi-Morrison for r = 1)", "rank 1", false);
            break;
        case 2:
            step("lifting", "Lelli-Chiesa's lifting of rank 2 linear systems (assumed)", "rank 2", false);
            break;
        case 3: {
            Threshold th = dm_threshold(g, gC, m, mu);
            std::ostringstream ev;
            ev << "d = " << B.d << ", threshold(g=" << g << ", gamma=" << gC << ", m=" << m << ", mu=" << mu
               << ") = " << to_string(th.value) << (th.applicable ? "" : " (theorem not applicable)");
            bool below = th.applicable && Rat(B.d) < th.value;
            step("lifting", "rank-3 lifting threshold", ev.str(), false);
            if (!below) {
                auto adm = admissible_filtrations(g, B.d, gC, m, mu);
                bool only_124 = std::all_of(adm.begin(), adm.end(), [](FiltrationType f) {
                    return f == FiltrationType::F14 || f == FiltrationType::F124;
                });
                std::ostringstream fe;
                fe << "admissible:";
                for (auto f : adm) fe << ' ' << filtration_name(f);
                bool small_excluded = true;
                if (only_124 && !sv.si.has_isotropic) {
                    const std::pair<i64, i64> smalls[] = {{1, 2}, {1, 3}, {2, 5}, {2, 6}};
                    for (auto [sr, sd] : smalls) {
                        if (rho(g, sr, sd) >= 0) continue;
                        auto lc = exclude_lifts(g, A, sr, sd, sv.L, opts.wide_lift_cap, false);
                        if (!lc.all_excluded) {
                            small_excluded = false;
                            fe << "; lift of " << series_str(sr, sd) << " not excluded";
                        }
                    }
                }
                bool fallback = th.applicable && only_124 && !sv.si.has_isotropic && small_excluded;
                if (fallback) fe << "; 1<2<4 excluded (no hyperelliptic, trigonal, plane quintic or sextic D)";
                step("filtration", "terminal filtrations of the rank-4 LM bundle", fe.str(), false);
                if (!fallback) return finish(Verdict::Inconclusive);
            }
            break;
        }
        default:
            step("lifting", "no lifting theorem for rank >= 4", "rank " + std::to_string(B.r), false);
            return finish(Verdict::Inconclusive);
    }

    auto lc = exclude_lifts(g, A, B.r, B.d, sv.L, opts.wide_lift_cap, true);
    if (step("lift-exclusion", "a Donagi-Morrison lift of B must lie in Pic(S)", lc.evidence, lc.all_excluded))
        return finish(Verdict::NonContainmentShown);
    return finish(Verdict::Inconclusive);
}

}  // namespace bnlab
