#include <algorithm>

#include <doctest.h>

#include "bnlab/lifting.hpp"

using namespace bnlab;

namespace {

bool has_lift(const std::vector<LiftCandidate>& v, i64 s, i64 e) {
    return std::any_of(v.begin(), v.end(), [&](const LiftCandidate& c) { return c.s == s && c.e == e; });
}

}  // namespace

TEST_CASE("potential Donagi-Morrison lifts") {
    CHECK(has_lift(potential_dm_lifts(56, 3, 44), 6, 49));
    CHECK(has_lift(potential_dm_lifts(89, 4, 75), 10, 85));
    LiftWindow tight{clifford_gamma(3, 44), 44, false};
    auto only = potential_dm_lifts(56, 3, 44, tight);
    REQUIRE(only.size() == 1);
    CHECK(only[0].s == 3);
    CHECK(only[0].e == 44);
    CHECK_THROWS_AS(potential_dm_lifts(10, 1, 8), Error);
    CHECK(lift_degree_cap(20, {}) == 28);
    CHECK(lift_degree_cap(20, {std::nullopt, std::nullopt, true}) == 36);

    for (i64 g = 5; g <= 40; ++g)
        for (const auto& s : expected_maximal_loci(g))
            for (const auto& c : potential_dm_lifts(g, s.r, s.d)) {
                i64 gam = c.e - 2 * c.s;
                CHECK(gam <= clifford_gamma(s.r, s.d));
                CHECK(c.e >= s.d);
                CHECK(2 * c.s <= c.e);
                CHECK(c.s <= (g - 1 - gam) / 2);
                CHECK(c.lattice == gram_of(g, c.s, c.e));
            }
}

TEST_CASE("L-conditions") {
    auto l3 = check_condition(Mode::L3, 56, {56, 2, 39}, LinearSeries{56, 3, 44}, Strength::DiscRatio);
    CHECK_FALSE(l3.holds());
    bool found = std::any_of(l3.hits.begin(), l3.hits.end(),
                             [](const ConditionHit& h) { return h.candidate == LinearSeries{56, 6, 49}; });
    CHECK(found);

    for (const auto& s : expected_maximal_loci(14))
        CHECK(check_condition(Mode::L2, 14, s, std::nullopt, Strength::DiscRatio).holds());

    auto exact = check_condition(Mode::L3, 56, {56, 2, 39}, LinearSeries{56, 3, 44}, Strength::ExactH);
    CHECK(std::none_of(exact.hits.begin(), exact.hits.end(),
                       [](const ConditionHit& h) { return h.candidate == LinearSeries{56, 6, 49}; }));
    for (const auto& h : exact.hits) CHECK(h.witness);

    CHECK_THROWS_AS(check_condition(Mode::L1, 20, {20, 2, 10}, std::nullopt, Strength::DiscRatio), Error);
    CHECK_THROWS_AS(check_condition(Mode::L3, 20, {20, 2, 15}, std::nullopt, Strength::DiscRatio), Error);
}

TEST_CASE("L1 under both readings") {
    // the genus-21 pencil and g^4_19 lattices are isomorphic (both discs -121)
    auto r = check_condition(Mode::L1, 21, {21, 1, 11}, std::nullopt, Strength::DiscRatio);
    CHECK(r.holds_excluding_isomorphic());
    for (i64 g = 3; g <= 100; ++g)
        for (const auto& s : expected_maximal_loci(g)) {
            auto rep = check_condition(Mode::L1, g, s, std::nullopt, Strength::DiscRatio);
            REQUIRE(rep.holds_excluding_isomorphic());
        }
}

TEST_CASE("L2 scans") {
    CHECK(scan_l2(56, 56, Strength::ExactH).empty());
    auto serial = scan_l2(2, 120, Strength::DiscRatio, 1);
    auto parallel = scan_l2(2, 120, Strength::DiscRatio, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].g == parallel[i].g);
        CHECK(serial[i].failures.size() == parallel[i].failures.size());
    }
    CHECK(std::is_sorted(serial.begin(), serial.end(),
                         [](const L2GenusResult& a, const L2GenusResult& b) { return a.g < b.g; }));
    CHECK_THROWS_AS(scan_l2(10, 5, Strength::DiscRatio), Error);
}

TEST_CASE("filtration bounds") {
    CHECK(*filtration_bound(FiltrationType::F24, 18, 8, 0, 0) == Rat(33, 2));
    CHECK_FALSE(filtration_bound(FiltrationType::F14, 18, 8, 0, 0));
    for (i64 gam = 0; gam < 20; ++gam)
        CHECK(*filtration_bound(FiltrationType::F1234, 30, gam, 2, 2) == Rat(5, 4) * gam + Rat(13, 2));
    CHECK(*filtration_bound(FiltrationType::F34, 18, 8, 0, 0) == Rat(2, 3) * 10 + 9 + Rat(13, 6));
    CHECK(*filtration_bound(FiltrationType::F134, 18, 8, 0, 0) == 17);
    CHECK(*filtration_bound(FiltrationType::F234, 18, 8, 0, 0) == 17);
    CHECK(*filtration_bound(FiltrationType::F124, 18, 8, 2, 0) == std::min(Rat(10 + 1 + 5), Rat(5 + 12)));

    auto low = admissible_filtrations(18, 5, 8, 2, 2);
    CHECK(low == std::vector<FiltrationType>{FiltrationType::F14});
    auto a18 = admissible_filtrations(18, 16, 8, 2, 1);
    CHECK(std::find(a18.begin(), a18.end(), FiltrationType::F124) != a18.end());

    for (i64 g = 5; g <= 100; ++g)
        for (i64 d = 6; d <= g - 1; ++d) {
            if (rho(g, 3, d) >= 0) continue;
            for (i64 m : {0, 2, 4})
                for (i64 mu : {0, 2, 4})
                    for (auto f : admissible_filtrations(g, d, (g - 1) / 2, m, mu))
                        CHECK((f == FiltrationType::F14 || f == FiltrationType::F124 || f == FiltrationType::F1234));
        }

    for (auto f : kAllFiltrations) CHECK(parse_filtration(filtration_name(f)) == f);
    CHECK(std::string(filtration_flag(FiltrationType::F124)) == "1<2<4");
}

TEST_CASE("lifting thresholds") {
    for (i64 mu = 1; mu < 10; ++mu) CHECK(dm_threshold(18, 8, 2, mu).value == 16);
    auto t19 = dm_threshold(19, 9, 2, 2);
    CHECK(t19.value == Rat(69, 4));
    CHECK(Rat(17) < t19.value);
    CHECK(dm_threshold(9, 4, 0, 0).value == Rat(5 * 4, 4) + Rat(9, 2));
    for (i64 g : {2, 3, 4, 8}) CHECK_FALSE(dm_threshold(g, 1, 0, 0).applicable);
    CHECK(dm_threshold(18, 8, 2, 2).applicable);
    // monotone in each argument
    for (i64 gam = 0; gam < 12; ++gam)
        for (i64 m = 0; m < 8; m += 2)
            for (i64 mu = 0; mu < 6; ++mu) {
                auto base = dm_threshold(30, gam, m, mu).value;
                CHECK(base <= dm_threshold(30, gam + 1, m, mu).value);
                CHECK(base <= dm_threshold(30, gam, m + 2, mu).value);
                CHECK(base <= dm_threshold(30, gam, m, mu + 1).value);
            }

    CHECK(strategy_threshold(16, 3) == Rat(95, 6));
    for (i64 g = 2; g < 40; ++g) {
        CHECK(strategy_threshold(g, 1) == Rat(g - 1));
        CHECK(strategy_threshold(g, 3) < strategy_threshold(g + 1, 3));
    }
    CHECK(strategy_gamma_bound(3, 14) == 8);
}

TEST_CASE("Lazarsfeld-Mukai and quotient invariants") {
    auto lm = lm_invariants(16, 3, 14);
    CHECK(lm.h0 == 9);
    CHECK(lm.rank == 4);
    CHECK(lm.c2 == 14);
    CHECK(lm.clifford == lm.c2 - 2 * (lm.rank - 1));
    CHECK(lm_invariants(12, 1, 7).chi_f_tensor_e == 2);

    auto L = gram_of(16, 3, 14);
    auto q = quotient_invariants(16, 2, 12, {1, -1}, L);
    CHECK(q.clifford == 0);
    CHECK(q.c1 == LatticeVector{0, 1});
    CHECK(quotient_invariants(16, 2, 12, {0, 0}, L).clifford == clifford_gamma(2, 12) + 2);
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b) {
            LatticeVector N{a, b};
            auto qi = quotient_invariants(16, 2, 12, N, L);
            CHECK(qi.clifford == lm_invariants(16, 2, 12).clifford + norm(L, N) - pair_H(L, N) + 2);
            CHECK(qi.c2 == 12 + norm(L, N) - pair_H(L, N));
        }
}

TEST_CASE("Mukai vectors and stable sheaves") {
    CHECK(stable_c2_lower_bound(2, 10) == Rat(3, 2) + Rat(10, 4));
    for (i64 c : {-4, 0, 6, 18}) {
        CHECK(stable_c2_lower_bound(2, c) == Rat(3, 2) + Rat(c, 4));
        CHECK(stable_c2_lower_bound(3, c) == Rat(8 + c, 3));
    }
    CHECK(stable_c2_lower_bound(1, 0) == 0);

    auto L = gram_of(10, 2, 8);
    MukaiVector v{2, {1, 0}, 3}, w{1, {0, 1}, -1};
    CHECK(mukai_pairing(L, v, w) == evaluate(L, v.c1, w.c1) - 2 * -1 - 3 * 1);
    CHECK(mukai_pairing(L, v, w) == mukai_pairing(L, w, v));
    CHECK(mukai_pairing(L, v, v) == norm(L, v.c1) - 2 * 2 * 3);
    CHECK(moduli_dim(L, v) == 2 + mukai_pairing(L, v, v));
}

TEST_CASE("Knutsen counterexample") {
    auto k = knutsen_counterexample(6, 4);
    CHECK(k.genus == 19);
    CHECK(k.series == LinearSeries{19, 3, 17});
    CHECK(k.rho == -1);
    CHECK(k.curve_square == 36);
    CHECK(k.lattice == GramLattice2{10, 10, 6});
    CHECK(k.no_minus_two);
    CHECK(k.no_isotropic);
    CHECK_THROWS_AS(knutsen_counterexample(5, 4), Error);
    CHECK_THROWS_AS(knutsen_counterexample(4, 6), Error);
    for (i64 a = 4; a <= 20; a += 2)
        for (i64 b = 4; b <= a; b += 2) {
            try {
                auto k = knutsen_counterexample(a, b);
                CHECK(k.rho == -1);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::BadParameters);
            }
        }
}

TEST_CASE("non-containment replay, spot checks") {
    auto t14 = distinguish_pair(14, {14, 2, 11}, {14, 3, 13});
    CHECK(t14.verdict == Verdict::NonContainmentShown);
    CHECK(t14.steps.front().rule == "codimension");
    CHECK(t14.steps.front().conclusive);

    auto t16 = distinguish_pair(16, {16, 3, 14}, {16, 2, 12});
    CHECK(t16.verdict == Verdict::NonContainmentShown);
    CHECK(t16.steps.back().rule == "lift-exclusion");

    CHECK(distinguish_pair(20, {20, 3, 17}, {20, 4, 19}).verdict == Verdict::Inconclusive);
    CHECK_THROWS_AS(distinguish_pair(20, {20, 3, 16}, {20, 4, 19}), Error);

    for (i64 g = 3; g <= 19; ++g)
        for (const auto& A : conjectured_maximal_loci(g))
            for (const auto& B : conjectured_maximal_loci(g)) {
                if (A == B) continue;
                auto t = distinguish_pair(g, A, B);
                CHECK(t.verdict == Verdict::NonContainmentShown);
                CHECK(std::any_of(t.steps.begin(), t.steps.end(), [](const ProofStep& s) { return s.conclusive; }));
            }
}
