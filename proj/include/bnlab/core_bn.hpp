#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bnlab/numeric.hpp"

namespace bnlab {

// A g^r_d on a genus-g curve.
struct LinearSeries {
    i64 g = 2;
    i64 r = 0;
    i64 d = 0;
    auto operator<=>(const LinearSeries&) const = default;
};

std::string describe(const LinearSeries& s);

struct SeriesClassification {
    i64 rho = 0;
    i64 gamma = 0;
    i64 delta = 0;
    bool bn_special = false;
    bool noncomputing = false;
    bool in_l2_window = false;
};

i64 rho(i64 g, i64 r, i64 d);
i64 clifford_gamma(i64 r, i64 d);
i64 hodge_delta(i64 g, i64 r, i64 d);
LinearSeries serre_adjoint(const LinearSeries& s);
SeriesClassification classify(const LinearSeries& s);

// floor((g-1)/2), the Clifford index of a general curve.
i64 general_clifford(i64 g);
// floor(g - 2 sqrt(g) + 1), computed with integer square roots.
i64 l2_gamma_upper(i64 g);
bool in_l2_window(i64 g, i64 r, i64 d);

std::vector<LinearSeries> expected_maximal_loci(i64 g);
std::vector<LinearSeries> conjectured_maximal_loci(i64 g);
bool is_expected_maximal(const LinearSeries& s);

i64 rho_pflueger(i64 g, i64 r, i64 d, i64 k);
i64 default_gonality_k(i64 g);

struct RegionSample {
    Rat r;
    Rat gamma_rho;
    // 2 sqrt((g-1)(r-1)) - 2r, truncated toward minus infinity at kRegionDigits decimals
    i64 gamma_delta_scaled = 0;
};
inline constexpr int kRegionDigits = 6;
std::string format_scaled(i64 scaled, int digits = kRegionDigits);

std::vector<RegionSample> region_samples(i64 g, Rat r_step);

// gamma_rho(r) > gamma_delta(r) for integer r >= 1, exact comparison.
bool hyperbola_above_parabola(i64 g, i64 r);

}  // namespace bnlab
