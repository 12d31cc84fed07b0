#include "bnlab/core_bn.hpp"

#include <algorithm>

namespace bnlab {

std::string describe(const LinearSeries& s) {
    return "g^" + std::to_string(s.r) + "_" + std::to_string(s.d) + " (g=" + std::to_string(s.g) + ")";
}

i64 rho(i64 g, i64 r, i64 d) { return g - (r + 1) * (g - d + r); }

i64 clifford_gamma(i64 r, i64 d) { return d - 2 * r; }

i64 hodge_delta(i64 g, i64 r, i64 d) { return 4 * (g - 1) * (r - 1) - d * d; }

LinearSeries serre_adjoint(const LinearSeries& s) {
    i64 ra = s.g - s.d + s.r - 1;
    if (ra < 0) throw Error(ErrorKind::NegativeRank, "Serre adjoint of " + describe(s) + " has negative rank");
    return {s.g, ra, 2 * s.g - 2 - s.d};
}

i64 general_clifford(i64 g) { return (g - 1) / 2; }

i64 l2_gamma_upper(i64 g) {
    // g + 1 - ceil(2 sqrt g), with ceil(sqrt(4g)) taken exactly
    i128 s = isqrt(i128(4) * g);
    i64 c = static_cast<i64>(s * s == i128(4) * g ? s : s + 1);
    return g + 1 - c;
}

bool in_l2_window(i64 g, i64 r, i64 d) {
    i64 gam = clifford_gamma(r, d);
    if (gam < (g + 1) / 2 || gam > l2_gamma_upper(g)) return false;
    return r >= 1 && r <= (g - 1 - gam) / 2;
}

SeriesClassification classify(const LinearSeries& s) {
    SeriesClassification c;
    c.rho = rho(s.g, s.r, s.d);
    c.gamma = clifford_gamma(s.r, s.d);
    c.delta = hodge_delta(s.g, s.r, s.d);
    c.bn_special = c.rho < 0;
    c.noncomputing = c.bn_special && c.gamma > general_clifford(s.g);
    c.in_l2_window = in_l2_window(s.g, s.r, s.d);
    return c;
}

std::vector<LinearSeries> expected_maximal_loci(i64 g) {
    std::vector<LinearSeries> out;
    for (i64 r = 1; 2 * r <= g - 1; ++r) {
        for (i64 d = g - 1; d >= 2 * r; --d) {
            if (rho(g, r, d) < 0 && rho(g, r - 1, d - 1) >= 0) {
                out.push_back({g, r, d});
                break;
            }
        }
    }
    return out;
}

std::vector<LinearSeries> conjectured_maximal_loci(i64 g) {
    switch (g) {
        case 7: return {{7, 1, 4}};
        case 8: return {{8, 2, 7}};
        case 9: return {{9, 1, 5}};
        default: return expected_maximal_loci(g);
    }
}

bool is_expected_maximal(const LinearSeries& s) {
    auto loci = expected_maximal_loci(s.g);
    return std::find(loci.begin(), loci.end(), s) != loci.end();
}

i64 default_gonality_k(i64 g) { return (g + 1) / 2; }

i64 rho_pflueger(i64 g, i64 r, i64 d, i64 k) {
    i64 top = g - d + r - 1;
    if (top < 0) throw Error(ErrorKind::BadGonality, "g-d+r-1 < 0");
    i64 rp = std::min(r, top);
    i64 best = rho(g, r, d);
    for (i64 l = 1; l <= rp; ++l) best = std::max(best, rho(g, r - l, d) - l * k);
    return best;
}

std::string format_scaled(i64 scaled, int digits) {
    i64 p = 1;
    for (int i = 0; i < digits; ++i) p *= 10;
    bool neg = scaled < 0;
    i64 m = neg ? -scaled : scaled;
    std::string frac = std::to_string(m % p);
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + std::to_string(m / p) + "." + frac;
}

namespace {

// floor(10^digits * (2 sqrt(x) - 2r)) for rational x >= 0 and rational r
i64 scaled_gamma_delta(const Rat& x, const Rat& r) {
    i128 p = 1;
    for (int i = 0; i < kRegionDigits; ++i) p *= 10;
    // 2 sqrt(x) * p = sqrt(4 p^2 num/den) = sqrt(4 p^2 num den) / den
    i128 num = x.numerator(), den = x.denominator();
    i128 rad = checked_mul(checked_mul(4 * p * p, num), den);
    i128 root = isqrt(rad);
    // floor(root_exact / den), with root_exact in [root, root+1)
    i128 a = floor_div(root, den);
    i128 b = floor_div(checked_mul(2 * p, r.numerator()), r.denominator());
    bool exact_r = (2 * p * r.numerator()) % r.denominator() == 0;
    i128 v = a - b - (exact_r ? 0 : 1);
    return static_cast<i64>(v);
}

}  // namespace

std::vector<RegionSample> region_samples(i64 g, Rat r_step) {
    if (r_step <= 0) throw Error(ErrorKind::BadParameters, "r_step must be positive");
    std::vector<RegionSample> out;
    for (Rat r = 1; r <= Rat(g - 1); r += r_step) {
        RegionSample s;
        s.r = r;
        s.gamma_rho = Rat(g) - r - Rat(g) / (r + 1);
        s.gamma_delta_scaled = scaled_gamma_delta(Rat(g - 1) * (r - 1), r);
        out.push_back(s);
    }
    return out;
}

bool hyperbola_above_parabola(i64 g, i64 r) {
    // g - r - g/(r+1) > 2 sqrt((g-1)(r-1)) - 2r  <=>  g r + r (r+1) > 2 (r+1) sqrt((g-1)(r-1))
    i128 lhs = i128(g) * r + i128(r) * (r + 1);
    if (lhs <= 0) return false;
    i128 rhs2 = checked_mul(checked_mul(4, i128(r + 1) * (r + 1)), i128(g - 1) * (r - 1));
    return checked_mul(lhs, lhs) > rhs2;
}

}  // namespace bnlab
