#include "bnlab/geometry.hpp"

#include <algorithm>

namespace bnlab {

i64 secant_expected_dim(const SecantConfig& c) { return c.k - (c.k - c.l - 1) * (c.r - c.l); }

LinearSeries projected_series(i64 g, i64 r, i64 d, i64 k, i64 l) {
    if (r - l - 1 < 0 || d - k < 0)
        throw Error(ErrorKind::DegenerateProjection, "projection of g^" + std::to_string(r) + "_" + std::to_string(d) +
                                                         " from a " + std::to_string(k) + "-secant " +
                                                         std::to_string(l) + "-plane");
    return {g, r - l - 1, d - k};
}

i64 berzolari_trisecants(i64 d, i64 g) { return (d - 2) * (d - 3) * (d - 4) / 6 - g * (d - 4); }

i64 plane_nodes(i64 d, i64 g) { return (d - 1) * (d - 2) / 2 - g; }

std::optional<i64> secant_count(i64 g, const SecantConfig& c) {
    if (secant_expected_dim(c) != 0) return std::nullopt;
    if (c.r == 4 && c.k == 3 && c.l == 1) return berzolari_trisecants(c.d, g);
    if (c.r == 2 && c.k == 2 && c.l == 0) return plane_nodes(c.d, g);
    return std::nullopt;
}

std::vector<SecantHit> scan_unexpected_containments(i64 g_max, const SecantScanOptions& opts) {
    std::vector<SecantHit> out;
    for (i64 g = 3; g <= g_max; ++g) {
        for (const auto& em : expected_maximal_loci(g)) {
            std::vector<LinearSeries> sources{em};
            if (g - em.d + em.r - 1 >= 0) {
                LinearSeries adj = serre_adjoint(em);
                if (adj != em) sources.push_back(adj);
            }
            for (const auto& src : sources) {
                std::optional<LinearSeries> src_adj;
                if (g - src.d + src.r - 1 >= 0) src_adj = serre_adjoint(src);
                for (i64 l = 0; l <= src.r - 1; ++l) {
                    for (i64 k = l + 1; k <= src.d; ++k) {
                        SecantConfig c{src.r, src.d, k, l};
                        i64 dim = secant_expected_dim(c);
                        if (dim < 0) continue;
                        LinearSeries p = projected_series(g, src.r, src.d, k, l);
                        if (p.r < 1 || rho(g, p.r, p.d) >= 0) continue;
                        if (src_adj && p == *src_adj) continue;
                        SecantHit h{g, src, em, c, dim, secant_count(g, c), p};
                        if (!opts.raw) {
                            if (h.count && *h.count <= 0) continue;
                            bool dup = std::any_of(out.begin(), out.end(), [&](const SecantHit& o) {
                                return o.g == g && o.locus == em && o.projected == p;
                            });
                            if (dup) continue;
                        }
                        out.push_back(h);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace bnlab
