#pragma once

#include <optional>
#include <vector>

#include "bnlab/core_bn.hpp"

namespace bnlab {

struct SecantConfig {
    i64 r = 0;  // ambient projective dimension
    i64 d = 0;  // curve degree
    i64 k = 0;  // secancy
    i64 l = 0;  // dimension of the secant space
};

i64 secant_expected_dim(const SecantConfig& c);
LinearSeries projected_series(i64 g, i64 r, i64 d, i64 k, i64 l);
i64 berzolari_trisecants(i64 d, i64 g);
// Nodes of the plane model: (d-1)(d-2)/2 - g.
i64 plane_nodes(i64 d, i64 g);

// Classical count of expected-dimension-0 secant spaces, where one is implemented.
std::optional<i64> secant_count(i64 g, const SecantConfig& c);

struct SecantHit {
    i64 g = 0;
    LinearSeries source;  // an expected maximal series or its Serre adjoint
    LinearSeries locus;   // the expected maximal series whose locus the source defines
    SecantConfig config;
    i64 expected_dim = 0;
    std::optional<i64> count;
    LinearSeries projected;
};

struct SecantScanOptions {
    // keep every raw configuration, including duplicates and zero counts
    bool raw = false;
};

std::vector<SecantHit> scan_unexpected_containments(i64 g_max, const SecantScanOptions& opts = {});

}  // namespace bnlab
