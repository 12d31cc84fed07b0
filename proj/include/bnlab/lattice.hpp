#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bnlab/forms.hpp"
#include "bnlab/numeric.hpp"

namespace bnlab {

// Rank-2 even lattice in the basis (H, L) with H^2 = h2 > 0.
struct GramLattice2 {
    i64 h2 = 2;
    i64 hl = 0;
    i64 l2 = 0;
    i64 disc() const { return h2 * l2 - hl * hl; }
    bool operator==(const GramLattice2&) const = default;
};

struct LatticeVector {
    Int a = 0;
    Int b = 0;
    bool operator==(const LatticeVector&) const = default;
};

std::string describe(const GramLattice2& L);
std::string describe(const LatticeVector& v);

GramLattice2 gram_of(i64 g, i64 r, i64 d);
Int evaluate(const GramLattice2& L, const LatticeVector& v, const LatticeVector& w);
Int norm(const GramLattice2& L, const LatticeVector& v);
Int pair_H(const GramLattice2& L, const LatticeVector& v);

// Every v with v.H = t and v^2 = n.
std::vector<LatticeVector> solutions_on_line(const GramLattice2& L, const Int& t, const Int& n);
// Largest v^2 among v with v.H = t, if the line has integer points.
std::optional<Int> line_max_norm(const GramLattice2& L, const Int& t);

bool isotropic_exists(const GramLattice2& L);
// The primitive isotropic vectors with v.H > 0 (none, or one per isotropic line).
std::vector<LatticeVector> isotropic_directions(const GramLattice2& L);

// Exact decision of "some v with v^2 = n and v.H > 0". Holds the reduction
// cycle of the lattice's form so repeated queries share it.
class Representer {
public:
    explicit Representer(const GramLattice2& L);
    std::optional<LatticeVector> find(const Int& n) const;

private:
    std::optional<LatticeVector> find_split(const Int& n) const;
    std::optional<LatticeVector> orient(LatticeVector v) const;
    GramLattice2 L_;
    Form q_;
    i128 D_ = 0;
    bool split_ = false;
    std::unique_ptr<FormCycle> cycle_;
};

std::optional<LatticeVector> represents(const GramLattice2& L, const Int& n);

struct SurfaceCaps {
    i64 nef_cap = 10000;
};

struct SurfaceInvariants {
    bool has_isotropic = false;
    std::optional<i64> m;  // empty means Unknown
    i64 mu = 0;
    bool minus_two_exists = false;
    std::optional<LatticeVector> minus_two_witness;
    SurfaceCaps caps;
    bool m_complete = true;
    bool mu_complete = true;
};

SurfaceInvariants surface_invariants(const GramLattice2& L, const SurfaceCaps& caps = {});

struct Embedding {
    LatticeVector v;
    Int index = 0;  // [host : <H, v>], 0 when <H, v> has rank 1
    bool primitive = false;
};

std::optional<Embedding> embeds_preserving_H(const GramLattice2& host, i64 r, i64 d);

bool disc_ratio_containment_possible(const GramLattice2& sub, const GramLattice2& host);

struct NefResult {
    std::optional<LatticeVector> violation;
    bool complete = false;
    bool fast_path = false;
    i64 searched_to = 0;
};

NefResult nef_violation(const GramLattice2& L, const LatticeVector& v, i64 cap);

void require_hyperbolic(const GramLattice2& L);

}  // namespace bnlab
