#include "bnlab/lattice.hpp"

#include <algorithm>

namespace bnlab {

std::string describe(const GramLattice2& L) {
    return "[[" + std::to_string(L.h2) + "," + std::to_string(L.hl) + "],[" + std::to_string(L.hl) + "," +
           std::to_string(L.l2) + "]]";
}

std::string describe(const LatticeVector& v) { return "(" + v.a.str() + "," + v.b.str() + ")"; }

GramLattice2 gram_of(i64 g, i64 r, i64 d) { return {2 * g - 2, d, 2 * r - 2}; }

Int evaluate(const GramLattice2& L, const LatticeVector& v, const LatticeVector& w) {
    return v.a * w.a * L.h2 + (v.a * w.b + v.b * w.a) * L.hl + v.b * w.b * L.l2;
}

Int norm(const GramLattice2& L, const LatticeVector& v) { return evaluate(L, v, v); }

Int pair_H(const GramLattice2& L, const LatticeVector& v) { return v.a * L.h2 + v.b * L.hl; }

void require_hyperbolic(const GramLattice2& L) {
    if (L.h2 <= 0) throw Error(ErrorKind::IndefiniteH, "H^2 must be positive");
    if (L.disc() >= 0) throw Error(ErrorKind::IndefiniteH, "lattice " + describe(L) + " has disc >= 0");
}

namespace {

struct Line {
    bool empty = true;
    i128 a0 = 0, b0 = 0;  // base point
    i128 wa = 0, wb = 0;  // primitive direction orthogonal to H
    i128 A = 0, B = 0, C = 0;  // norm(v0 + k w) = A k^2 + 2 B k + C
};

void ext_gcd(i128 a, i128 b, i128& x, i128& y) {
    // a x + b y = gcd(a, b) for a > 0, b arbitrary
    i128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i128 q = floor_div(a, b);
        i128 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
}

i128 nrm(const GramLattice2& L, i128 a, i128 b) {
    return checked_add(checked_add(checked_mul(checked_mul(a, a), L.h2), checked_mul(checked_mul(2 * a, b), L.hl)),
                       checked_mul(checked_mul(b, b), L.l2));
}

i128 bil(const GramLattice2& L, i128 a, i128 b, i128 c, i128 d) {
    return checked_add(checked_add(checked_mul(checked_mul(a, c), L.h2), checked_mul(checked_add(a * d, b * c), L.hl)),
                       checked_mul(checked_mul(b, d), L.l2));
}

Line make_line(const GramLattice2& L, i128 t) {
    Line ln;
    i128 g = gcd128(L.h2, L.hl);
    if (t % g != 0) return ln;
    i128 x, y;
    ext_gcd(L.h2, L.hl, x, y);
    ln.empty = false;
    ln.a0 = checked_mul(x, t / g);
    ln.b0 = checked_mul(y, t / g);
    ln.wa = L.hl / g;
    ln.wb = -L.h2 / g;
    // move the base point near the vertex to keep numbers small
    i128 A = nrm(L, ln.wa, ln.wb);
    i128 B = bil(L, ln.a0, ln.b0, ln.wa, ln.wb);
    i128 shift = floor_div(B, -A);
    ln.a0 = checked_add(ln.a0, checked_mul(shift, ln.wa));
    ln.b0 = checked_add(ln.b0, checked_mul(shift, ln.wb));
    ln.A = A;
    ln.B = bil(L, ln.a0, ln.b0, ln.wa, ln.wb);
    ln.C = nrm(L, ln.a0, ln.b0);
    return ln;
}

}  // namespace

std::vector<LatticeVector> solutions_on_line(const GramLattice2& L, const Int& t, const Int& n) {
    require_hyperbolic(L);
    std::vector<LatticeVector> out;
    Line ln = make_line(L, to_i128(t));
    if (ln.empty) return out;
    i128 nn = to_i128(n);
    i128 negA = -ln.A;
    // A k^2 + 2 B k + (C - n) >= 0 on [(B - sqrt(E)) / |A|, (B + sqrt(E)) / |A|]
    i128 E = checked_sub(checked_mul(ln.B, ln.B), checked_mul(ln.A, checked_sub(ln.C, nn)));
    if (E < 0) return out;
    i128 s = isqrt(E);
    i128 lo = floor_div(ln.B - s, negA) - 1;
    i128 hi = ceil_div(ln.B + s + 1, negA) + 1;
    for (i128 k = lo; k <= hi; ++k) {
        i128 val = checked_add(checked_add(checked_mul(ln.A, checked_mul(k, k)), checked_mul(2 * ln.B, k)), ln.C);
        if (val == nn) out.push_back({to_int(ln.a0 + k * ln.wa), to_int(ln.b0 + k * ln.wb)});
    }
    return out;
}

std::optional<Int> line_max_norm(const GramLattice2& L, const Int& t) {
    require_hyperbolic(L);
    Line ln = make_line(L, to_i128(t));
    if (ln.empty) return std::nullopt;
    i128 best = ln.C;
    for (i128 k = -1; k <= 1; ++k) {
        i128 val = ln.A * k * k + 2 * ln.B * k + ln.C;
        best = std::max(best, val);
    }
    return to_int(best);
}

bool isotropic_exists(const GramLattice2& L) {
    require_hyperbolic(L);
    return is_square(-i128(L.disc()));
}

std::vector<LatticeVector> isotropic_directions(const GramLattice2& L) {
    std::vector<LatticeVector> out;
    if (!isotropic_exists(L)) return out;
    // h2 x^2 + 2 hl x y + l2 y^2 = 0 along (s - hl, h2) and (-s - hl, h2)
    i128 s = isqrt(-i128(L.disc()));
    for (i128 sg : {s, -s}) {
        i128 x = sg - L.hl, y = L.h2;
        i128 g = gcd128(x, y);
        LatticeVector v{to_int(x / g), to_int(y / g)};
        if (pair_H(L, v) < 0) v = {-v.a, -v.b};
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

Representer::Representer(const GramLattice2& L) : L_(L) {
    require_hyperbolic(L);
    q_ = {L.h2, 2 * i128(L.hl), L.l2};
    D_ = form_disc(q_);
    split_ = is_square(D_);
    if (!split_) cycle_ = std::make_unique<FormCycle>(q_);
}

std::optional<LatticeVector> Representer::orient(LatticeVector v) const {
    Int h = pair_H(L_, v);
    if (h == 0 && !split_) {
        // v^2 < 0 spans H-perp; an automorphism of infinite order moves it off
        const Mat2& u = cycle_->automorphism();
        v = {u.p * v.a + u.q * v.b, u.r * v.a + u.s * v.b};
        h = pair_H(L_, v);
    }
    if (h == 0) return std::nullopt;
    if (h < 0) v = {-v.a, -v.b};
    return v;
}

std::optional<LatticeVector> Representer::find_split(const Int& n) const {
    // 4 A Q(x,y) = (2Ax + (B+S)y)(2Ax + (B-S)y) with S^2 = D
    i128 A = q_.a, B = q_.b, S = isqrt(D_);
    i128 N = checked_mul(checked_mul(4, A), to_i128(n));
    i128 absN = N < 0 ? -N : N;
    std::vector<i128> divs;
    for (i128 u = 1; u * u <= absN; ++u) {
        if (absN % u == 0) {
            divs.push_back(u);
            if (u * u != absN) divs.push_back(absN / u);
        }
    }
    std::sort(divs.begin(), divs.end());
    for (i128 u0 : divs) {
        for (int sign : {1, -1}) {
            i128 u = sign * u0;
            i128 w = N / u;
            i128 num = u - w;
            if (num % (2 * S) != 0) continue;
            i128 y = num / (2 * S);
            i128 xn = checked_sub(u, checked_mul(B + S, y));
            if (xn % (2 * A) != 0) continue;
            i128 x = xn / (2 * A);
            auto v = orient({to_int(x), to_int(y)});
            if (v) return v;
        }
    }
    return std::nullopt;
}

std::optional<LatticeVector> Representer::find(const Int& n) const {
    if (n == 0) {
        if (!split_) return std::nullopt;
        i128 s = isqrt(-i128(L_.disc()));
        i128 x = s - L_.hl, y = L_.h2;
        i128 g = gcd128(x, y);
        return LatticeVector{to_int(x / g), to_int(y / g)};
    }
    if (split_) return find_split(n);
    i128 nn = to_i128(n);
    i128 an = nn < 0 ? -nn : nn;
    for (i128 f = 1; f * f <= an; ++f) {
        if (an % (f * f) != 0) continue;
        i128 np = nn / (f * f);
        i128 ap = np < 0 ? -np : np;
        i128 m4 = 4 * ap;
        for (i128 b = 0; b < 2 * ap; ++b) {
            if (((b * b - D_) % m4 + m4) % m4 != 0) continue;
            Form target{np, b, (b * b - D_) / (4 * np)};
            auto M = cycle_->equivalence_to(target);
            if (!M) continue;
            LatticeVector v{M->p * Int(f), M->r * Int(f)};
            auto o = orient(v);
            if (o) return o;
        }
    }
    return std::nullopt;
}

std::optional<LatticeVector> represents(const GramLattice2& L, const Int& n) { return Representer(L).find(n); }

SurfaceInvariants surface_invariants(const GramLattice2& L, const SurfaceCaps& caps) {
    require_hyperbolic(L);
    SurfaceInvariants si;
    si.caps = caps;
    Representer rep(L);
    si.has_isotropic = isotropic_exists(L);
    if (si.has_isotropic) {
        si.m = 0;
    } else {
        for (i64 n = 2; n <= L.h2; n += 2) {
            if (rep.find(n)) {
                si.m = n;
                break;
            }
        }
    }
    for (i64 t = 1; t <= L.h2; ++t) {
        auto mx = line_max_norm(L, t);
        if (mx && *mx >= 0) {
            si.mu = t;
            break;
        }
    }
    si.minus_two_witness = rep.find(-2);
    si.minus_two_exists = si.minus_two_witness.has_value();
    return si;
}

std::optional<Embedding> embeds_preserving_H(const GramLattice2& host, i64 r, i64 d) {
    auto sols = solutions_on_line(host, d, 2 * r - 2);
    if (sols.empty()) return std::nullopt;
    i128 sub_disc = i128(host.h2) * (2 * r - 2) - i128(d) * d;
    const LatticeVector* pick = &sols.front();
    for (const auto& v : sols) {
        if (abs(v.b) == 1) {
            pick = &v;
            break;
        }
    }
    Embedding e;
    e.v = *pick;
    if (sub_disc == 0) {
        e.index = 0;
        e.primitive = false;
        return e;
    }
    i128 ratio = sub_disc / host.disc();
    if (sub_disc % host.disc() != 0 || !is_square(ratio))
        throw Error(ErrorKind::BadParameters, "sublattice discriminant is not a square multiple");
    e.index = to_int(isqrt(ratio));
    if (e.index != abs(pick->b)) throw Error(ErrorKind::BadParameters, "index mismatch");
    e.primitive = e.index == 1;
    return e;
}

bool disc_ratio_containment_possible(const GramLattice2& sub, const GramLattice2& host) {
    i64 ds = sub.disc(), dh = host.disc();
    if (ds >= 0 || dh >= 0) return false;
    if (ds % dh != 0) return false;
    i64 q = ds / dh;
    return q >= 1 && is_square(q);
}

NefResult nef_violation(const GramLattice2& L, const LatticeVector& v, i64 cap) {
    require_hyperbolic(L);
    NefResult res;
    i64 g = L.h2 / 2 + 1;
    if (v == LatticeVector{0, 1} && L.l2 >= 2 && L.hl >= 1 && L.hl <= g - 1) {
        res.complete = true;
        res.fast_path = true;
        return res;
    }
    Representer rep(L);
    if (!rep.find(-2)) {
        res.complete = true;
        return res;
    }
    Int vv = norm(L, v), dl = pair_H(L, v);
    // For v^2 > 0 and v.H > 0, a (-2)-class G with G.v < 0 has (G.H)^2 v^2 < 2 (v.H)^2 - 2 H^2 v^2.
    std::optional<i64> bound;
    if (vv > 0 && dl > 0) {
        Int rhs = 2 * dl * dl - 2 * Int(L.h2) * vv;
        Int t = isqrt(rhs / vv) + 1;
        while (t > 0 && t * t * vv >= rhs) --t;
        bound = t > Int(cap) ? cap + 1 : static_cast<i64>(t);
    }
    i64 limit = bound ? std::min<i64>(*bound, cap) : cap;
    for (i64 t = 1; t <= limit; ++t) {
        for (const auto& gam : solutions_on_line(L, t, -2)) {
            if (evaluate(L, gam, v) < 0) {
                res.violation = gam;
                res.complete = true;
                res.searched_to = t;
                return res;
            }
        }
    }
    res.searched_to = limit;
    res.complete = bound && *bound <= cap;
    return res;
}

}  // namespace bnlab
