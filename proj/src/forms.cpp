#include "bnlab/forms.hpp"

namespace bnlab {

Mat2 Mat2::operator*(const Mat2& o) const {
    return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
}

Mat2 Mat2::inverse_sl2() const { return {s, -q, -r, p}; }

i128 form_disc(const Form& f) { return checked_sub(checked_mul(f.b, f.b), checked_mul(4, checked_mul(f.a, f.c))); }

Form act(const Form& f, const Mat2& m) {
    Int a = f.a, b = f.b, c = f.c;
    Int na = a * m.p * m.p + b * m.p * m.r + c * m.r * m.r;
    Int nb = 2 * a * m.p * m.q + b * (m.p * m.s + m.q * m.r) + 2 * c * m.r * m.s;
    Int nc = a * m.q * m.q + b * m.q * m.s + c * m.s * m.s;
    return {to_i128(na), to_i128(nb), to_i128(nc)};
}

Int eval_form(const Form& f, const Int& x, const Int& y) {
    return Int(f.a) * x * x + Int(f.b) * x * y + Int(f.c) * y * y;
}

bool FormCycle::is_reduced(const Form& f, i128 s) {
    i128 a2 = 2 * (f.a < 0 ? -f.a : f.a);
    return f.b > 0 && f.b <= s && s - f.b < a2 && a2 <= s + f.b;
}

Form FormCycle::rho_step(const Form& f, i128 D, i128 s, Mat2* m) {
    i128 c = f.c;
    i128 ac = c < 0 ? -c : c;
    i128 m2 = 2 * ac;
    i128 nb;
    if (ac > s) {
        // representative of -b mod 2|c| in (-|c|, |c|]
        nb = -f.b % m2;
        if (nb <= -ac) nb += m2;
        if (nb > ac) nb -= m2;
    } else {
        // largest representative of -b mod 2|c| that is <= s
        i128 r = (-f.b) % m2;
        if (r < 0) r += m2;
        nb = s - ((s - r) % m2 + m2) % m2;
    }
    i128 t = (nb + f.b) / (2 * c);
    i128 nc = checked_sub(checked_mul(nb, nb), D) / (4 * c);
    if (m) *m = *m * Mat2{0, -1, 1, to_int(t)};
    return {c, nb, nc};
}

Form FormCycle::reduce(const Form& f, i128 D, i128 s, Mat2* m) {
    Form g = f;
    // a = 0 cannot occur for nonsquare D; one preliminary step moves c into place.
    for (int guard = 0; !is_reduced(g, s); ++guard) {
        if (guard > 100000) throw Error(ErrorKind::BadParameters, "form reduction did not converge");
        g = rho_step(g, D, s, m);
    }
    return g;
}

std::size_t FormCycle::Hash::operator()(const Form& f) const {
    auto h = [](i128 x) {
        auto u = static_cast<unsigned __int128>(x);
        return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^ static_cast<std::uint64_t>(u >> 64));
    };
    return h(f.a) * 1000003u ^ h(f.b) * 10007u ^ h(f.c);
}

FormCycle::FormCycle(const Form& f) : base_(f) {
    D_ = form_disc(f);
    if (D_ <= 0 || is_square(D_)) throw Error(ErrorKind::BadParameters, "cycle needs a nonsquare positive discriminant");
    s_ = isqrt(D_);
    Form r0 = reduce(f, D_, s_, &to_reduced_);
    Form cur = r0;
    Mat2 loop;
    do {
        index_.emplace(cur, cycle_.size());
        cycle_.push_back(cur);
        cur = rho_step(cur, D_, s_, &loop);
    } while (!(cur == r0));
    auto_ = to_reduced_ * loop * to_reduced_.inverse_sl2();
}

std::optional<Mat2> FormCycle::equivalence_to(const Form& g) const {
    if (form_disc(g) != D_) return std::nullopt;
    Mat2 mg;
    Form rg = reduce(g, D_, s_, &mg);
    auto it = index_.find(rg);
    if (it == index_.end()) return std::nullopt;
    // replay the cycle up to the hit rather than storing every partial product
    Mat2 walk;
    Form cur = cycle_[0];
    for (std::size_t i = 0; i < it->second; ++i) cur = rho_step(cur, D_, s_, &walk);
    return to_reduced_ * walk * mg.inverse_sl2();
}

bool properly_equivalent(const Form& f, const Form& g) {
    FormCycle cyc(f);
    return cyc.equivalence_to(g).has_value();
}

bool gl_equivalent(const Form& f, const Form& g) {
    FormCycle cyc(f);
    return cyc.equivalence_to(g).has_value() || cyc.equivalence_to({g.a, -g.b, g.c}).has_value();
}

}  // namespace bnlab
