#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "bnlab/numeric.hpp"

namespace bnlab {

// a x^2 + b x y + c y^2
struct Form {
    i128 a = 0, b = 0, c = 0;
    bool operator==(const Form&) const = default;
};

// Integer 2x2 matrix acting on column vectors; f o M means f(M(x,y)).
struct Mat2 {
    Int p = 1, q = 0, r = 0, s = 1;  // [[p, q], [r, s]]
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse_sl2() const;  // requires det = 1
    Int det() const { return p * s - q * r; }
};

i128 form_disc(const Form& f);
Form act(const Form& f, const Mat2& m);
Int eval_form(const Form& f, const Int& x, const Int& y);

// The cycle of reduced forms in the proper class of a form with nonsquare D > 0.
class FormCycle {
public:
    explicit FormCycle(const Form& f);

    i128 disc() const { return D_; }
    // M with base o M = g, if g is properly equivalent to the base form.
    std::optional<Mat2> equivalence_to(const Form& g) const;
    // A nontrivial proper automorphism of the base form.
    const Mat2& automorphism() const { return auto_; }
    std::size_t length() const { return cycle_.size(); }

    // Rho step and reduction, exposed for tests.
    static bool is_reduced(const Form& f, i128 s);
    static Form rho_step(const Form& f, i128 D, i128 s, Mat2* m);
    static Form reduce(const Form& f, i128 D, i128 s, Mat2* m);

private:
    struct Hash {
        std::size_t operator()(const Form& f) const;
    };
    Form base_;
    i128 D_ = 0;
    i128 s_ = 0;
    Mat2 to_reduced_;  // base o to_reduced_ = cycle_[0]
    std::vector<Form> cycle_;
    std::unordered_map<Form, std::size_t, Hash> index_;
    Mat2 auto_;
};

// Proper equivalence of forms with the same nonsquare discriminant.
bool properly_equivalent(const Form& f, const Form& g);
// Equivalence under GL2(Z): proper, or proper to (a, -b, c).
bool gl_equivalent(const Form& f, const Form& g);

}  // namespace bnlab
