#include <random>

#include <doctest.h>

#include "bnlab/forms.hpp"

using namespace bnlab;

namespace {

Mat2 random_sl2(std::mt19937_64& rng, int steps) {
    // products of elementary matrices; small enough to keep forms in 128 bits
    std::uniform_int_distribution<int> pick(0, 3), t(-3, 3);
    Mat2 m;
    for (int i = 0; i < steps; ++i) {
        int k = t(rng);
        switch (pick(rng)) {
            case 0: m = m * Mat2{1, k, 0, 1}; break;
            case 1: m = m * Mat2{1, 0, k, 1}; break;
            case 2: m = m * Mat2{0, -1, 1, 0}; break;
            default: m = m * Mat2{-1, 0, 0, -1}; break;
        }
    }
    return m;
}

Form random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> x(-60, 60);
    for (;;) {
        Form f{x(rng), x(rng), x(rng)};
        i128 D = form_disc(f);
        if (D > 0 && !is_square(D)) return f;
    }
}

}  // namespace

TEST_CASE("form action and evaluation agree") {
    Form f{3, 5, -7};
    Mat2 m{2, 1, 1, 1};
    Form g = act(f, m);
    CHECK(form_disc(g) == form_disc(f));
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) CHECK(eval_form(g, x, y) == eval_form(f, 2 * x + y, x + y));
    CHECK((m * m.inverse_sl2()).p == 1);
    CHECK((m * m.inverse_sl2()).q == 0);
}

TEST_CASE("reduced forms and the rho step") {
    // D = 5, s = 2: (1, 1, -1) is reduced
    CHECK(FormCycle::is_reduced({1, 1, -1}, 2));
    CHECK_FALSE(FormCycle::is_reduced({1, 3, 1}, 2));
    Form f{-7, 11, 13};
    i128 D = form_disc(f), s = isqrt(D);
    Mat2 m;
    Form r = FormCycle::reduce(f, D, s, &m);
    CHECK(FormCycle::is_reduced(r, s));
    CHECK(act(f, m) == r);
    CHECK(m.det() == 1);
}

TEST_CASE("cycle of a small discriminant") {
    // x^2 - 2y^2 in D = 8 has class number one
    FormCycle c({1, 0, -2});
    CHECK(c.disc() == 8);
    CHECK(c.length() >= 1);
    auto u = c.automorphism();
    CHECK(u.det() == 1);
    CHECK(act({1, 0, -2}, u) == Form{1, 0, -2});
    bool identity = u.p == 1 && u.q == 0 && u.r == 0 && u.s == 1;
    CHECK_FALSE(identity);
    CHECK(properly_equivalent({1, 0, -2}, {-1, 0, 2}));
    // D = 12 has two proper classes: x^2 - 3y^2 and -x^2 + 3y^2
    CHECK_FALSE(properly_equivalent({1, 0, -3}, {-1, 0, 3}));
    CHECK(gl_equivalent({1, 0, -3}, {1, 0, -3}));
}

TEST_CASE("random SL2 and GL2 images are recognized") {
    std::mt19937_64 rng(20240611);
    for (int iter = 0; iter < 300; ++iter) {
        Form f = random_form(rng);
        Mat2 m = random_sl2(rng, 6);
        Form g = act(f, m);
        FormCycle c(f);
        auto e = c.equivalence_to(g);
        REQUIRE(e.has_value());
        CHECK(act(f, *e) == g);
        CHECK(e->det() == 1);
        CHECK(properly_equivalent(f, g));
        // an improper change of variables
        Form h = act(g, Mat2{1, 0, 0, -1});
        CHECK(gl_equivalent(f, h));
        CHECK(act(f, c.automorphism()) == f);
    }
}

TEST_CASE("forms with different values are not equivalent") {
    // D = 40: x^2 - 10y^2 and 2x^2 - 5y^2 are distinct classes (2 is not a value of the first)
    CHECK_FALSE(properly_equivalent({1, 0, -10}, {2, 0, -5}));
    CHECK_FALSE(gl_equivalent({1, 0, -10}, {2, 0, -5}));
    CHECK_THROWS_AS(FormCycle({1, 0, -4}), Error);
}
