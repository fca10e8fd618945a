#include <doctest.h>

#include <cmath>

#include "valkit/errors.hpp"
#include "valkit/geometry.hpp"

using namespace valkit;

TEST_CASE("word matrices") {
    Mat2 a = word_to_matrix({1, 1});  // T V
    CHECK(a == Mat2{2, 1, 1, 1});
    CHECK(a.det() == 1);

    Mat2 b = word_to_matrix({1, 2});  // T V^2
    CHECK(b == Mat2{3, 1, 2, 1});
    CHECK(b.trace() == 4);

    CHECK_THROWS_AS(word_to_matrix({1, 2, 3}), domain_error);
    CHECK_THROWS_AS(word_to_matrix({}), domain_error);
}

TEST_CASE("fixed points and invariant form") {
    FixedPoints fp = fixed_points(word_to_matrix({1, 1}));
    CHECK(fp.attracting == QuadSurd(1, 1, 2, 5));
    CHECK(fp.repelling == QuadSurd(1, -1, 2, 5));

    // form sign convention: sgn(a) = sgn(repelling - attracting)
    CHECK(fp.form.a == -1);
    CHECK(fp.form.b == 1);
    CHECK(fp.form.c == 1);
    CHECK(fp.form.disc() == 5);

    // discriminant divides tr^2 - 4 for a word matrix
    Mat2 m = word_to_matrix({3, 1, 4, 2});
    FixedPoints fp2 = fixed_points(m);
    mpz_class tr = m.trace();
    CHECK((tr * tr - 4) % fp2.form.disc() == 0);
    CHECK(mpz_sgn(fp2.form.a.get_mpz_t()) ==
          fp2.repelling.compare(fp2.attracting));

    // the attracting point is a root of the form
    const QuadSurd& w = fp2.attracting;
    // a w^2 + b w + c = 0 over the common denominator r^2:
    // a (p + q sqrt d)^2 + b r (p + q sqrt d) + c r^2 = 0
    mpz_class A = fp2.form.a, B = fp2.form.b, C = fp2.form.c;
    mpz_class rat = A * (w.p() * w.p() + w.q() * w.q() * w.d()) + B * w.r() * w.p() +
                    C * w.r() * w.r();
    mpz_class irr = A * 2 * w.p() * w.q() + B * w.r() * w.q();
    CHECK(rat == 0);
    CHECK(irr == 0);
}

TEST_CASE("epsilon and its logarithm") {
    // word (1,1): trace 3, epsilon = (3+sqrt5)/2 = phi^2
    QuadSurd e = epsilon(word_to_matrix({1, 1}));
    CHECK(e == QuadSurd(3, 1, 2, 5));
    CHECK(e == QuadSurd(1, 1, 2, 5).times(QuadSurd(1, 1, 2, 5)));

    CHECK(epsilon_log(Word{1, 1}) == doctest::Approx(0.962423650119206895).epsilon(1e-14));
    CHECK(epsilon_log(Word{2, 2}) == doctest::Approx(1.762747174039086051).epsilon(1e-14));
    CHECK(epsilon_log(Word{1, 2}) == doctest::Approx(1.316957896924816709).epsilon(1e-14));
    CHECK(epsilon_log(Word{2, 2, 1, 1}) ==
          doctest::Approx(2.703575830931402315).epsilon(1e-14));

    // odd words go through their even form
    CHECK(epsilon_log(Word{1}) == doctest::Approx(epsilon_log(Word{1, 1})).epsilon(1e-15));

    CHECK_THROWS_AS(epsilon(mat_identity()), not_hyperbolic_error);
    CHECK_THROWS_AS(epsilon(mat_T(7)), not_hyperbolic_error);

    // a long word: epsilon overflows double but the log stays finite
    Word big;
    for (int k = 0; k < 200; ++k) {
        big.push_back(9);
        big.push_back(8);
    }
    double lg = epsilon_log(big);
    CHECK(std::isfinite(lg));
    CHECK(lg > 800.0);  // eps ~ e^860, far beyond double range
}
