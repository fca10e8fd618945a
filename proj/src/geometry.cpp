#include "valkit/geometry.hpp"

#include "valkit/errors.hpp"

namespace valkit {

Mat2 word_to_matrix(const Word& w) {
    validate_word(w);
    if (w.size() % 2 != 0)
        throw domain_error("word_to_matrix: length must be even, got " + word_str(w));
    Mat2 a = mat_identity();
    for (std::size_t k = 0; k < w.size(); ++k)
        a = a * (k % 2 == 0 ? mat_T(w[k]) : mat_V(w[k]));
    return a;
}

FixedPoints fixed_points(const Mat2& a) {
    auto [att, rep] = detail::fixed_point_pair(a);

    // Fixed points solve c w^2 + (d-a) w - b = 0.
    IndefiniteForm q{a.c, a.d - a.a, -a.b};
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.a.get_mpz_t(), q.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.c.get_mpz_t());
    if (g > 1) {
        q.a /= g;
        q.b /= g;
        q.c /= g;
    }
    int want = rep.compare(att);  // sign of repelling - attracting, never 0
    if (mpz_sgn(q.a.get_mpz_t()) != want) {
        q.a = -q.a;
        q.b = -q.b;
        q.c = -q.c;
    }
    return {att, rep, q};
}

QuadSurd epsilon(const Mat2& a) {
    mpz_class tr = abs(a.trace());
    mpz_class disc = tr * tr - 4;
    if (disc <= 0) throw not_hyperbolic_error("epsilon: |trace| <= 2");
    return QuadSurd(tr, 1, 2, disc);
}

double epsilon_log(const Mat2& a) { return epsilon(a).log_value(); }

double epsilon_log(const Word& w) { return epsilon_log(word_to_matrix(even_form(w))); }

}  // namespace valkit
