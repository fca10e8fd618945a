#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "valkit/mat2.hpp"
#include "valkit/words.hpp"

namespace valkit {

// Exact real quadratic irrational (p + q*sqrt(d))/r with arbitrary-precision
// integer components. Normalized: r > 0, gcd(p,q,r) = 1, d > 0 not a perfect
// square, and square factors of d below a trial-division bound moved into q.
// (Unconditional squarefree reduction of d would require factoring; all
// arithmetic here keeps d fixed along a computation chain, and comparisons
// between different chains use exact sign tests that don't need d squarefree.)
class QuadSurd {
public:
    QuadSurd(mpz_class p, mpz_class q, mpz_class r, mpz_class d,
             unsigned long square_extract_limit = 1000);

    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const mpz_class& r() const { return r_; }
    const mpz_class& d() const { return d_; }

    int sign() const;                               // sign of the value
    int compare(const QuadSurd& other) const;       // sign(*this - other), exact
    int compare(const mpz_class& m) const;          // sign(*this - m), exact
    bool operator==(const QuadSurd& other) const { return compare(other) == 0; }
    bool operator<(const QuadSurd& other) const { return compare(other) < 0; }

    QuadSurd galois() const;      // (p - q*sqrt(d))/r
    QuadSurd negated() const;
    QuadSurd reciprocal() const;
    QuadSurd plus_int(const mpz_class& m) const;
    QuadSurd times(const QuadSurd& other) const;  // requires same radicand d

    mpz_class floor_int() const;  // exact floor

    double to_double() const;     // correctly rounded via temporary big float
    double log_value() const;     // log of the value (must be positive); safe
                                  // even when the value overflows double

    std::string str() const;      // "(p+q*sqrt(d))/r"

private:
    struct raw_tag {};
    QuadSurd(raw_tag, mpz_class p, mpz_class q, mpz_class r, mpz_class d);
    void reduce_gcd_and_sign();

    mpz_class p_, q_, r_, d_;
};

// Spec-level constructor name; identical to the QuadSurd constructor.
QuadSurd normalize(const mpz_class& p, const mpz_class& q, const mpz_class& r,
                   const mpz_class& d, unsigned long square_extract_limit = 1000);

QuadSurd galois_conjugate(const QuadSurd& w);

// (a*w + b)/(c*w + d) for M = [[a,b],[c,d]]; exact, same radicand.
QuadSurd mobius_apply(const Mat2& m, const QuadSurd& w);

// Continued fraction expansion with minimal preperiod and minimal period,
// found by exact floor/invert steps until the tail surd repeats.
struct CFExpansion {
    std::vector<int> preperiod;
    std::vector<int> period;  // nonempty for every quadratic irrational
};

CFExpansion cf_expand(const QuadSurd& w, std::size_t max_steps = 100000);

// The purely periodic irrational [a1; a2, ..., al] repeating, as the
// attracting fixed point of the word matrix T^{a1} V^{a2} ... (word taken in
// even form; an odd period is duplicated first). Result is > 1.
QuadSurd value_of_period(const Word& word);

// Order two continued fraction expansions by the alternating first-difference
// rule: at the first index i (1-based) where the streams differ, u < v iff
// (-1)^(i+1) a_i < (-1)^(i+1) b_i. Returns -1, 0, +1.
int cf_compare(const CFExpansion& u, const CFExpansion& v);

// First n letters of the (eventually periodic) letter stream.
std::vector<int> cf_prefix(const CFExpansion& e, std::size_t n);

namespace detail {
// (attracting, repelling) fixed points of a hyperbolic matrix with c != 0.
// Attracting means |c*w + d| > 1, tested exactly.
std::pair<QuadSurd, QuadSurd> fixed_point_pair(const Mat2& a);
}  // namespace detail

}  // namespace valkit
