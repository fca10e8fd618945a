#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "valkit/geometry.hpp"
#include "valkit/kernels.hpp"
#include "valkit/modfunc.hpp"
#include "valkit/surd.hpp"
#include "valkit/words.hpp"

namespace valkit {

// One term w_{i,m} = m + 1/v_{i+1} of the cycle of a word (i is the 1-based
// letter index, m runs 1..a_i, v_{i+1} is the value of the rotated period
// starting at a_{i+1}).
struct OrbitTerm {
    int i;
    int m;
    QuadSurd value;  // exact
    double x;        // double image of value
};

// Everything t-independent about one word's cycle, built once and reused by
// the t-dependent sums. Always works on the even form of the word.
class CycleData {
public:
    explicit CycleData(const Word& w);

    const Word& word() const { return word_; }
    const std::vector<QuadSurd>& rotation_values() const { return v_; }
    const std::vector<double>& rotation_values_d() const { return vd_; }
    const std::vector<OrbitTerm>& orbit() const { return orbit_; }

    // log(epsilon) of the word matrix; construction cross-checks it against
    // the direct sum of L over the orbit to 1e-10.
    double s_l() const { return s_l_; }

    double s_f(double t) const;
    double s_g(double t) const;
    double s_h(double t) const;
    double s_gh(double t) const;  // s_g + s_h in one pass

private:
    Word word_;
    std::vector<QuadSurd> v_;
    std::vector<double> vd_;
    std::vector<OrbitTerm> orbit_;
    double s_l_ = 0;
};

// Rotation values v_i = value_of_period(rotation(w, i)) for an even word, via
// prefix/suffix matrix products (O(l) big-integer multiplies instead of the
// O(l^2) of calling value_of_period per rotation).
std::vector<QuadSurd> rotation_values(const Word& even_word);

// The symmetric pair (w, w_op) sharing one normalizer S_L(w) + S_L(w_op).
class HatPair {
public:
    explicit HatPair(const Word& w);
    const CycleData& fwd() const { return fwd_; }
    const CycleData& opp() const { return opp_; }
    double norm() const { return norm_; }  // = 2 log(epsilon)

    double hat(double t) const;      // sin(t) (S_F(w,t)+S_F(w_op,t)) / norm
    double hat_sym(double t) const;  // hat(t) + hat(pi - t)

private:
    CycleData fwd_, opp_;
    double norm_;
};

// Convenience single-shot wrappers (each builds the cycle data afresh).
double S_F(const Word& w, double t);
double S_G(const Word& w, double t);
double S_H(const Word& w, double t);
double S_L(const Word& w);
double hat_S(const Word& w, double t);

// D_{w1,w2}(t) = (hat S(w1,t) + hat S(w1,pi-t)) - (same for w2).
double D(const Word& w1, const Word& w2, double t);

struct ValResult {
    Word word;
    double re_val = 0;
    double im_val = 0;  // identically 0 for the formula route
    double eps_log = 0;
    std::string method;  // "formula" | "oracle"
    double error_estimate = 0;
};

// Re val_f(w) = int_{pi/3}^{pi/2} f(e^{it}) (hat S(w,t) + hat S(w,pi-t)) dt.
ValResult re_val(const ModularFunction& f, const Word& w, double tol = 1e-8);

// I_f(A) along the geodesic chain from the theta0-point of the base circle to
// its image under the word matrix, integrated letter by letter: the k-th
// segment carries f sqrt(D)/Q_{k-1} between the circle tops, with Q_k the
// exact pullback of the fixed-point form under the partial word products.
// Independent of theta0 (checked in tests); f == 1 gives 2 log(epsilon).
std::complex<double> cycle_integral_direct(const ModularFunction& f, const Word& w,
                                           double theta0 = M_PI / 2, double tol = 1e-9);

// val_f(w) = I_f(A) / I_1(A) with I_1 = 2 log(epsilon); method "oracle".
ValResult val_complex(const ModularFunction& f, const Word& w, double theta0 = M_PI / 2,
                      double tol = 1e-9);

// S_U(w,t) = sum over the orbit of U(w_{i,m}, t), for Markov words, plus the
// rearranged form: part1 collects odd i with a_{i-1} = 2 (four Mobius images
// of v_i), part2 odd i with a_{i-1} = 1 (two images); total = part1 + part2.
struct SUSplit {
    double total = 0, part1 = 0, part2 = 0;
};
SUSplit S_U(const CycleData& data, double t);
SUSplit S_U(const Word& w, double t);

}  // namespace valkit
