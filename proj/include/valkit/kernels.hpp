#pragma once

#include <array>
#include <cmath>

// The elementary kernels entering the cycle sums, and the auxiliary functions
// used by the certification suite. Domains: x > 0 throughout; t in
// [pi/3, 2pi/3] unless a tighter interval is stated. Everything is invariant
// or anti-symmetric under t -> pi - t in documented ways; no function here
// allocates.

namespace valkit::kernels {

inline constexpr double phi = 1.6180339887498948482;      // (1+sqrt 5)/2
inline constexpr double psi = 2.4142135623730950488;      // 1+sqrt 2
inline constexpr double log_phi = 0.48121182505960344750;  // log(phi)
inline constexpr double log_psi = 0.88137358701954302523;  // log(psi)
inline constexpr double sqrt5 = 2.2360679774997896964;

// F(x,t) = x / (1 + x^2 - 2x cos t): the Poisson-style pairing kernel.
inline double F(double x, double t) {
    return x / (1.0 + x * x - 2.0 * x * std::cos(t));
}

// L(x) = (1/2) log((x^2+x+1)/(x^2-x+1)); L(1/x) = L(x), L(phi) = log(phi).
inline double L(double x) {
    double x2 = x * x;
    return 0.5 * std::log((x2 + x + 1.0) / (x2 - x + 1.0));
}

// G/H: t-derivative split of F; G(x,t) + H(x,t) = cos(t) P(x,t).
inline double G(double x, double t) {
    double c = std::cos(t), x2 = x * x;
    double den = x2 + 1.0 - 2.0 * x * c;
    return x * ((x2 + 1.0) * c - 2.0 * x) / (den * den);
}

inline double H(double x, double t) {
    double c = std::cos(t), x2 = x * x;
    double den = x2 + 1.0 + 2.0 * x * c;
    return x * ((x2 + 1.0) * c + 2.0 * x) / (den * den);
}

// P(x,t) = (G+H)/cos t as a single rational expression, regular at t = pi/2.
inline double P(double x, double t) {
    double c2 = std::cos(2.0 * t), x2 = x * x, x4 = x2 * x2;
    double den = x4 + 1.0 - 2.0 * x2 * c2;
    return 2.0 * x * (x2 + 1.0) * (2.0 * x2 * c2 + x4 - 4.0 * x2 + 1.0) / (den * den);
}

// Z(x,t) = log(phi) (G+H)(x,t) - (G+H)(phi,t) L(x): the good/bad-term kernel.
inline double Z(double x, double t) {
    return log_phi * (G(x, t) + H(x, t)) - (G(phi, t) + H(phi, t)) * L(x);
}

// Ztilde = Z / cos t, written so that t = pi/2 is regular.
inline double Ztilde(double x, double t) { return log_phi * P(x, t) - P(phi, t) * L(x); }

double R(double x, double t);  // = 2 M(x^2, 2t)
double M(double x, double t);
double N(double x, double t);  // numerator of -d/dx M; >= 0 on [0,1/4] x [2pi/3,pi]

double p_poly(double x, double t);  // numerator polynomial of d^2P/dxdt
double q_poly(double x, double t);  // numerator polynomial of dP/dt(1/(x-1), t)

double dP_dx(double x, double t);
double dP_dt(double x, double t);
double dP_dxdt(double x, double t);

// Closed forms of Ztilde(k, t) for k = 1..4 (independent route, for checks).
double ztilde_closed(int k, double t);

// K(t) = P(psi,t) + P(psi-1,t) in closed form; negative on [pi/3, pi/2].
double K(double t);

// Utilde(x,t) = L(x) K(t) - log(psi) P(x,t) = U(x,t) / (2 cos t).
inline double Utilde(double x, double t) { return L(x) * K(t) - log_psi * P(x, t); }

// The exact cycle data of psi = [2,2,...]: orbit terms (psi-1, psi) each twice
// and the normalizer S_L = 2 log(psi).
struct PsiCycle {
    std::array<double, 4> orbit;
    double s_l;
};
PsiCycle psi_cycle();

// U(x,t) = L(x) (S_G(psi,t)+S_H(psi,t)) - S_L(psi) (G+H)(x,t) == 2 cos(t) Utilde.
double U(double x, double t, const PsiCycle& data);

// V(x,t) = sum of Utilde over {x, Phi x, Psi x, Phi Psi x} with
// Phi x = 1 + 1/x, Psi x = 2 + 1/x; vanishes at x = psi.
double Vfun(double x, double t);

// Two-term and four-term L identities (certification cross-checks):
// L(x) + L(1 + 1/x) and L-sum over the V orbit, in closed form.
double L_pair_closed(double x);
double L_quad_closed(double x);

// t = pi/3 and t = pi/2 sections of the two golden-ratio difference
// quotients, in closed form; extremal at x = 4/3 on [4/3, phi).
double golden_quotient_section_low(double x);
double golden_quotient_section_high(double x);

}  // namespace valkit::kernels
