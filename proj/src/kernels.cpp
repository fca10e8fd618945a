#include "valkit/kernels.hpp"

#include "valkit/errors.hpp"

namespace valkit::kernels {

double M(double x, double t) {
    double c = std::cos(t), c2 = std::cos(2.0 * t);
    double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    double den = x2 + 1.0 - 2.0 * x * c;
    double num = 12.0 * x3 * c + 16.0 * x2 * c + 2.0 * x2 * c2 + 12.0 * x * c + x4 -
                 8.0 * x3 - 28.0 * x2 - 8.0 * x + 1.0;
    return num / (den * den * den);
}

double R(double x, double t) { return 2.0 * M(x * x, 2.0 * t); }

double N(double x, double t) {
    double c = std::cos(t), c2 = std::cos(2.0 * t), c3 = std::cos(3.0 * t);
    double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
    return 19.0 * x4 * c + 32.0 * x3 * c + 4.0 * x3 * c2 + 39.0 * x2 * c - 8.0 * x2 * c2 -
           x2 * c3 - 14.0 * x * c2 - 9.0 * c + x5 - 12.0 * x4 - 58.0 * x3 - 16.0 * x2 +
           19.0 * x + 4.0;
}

double p_poly(double x, double t) {
    double c2 = std::cos(2.0 * t), c4 = std::cos(4.0 * t);
    double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4;
    return 9.0 + 9.0 * x8 + (4.0 * x2 + 4.0 * x6) * (-4.0 + 7.0 * c2) +
           2.0 * x4 * (-38.0 + 16.0 * c2 + c4);
}

double q_poly(double x, double t) {
    double c2 = std::cos(2.0 * t), x2 = x * x;
    return 2.0 * (x - 1.0) * (x - 1.0) * c2 + 3.0 * x2 * x2 - 12.0 * x2 * x + 10.0 * x2 +
           4.0 * x - 2.0;
}

double dP_dx(double x, double t) {
    double c2 = std::cos(2.0 * t), c4 = std::cos(4.0 * t);
    double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4;
    double den = 1.0 + x4 - 2.0 * x2 * c2;
    double num = 1.0 + x8 + (4.0 * x2 + 4.0 * x6) * (-2.0 + 3.0 * c2) +
                 2.0 * x4 * (-14.0 + 8.0 * c2 + c4);
    return 2.0 * (1.0 - x2) * num / (den * den * den);
}

double dP_dt(double x, double t) {
    double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
    double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    double den = x4 - 2.0 * c2 * x2 + 1.0;
    return -8.0 * x3 * s2 * (x2 + 1.0) * (2.0 * x2 * c2 - 8.0 * x2 + 3.0 * x4 + 3.0) /
           (den * den * den);
}

double dP_dxdt(double x, double t) {
    double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
    double x2 = x * x, x4 = x2 * x2;
    double den = 1.0 + x4 - 2.0 * x2 * c2;
    double den2 = den * den;
    return 8.0 * x2 * (x2 - 1.0) * s2 * p_poly(x, t) / (den2 * den2);
}

double ztilde_closed(int k, double t) {
    double c = std::cos(t), c2 = c * c;
    double lead = sqrt5 * (4.0 * c2 - 3.0) / ((4.0 * c2 - 5.0) * (4.0 * c2 - 5.0));
    switch (k) {
        case 1:
            return log_phi / (c2 - 1.0) - std::log(3.0) * lead;
        case 2: {
            double den = 16.0 * c2 - 25.0;
            return log_phi * (320.0 * c2 - 140.0) / (den * den) -
                   std::log(7.0 / 3.0) * lead;
        }
        case 3: {
            double den = 9.0 * c2 - 25.0;
            return log_phi * (135.0 * c2 + 105.0) / (den * den) -
                   std::log(13.0 / 7.0) * lead;
        }
        case 4: {
            double den = 64.0 * c2 - 289.0;
            return log_phi * (8704.0 * c2 + 21896.0) / (den * den) -
                   std::log(21.0 / 13.0) * lead;
        }
        default:
            throw domain_error("ztilde_closed: k must be 1..4");
    }
}

double K(double t) {
    double c = std::cos(t), c2 = c * c, c4 = c2 * c2, c6 = c4 * c2;
    double den = 8.0 * c4 - 25.0 * c2 + 18.0;
    return 7.0 * std::sqrt(2.0) * (63.0 * c2 - 54.0 * c4 + 16.0 * c6 - 24.0) / (den * den);
}

PsiCycle psi_cycle() {
    // orbit of [2,2]: w_{i,1} = psi - 1 = sqrt 2, w_{i,2} = psi, i = 1,2
    return {{psi - 1.0, psi, psi - 1.0, psi}, 2.0 * log_psi};
}

double U(double x, double t, const PsiCycle& data) {
    double s_gh = 0;
    for (double w : data.orbit) s_gh += G(w, t) + H(w, t);
    return L(x) * s_gh - data.s_l * (G(x, t) + H(x, t));
}

double Vfun(double x, double t) {
    double px = 1.0 + 1.0 / x, sx = 2.0 + 1.0 / x;
    return Utilde(x, t) + Utilde(px, t) + Utilde(sx, t) + Utilde(1.0 + 1.0 / sx, t);
}

double L_pair_closed(double x) {
    double x2 = x * x;
    return 0.5 * std::log((3.0 * x2 + 3.0 * x + 1.0) / (x2 - x + 1.0));
}

double L_quad_closed(double x) {
    double x2 = x * x;
    return 0.5 * std::log((19.0 * x2 + 15.0 * x + 3.0) / (x2 - x + 1.0));
}

double golden_quotient_section_low(double x) {
    const double x2 = x * x, x4 = x2 * x2;
    const double lam = x4 + x2 + 1.0;
    const double num = sqrt5 / 8.0 * std::log((x2 + x + 1.0) / (x2 - x + 1.0)) +
                       2.0 * x * log_phi * (x2 + 1.0) * (x4 - 5.0 * x2 + 1.0) / (lam * lam);
    return num / (phi - x);
}

double golden_quotient_section_high(double x) {
    const double x2 = x * x;
    const double d = x2 - 2.0 * x + 2.0;
    const double poly =
        x2 * x2 * x - 5.0 * x2 * x2 + 4.0 * x2 * x + 8.0 * x2 - 12.0 * x + 4.0;
    const double num =
        -3.0 * (47.0 + 21.0 * sqrt5) * std::log((x2 - x + 1.0) / (x2 - 3.0 * x + 3.0)) /
            (525.0 + 235.0 * sqrt5) -
        2.0 * poly * log_phi / (d * d * d);
    return num / (phi - x);
}

}  // namespace valkit::kernels
