#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "valkit/mat2.hpp"

namespace valkit {

// Exact Fourier coefficients c_{-1}, c_0, ..., c_{n_max} of the j-function
// (c_{-1} = 1, c_0 = 744, c_1 = 196884, ...), computed from integer q-series:
// j = E4^3 / Delta with Delta/q = (Euler product)^24 via pentagonal numbers.
std::vector<mpz_class> j_coefficients(int n_max);

struct Reduction {
    std::complex<double> tau;  // in the standard fundamental domain (up to ~1e-14)
    Mat2 m;                    // tau = m(input)
};

// Shift/invert loop; the |tau| >= 1 test is applied with a small tolerance
// *before* inverting so boundary points don't ping-pong.
Reduction reduce_to_fundamental_domain(std::complex<double> tau);

// (a z + b)/(c z + d) in doubles; entries must fit a double.
std::complex<double> mobius_point(const Mat2& m, std::complex<double> z);

// A weakly holomorphic modular function given by finitely many principal-part
// and regular Fourier coefficients: f = sum_{n = -pole}^{N} c_n q^n. The arc
// hypothesis of the value theory -- f(e^{it}) real, non-negative and
// increasing on t in [pi/3, pi/2] -- is validated numerically when requested.
class ModularFunction {
public:
    static ModularFunction j(int n_max = 60);
    static ModularFunction one();  // f == 1
    static ModularFunction from_coefficients(int pole_order, std::vector<mpz_class> coeffs,
                                             std::string name, bool validate = true);

    std::complex<double> evaluate(std::complex<double> tau) const;

    // f(e^{it}); checks |Im| <= tol * scale and (for the hypothesis-carrying
    // functions) Re >= -tol * scale, then returns the real part.
    double arc_value(double t, double tol = 1e-8) const;

    struct ArcCheck {
        bool real_ok = false, nonneg_ok = false, increasing_ok = false;
        double worst_im = 0, min_value = 0, worst_step = 0;
        bool ok() const { return real_ok && nonneg_ok && increasing_ok; }
    };
    ArcCheck arc_check(int grid = 1000) const;

    const std::string& name() const { return name_; }
    int pole_order() const { return pole_; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

private:
    ModularFunction(int pole, std::vector<mpz_class> coeffs, std::string name);

    int pole_ = 0;
    std::vector<mpz_class> coeffs_;     // c_{-pole} .. c_N
    std::vector<double> coeff_d_;       // same, as doubles, for summation
    double tail_growth_ = 0;            // sup |c_{n+1}/c_n| over the top half
    std::string name_;
};

}  // namespace valkit
