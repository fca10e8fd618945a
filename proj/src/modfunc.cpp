#include "valkit/modfunc.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "valkit/errors.hpp"

namespace valkit {

namespace {

// Truncated Cauchy product, keeping powers 0..n.
std::vector<mpz_class> conv(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                            std::size_t n) {
    std::vector<mpz_class> out(n + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; i + k <= n && k < b.size(); ++k) {
            if (b[k] == 0) continue;
            out[i + k] += a[i] * b[k];
        }
    }
    return out;
}

}  // namespace

std::vector<mpz_class> j_coefficients(int n_max) {
    if (n_max < 0) throw domain_error("j_coefficients: n_max must be >= 0");
    const std::size_t n = static_cast<std::size_t>(n_max) + 1;  // powers 0..n of q

    // E4 = 1 + 240 sum sigma_3(m) q^m
    std::vector<mpz_class> sig3(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d) {
        mpz_class d3 = mpz_class(static_cast<unsigned long>(d));
        d3 = d3 * d3 * d3;
        for (std::size_t m = d; m <= n; m += d) sig3[m] += d3;
    }
    std::vector<mpz_class> e4(n + 1, 0);
    e4[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) e4[m] = 240 * sig3[m];
    std::vector<mpz_class> e4cube = conv(conv(e4, e4, n), e4, n);

    // Delta / q = (prod (1-q^m))^24; Euler product by pentagonal numbers.
    std::vector<mpz_class> euler(n + 1, 0);
    euler[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (static_cast<std::size_t>(g1) > n && static_cast<std::size_t>(g2) > n) break;
        mpz_class s = (k % 2 == 0) ? 1 : -1;
        if (static_cast<std::size_t>(g1) <= n) euler[g1] += s;
        if (static_cast<std::size_t>(g2) <= n) euler[g2] += s;
    }
    std::vector<mpz_class> e2 = conv(euler, euler, n);
    std::vector<mpz_class> e4th = conv(e2, e2, n);
    std::vector<mpz_class> e8th = conv(e4th, e4th, n);
    std::vector<mpz_class> e16th = conv(e8th, e8th, n);
    std::vector<mpz_class> eta24 = conv(e16th, e8th, n);  // power 24

    // Reciprocal power series of eta24 (leading coefficient 1).
    std::vector<mpz_class> inv(n + 1, 0);
    inv[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        mpz_class s = 0;
        for (std::size_t k = 1; k <= m; ++k) s += eta24[k] * inv[m - k];
        inv[m] = -s;
    }

    // j = q^{-1} * E4^3 * (Delta/q)^{-1}: coefficient of q^m here is c_{m-1}.
    return conv(e4cube, inv, n);
}

Reduction reduce_to_fundamental_domain(std::complex<double> tau) {
    if (!(tau.imag() > 0))
        throw domain_error("reduce_to_fundamental_domain: Im(tau) must be positive");
    Mat2 m = mat_identity();
    for (int iter = 0; iter < 4096; ++iter) {
        double k = std::nearbyint(tau.real());
        if (std::fabs(k) > 9e15)
            throw consistency_error("reduce_to_fundamental_domain: shift out of range");
        if (k != 0) {
            tau -= k;
            m = mat_T(-static_cast<long>(k)) * m;
        }
        if (std::norm(tau) >= 1.0 - 1e-14) return {tau, m};
        tau = -1.0 / tau;
        m = Mat2{0, -1, 1, 0} * m;
    }
    throw consistency_error("reduce_to_fundamental_domain: did not converge");
}

std::complex<double> mobius_point(const Mat2& m, std::complex<double> z) {
    double a = m.a.get_d(), b = m.b.get_d(), c = m.c.get_d(), d = m.d.get_d();
    return (a * z + b) / (c * z + d);
}

ModularFunction::ModularFunction(int pole, std::vector<mpz_class> coeffs, std::string name)
    : pole_(pole), coeffs_(std::move(coeffs)), name_(std::move(name)) {
    if (pole_ < 0) throw domain_error("pole_order must be >= 0");
    if (coeffs_.size() < static_cast<std::size_t>(pole_) + 1)
        throw domain_error("coefficient list too short for the stated pole order");
    coeff_d_.reserve(coeffs_.size());
    for (const mpz_class& c : coeffs_) coeff_d_.push_back(c.get_d());
    // Growth ratio of the top half of the series drives the tail bound.
    tail_growth_ = 0;
    for (std::size_t k = coeff_d_.size() / 2; k + 1 < coeff_d_.size(); ++k)
        if (coeff_d_[k] != 0)
            tail_growth_ = std::max(tail_growth_,
                                    std::fabs(coeff_d_[k + 1]) / std::fabs(coeff_d_[k]));
}

ModularFunction ModularFunction::j(int n_max) {
    return ModularFunction(1, j_coefficients(n_max), "j");
}

ModularFunction ModularFunction::one() { return ModularFunction(0, {mpz_class(1)}, "one"); }

ModularFunction ModularFunction::from_coefficients(int pole_order, std::vector<mpz_class> coeffs,
                                                   std::string name, bool validate) {
    ModularFunction f(pole_order, std::move(coeffs), std::move(name));
    if (validate) {
        ArcCheck chk = f.arc_check();
        if (!chk.ok())
            throw consistency_error(
                "arc hypothesis failed for '" + f.name_ + "': worst Im " +
                std::to_string(chk.worst_im) + ", min " + std::to_string(chk.min_value) +
                ", worst increase step " + std::to_string(chk.worst_step));
    }
    return f;
}

std::complex<double> ModularFunction::evaluate(std::complex<double> tau) const {
    Reduction red = reduce_to_fundamental_domain(tau);
    const std::complex<double> q =
        std::exp(std::complex<double>(0.0, 2.0 * M_PI) * red.tau);
    const double aq = std::abs(q);
    if (pole_ > 0 && aq == 0.0)
        throw consistency_error("evaluate: q underflowed with a pole present");

    // Horner in q for sum c_{k - pole} q^k, then multiply by q^{-pole}.
    std::complex<double> s{0.0, 0.0};
    for (std::size_t k = coeff_d_.size(); k-- > 0;) s = s * q + coeff_d_[k];
    for (int k = 0; k < pole_; ++k) s /= q;

    // Geometric tail bound from the stored growth ratio.
    if (!coeff_d_.empty() && coeff_d_.back() != 0) {
        double rho = tail_growth_ * aq;
        if (rho >= 0.9)
            throw consistency_error("evaluate: q-series tail not under control (|q| too large)");
        double tail = std::fabs(coeff_d_.back()) * std::pow(aq, double(coeff_d_.size() - 1)) *
                      rho / (1 - rho) * 2.0;
        if (tail > 1e-10 * std::max(1.0, std::abs(s)))
            throw consistency_error("evaluate: truncation tail " + std::to_string(tail) +
                                    " too large; raise n_max");
    }
    return s;
}

double ModularFunction::arc_value(double t, double tol) const {
    std::complex<double> f = evaluate(std::complex<double>(std::cos(t), std::sin(t)));
    double scale = std::max(1.0, std::abs(f));
    if (std::fabs(f.imag()) > tol * scale)
        throw consistency_error("arc_value: nonreal value at t = " + std::to_string(t));
    return f.real();
}

ModularFunction::ArcCheck ModularFunction::arc_check(int grid) const {
    ArcCheck chk;
    chk.worst_im = 0;
    chk.min_value = std::numeric_limits<double>::infinity();
    chk.worst_step = 0;
    double prev = 0;
    for (int k = 0; k <= grid; ++k) {
        double t = M_PI / 3 + (2 * M_PI / 3 - M_PI / 3) * k / grid;
        std::complex<double> f = evaluate(std::complex<double>(std::cos(t), std::sin(t)));
        double scale = std::max(1.0, std::abs(f));
        chk.worst_im = std::max(chk.worst_im, std::fabs(f.imag()) / scale);
        chk.min_value = std::min(chk.min_value, f.real());
        // increasing applies on [pi/3, pi/2] only
        if (k > 0 && t <= M_PI / 2 + 1e-12)
            chk.worst_step = std::min(chk.worst_step, f.real() - prev);
        prev = f.real();
    }
    chk.real_ok = chk.worst_im <= 1e-8;
    chk.nonneg_ok = chk.min_value >= -1e-9 * std::max(1.0, std::fabs(chk.min_value));
    chk.increasing_ok = chk.worst_step >= -1e-9;
    return chk;
}

}  // namespace valkit
