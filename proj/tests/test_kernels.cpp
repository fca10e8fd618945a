#include <doctest.h>

#include <cmath>
#include <vector>

#include "valkit/errors.hpp"
#include "valkit/kernels.hpp"

namespace kn = valkit::kernels;

namespace {

const std::vector<double> t_grid = {M_PI / 3, 1.1, 1.2, 5 * M_PI / 12, 1.4, 1.5,
                                    M_PI / 2, 1.7, 2 * M_PI / 3};
const std::vector<double> x_grid = {0.21, 0.5, 0.99, 1.0, 4.0 / 3.0, kn::phi, 2.0,
                                    kn::psi, 3.3, 7.0};

bool close(double a, double b, double tol = 1e-12) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace

TEST_CASE("constants") {
    CHECK(close(kn::phi, (1.0 + std::sqrt(5.0)) / 2.0, 4e-16));
    CHECK(close(kn::psi, 1.0 + std::sqrt(2.0), 4e-16));
    CHECK(close(kn::log_phi, std::log(kn::phi), 4e-16));
    CHECK(close(kn::log_psi, std::log(kn::psi), 4e-16));
    CHECK(close(kn::sqrt5, std::sqrt(5.0), 4e-16));
}

TEST_CASE("F and L basics") {
    for (double x : x_grid) {
        if (x <= 0) continue;
        CHECK(close(kn::L(1.0 / x), kn::L(x), 1e-14));
        for (double t : t_grid) CHECK(close(kn::F(1.0 / x, t), kn::F(x, t), 1e-14));
    }
    CHECK(close(kn::L(kn::phi), kn::log_phi, 1e-14));
    // L is positive and peaks at 1
    CHECK(kn::L(1.0) == doctest::Approx(0.5 * std::log(3.0)));
    CHECK(kn::L(0.3) < kn::L(1.0));
    CHECK(kn::L(5.0) < kn::L(1.0));
}

TEST_CASE("G + H = cos(t) P and the reciprocal symmetry of P") {
    for (double x : x_grid)
        for (double t : t_grid) {
            CHECK(close(kn::G(x, t) + kn::H(x, t), std::cos(t) * kn::P(x, t), 1e-12));
            if (x > 0) CHECK(close(kn::P(1.0 / x, t), kn::P(x, t), 1e-12));
        }
}

TEST_CASE("Z, Ztilde and the closed profiles") {
    for (double x : x_grid)
        for (double t : t_grid) {
            if (std::fabs(std::cos(t)) > 1e-3)
                CHECK(close(kn::Ztilde(x, t), kn::Z(x, t) / std::cos(t), 1e-9));
        }
    // Z vanishes identically at the golden ratio and at t = pi/2
    for (double t : t_grid) CHECK(std::fabs(kn::Z(kn::phi, t)) < 1e-13);
    for (double x : x_grid) CHECK(std::fabs(kn::Z(x, M_PI / 2)) < 1e-13);

    for (int k = 1; k <= 4; ++k)
        for (double t : t_grid) {
            if (t > M_PI / 2 + 1e-9) continue;  // profiles are stated on [pi/3, pi/2]
            CHECK(close(kn::ztilde_closed(k, t), kn::Ztilde(static_cast<double>(k), t),
                        1e-10));
        }
    CHECK_THROWS_AS(kn::ztilde_closed(5, 1.2), valkit::domain_error);
}

TEST_CASE("K is the psi row of P") {
    for (double t : t_grid)
        CHECK(close(kn::K(t), kn::P(kn::psi, t) + kn::P(kn::psi - 1.0, t), 1e-11));
    // negative throughout [pi/3, pi/2]
    for (double t : t_grid)
        if (t <= M_PI / 2 + 1e-12) CHECK(kn::K(t) < 0.0);
}

TEST_CASE("U, Utilde and the psi cycle") {
    const kn::PsiCycle pc = kn::psi_cycle();
    CHECK(pc.orbit[0] == doctest::Approx(kn::psi - 1.0));
    CHECK(pc.orbit[1] == doctest::Approx(kn::psi));
    CHECK(pc.s_l == doctest::Approx(2.0 * kn::log_psi));

    for (double x : {1.7, kn::phi, 2.0, kn::psi, 2.4})
        for (double t : t_grid) {
            CHECK(close(kn::U(x, t, pc), 2.0 * std::cos(t) * kn::Utilde(x, t), 1e-11));
        }

    // the psi pair cancels: U(psi) + U(psi-1) == 0 since L(psi) + L(psi-1)
    // is exactly log(psi)
    for (double t : t_grid)
        CHECK(std::fabs(kn::U(kn::psi, t, pc) + kn::U(kn::psi - 1.0, t, pc)) < 1e-12);

    // the four-term sum vanishes along x = psi
    for (double t : t_grid)
        if (t < M_PI / 2) CHECK(std::fabs(kn::Vfun(kn::psi, t)) < 1e-10);
}

TEST_CASE("closed L sums") {
    for (double x : {1.1, 4.0 / 3.0, kn::phi, 2.0, kn::psi, 3.0}) {
        CHECK(close(kn::L_pair_closed(x), kn::L(x) + kn::L(1.0 + 1.0 / x), 1e-12));
        const double sx = 2.0 + 1.0 / x;
        CHECK(close(kn::L_quad_closed(x),
                    kn::L(x) + kn::L(1.0 + 1.0 / x) + kn::L(sx) + kn::L(1.0 + 1.0 / sx),
                    1e-12));
    }
}

TEST_CASE("R, M, N") {
    for (double x : {0.1, 0.25, 0.5, 0.8, 1.0})
        for (double t : t_grid)
            CHECK(close(kn::R(x, t), 2.0 * kn::M(x * x, 2.0 * t), 1e-13));

    // stated minimum of N on [0,1/4] x [2pi/3, pi]
    CHECK(kn::N(0.0, 2.0 * M_PI / 3.0) == doctest::Approx(8.5).epsilon(1e-14));
    for (double x : {0.0, 0.1, 0.2, 0.25})
        for (double t : {2.0 * M_PI / 3.0, 2.3, 2.8, M_PI})
            CHECK(kn::N(x, t) >= 8.5 - 1e-12);
}

TEST_CASE("derivative formulas against finite differences") {
    const double h = 1e-5;
    for (double x : {0.7, 1.2, kn::phi, 2.1, kn::psi})
        for (double t : {M_PI / 3 + 0.05, 1.2, 1.4, M_PI / 2 - 0.05}) {
            const double fd_x = (kn::P(x + h, t) - kn::P(x - h, t)) / (2 * h);
            const double fd_t = (kn::P(x, t + h) - kn::P(x, t - h)) / (2 * h);
            CHECK(close(kn::dP_dx(x, t), fd_x, 1e-6));
            CHECK(close(kn::dP_dt(x, t), fd_t, 1e-6));
            const double fd_xt = (kn::dP_dx(x, t + h) - kn::dP_dx(x, t - h)) / (2 * h);
            CHECK(close(kn::dP_dxdt(x, t), fd_xt, 1e-6));
        }
}

TEST_CASE("q_poly enters the shifted slope identity") {
    // dP/dt at 1/(x-1) has the closed form
    //   -8 (x-1)^3 (x^2-2x+2) sin(2t) q(x,t) / ((x^2-2x+2)^2 - 4(x-1)^2 cos^2 t)^3
    for (double x : {4.0 / 3.0, 1.45, kn::phi})
        for (double t : {M_PI / 3, 1.2, 1.4}) {
            const double y = 1.0 / (x - 1.0);
            const double d = x * x - 2.0 * x + 2.0;
            const double c = std::cos(t);
            const double den = d * d - 4.0 * (x - 1.0) * (x - 1.0) * c * c;
            const double closed = -8.0 * std::pow(x - 1.0, 3) * d * std::sin(2.0 * t) *
                                  kn::q_poly(x, t) / (den * den * den);
            CHECK(close(kn::dP_dt(y, t), closed, 1e-11));
        }
}

TEST_CASE("pinned difference-quotient sections match the generic quotients") {
    for (double x : {4.0 / 3.0, 1.4, 1.5, 1.6, kn::phi - 1e-4}) {
        const double lo = (kn::L(kn::phi) * kn::P(x, M_PI / 3) -
                           kn::P(kn::phi, M_PI / 3) * kn::L(x)) /
                          (kn::phi - x);
        CHECK(close(kn::golden_quotient_section_low(x), lo, 1e-9));

        const double y = 1.0 / (x - 1.0);
        const double hi = (kn::P(kn::phi, M_PI / 2) * kn::L(y) -
                           kn::L(kn::phi) * kn::P(y, M_PI / 2)) /
                          (kn::phi - x);
        CHECK(close(kn::golden_quotient_section_high(x), hi, 1e-9));
    }
    // P(phi, pi/3) = -sqrt(5)/4 exactly
    CHECK(close(kn::P(kn::phi, M_PI / 3), -kn::sqrt5 / 4.0, 1e-14));
}
