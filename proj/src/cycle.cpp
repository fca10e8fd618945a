#include "valkit/cycle.hpp"

#include <algorithm>
#include <utility>

#include "valkit/errors.hpp"
#include "valkit/quadrature.hpp"

namespace valkit {

std::vector<QuadSurd> rotation_values(const Word& e) {
    if (e.size() % 2 != 0) throw domain_error("rotation_values: even word required");
    const std::size_t l = e.size();
    std::vector<Mat2> mats(l);
    for (std::size_t k = 0; k < l; ++k)
        mats[k] = (k % 2 == 0) ? mat_T(e[k]) : mat_V(e[k]);
    std::vector<Mat2> pre(l + 1), suf(l + 1);
    pre[0] = mat_identity();
    suf[l] = mat_identity();
    for (std::size_t k = 0; k < l; ++k) pre[k + 1] = pre[k] * mats[k];
    for (std::size_t k = l; k-- > 0;) suf[k] = mats[k] * suf[k + 1];

    std::vector<QuadSurd> out;
    out.reserve(l);
    for (std::size_t i = 0; i < l; ++i) {
        Mat2 rot = suf[i] * pre[i];  // conjugate of the word matrix, cut at letter i+1
        if (i % 2 != 0) {
            // the cut starts with a V factor; swap conjugation restores the
            // T-first convention and maps the fixed point 1/v to v
            rot = Mat2{rot.d, rot.c, rot.b, rot.a};
        }
        QuadSurd v = detail::fixed_point_pair(rot).first;
        if (v.compare(mpz_class(1)) <= 0)
            throw consistency_error("rotation_values: fixed point not > 1");
        out.push_back(std::move(v));
    }
    return out;
}

CycleData::CycleData(const Word& w) : word_(even_form(w)) {
    const std::size_t l = word_.size();
    v_ = valkit::rotation_values(word_);
    vd_.reserve(l);
    for (const QuadSurd& v : v_) vd_.push_back(v.to_double());

    for (std::size_t i = 1; i <= l; ++i) {
        QuadSurd inv = v_[i % l].reciprocal();  // 1 / v_{i+1}, cyclically
        for (int m = 1; m <= word_[i - 1]; ++m) {
            QuadSurd wim = inv.plus_int(m);
            double x = wim.to_double();
            orbit_.push_back({static_cast<int>(i), m, std::move(wim), x});
        }
    }

    s_l_ = epsilon_log(word_to_matrix(word_));
    double direct = 0;
    for (const OrbitTerm& o : orbit_) direct += kernels::L(o.x);
    if (std::fabs(direct - s_l_) > 1e-10 * std::max(1.0, std::fabs(s_l_)))
        throw consistency_error("cycle of " + word_str(word_) + ": sum of L over the orbit (" +
                                std::to_string(direct) + ") != log(epsilon) (" +
                                std::to_string(s_l_) + ")");
}

double CycleData::s_f(double t) const {
    double s = 0;
    for (const OrbitTerm& o : orbit_) s += kernels::F(o.x, t);
    return s;
}

double CycleData::s_g(double t) const {
    double s = 0;
    for (const OrbitTerm& o : orbit_) s += kernels::G(o.x, t);
    return s;
}

double CycleData::s_h(double t) const {
    double s = 0;
    for (const OrbitTerm& o : orbit_) s += kernels::H(o.x, t);
    return s;
}

double CycleData::s_gh(double t) const {
    double s = 0;
    for (const OrbitTerm& o : orbit_) s += kernels::G(o.x, t) + kernels::H(o.x, t);
    return s;
}

HatPair::HatPair(const Word& w) : fwd_(w), opp_(opposite(even_form(w))) {
    norm_ = fwd_.s_l() + opp_.s_l();
    // the reversed period has the transposed matrix class, same trace
    if (std::fabs(fwd_.s_l() - opp_.s_l()) > 1e-10 * std::max(1.0, norm_))
        throw consistency_error("HatPair: S_L(w) != S_L(w_op)");
}

double HatPair::hat(double t) const {
    return std::sin(t) * (fwd_.s_f(t) + opp_.s_f(t)) / norm_;
}

double HatPair::hat_sym(double t) const { return hat(t) + hat(M_PI - t); }

double S_F(const Word& w, double t) { return CycleData(w).s_f(t); }
double S_G(const Word& w, double t) { return CycleData(w).s_g(t); }
double S_H(const Word& w, double t) { return CycleData(w).s_h(t); }
double S_L(const Word& w) { return CycleData(w).s_l(); }
double hat_S(const Word& w, double t) { return HatPair(w).hat(t); }

double D(const Word& w1, const Word& w2, double t) {
    HatPair a(w1), b(w2);
    return a.hat_sym(t) - b.hat_sym(t);
}

ValResult re_val(const ModularFunction& f, const Word& w, double tol) {
    HatPair h(w);
    auto integrand = [&](double t) { return f.arc_value(t) * h.hat_sym(t); };
    QuadOptions opt;
    opt.tol = tol;
    auto qr = integrate(integrand, M_PI / 3, M_PI / 2, opt);
    ValResult out;
    out.word = w;
    out.re_val = qr.value;
    out.im_val = 0;
    out.eps_log = h.fwd().s_l();
    out.method = "formula";
    out.error_estimate = qr.error;
    return out;
}

namespace {

struct FormZ {
    mpz_class a, b, c;
    bool operator==(const FormZ& o) const { return a == o.a && b == o.b && c == o.c; }
};

// (Q|M)(x,y) = Q(ax + by, cx + dy), exact.
FormZ transform(const FormZ& f, const Mat2& m) {
    return {f.a * m.a * m.a + f.b * m.a * m.c + f.c * m.c * m.c,
            2 * f.a * m.a * m.b + f.b * (m.a * m.d + m.b * m.c) + 2 * f.c * m.c * m.d,
            f.a * m.b * m.b + f.b * m.b * m.d + f.c * m.d * m.d};
}

struct Circle {
    double center, radius;
};

// Geodesic semicircle of an indefinite form: endpoints at the real roots.
// Computed through big floats so huge coefficients can't overflow on the way.
Circle circle_of(const FormZ& f) {
    mpz_class disc = f.b * f.b - 4 * f.a * f.c;
    if (disc <= 0) throw consistency_error("circle_of: form is not indefinite");
    mpf_class fa(f.a, 128), fb(f.b, 128), fd(disc, 128);
    mpf_class c = -fb / (2 * fa);
    mpf_class r = sqrt(fd) / abs(2 * fa);
    Circle out{c.get_d(), r.get_d()};
    if (!std::isfinite(out.center) || !std::isfinite(out.radius) || out.radius <= 0)
        throw consistency_error("circle_of: circle does not fit in double range");
    return out;
}

struct DirectResult {
    std::complex<double> value;
    double error;
};

DirectResult cycle_integral_direct_impl(const ModularFunction& f, const Word& w,
                                        double theta0, double tol) {
    if (!(theta0 > 0 && theta0 < M_PI))
        throw domain_error("cycle_integral_direct: theta0 must be in (0, pi)");
    Word e = even_form(w);
    const std::size_t l = e.size();
    Mat2 a = word_to_matrix(e);
    FixedPoints fp = fixed_points(a);

    std::vector<Mat2> mats(l);
    for (std::size_t k = 0; k < l; ++k)
        mats[k] = (k % 2 == 0) ? mat_T(e[k]) : mat_V(e[k]);
    std::vector<FormZ> forms(l + 1);
    forms[0] = {fp.form.a, fp.form.b, fp.form.c};
    for (std::size_t k = 0; k < l; ++k) forms[k + 1] = transform(forms[k], mats[k]);
    if (!(forms[l] == forms[0]))
        throw consistency_error("cycle_integral_direct: form chain did not close");

    mpf_class sd(fp.form.disc(), 128);
    const double sqrt_disc = mpf_class(sqrt(sd), 128).get_d();
    if (!std::isfinite(sqrt_disc))
        throw consistency_error("cycle_integral_direct: discriminant too large for double");

    std::complex<double> total{0, 0};
    double err = 0;
    for (std::size_t k = 0; k < l; ++k) {
        const Circle circ = circle_of(forms[k]);
        const double qa = forms[k].a.get_d(), qb = forms[k].b.get_d(),
                     qc = forms[k].c.get_d();

        const double th_start = (k == 0) ? theta0 : M_PI / 2;
        const Circle next = circle_of(forms[k + 1]);
        const double th_next = (k + 1 == l) ? theta0 : M_PI / 2;
        const std::complex<double> z_next{next.center + next.radius * std::cos(th_next),
                                          next.radius * std::sin(th_next)};
        const std::complex<double> z_end = mobius_point(mats[k], z_next);
        const double dist = std::abs(z_end - std::complex<double>(circ.center, 0.0));
        if (std::fabs(dist - circ.radius) > 1e-8 * circ.radius)
            throw consistency_error("cycle_integral_direct: mapped endpoint left the circle");
        const double th_end = std::atan2(z_end.imag(), z_end.real() - circ.center);

        auto g = [&](double th) -> std::complex<double> {
            std::complex<double> tau{circ.center + circ.radius * std::cos(th),
                                     circ.radius * std::sin(th)};
            std::complex<double> qv = (qa * tau + qb) * tau + qc;
            std::complex<double> dtau =
                circ.radius * std::complex<double>(-std::sin(th), std::cos(th));
            return f.evaluate(tau) * sqrt_disc / qv * dtau;
        };
        QuadOptions opt;
        opt.tol = tol / static_cast<double>(l);
        auto qr = integrate(g, th_start, th_end, opt);
        total += qr.value;
        err += qr.error;
    }
    return {total, err};
}

}  // namespace

std::complex<double> cycle_integral_direct(const ModularFunction& f, const Word& w,
                                           double theta0, double tol) {
    return cycle_integral_direct_impl(f, w, theta0, tol).value;
}

ValResult val_complex(const ModularFunction& f, const Word& w, double theta0, double tol) {
    DirectResult dr = cycle_integral_direct_impl(f, w, theta0, tol);
    const double i1 = 2.0 * epsilon_log(w);
    ValResult out;
    out.word = w;
    out.re_val = dr.value.real() / i1;
    out.im_val = dr.value.imag() / i1;
    out.eps_log = i1 / 2.0;
    out.method = "oracle";
    out.error_estimate = dr.error / i1;
    return out;
}

SUSplit S_U(const CycleData& data, double t) {
    const Word& e = data.word();
    if (!is_markov_word(e)) throw domain_error("S_U: letters must lie in {1,2}");
    const kernels::PsiCycle pc = kernels::psi_cycle();
    SUSplit out;
    for (const OrbitTerm& o : data.orbit()) out.total += kernels::U(o.x, t, pc);

    const std::size_t l = e.size();
    const std::vector<double>& v = data.rotation_values_d();
    for (std::size_t i = 1; i <= l; i += 2) {  // odd 1-based positions
        const double vi = v[i - 1];
        const int prev = e[(i + l - 2) % l];  // a_{i-1} with a_0 = a_l
        const double u_id = kernels::U(vi, t, pc);
        const double u_phi = kernels::U(1.0 + 1.0 / vi, t, pc);
        if (prev == 2) {
            const double psix = 2.0 + 1.0 / vi;
            out.part1 += u_id + kernels::U(psix, t, pc) + u_phi +
                         kernels::U(1.0 + 1.0 / psix, t, pc);
        } else {
            out.part2 += u_id + u_phi;
        }
    }
    return out;
}

SUSplit S_U(const Word& w, double t) { return S_U(CycleData(w), t); }

}  // namespace valkit
