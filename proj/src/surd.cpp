#include "valkit/surd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "valkit/errors.hpp"

namespace valkit {

namespace {

int sgn_mpz(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

// Exact sign of P + Q*sqrt(d) for d > 0 (d need not be squarefree).
int sign2(const mpz_class& P, const mpz_class& Q, const mpz_class& d) {
    int sp = sgn_mpz(P), sq = sgn_mpz(Q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    mpz_class diff = P * P - Q * Q * d;  // sign decides which magnitude wins
    int c = sgn_mpz(diff);
    return c == 0 ? 0 : (c > 0 ? sp : sq);
}

// Exact sign of A + B*sqrt(d1) + C*sqrt(d2).
int sign3(const mpz_class& A, const mpz_class& B, const mpz_class& d1,
          const mpz_class& C, const mpz_class& d2) {
    int su = sign2(A, B, d1);  // U = A + B*sqrt(d1)
    int sv = sgn_mpz(C);       // V = C*sqrt(d2)
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // sign(U + V) = sign(U^2 - V^2) * sign(U) when signs oppose;
    // U^2 - V^2 = A^2 + B^2 d1 - C^2 d2 + 2AB*sqrt(d1).
    int c = sign2(A * A + B * B * d1 - C * C * d2, 2 * A * B, d1);
    return c == 0 ? 0 : (c > 0 ? su : sv);
}

std::size_t value_bits(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

}  // namespace

QuadSurd::QuadSurd(mpz_class p, mpz_class q, mpz_class r, mpz_class d,
                   unsigned long square_extract_limit)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (sgn_mpz(r_) == 0) throw domain_error("surd denominator r must be nonzero");
    if (sgn_mpz(d_) <= 0) throw domain_error("surd radicand d must be positive");
    if (sgn_mpz(q_) == 0)
        throw rational_value_error("q = 0: value is rational, not a quadratic irrational");
    if (mpz_perfect_square_p(d_.get_mpz_t()))
        throw rational_value_error("radicand " + d_.get_str() + " is a perfect square");
    for (unsigned long f = 2; f <= square_extract_limit; f = (f == 2 ? 3 : f + 2)) {
        mpz_class f2 = mpz_class(f) * f;
        if (f2 > d_) break;
        while (mpz_divisible_p(d_.get_mpz_t(), f2.get_mpz_t())) {
            d_ /= f2;
            q_ *= f;
        }
    }
    reduce_gcd_and_sign();
}

QuadSurd::QuadSurd(raw_tag, mpz_class p, mpz_class q, mpz_class r, mpz_class d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    reduce_gcd_and_sign();
}

void QuadSurd::reduce_gcd_and_sign() {
    if (sgn_mpz(r_) < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

int QuadSurd::sign() const { return sign2(p_, q_, d_); }

int QuadSurd::compare(const QuadSurd& other) const {
    // sign of (p1 r2 - p2 r1) + q1 r2 sqrt(d1) - q2 r1 sqrt(d2), both r > 0
    mpz_class a = p_ * other.r_ - other.p_ * r_;
    if (d_ == other.d_) return sign2(a, q_ * other.r_ - other.q_ * r_, d_);
    return sign3(a, q_ * other.r_, d_, -(other.q_ * r_), other.d_);
}

int QuadSurd::compare(const mpz_class& m) const { return sign2(p_ - m * r_, q_, d_); }

QuadSurd QuadSurd::galois() const { return {raw_tag{}, p_, -q_, r_, d_}; }

QuadSurd QuadSurd::negated() const { return {raw_tag{}, -p_, -q_, r_, d_}; }

QuadSurd QuadSurd::reciprocal() const {
    // r/(p + q sqrt(d)) = (r p - r q sqrt(d)) / (p^2 - q^2 d)
    mpz_class n = p_ * p_ - q_ * q_ * d_;  // nonzero: the value is irrational
    return {raw_tag{}, r_ * p_, -(r_ * q_), n, d_};
}

QuadSurd QuadSurd::plus_int(const mpz_class& m) const {
    return {raw_tag{}, p_ + m * r_, q_, r_, d_};
}

QuadSurd QuadSurd::times(const QuadSurd& other) const {
    if (d_ != other.d_)
        throw domain_error("times: radicands differ (" + d_.get_str() + " vs " +
                           other.d_.get_str() + ")");
    return {raw_tag{}, p_ * other.p_ + q_ * other.q_ * d_, p_ * other.q_ + q_ * other.p_,
            r_ * other.r_, d_};
}

mpz_class QuadSurd::floor_int() const {
    mpz_class s;
    {
        mpz_class t = q_ * q_ * d_;
        mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());  // floor of |q| sqrt(d)
    }
    // q sqrt(d) is never an integer here, so floor(q sqrt(d)) = -s-1 for q < 0.
    mpz_class qs = sgn_mpz(q_) > 0 ? s : mpz_class(-s - 1);
    mpz_class cand, num = p_ + qs;
    mpz_fdiv_q(cand.get_mpz_t(), num.get_mpz_t(), r_.get_mpz_t());
    while (compare(mpz_class(cand + 1)) >= 0) ++cand;
    while (compare(cand) < 0) --cand;
    return cand;
}

double QuadSurd::to_double() const {
    // Working precision must absorb the worst-case cancellation p + q sqrt(d)
    // (components of Markov words reach hundreds of bits while the value is ~1).
    std::size_t bits = std::max({value_bits(p_), value_bits(q_) + value_bits(d_) / 2 + 1,
                                 value_bits(r_)}) +
                       64;
    mpf_class fp(p_, bits), fq(q_, bits), fr(r_, bits), fd(d_, bits);
    mpf_class val = (fp + fq * sqrt(fd)) / fr;
    return val.get_d();
}

double QuadSurd::log_value() const {
    std::size_t bits = std::max({value_bits(p_), value_bits(q_) + value_bits(d_) / 2 + 1,
                                 value_bits(r_)}) +
                       64;
    mpf_class fp(p_, bits), fq(q_, bits), fr(r_, bits), fd(d_, bits);
    mpf_class val = (fp + fq * sqrt(fd)) / fr;
    if (sgn(val) <= 0) throw domain_error("log_value: value is not positive");
    long ex = 0;
    double mant = mpf_get_d_2exp(&ex, val.get_mpf_t());  // val = mant * 2^ex, mant in [1/2,1)
    return std::log(mant) + static_cast<double>(ex) * M_LN2;
}

std::string QuadSurd::str() const {
    return "(" + p_.get_str() + (sgn_mpz(q_) < 0 ? "" : "+") + q_.get_str() + "*sqrt(" +
           d_.get_str() + "))/" + r_.get_str();
}

QuadSurd normalize(const mpz_class& p, const mpz_class& q, const mpz_class& r,
                   const mpz_class& d, unsigned long square_extract_limit) {
    return QuadSurd(p, q, r, d, square_extract_limit);
}

QuadSurd galois_conjugate(const QuadSurd& w) { return w.galois(); }

QuadSurd mobius_apply(const Mat2& m, const QuadSurd& w) {
    // (a w + b)/(c w + d) with w = (p + q sqrt(D))/r: numerator and denominator
    // share the factor 1/r, so work with A + B sqrt(D) over C + D sqrt(D).
    mpz_class na = m.a * w.p() + m.b * w.r(), nb = m.a * w.q();
    mpz_class dc = m.c * w.p() + m.d * w.r(), dd = m.c * w.q();
    mpz_class den = dc * dc - dd * dd * w.d();
    if (sgn_mpz(den) == 0) throw domain_error("mobius_apply: denominator vanishes");
    return QuadSurd(na * dc - nb * dd * w.d(), nb * dc - na * dd, den, w.d());
}

CFExpansion cf_expand(const QuadSurd& w, std::size_t max_steps) {
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<int> letters;
    QuadSurd x = w;
    for (std::size_t k = 0; k < max_steps; ++k) {
        std::string key =
            x.p().get_str() + '|' + x.q().get_str() + '|' + x.r().get_str() + '|' + x.d().get_str();
        auto [it, inserted] = seen.emplace(std::move(key), k);
        if (!inserted) {
            std::size_t j = it->second;
            CFExpansion e;
            e.preperiod.assign(letters.begin(), letters.begin() + j);
            e.period.assign(letters.begin() + j, letters.end());
            return e;
        }
        mpz_class a = x.floor_int();
        if (!a.fits_sint_p()) throw overflow_error("cf_expand: letter does not fit in int");
        letters.push_back(static_cast<int>(a.get_si()));
        x = x.plus_int(-a).reciprocal();
    }
    throw overflow_error("cf_expand: state bound exceeded after " +
                         std::to_string(max_steps) + " steps");
}

QuadSurd value_of_period(const Word& word) {
    Word e = even_form(word);
    Mat2 a = mat_identity();
    for (std::size_t k = 0; k < e.size(); ++k)
        a = a * (k % 2 == 0 ? mat_T(e[k]) : mat_V(e[k]));
    auto [att, rep] = detail::fixed_point_pair(a);
    (void)rep;
    if (att.compare(mpz_class(1)) <= 0)
        throw consistency_error("value_of_period: fixed point of " + word_str(word) +
                                " is not > 1");
    return att;
}

std::vector<int> cf_prefix(const CFExpansion& e, std::size_t n) {
    if (e.period.empty()) throw domain_error("cf_prefix: empty period");
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(k < e.preperiod.size()
                          ? e.preperiod[k]
                          : e.period[(k - e.preperiod.size()) % e.period.size()]);
    return out;
}

int cf_compare(const CFExpansion& u, const CFExpansion& v) {
    if (u.period.empty() || v.period.empty())
        throw domain_error("cf_compare: expansions must be periodic");
    std::size_t maxpre = std::max(u.preperiod.size(), v.preperiod.size());
    std::size_t l = std::lcm(u.period.size(), v.period.size());
    std::size_t n = maxpre + 2 * l + 1;
    if (n > 2'000'000) throw overflow_error("cf_compare: comparison window too large");
    std::vector<int> a = cf_prefix(u, n), b = cf_prefix(v, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] == b[k]) continue;
        // 1-based alternating rule: at the first difference, smaller letter at
        // odd position means smaller value; at even position, larger value.
        bool odd_position = (k % 2 == 0);
        return (a[k] < b[k]) == odd_position ? -1 : 1;
    }
    // Agreement over a full common-period window past both preperiods means
    // the streams coincide forever.
    return 0;
}

namespace detail {

std::pair<QuadSurd, QuadSurd> fixed_point_pair(const Mat2& a) {
    if (a.det() != 1) throw not_hyperbolic_error("fixed_point_pair: det must be +1");
    if (sgn_mpz(a.c) == 0)
        throw not_hyperbolic_error("fixed_point_pair: c = 0 fixes infinity");
    mpz_class tr = a.trace();
    mpz_class disc = tr * tr - 4;
    if (disc <= 0) throw not_hyperbolic_error("fixed_point_pair: |trace| <= 2");

    QuadSurd wp(a.a - a.d, 1, 2 * a.c, disc);
    QuadSurd wm(a.a - a.d, -1, 2 * a.c, disc);

    // Attracting fixed point: |A'(w)| = |c w + d|^{-2} < 1, i.e. |c w + d| > 1,
    // decided exactly: with c w + d = (N + Q sqrt(D))/r, test (N + Q sqrt(D))^2 > r^2.
    auto attracts = [&](const QuadSurd& w) {
        mpz_class n = a.c * w.p() + a.d * w.r(), q = a.c * w.q();
        return sign2(n * n + q * q * w.d() - w.r() * w.r(), 2 * n * q, w.d()) > 0;
    };
    bool pb = attracts(wp), mb = attracts(wm);
    if (pb == mb) throw not_hyperbolic_error("fixed_point_pair: no unique attracting point");
    return pb ? std::make_pair(wp, wm) : std::make_pair(wm, wp);
}

}  // namespace detail

}  // namespace valkit
