#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "valkit/cycle.hpp"
#include "valkit/errors.hpp"
#include "valkit/geometry.hpp"
#include "valkit/kernels.hpp"
#include "valkit/modfunc.hpp"
#include "valkit/quadrature.hpp"
#include "valkit/surd.hpp"
#include "valkit/words.hpp"

using namespace valkit;
namespace kn = valkit::kernels;

namespace {

const ModularFunction& jfun() {
    static const ModularFunction j = ModularFunction::j(60);
    return j;
}

bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace

TEST_CASE("rotation_values against value_of_period") {
    for (const Word& w : {Word{1, 2}, Word{3, 1, 4, 2}, Word{2, 2, 1, 1}, Word{5, 9}}) {
        const auto vs = rotation_values(w);
        REQUIRE(vs.size() == w.size());
        for (std::size_t i = 1; i <= w.size(); ++i)
            CHECK(vs[i - 1] == value_of_period(rotation(w, i)));
    }
    CHECK_THROWS_AS(rotation_values(Word{1, 2, 1}), domain_error);
}

TEST_CASE("orbit terms are m + 1/v_{i+1}") {
    for (const Word& w : {Word{1, 1}, Word{1, 2}, Word{2, 2, 1, 1}, Word{3, 1, 4, 2}}) {
        const CycleData data(w);
        const auto& v = data.rotation_values();
        const std::size_t l = data.word().size();
        std::vector<int> seen(l + 1, 0);
        for (const OrbitTerm& term : data.orbit()) {
            REQUIRE(term.i >= 1);
            REQUIRE(static_cast<std::size_t>(term.i) <= l);
            REQUIRE(term.m >= 1);
            REQUIRE(term.m <= data.word()[term.i - 1]);
            const QuadSurd& next = v[term.i % l];  // v_{i+1}, wrapping
            CHECK(term.value == next.reciprocal().plus_int(term.m));
            CHECK(term.x == doctest::Approx(term.value.to_double()).epsilon(1e-15));
            ++seen[term.i];
        }
        int expected = 0;
        for (int a : data.word()) expected += a;
        CHECK(static_cast<int>(data.orbit().size()) == expected);
        for (std::size_t i = 1; i <= l; ++i) CHECK(seen[i] == data.word()[i - 1]);
    }
}

TEST_CASE("golden word cycle") {
    const CycleData data(Word{1, 1});
    const QuadSurd golden(1, 1, 2, 5);
    REQUIRE(data.orbit().size() == 2);
    CHECK(data.orbit()[0].value == golden);
    CHECK(data.orbit()[1].value == golden);
    CHECK(data.s_l() == doctest::Approx(2 * kn::log_phi).epsilon(1e-14));

    for (double t : {M_PI / 3, 1.2, M_PI / 2, 2.0}) {
        CHECK(close(S_F(Word{1, 1}, t), 2 * kn::F(kn::phi, t), 1e-13));
        CHECK(close(hat_S(Word{1, 1}, t), std::sin(t) * kn::F(kn::phi, t) / kn::log_phi,
                    1e-13));
    }
}

TEST_CASE("normalizers") {
    CHECK(S_L(Word{2, 2}) == doctest::Approx(2 * kn::log_psi).epsilon(1e-13));
    CHECK(S_L(Word{1, 2}) == doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-13));
    for (const Word& w : {Word{1, 2}, Word{2, 2, 1, 1}, Word{4, 1, 3, 2}}) {
        CHECK(S_L(w) == doctest::Approx(S_L(opposite(w))).epsilon(1e-12));
        CHECK(S_L(w) == doctest::Approx(epsilon_log(w)).epsilon(1e-12));
    }
    // odd words run through their even form: the sums double, the ratio not
    const CycleData odd(Word{1, 2, 1});
    CHECK(odd.word().size() == 6);
    CHECK(odd.s_l() == doctest::Approx(epsilon_log(Word{1, 2, 1})).epsilon(1e-12));

    const HatPair hp(Word{2, 2, 1, 1});
    CHECK(hp.norm() == doctest::Approx(2 * epsilon_log(Word{2, 2, 1, 1})).epsilon(1e-12));
    CHECK(hp.norm() == doctest::Approx(2 * 2.703575830931402315).epsilon(1e-12));
}

TEST_CASE("s_gh agrees with s_g + s_h and dies at pi/2") {
    const CycleData data(Word{1, 2});
    for (double t : {M_PI / 3, 1.3, 1.9, 2 * M_PI / 3})
        CHECK(close(data.s_gh(t), data.s_g(t) + data.s_h(t), 1e-12));
    CHECK(std::fabs(data.s_gh(M_PI / 2)) < 1e-12);
}

TEST_CASE("hat integrates to one") {
    for (const Word& w : {Word{1, 1}, Word{1, 2}, Word{3, 1, 2, 1}, Word{2, 2, 1, 1}}) {
        const HatPair hp(w);
        QuadOptions opt;
        opt.tol = 1e-10;
        auto full = integrate([&](double t) { return hp.hat(t); }, M_PI / 3,
                              2 * M_PI / 3, opt);
        CHECK(std::fabs(full.value - 1.0) < 1e-8);
        auto half = integrate([&](double t) { return hp.hat_sym(t); }, M_PI / 3,
                              M_PI / 2, opt);
        CHECK(std::fabs(half.value - 1.0) < 1e-8);
        // the same fact through the public entry point: val_1 == 1
        CHECK(std::fabs(re_val(ModularFunction::one(), w).re_val - 1.0) < 1e-8);
    }
}

TEST_CASE("re_val of j at the pinned words") {
    auto v11 = re_val(jfun(), Word{1, 1});
    CHECK(v11.re_val == doctest::Approx(706.324813540812582).epsilon(1e-9));
    CHECK(v11.im_val == 0.0);
    CHECK(v11.method == "formula");
    CHECK(v11.eps_log == doctest::Approx(0.962423650119206895).epsilon(1e-12));

    auto v22 = re_val(jfun(), Word{2, 2});
    CHECK(v22.re_val == doctest::Approx(709.892890919912337).epsilon(1e-9));
    CHECK(v22.eps_log == doctest::Approx(1.762747174039086051).epsilon(1e-12));

    CHECK(re_val(jfun(), Word{1, 2}).re_val ==
          doctest::Approx(709.792359008032010).epsilon(1e-9));
    CHECK(re_val(jfun(), Word{2, 2, 1, 1}).re_val ==
          doctest::Approx(708.909919720708747).epsilon(1e-9));

    // rotation leaves the cycle (hence the value) unchanged
    CHECK(re_val(jfun(), rotation(Word{2, 2, 1, 1}, 3)).re_val ==
          doctest::Approx(708.909919720708747).epsilon(1e-9));
}

TEST_CASE("direct integral: f == 1 measures the geodesic") {
    for (const Word& w : {Word{1, 1}, Word{1, 2}, Word{2, 2, 1, 1}, Word{3, 1}}) {
        auto i1 = cycle_integral_direct(ModularFunction::one(), w);
        CHECK(std::fabs(i1.real() - 2 * epsilon_log(w)) < 1e-8);
        CHECK(std::fabs(i1.imag()) < 1e-8);
    }
}

TEST_CASE("direct integral is independent of the base point") {
    const Word w{1, 2};
    auto a = cycle_integral_direct(jfun(), w, M_PI / 2);
    auto b = cycle_integral_direct(jfun(), w, 1.0);
    auto c = cycle_integral_direct(jfun(), w, 2.2);
    CHECK(std::abs(a - b) < 1e-7);
    CHECK(std::abs(a - c) < 1e-7);
}

TEST_CASE("oracle value agrees with the formula") {
    auto oracle = val_complex(jfun(), Word{1, 1});
    CHECK(oracle.method == "oracle");
    CHECK(std::fabs(oracle.re_val - 706.324813540812582) < 1e-6);
    CHECK(std::fabs(oracle.im_val) < 1e-6);

    for (const Word& w : {Word{1, 2}, Word{2, 2, 1, 1}, Word{3, 1, 2, 1}}) {
        auto f = re_val(jfun(), w);
        auto o = val_complex(jfun(), w);
        CHECK(std::fabs(f.re_val - o.re_val) < 1e-6);
    }
}

TEST_CASE("oracle symmetries") {
    // even shift: v_3 = [a3; a4, a1, a2] is an SL(2,Z) image of v_1, so the
    // value is unchanged; odd shift: v_2 = 1/(v_1 - a1) is a det -1 image,
    // which mirrors the geodesic and conjugates the value
    auto base = val_complex(jfun(), Word{1, 2, 2, 1});
    auto even_shift = val_complex(jfun(), rotation(Word{1, 2, 2, 1}, 3));
    auto odd_shift = val_complex(jfun(), rotation(Word{1, 2, 2, 1}, 2));
    CHECK(std::fabs(base.re_val - even_shift.re_val) < 1e-7);
    CHECK(std::fabs(base.im_val - even_shift.im_val) < 1e-7);
    CHECK(std::fabs(base.re_val - odd_shift.re_val) < 1e-7);
    CHECK(std::fabs(base.im_val + odd_shift.im_val) < 1e-7);
    CHECK(std::fabs(base.im_val) > 0.01);  // the conjugation checks are not vacuous

    // opposite word: A^T is SL(2,Z)-conjugate to A^{-1}, whose cycle integral
    // is the same, so the value is unchanged (imaginary part included)
    const Word w{1, 1, 2, 2, 1, 2};
    auto fwd = val_complex(jfun(), w);
    auto rev = val_complex(jfun(), opposite(w));
    CHECK(std::fabs(fwd.re_val - rev.re_val) < 1e-6);
    CHECK(std::fabs(fwd.im_val - rev.im_val) < 1e-6);
}

TEST_CASE("D profiles") {
    for (double t : {M_PI / 3, 1.2, M_PI / 2})
        CHECK(std::fabs(D(Word{1, 2}, Word{1, 2}, t)) < 1e-14);

    // D integrates to zero and decreases from + to - (both hats have mass 1)
    QuadOptions opt;
    opt.tol = 1e-10;
    auto total = integrate([](double t) { return D(Word{1, 1}, Word{1, 2}, t); },
                           M_PI / 3, M_PI / 2, opt);
    CHECK(std::fabs(total.value) < 1e-8);
    CHECK(D(Word{1, 1}, Word{1, 2}, M_PI / 3) > 0.0);
    CHECK(D(Word{1, 1}, Word{1, 2}, M_PI / 2) < 0.0);
}

TEST_CASE("S_U split on tree words") {
    const std::vector<Word> tree_words = {
        {2, 2}, {1, 1}, {2, 2, 1, 1}, {2, 2, 1, 1, 1, 1}, {2, 2, 2, 2, 1, 1},
        {2, 2, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2, 1, 1}};
    for (const Word& w : tree_words)
        for (double t : {M_PI / 3, 1.2, 1.4, M_PI / 2 - 0.01}) {
            auto s = S_U(w, t);
            CHECK(std::fabs(s.total - (s.part1 + s.part2)) < 1e-10);
        }

    // the psi word is the kernel of U: every term vanishes
    for (double t : {M_PI / 3, 1.2, 1.4}) {
        auto s = S_U(Word{2, 2}, t);
        CHECK(std::fabs(s.total) < 1e-12);
    }

    // nonnegativity along the root word, the fact the split is for
    for (double t : {M_PI / 3, 1.1, 1.2, 1.3, 1.4, 1.5, M_PI / 2 - 1e-6}) {
        CHECK(S_U(Word{2, 2, 1, 1}, t).total >= -1e-12);
        CHECK(S_U(Word{2, 2, 1, 1, 1, 1}, t).total >= -1e-12);
    }

    CHECK_THROWS_AS(S_U(Word{1, 3}, 1.2), domain_error);
}

TEST_CASE("re_val error estimate is honest") {
    auto v = re_val(jfun(), Word{1, 2}, 1e-8);
    CHECK(v.error_estimate >= 0.0);
    CHECK(v.error_estimate < 1e-5);
    CHECK(std::fabs(v.re_val - 709.792359008032010) < 10 * std::max(v.error_estimate, 1e-9));
}
