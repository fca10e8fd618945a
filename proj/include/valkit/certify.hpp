#pragma once

#include <functional>
#include <string>
#include <vector>

#include "valkit/words.hpp"

// Numerical certification of the inequalities behind the two value bounds:
// dense grid scans plus local golden-section refinement, sign checks with an
// explicit floating slack, and regression of every quoted extremum constant.
// This is floating-point evidence, not a formal proof.

namespace valkit {

enum class Kind { min, max };
enum class Verdict { pass, fail, no_reference };

const char* kind_str(Kind k);
const char* verdict_str(Verdict v);

struct SearchDomain {
    double x_lo = 0.0, x_hi = 0.0;  // set x_lo == x_hi for t-only scans
    double t_lo = 0.0, t_hi = 0.0;
    int nx = 512, nt = 512;
    int refine_iters = 40;
};

struct Extremum {
    double x = 0.0, t = 0.0, value = 0.0;
};

struct CertReport {
    std::string task;
    Kind kind = Kind::min;
    Extremum found;
    bool has_reference = false;  // quoted decimal to reproduce
    double reference = 0.0;
    double tolerance = 1e-3;
    bool has_threshold = false;  // uniform bound the extremum must respect
    double threshold = 0.0;
    Verdict verdict = Verdict::no_reference;
    double margin = 0.0;
    std::string note;
};

using Fn2 = std::function<double(double, double)>;

// Grid scan over dom followed by coordinate golden-section refinement around
// the best cell; deterministic given dom, and refinement never returns a
// worse extremum than the grid scan. Throws consistency_error on NaN/inf.
CertReport extremize(const std::string& task, const Fn2& fn, const SearchDomain& dom,
                     Kind kind);

// The four structural properties of Z(x,t): negativity at 1 and vanishing at
// the golden ratio, a unique interior maximum located in (3,4), the 1+2+min
// envelope bound, and the reciprocal-shift pair inequality on [4/3, phi].
std::vector<CertReport> check_Z_lemma(const std::vector<double>& t_grid);

// Classifies every orbit term of w as good/bad by exact comparison with the
// golden ratio, checks the term-sum inequality on the grid, and verifies the
// bad-term matchings (partner term, or the 2-and-3 pair) individually.
CertReport check_goodbad(const Word& w, const std::vector<double>& t_grid);

// Nonnegativity of U(x,t)+U(Phi x,t) and of the four-term sum on
// [phi, psi] x [pi/3, pi/2), plus the vanishing row at x = psi.
std::vector<CertReport> check_U_lemma(const SearchDomain& dom);

// Regression of every quoted extremum constant and uniform bound used by the
// closing estimates, each on the exact rectangle it was stated for.
std::vector<CertReport> check_appendix_bounds();

// D(t) = hatS_sym(w1,t) - hatS_sym(w2,t): non-increasing on the grid, zero
// integral over [pi/3,pi/2], and the two sufficient inequalities pointwise.
CertReport check_monotone_D(const Word& w1, const Word& w2,
                            const std::vector<double>& t_grid);

std::vector<double> uniform_grid(double lo, double hi, int n);

bool all_pass(const std::vector<CertReport>& reports);
std::string report_line(const CertReport& r);
std::string reports_to_json(const std::vector<CertReport>& reports);

}  // namespace valkit
