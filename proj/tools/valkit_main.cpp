// valkit: values of modular functions at real quadratic irrationalities.
//
// Subcommands:
//   val      val_f(w) for a periodic word or a quadratic surd literal
//   tree     Markov tree sweep with per-node values and bound verification
//   certify  the inequality / extremum certification suites
//   plot     CSV tabulations of the standard figures (1..11)
//   coeffs   exact j coefficients as JSON
//
// Exit codes: 0 ok, 1 usage error, 2 compute failure, 3 certification failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "valkit/certify.hpp"
#include "valkit/cycle.hpp"
#include "valkit/errors.hpp"
#include "valkit/kernels.hpp"
#include "valkit/literals.hpp"
#include "valkit/modfunc.hpp"
#include "valkit/parallel.hpp"
#include "valkit/surd.hpp"
#include "valkit/words.hpp"

namespace kn = valkit::kernels;
using json = nlohmann::json;
using valkit::Word;

namespace {

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// "j" / "one" / path to a JSON file {"pole_order": p, "coefficients":
// ["c_{-p}", ...], "name": ..., "validate": bool}. Coefficient entries may be
// JSON integers or decimal strings (big values need strings).
valkit::ModularFunction load_function(const std::string& spec, int n_max) {
    if (spec == "j") return valkit::ModularFunction::j(n_max);
    if (spec == "one") return valkit::ModularFunction::one();

    std::ifstream in(spec);
    if (!in) throw valkit::parse_error("cannot open coefficient file '" + spec + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw valkit::parse_error("bad JSON in '" + spec + "': " + e.what());
    }
    if (!doc.contains("pole_order") || !doc.contains("coefficients"))
        throw valkit::parse_error("'" + spec + "' needs fields pole_order and coefficients");
    const int pole = doc["pole_order"].get<int>();
    std::vector<mpz_class> coeffs;
    for (const json& c : doc["coefficients"]) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.emplace_back(static_cast<long>(c.get<long long>()));
        else
            throw valkit::parse_error("coefficients must be integers or decimal strings");
    }
    const std::string name = doc.value("name", spec);
    const bool validate = doc.value("validate", true);
    return valkit::ModularFunction::from_coefficients(pole, std::move(coeffs), name, validate);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw valkit::error("cannot open output file '" + out_path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

json val_result_json(const valkit::ValResult& r) {
    return json{{"word", valkit::word_str(r.word)}, {"re_val", r.re_val},
                {"im_val", r.im_val},               {"eps_log", r.eps_log},
                {"method", r.method},               {"error_estimate", r.error_estimate}};
}

// ---------------------------------------------------------------- val ----

struct ValArgs {
    std::string word_text, surd_text, f_spec = "j", method = "formula", out;
    double tol = 1e-8;
    double theta0 = M_PI / 2;
    int n_max = 60;
};

int cmd_val(const ValArgs& a) {
    if (a.word_text.empty() == a.surd_text.empty())
        throw valkit::parse_error("val: exactly one of --word / --surd is required");

    json out;
    Word w;
    if (!a.word_text.empty()) {
        w = valkit::parse_word(a.word_text);
    } else {
        const valkit::QuadSurd s = valkit::parse_surd(a.surd_text);
        const valkit::CFExpansion cf = valkit::cf_expand(s);
        w = cf.period;
        out["input_surd"] = s.str();
        out["period"] = valkit::word_str(cf.period);
        if (!cf.preperiod.empty()) {
            // val only sees the GL(2,Z)-class, i.e. the periodic tail.
            out["preperiod_dropped"] = valkit::word_str(cf.preperiod);
        }
    }

    const valkit::ModularFunction f = load_function(a.f_spec, a.n_max);
    if (a.method == "formula") {
        out.update(val_result_json(valkit::re_val(f, w, a.tol)));
    } else if (a.method == "oracle") {
        out.update(val_result_json(valkit::val_complex(f, w, a.theta0, a.tol)));
    } else if (a.method == "both") {
        const valkit::ValResult rf = valkit::re_val(f, w, a.tol);
        const valkit::ValResult ro = valkit::val_complex(f, w, a.theta0, a.tol);
        out["word"] = valkit::word_str(w);
        out["formula"] = val_result_json(rf);
        out["oracle"] = val_result_json(ro);
        out["re_val_difference"] = rf.re_val - ro.re_val;
    } else {
        throw valkit::parse_error("val: --method must be formula, oracle or both");
    }
    emit(out.dump(2), a.out);
    return 0;
}

// --------------------------------------------------------------- tree ----

struct TreeArgs {
    int depth = 3;
    std::string f_spec = "j", out;
    double tol = 1e-8;
};

int cmd_tree(const TreeArgs& a) {
    if (a.depth < 0) throw valkit::parse_error("tree: --depth must be >= 0");
    const valkit::ModularFunction f = load_function(a.f_spec, 60);

    const double lo = valkit::re_val(f, {1, 1}, a.tol).re_val;
    const double hi = valkit::re_val(f, {2, 2}, a.tol).re_val;

    const auto root = valkit::markov_tree(a.depth);
    const std::vector<const valkit::MarkovNode*> nodes = valkit::flatten(*root);
    std::vector<valkit::ValResult> vals(nodes.size());
    valkit::parallel_for(nodes.size(),
                         [&](std::size_t i) { vals[i] = valkit::re_val(f, nodes[i]->word, a.tol); });

    json entries = json::array();
    std::size_t arg_min = 0, arg_max = 0;
    int violations = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double v = vals[i].re_val;
        const bool ok = v >= lo - 1e-3 && v <= hi + 1e-3;
        if (!ok) ++violations;
        if (v < vals[arg_min].re_val) arg_min = i;
        if (v > vals[arg_max].re_val) arg_max = i;
        entries.push_back(json{{"word", valkit::word_str(nodes[i]->word)},
                               {"depth", nodes[i]->depth},
                               {"re_val", v},
                               {"error_estimate", vals[i].error_estimate},
                               {"in_bounds", ok}});
    }

    json out{{"f", f.name()},
             {"depth", a.depth},
             {"node_count", nodes.size()},
             {"val_lower_word", "[1,1]"},
             {"val_lower", lo},
             {"val_upper_word", "[2,2]"},
             {"val_upper", hi},
             {"min_word", valkit::word_str(nodes[arg_min]->word)},
             {"min_val", vals[arg_min].re_val},
             {"max_word", valkit::word_str(nodes[arg_max]->word)},
             {"max_val", vals[arg_max].re_val},
             {"bound_violations", violations},
             {"nodes", std::move(entries)}};
    emit(out.dump(2), a.out);
    if (violations > 0) {
        std::cerr << "tree: " << violations << " node(s) violate the value bounds ["
                  << fmt15(lo) << ", " << fmt15(hi) << "] + 1e-3\n";
        return 3;
    }
    return 0;
}

// ------------------------------------------------------------ certify ----

struct CertifyArgs {
    std::string suite = "all", json_out;
    int grid = 512;
};

int cmd_certify(const CertifyArgs& a) {
    if (a.grid < 2) throw valkit::parse_error("certify: --grid must be >= 2");
    const bool all = a.suite == "all";
    if (!all && a.suite != "Z" && a.suite != "U" && a.suite != "appendix" &&
        a.suite != "monotone")
        throw valkit::parse_error("certify: --suite must be one of Z, U, appendix, monotone, all");

    // Half-open t-domain [pi/3, pi/2): stop just short of pi/2; the closed
    // forms that are regular at pi/2 are checked there separately inside the
    // suites, following the boundary evaluations in the write-up.
    const std::vector<double> t_open =
        valkit::uniform_grid(M_PI / 3, M_PI / 2 - 1e-9, a.grid);
    const std::vector<double> t_closed = valkit::uniform_grid(M_PI / 3, M_PI / 2, a.grid);

    std::vector<valkit::CertReport> reports;
    auto take = [&reports](std::vector<valkit::CertReport> rs) {
        for (auto& r : rs) reports.push_back(std::move(r));
    };

    if (all || a.suite == "Z") {
        take(valkit::check_Z_lemma(t_open));
        // Words covering every matching case of the term-sum argument: the
        // all-good boundary word, bad terms with partner a_{i+1} = 1 (pair
        // rule) and a_{i+1} >= 3 (2-and-3 rule), and mixtures.
        const std::vector<Word> words = {{1, 1},       {1, 2},       {1, 3},
                                         {2, 2, 1, 1}, {1, 4, 1, 2}, {2, 1, 1, 3}};
        for (const Word& w : words) reports.push_back(valkit::check_goodbad(w, t_open));
    }
    if (all || a.suite == "U") {
        valkit::SearchDomain dom;
        dom.x_lo = kn::phi;
        dom.x_hi = kn::psi;
        dom.t_lo = M_PI / 3;
        dom.t_hi = M_PI / 2 - 1e-9;
        dom.nx = dom.nt = a.grid;
        take(valkit::check_U_lemma(dom));
    }
    if (all || a.suite == "appendix") take(valkit::check_appendix_bounds());
    if (all || a.suite == "monotone") {
        const std::vector<std::pair<Word, Word>> pairs = {{{1, 1}, {1, 2}},
                                                          {{1, 1}, {2, 2, 1, 1}},
                                                          {{2, 2, 1, 1}, {2, 2}},
                                                          {{1, 2}, {2, 2}},
                                                          {{1, 1}, {1, 1}}};
        for (const auto& [w1, w2] : pairs)
            reports.push_back(valkit::check_monotone_D(w1, w2, t_closed));
    }

    std::ostringstream lines;
    for (const valkit::CertReport& r : reports) lines << valkit::report_line(r) << '\n';
    const bool ok = valkit::all_pass(reports);
    lines << (ok ? "certify: all checks passed" : "certify: FAILURES present") << " ("
          << reports.size() << " reports, suite " << a.suite << ", grid " << a.grid << ")\n";
    std::cout << lines.str();
    if (!a.json_out.empty()) emit(valkit::reports_to_json(reports), a.json_out);
    return ok ? 0 : 3;
}

// --------------------------------------------------------------- plot ----

struct PlotArgs {
    int figure = 0;
    int n = 0;  // 0: per-figure default (512 profiles, 64 per grid axis)
    std::string out;
};

void csv_row(std::ostringstream& os, const std::vector<double>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k)
        os << (k ? "," : "") << fmt15(cells[k]);
    os << '\n';
}

// Columns over a 1D t- or x-range.
std::string profile_csv(const std::string& header, double lo, double hi, int n,
                        const std::vector<std::function<double(double)>>& cols) {
    std::ostringstream os;
    os << header << '\n';
    for (int i = 0; i < n; ++i) {
        const double u = lo + (hi - lo) * i / (n - 1);
        std::vector<double> cells{u};
        for (const auto& fn : cols) cells.push_back(fn(u));
        csv_row(os, cells);
    }
    return os.str();
}

// Row-major (x outer, t inner) tabulation of surface columns.
std::string surface_csv(const std::string& header, double x_lo, double x_hi, double t_lo,
                        double t_hi, int n,
                        const std::vector<std::function<double(double, double)>>& cols) {
    std::ostringstream os;
    os << header << '\n';
    for (int i = 0; i < n; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (n - 1);
        for (int k = 0; k < n; ++k) {
            const double t = t_lo + (t_hi - t_lo) * k / (n - 1);
            std::vector<double> cells{x, t};
            for (const auto& fn : cols) cells.push_back(fn(x, t));
            csv_row(os, cells);
        }
    }
    return os.str();
}

int cmd_plot(const PlotArgs& a) {
    const int n1 = a.n > 0 ? a.n : 512;  // profile sample count
    const int n2 = a.n > 0 ? a.n : 64;   // surface samples per axis
    if (n1 < 2) throw valkit::parse_error("plot: --n must be >= 2");
    const double pi = M_PI;
    std::string csv;

    switch (a.figure) {
        case 1: {  // the Markov tree itself, as rows (depth, word, neighbors)
            const auto root = valkit::markov_tree(4);
            std::ostringstream os;
            os << "depth,word,left_neighbor,right_neighbor\n";
            for (const valkit::MarkovNode* n : valkit::flatten(*root))
                os << n->depth << ",\"" << valkit::word_str(n->word) << "\",\""
                   << valkit::word_str(n->left_neighbor) << "\",\""
                   << valkit::word_str(n->right_neighbor) << "\"\n";
            csv = os.str();
            break;
        }
        case 2: {  // hat S at the golden ratio and its symmetrization
            valkit::HatPair h({1, 1});
            csv = profile_csv("t,hat_S,hat_S_symmetrized_half", pi / 3, 2 * pi / 3, n1,
                              {[&](double t) { return h.hat(t); },
                               [&](double t) { return 0.5 * h.hat_sym(t); }});
            break;
        }
        case 3: {  // D between the golden word and [1,2]
            valkit::HatPair h1({1, 1}), h2({1, 2});
            csv = profile_csv("t,D", pi / 3, 2 * pi / 3, n1, {[&](double t) {
                                  return h1.hat_sym(t) - h2.hat_sym(t);
                              }});
            break;
        }
        case 4:  // x -> Z(x,t) sections; the pi/2 section is identically 0
            csv = profile_csv("x,Z_t_pi_3,Z_t_5pi_12,Z_t_pi_2", 0.0, 10.0, n1,
                              {[](double x) { return kn::Z(x, M_PI / 3); },
                               [](double x) { return kn::Z(x, 5 * M_PI / 12); },
                               [](double x) { return kn::Z(x, M_PI / 2); }});
            break;
        case 5:  // the two sides of the Z(1,t) < 0 reduction
            csv = profile_csv(
                "t,two_L_phi_over_cos2_minus_1,log3_P_phi", pi / 3, pi / 2, n1,
                {[](double t) {
                     const double c = std::cos(t);
                     return 2.0 * kn::L(kn::phi) / (c * c - 1.0);
                 },
                 [](double t) { return std::log(3.0) * kn::P(kn::phi, t); }});
            break;
        case 6:  // L(phi) R - P(phi,t)/(x^4+x^2+1) at the two pinned x
            csv = profile_csv(
                "t,diff_x_1_4,diff_x_1_3", pi / 3, pi / 2, n1,
                {[](double t) {
                     const double x = 0.25, l4 = x * x * x * x + x * x + 1.0;
                     return kn::L(kn::phi) * kn::R(x, t) - kn::P(kn::phi, t) / l4;
                 },
                 [](double t) {
                     const double x = 1.0 / 3.0, l4 = x * x * x * x + x * x + 1.0;
                     return kn::L(kn::phi) * kn::R(x, t) - kn::P(kn::phi, t) / l4;
                 }});
            break;
        case 7:  // N surface near the origin corner
            csv = surface_csv("x,t,N", 0.0, 0.25, 2 * pi / 3, pi, n2,
                              {[](double x, double t) { return kn::N(x, t); }});
            break;
        case 8:  // the two comparison surfaces on [1/2,1]
            csv = surface_csv(
                "x,t,L_phi_R,P_phi_over_quartic", 0.5, 1.0, pi / 3, pi / 2, n2,
                {[](double x, double t) { return kn::L(kn::phi) * kn::R(x, t); },
                 [](double x, double t) {
                     return kn::P(kn::phi, t) / (x * x * x * x + x * x + 1.0);
                 }});
            break;
        case 9:  // mixed-slope bound surfaces on [4/3, phi]
            csv = surface_csv(
                "x,t,lower,upper", 4.0 / 3.0, kn::phi, pi / 3, pi / 2, n2,
                {[](double x, double t) {
                     const double x2 = x * x;
                     const double den = 1.0 + x2 * x2 - 2.0 * x2 * std::cos(2.0 * t);
                     return kn::log_phi * x2 * kn::p_poly(x, t) / (den * den * den * den);
                 },
                 [](double x, double t) {
                     const double c2 = std::cos(2.0 * t), x2 = x * x;
                     return -kn::sqrt5 * (2.0 * c2 + 1.0) /
                            ((2.0 * c2 - 3.0) * (2.0 * c2 - 3.0) * (2.0 * c2 - 3.0) *
                             (1.0 + x2 + x2 * x2));
                 }});
            break;
        case 10:  // pinned difference quotient, t = pi/3 section
            csv = profile_csv("x,value", 4.0 / 3.0, kn::phi - 1e-6, n1,
                              {[](double x) { return kn::golden_quotient_section_low(x); }});
            break;
        case 11:  // pinned difference quotient, t = pi/2 section
            csv = profile_csv("x,value", 4.0 / 3.0, kn::phi - 1e-6, n1,
                              {[](double x) { return kn::golden_quotient_section_high(x); }});
            break;
        default:
            throw valkit::parse_error("plot: --figure must be 1..11");
    }
    emit(csv, a.out);
    return 0;
}

// ------------------------------------------------------------- coeffs ----

struct CoeffsArgs {
    int n = 60;
    std::string out;
};

int cmd_coeffs(const CoeffsArgs& a) {
    if (a.n < 0) throw valkit::parse_error("coeffs: --n must be >= 0");
    json coeffs = json::array();
    for (const mpz_class& c : valkit::j_coefficients(a.n)) coeffs.push_back(c.get_str());
    // This shape loads back through `val --f <file>`.
    json out{{"name", "j"}, {"pole_order", 1}, {"n_max", a.n}, {"coefficients", std::move(coeffs)}};
    emit(out.dump(2), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"values of modular functions at real quadratic irrationalities"};
    app.require_subcommand(1);

    ValArgs va;
    CLI::App* val = app.add_subcommand("val", "evaluate val_f at a periodic word or surd");
    val->add_option("--word", va.word_text, "periodic word literal, e.g. [1,2]");
    val->add_option("--surd", va.surd_text, "surd literal, e.g. (1+1*sqrt(3))/2");
    val->add_option("--f", va.f_spec, "modular function: j, one, or coefficient file")
        ->capture_default_str();
    val->add_option("--method", va.method, "formula, oracle, or both")->capture_default_str();
    val->add_option("--tol", va.tol, "quadrature tolerance")->capture_default_str();
    val->add_option("--theta0", va.theta0, "base-point angle for the direct integral")
        ->capture_default_str();
    val->add_option("--nmax", va.n_max, "q-series truncation for --f j")->capture_default_str();
    val->add_option("--out", va.out, "write JSON here instead of stdout");

    TreeArgs ta;
    CLI::App* tree = app.add_subcommand("tree", "Markov tree values and bound check");
    tree->add_option("--depth", ta.depth, "tree depth (root = 0)")->capture_default_str();
    tree->add_option("--f", ta.f_spec, "modular function")->capture_default_str();
    tree->add_option("--tol", ta.tol, "quadrature tolerance")->capture_default_str();
    tree->add_option("--out", ta.out, "write JSON here instead of stdout");

    CertifyArgs ca;
    CLI::App* certify = app.add_subcommand("certify", "run the certification suites");
    certify->add_option("--suite", ca.suite, "Z, U, appendix, monotone, or all")
        ->capture_default_str();
    certify->add_option("--grid", ca.grid, "grid points per axis")->capture_default_str();
    certify->add_option("--json", ca.json_out, "also write the reports as JSON here");

    PlotArgs pa;
    CLI::App* plot = app.add_subcommand("plot", "CSV data for the standard figures");
    plot->add_option("--figure", pa.figure, "figure number, 1..11")->required();
    plot->add_option("--n", pa.n, "sample count (default 512, surfaces 64 per axis)");
    plot->add_option("--out", pa.out, "write CSV here instead of stdout");

    CoeffsArgs na;
    CLI::App* coeffs = app.add_subcommand("coeffs", "exact j coefficients as JSON");
    coeffs->add_option("--n", na.n, "highest regular Fourier index")->capture_default_str();
    coeffs->add_option("--out", na.out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
        if (*val) return cmd_val(va);
        if (*tree) return cmd_tree(ta);
        if (*certify) return cmd_certify(ca);
        if (*plot) return cmd_plot(pa);
        if (*coeffs) return cmd_coeffs(na);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const valkit::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const valkit::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
