// Command-line front end: compute central decompositions of knot closures,
// evaluate the colored invariants, run verification suites, and list preset
// knots. Exit codes: 0 success, 1 verification failure (or unexpected
// evaluation error), 2 parse/argument error, 3 multi-component closure,
// 4 dimension cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "logknot/alexander.hpp"
#include "logknot/serialization.hpp"
#include "logknot/suites.hpp"

using namespace logknot;

namespace {

struct CommonOptions {
  int p = 2;
  std::string knot;
  std::string braid;
  int strands = 0;
  std::string format = "table";
  int precision = 128;
  long cap = 20000;
  double tolerance = 0.0;  // 0 = per-suite default
  bool framing_correct = false;
  unsigned long long seed = 20240801;
  int cases = 50;
  std::string suite = "all";
  std::string knot2 = "figure8";
  std::string lambda_text;
  int color_s = 2;
  bool derivative = false;
  bool verbose = false;
};

void add_knot_options(CLI::App* cmd, CommonOptions& o) {
  auto* knot = cmd->add_option("--knot", o.knot, "preset knot name");
  auto* braid =
      cmd->add_option("--braid", o.braid, "braid word, e.g. \"s1 s1 s1\"");
  auto* strands =
      cmd->add_option("--strands", o.strands, "strand count for --braid");
  knot->excludes(braid);
  braid->needs(strands);
}

FramedBraidWord resolve_knot(const CommonOptions& o,
                             const std::string& fallback = "") {
  if (!o.knot.empty() && !o.braid.empty())
    throw InvalidParameter("give exactly one of --knot and --braid");
  if (!o.knot.empty()) return preset_braid(o.knot);
  if (!o.braid.empty()) {
    if (o.strands < 1)
      throw InvalidParameter("--braid requires --strands >= 1");
    return parse_braid_word(o.braid, o.strands);
  }
  if (!fallback.empty()) return preset_braid(fallback);
  throw InvalidParameter("a knot is required: pass --knot or --braid");
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--p", o.p, "order parameter p (q = exp(i pi/p))")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--precision", o.precision,
                  "working mantissa bits for numeric paths (128 or 256)")
      ->envname("LOGKNOT_PRECISION")
      ->check(CLI::IsMember({128, 256}));
  cmd->add_option("--cap", o.cap,
                  "largest allowed tensor-space dimension dim(M)^strands")
      ->envname("LOGKNOT_CAP")
      ->check(CLI::PositiveNumber);
}

// "0.37", "-2", "1.61+0.2i", "0.2i" -> complex value.
template <class B>
Complex<B> parse_complex_text(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty complex literal");
  auto to_b = [](const std::string& t) {
    if (t.empty() || t == "+") return B(1);
    if (t == "-") return B(-1);
    try {
      return B(t);
    } catch (...) {
      throw ParseError("bad numeric literal '" + t + "'");
    }
  };
  if (s.back() != 'i') return Complex<B>(to_b(s), B(0));
  s.pop_back();
  // Split at the last +/- that starts the imaginary part (skip exponent
  // signs and a leading sign).
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return Complex<B>(B(0), to_b(s));
  return Complex<B>(to_b(s.substr(0, split)), to_b(s.substr(split)));
}

TangleOptions tangle_options(const CommonOptions& o) {
  TangleOptions t;
  t.cap = o.cap;
  t.framing_correct = o.framing_correct;
  return t;
}

int cmd_compute(const CommonOptions& o) {
  DecompositionRecord r;
  r.braid = resolve_knot(o);
  DecomposeOptions opts;
  opts.tangle = tangle_options(o);
  r.dec = decompose(r.braid, o.p, opts);
  if (o.format == "json")
    std::cout << to_json_text(r);
  else if (o.format == "csv")
    std::cout << to_csv_text(r);
  else
    std::cout << to_table_text(r);
  return 0;
}

int cmd_jones(const CommonOptions& o) {
  FramedBraidWord b = resolve_knot(o);
  DecomposeOptions opts;
  opts.tangle = tangle_options(o);
  Cyclo a = colored_jones(b, o.p, o.color_s, opts);
  std::string approx = complex_to_string(to_complex<Float128>(a), 24);
  if (o.format == "json") {
    std::cout << "{\"schema\": 1, \"p\": " << o.p << ", \"s\": " << o.color_s
              << ", \"braid\": \"" << format_braid_word(b)
              << "\", \"framing_corrected\": "
              << (o.framing_correct ? "true" : "false") << ", \"exact\": \""
              << a.to_string() << "\", \"approx\": \"" << approx << "\"}\n";
  } else {
    std::cout << "a[" << o.color_s << "] = " << approx
              << "    exact: " << a.to_string() << "\n";
  }
  return 0;
}

template <class B>
int cmd_alexander_at(const CommonOptions& o) {
  FramedBraidWord b = resolve_knot(o);
  Complex<B> lambda = parse_complex_text<B>(o.lambda_text);
  AlexanderOptions<B> opts;
  opts.tangle = tangle_options(o);
  using boost::multiprecision::abs;
  using boost::multiprecision::round;
  bool integral = lambda.im == 0 && abs(lambda.re - round(lambda.re)) < 1e-9;
  Complex<B> value = integral ? alexander_at_integer(b, o.p, lambda, opts)
                              : colored_alexander(b, o.p, lambda, opts);
  std::cout << "O(" << o.lambda_text << ") = " << complex_to_string(value, 24)
            << (integral ? "    (limit from symmetric offsets)" : "") << "\n";
  if (o.derivative) {
    DerivativeEstimate<B> d = alexander_derivative(b, o.p, lambda, opts);
    std::cout << "dO/dlambda = " << complex_to_string(d.value, 24)
              << "    step-halving difference: "
              << static_cast<double>(d.error) << "\n";
  }
  return 0;
}

void print_report(const SuiteReport& rep, bool verbose) {
  for (const SuiteCheck& c : rep.checks)
    if (!c.pass || verbose)
      std::cout << "    [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
                << (c.residual != 0.0
                        ? "  (residual " + std::to_string(c.residual) + ")"
                        : "")
                << "\n";
  std::cout << "  " << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL")
            << " (" << rep.checks.size()
            << " checks, max residual " << rep.max_residual() << ")\n";
}

template <class B>
SuiteReport theorem4_suite(const FramedBraidWord& b, const CommonOptions& o) {
  SuiteReport out;
  out.suite = "theorem4";
  B tol_b = (o.tolerance > 0) ? B(o.tolerance) : B(1e-6);
  AlexanderOptions<B> opts;
  opts.tangle = tangle_options(o);
  Theorem4Report<B> rep =
      verify_theorem4<B>(b, o.p, tol_b, B(1e-8), opts);
  for (const Theorem4Row<B>& row : rep.rows) {
    out.add("s=" + std::to_string(row.s) + " b+ derivative formula",
            row.b_plus_residual <= tol_b,
            static_cast<double>(row.b_plus_residual));
    out.add("s=" + std::to_string(row.s) + " b- derivative formula",
            row.b_minus_residual <= tol_b,
            static_cast<double>(row.b_minus_residual));
    out.add("s=" + std::to_string(row.s) + " a equals O at both weights",
            row.a_residual <= rep.tol_a,
            static_cast<double>(row.a_residual));
  }
  out.add("a[0] edge", (rep.a0_exact - rep.a0_limit).abs() <= rep.tol_a,
          static_cast<double>((rep.a0_exact - rep.a0_limit).abs()));
  out.add("a[p] edge", (rep.ap_exact - rep.ap_limit).abs() <= rep.tol_a,
          static_cast<double>((rep.ap_exact - rep.ap_limit).abs()));
  return out;
}

template <class B>
SuiteReport symmetry_suite(const FramedBraidWord& b, const CommonOptions& o) {
  SuiteReport out;
  out.suite = "symmetry";
  B tol = (o.tolerance > 0) ? B(o.tolerance) : B(1e-6);
  AlexanderOptions<B> opts;
  opts.tangle = tangle_options(o);
  SymmetryReport<B> rep = verify_symmetry<B>(b, o.p, tol, opts);
  for (const SymmetryRow<B>& row : rep.rows)
    out.add("s=" + std::to_string(row.s) + " weight-reflection symmetry",
            row.residual <= tol, static_cast<double>(row.residual));
  return out;
}

template <class B>
SuiteReport offdiagonal_suite(const FramedBraidWord& b,
                              const CommonOptions& o) {
  SuiteReport out;
  out.suite = "offdiagonal";
  B tol = (o.tolerance > 0) ? B(o.tolerance) : B(1e-8);
  AlexanderOptions<B> opts;
  opts.tangle = tangle_options(o);
  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < 5; ++k) {
    // Generic sample: real part away from integers, small imaginary part.
    double re = 0.1 + 0.8 * double(rng() % 1000) / 1000.0;
    double im = -0.4 + 0.8 * double(rng() % 1000) / 1000.0;
    Complex<B> lambda{B(re), B(im)};
    OffdiagonalReport<B> rep = verify_offdiagonal<B>(b, o.p, lambda, tol, opts);
    for (const OffdiagonalRow<B>& row : rep.rows)
      out.add("lambda sample " + std::to_string(k) + ", s=" +
                  std::to_string(row.s),
              row.residual <= tol, static_cast<double>(row.residual));
  }
  return out;
}

template <class B>
int cmd_verify_at(const CommonOptions& o) {
  std::vector<SuiteReport> reports;
  auto want = [&](const char* name) {
    return o.suite == "all" || o.suite == name;
  };
  if (want("relations"))
    reports.push_back(relations_suite<B>(o.p, default_generic_weights<B>(),
                                         o.tolerance > 0 ? o.tolerance
                                                         : 1e-10));
  if (want("yang-baxter")) reports.push_back(yang_baxter_suite(o.p));
  if (want("markov")) {
    DecomposeOptions opts{DecomposeMode::ColumnExtraction, tangle_options(o)};
    reports.push_back(
        markov_suite(sample_markov_cases({o.p}, o.seed, o.cases), opts));
  }
  if (want("connected-sum")) {
    DecomposeOptions opts;
    opts.tangle = tangle_options(o);
    reports.push_back(connected_sum_suite(resolve_knot(o, "trefoil"),
                                          preset_braid(o.knot2), o.p, opts));
  }
  if (want("theorem4"))
    reports.push_back(theorem4_suite<B>(resolve_knot(o, "trefoil"), o));
  if (want("symmetry"))
    reports.push_back(symmetry_suite<B>(resolve_knot(o, "trefoil"), o));
  if (want("offdiagonal"))
    reports.push_back(offdiagonal_suite<B>(resolve_knot(o, "trefoil"), o));
  if (reports.empty())
    throw InvalidParameter("unknown suite '" + o.suite + "'");
  bool all = true;
  for (const SuiteReport& rep : reports) {
    print_report(rep, o.verbose);
    all = all && rep.pass();
  }
  std::cout << (all ? "verify: PASS" : "verify: FAIL") << "\n";
  return all ? 0 : 1;
}

int cmd_presets() {
  for (const KnotPreset& k : knot_presets()) {
    FramedBraidWord b = preset_braid(k.name);
    std::cout << k.name << "  word \"" << k.word << "\"  strands "
              << k.strands << "  writhe " << framing_of(b) << "\n";
  }
  return 0;
}

template <class Fn>
int with_precision(int precision, Fn&& fn) {
  if (precision == 256) return fn(Float256{});
  return fn(Float128{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "logknot: logarithmic invariants of knots from the restricted quantum "
      "group at q = exp(i pi/p)"};
  app.require_subcommand(1);
  CommonOptions o;

  CLI::App* compute = app.add_subcommand(
      "compute", "central decomposition a[s], b+[s], b-[s] of a knot");
  add_common(compute, o);
  add_knot_options(compute, o);
  compute->add_option("--format", o.format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  compute->add_flag("--framing-correct", o.framing_correct,
                    "renormalize by the ribbon twist to the 0-framed closure");

  CLI::App* jones = app.add_subcommand(
      "jones", "single colored Jones coefficient a[s]");
  add_common(jones, o);
  add_knot_options(jones, o);
  jones->add_option("--s", o.color_s, "color (irreducible dimension), 1..p")
      ->required();
  jones->add_option("--format", o.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  jones->add_flag("--framing-correct", o.framing_correct,
                  "renormalize by the ribbon twist to the 0-framed closure");

  CLI::App* alexander = app.add_subcommand(
      "alexander", "colored Alexander value O(lambda) on the p-dimensional "
                   "generic-weight module");
  add_common(alexander, o);
  add_knot_options(alexander, o);
  alexander
      ->add_option("--lambda", o.lambda_text,
                   "weight parameter, e.g. 0.37 or 1.61+0.2i; integral values "
                   "are evaluated as symmetric-offset limits")
      ->required();
  alexander->add_flag("--derivative", o.derivative,
                      "also print dO/dlambda (Richardson-extrapolated)");
  alexander->add_flag("--framing-correct", o.framing_correct,
                      "renormalize by the ribbon twist to the 0-framed "
                      "closure");

  CLI::App* verify = app.add_subcommand(
      "verify", "run verification suites; exit 0 iff everything passes");
  add_common(verify, o);
  add_knot_options(verify, o);
  verify->add_option(
      "--suite", o.suite,
      "relations, yang-baxter, markov, connected-sum, theorem4, symmetry, "
      "offdiagonal, or all");
  verify->add_option("--tolerance", o.tolerance,
                     "override the suite's default tolerance");
  verify->add_option("--seed", o.seed, "seed for randomized suites");
  verify->add_option("--cases", o.cases, "number of randomized cases")
      ->check(CLI::PositiveNumber);
  verify->add_option("--knot2", o.knot2,
                     "second preset for the connected-sum suite");
  verify->add_flag("--verbose", o.verbose, "print every check line");

  CLI::App* presets =
      app.add_subcommand("presets", "list preset knots with braid words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(o);
    if (jones->parsed()) return cmd_jones(o);
    if (alexander->parsed())
      return with_precision(o.precision, [&](auto tag) {
        return cmd_alexander_at<decltype(tag)>(o);
      });
    if (verify->parsed())
      return with_precision(o.precision, [&](auto tag) {
        return cmd_verify_at<decltype(tag)>(o);
      });
    if (presets->parsed()) return cmd_presets();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const MultiComponent& e) {
    std::cerr << "not a knot: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "dimension cap: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
