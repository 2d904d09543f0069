#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logknot/alexander.hpp"
#include "logknot/center.hpp"

namespace logknot {

// Aggregated pass/fail verification suites over the library's checkers:
// defining algebra relations on every module family, the braid relation,
// randomized Markov-move invariance of the decomposition, and connected-sum
// identities. Each check carries a residual (0 for exact comparisons).

struct SuiteCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool pass() const {
    for (const SuiteCheck& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  double max_residual() const {
    double r = 0.0;
    for (const SuiteCheck& c : checks) r = std::max(r, c.residual);
    return r;
  }
  void add(const std::string& name, bool ok, double res = 0.0) {
    checks.push_back({name, ok, res});
  }
  void absorb(const std::string& prefix, const CheckReport& rep) {
    for (const CheckItem& it : rep.items)
      add(prefix + ": " + it.name, it.pass, it.residual);
  }
};

// Every module the library can build at this p satisfies the defining
// relations: integral modules exactly, the generic-weight families to
// `numeric_tol`. The glued family runs over glue indices 1..p-1 (the s = p
// matrices violate E^p = 0; see build_glued / glued_offdiagonal).
template <class B = Float128>
SuiteReport relations_suite(int p, const std::vector<Complex<B>>& lambdas,
                            double numeric_tol = 1e-10) {
  SuiteReport out;
  out.suite = "relations";
  for (int alpha : {+1, -1})
    for (int s = 1; s <= p; ++s) {
      std::string name = std::string("Irr(") + (alpha > 0 ? "+" : "-") + "," +
                         std::to_string(s) + ")";
      out.absorb(name, check_module_relations(build_irreducible(p, alpha, s),
                                              0.0));
    }
  for (int alpha : {+1, -1})
    for (int t = 1; t <= p - 1; ++t) {
      std::string name = std::string("Proj(") + (alpha > 0 ? "+" : "-") + "," +
                         std::to_string(t) + ")";
      out.absorb(name, check_module_relations(build_projective(p, alpha, t),
                                              0.0));
    }
  for (const Complex<B>& lam : lambdas) {
    std::string ltext = complex_to_string(lam, 6);
    out.absorb("X(" + ltext + ")",
               check_module_relations(build_nonintegral<B>(p, lam),
                                      numeric_tol));
    for (int s = 1; s <= p - 1; ++s)
      out.absorb("Y(" + ltext + "," + std::to_string(s) + ")",
                 check_module_relations(build_glued<B>(p, lam, s),
                                        numeric_tol));
  }
  return out;
}

template <class B = Float128>
std::vector<Complex<B>> default_generic_weights() {
  return {Complex<B>(B(0.37), B(0)), Complex<B>(B(1.61), B(0.2))};
}

// Braid relation (B (x) 1)(1 (x) B)(B (x) 1) = (1 (x) B)(B (x) 1)(1 (x) B),
// exactly, on the two-dimensional irreducible; for p = 2 also on the
// four-dimensional projective cover (larger covers make the triple tensor
// power disproportionate for a smoke suite).
inline SuiteReport yang_baxter_suite(int p) {
  SuiteReport out;
  out.suite = "yang-baxter";
  out.absorb("Irr(+,2)", check_yang_baxter(build_irreducible(p, +1, 2), 0.0));
  if (p == 2)
    out.absorb("Proj(+,1)",
               check_yang_baxter(build_projective(p, +1, 1), 0.0));
  return out;
}

// One randomized Markov comparison group: a seed braid, a one-letter random
// conjugation of it, and its four stabilizations (each sign, twist-side on n
// strands and crossing-side on n+1 strands).
struct MarkovCase {
  int p = 2;
  FramedBraidWord base, conjugated;
  FramedBraidWord twist_pos, cross_pos, twist_neg, cross_neg;
};

// Deterministic sampler (explicit generator arithmetic, no distribution
// objects, so the stream is reproducible everywhere). Braids have up to
// `max_strands` strands and `max_len` letters (crossings, with occasional
// framing twists), resampled until the closure is a knot.
inline std::vector<MarkovCase> sample_markov_cases(
    const std::vector<int>& ps, unsigned long long seed, int cases,
    int max_strands = 3, int max_len = 8) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return int(rng() % (unsigned long long)(n)); };
  auto random_letter = [&](int n) {
    BraidLetter l{};
    bool twist = (n == 1) || pick(4) == 0;
    l.kind = twist ? BraidLetter::Tau : BraidLetter::Sigma;
    l.index = 1 + pick(twist ? n : n - 1);
    l.sign = pick(2) ? +1 : -1;
    return l;
  };
  std::vector<MarkovCase> out;
  for (int k = 0; k < cases; ++k) {
    MarkovCase mc;
    FramedBraidWord b;
    do {
      b.strands = 1 + pick(max_strands);
      b.letters.clear();
      int len = 1 + pick(max_len);
      for (int i = 0; i < len; ++i) b.letters.push_back(random_letter(b.strands));
    } while (closure_components(b) != 1);
    mc.p = ps[size_t(pick(int(ps.size())))];
    FramedBraidWord g;
    g.strands = b.strands;
    g.letters.push_back(random_letter(b.strands));
    mc.base = b;
    mc.conjugated = markov_conjugate(b, g);
    mc.twist_pos = markov_stabilize(b, +1, StabilizationMode::TwistSide);
    mc.cross_pos = markov_stabilize(b, +1, StabilizationMode::CrossingSide);
    mc.twist_neg = markov_stabilize(b, -1, StabilizationMode::TwistSide);
    mc.cross_neg = markov_stabilize(b, -1, StabilizationMode::CrossingSide);
    out.push_back(std::move(mc));
  }
  return out;
}

// Exact equality of decompositions across the Markov moves: conjugation
// preserves the framed closure outright, and the two stabilization modes of
// the same sign produce the same framed closure as each other.
inline SuiteReport markov_suite(const std::vector<MarkovCase>& cases,
                                const DecomposeOptions& opts = {
                                    DecomposeMode::ColumnExtraction, {}}) {
  SuiteReport out;
  out.suite = "markov";
  for (size_t k = 0; k < cases.size(); ++k) {
    const MarkovCase& mc = cases[k];
    CentralDecomposition base = decompose(mc.base, mc.p, opts);
    bool conj_ok = base == decompose(mc.conjugated, mc.p, opts);
    bool stab_pos = decompose(mc.twist_pos, mc.p, opts) ==
                    decompose(mc.cross_pos, mc.p, opts);
    bool stab_neg = decompose(mc.twist_neg, mc.p, opts) ==
                    decompose(mc.cross_neg, mc.p, opts);
    std::ostringstream name;
    name << "case " << k << " (p=" << mc.p << ", n=" << mc.base.strands
         << ", len=" << mc.base.letters.size() << ")";
    out.add(name.str() + " conjugation", conj_ok);
    out.add(name.str() + " stabilization+", stab_pos);
    out.add(name.str() + " stabilization-", stab_neg);
  }
  return out;
}

inline SuiteReport connected_sum_suite(const FramedBraidWord& b1,
                                       const FramedBraidWord& b2, int p,
                                       const DecomposeOptions& opts = {}) {
  SuiteReport out;
  out.suite = "connected-sum";
  ConnectedSumReport rep = verify_connected_sum(b1, b2, p, opts);
  out.add("a multiplicative", rep.multiplicative);
  out.add("b Leibniz", rep.leibniz);
  return out;
}

}  // namespace logknot
