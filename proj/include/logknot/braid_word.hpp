#pragma once

#include <string>
#include <vector>

#include "logknot/errors.hpp"

namespace logknot {

// One letter of a framed braid word on n strands: sigma_i (crossing of
// strands i, i+1) or tau_i (framing twist on strand i), with a sign.
struct BraidLetter {
  enum Kind { Sigma, Tau };
  Kind kind;
  int index;  // 1-based; Sigma: 1..n-1, Tau: 1..n
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
    return a.kind == b.kind && a.index == b.index && a.sign == b.sign;
  }
};

struct FramedBraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const FramedBraidWord& a, const FramedBraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

// Grammar: whitespace-separated tokens `s<i>`, `S<i>`, `t<i>`, `T<i>`;
// lowercase is the positive letter, uppercase its inverse, and an optional
// `^-1` suffix flips the sign. Throws ParseError on unknown tokens or
// out-of-range indices.
FramedBraidWord parse_braid_word(const std::string& text, int strands);

// Canonical text form (lowercase letters with `^-1` spelled as uppercase).
std::string format_braid_word(const FramedBraidWord& b);

// Number of link components of the closure (cycles of the underlying
// permutation; tau letters do not permute strands).
int closure_components(const FramedBraidWord& b);

// Total framing of the closure: writhe of sigma letters plus tau letters.
int framing_of(const FramedBraidWord& b);

FramedBraidWord inverse_word(const FramedBraidWord& b);

// Markov move (i): g b g^{-1}; g must use the same strand count.
FramedBraidWord markov_conjugate(const FramedBraidWord& b,
                                 const FramedBraidWord& g);

// Markov move (ii) produces a pair of words with the same framed closure:
// b tau_n^{sign} on n strands (TwistSide), and b sigma_n^{sign} on n+1
// strands (CrossingSide).
enum class StabilizationMode { TwistSide, CrossingSide };
FramedBraidWord markov_stabilize(const FramedBraidWord& b, int sign,
                                 StabilizationMode mode);

// Braid word whose closure is the connected sum of the two closures (both
// must be knots): the second braid follows the first, sharing one strand.
FramedBraidWord connected_sum_word(const FramedBraidWord& b1,
                                   const FramedBraidWord& b2);

struct KnotPreset {
  std::string name;
  std::string word;
  int strands;
};

const std::vector<KnotPreset>& knot_presets();

// Parsed preset; throws InvalidParameter for unknown names.
FramedBraidWord preset_braid(const std::string& name);

}  // namespace logknot
