#include "logknot/braid_word.hpp"

#include <numeric>
#include <sstream>

namespace logknot {

namespace {

BraidLetter parse_token(const std::string& tok, int strands) {
  if (tok.empty()) throw ParseError("empty braid token");
  BraidLetter l{};
  switch (tok[0]) {
    case 's': l.kind = BraidLetter::Sigma; l.sign = +1; break;
    case 'S': l.kind = BraidLetter::Sigma; l.sign = -1; break;
    case 't': l.kind = BraidLetter::Tau; l.sign = +1; break;
    case 'T': l.kind = BraidLetter::Tau; l.sign = -1; break;
    default:
      throw ParseError("unknown braid token '" + tok + "'");
  }
  size_t i = 1, digits = 0;
  long idx = 0;
  while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
    idx = idx * 10 + (tok[i] - '0');
    if (idx > 1'000'000) throw ParseError("braid index too large in '" + tok + "'");
    ++i;
    ++digits;
  }
  if (digits == 0) throw ParseError("missing index in braid token '" + tok + "'");
  if (i != tok.size()) {
    if (tok.substr(i) == "^-1")
      l.sign = -l.sign;
    else
      throw ParseError("unknown braid token '" + tok + "'");
  }
  l.index = int(idx);
  if (l.kind == BraidLetter::Sigma && (l.index < 1 || l.index >= strands))
    throw ParseError("crossing index out of range in '" + tok + "'");
  if (l.kind == BraidLetter::Tau && (l.index < 1 || l.index > strands))
    throw ParseError("twist index out of range in '" + tok + "'");
  return l;
}

}  // namespace

FramedBraidWord parse_braid_word(const std::string& text, int strands) {
  if (strands < 1) throw InvalidParameter("strand count must be positive");
  FramedBraidWord b;
  b.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) b.letters.push_back(parse_token(tok, strands));
  return b;
}

std::string format_braid_word(const FramedBraidWord& b) {
  std::string out;
  for (const BraidLetter& l : b.letters) {
    if (!out.empty()) out += ' ';
    char c = (l.kind == BraidLetter::Sigma) ? 's' : 't';
    if (l.sign < 0) c = char(c - 'a' + 'A');
    out += c;
    out += std::to_string(l.index);
  }
  return out;
}

int closure_components(const FramedBraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (const BraidLetter& l : b.letters)
    if (l.kind == BraidLetter::Sigma)
      std::swap(perm[l.index - 1], perm[l.index]);
  std::vector<bool> seen(b.strands, false);
  int cycles = 0;
  for (int i = 0; i < b.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

int framing_of(const FramedBraidWord& b) {
  int f = 0;
  for (const BraidLetter& l : b.letters) f += l.sign;
  return f;
}

FramedBraidWord inverse_word(const FramedBraidWord& b) {
  FramedBraidWord out;
  out.strands = b.strands;
  out.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    out.letters.push_back(BraidLetter{it->kind, it->index, -it->sign});
  return out;
}

FramedBraidWord markov_conjugate(const FramedBraidWord& b,
                                 const FramedBraidWord& g) {
  if (g.strands != b.strands)
    throw InvalidParameter("conjugating word must use the same strand count");
  FramedBraidWord out;
  out.strands = b.strands;
  out.letters = g.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  FramedBraidWord gi = inverse_word(g);
  out.letters.insert(out.letters.end(), gi.letters.begin(), gi.letters.end());
  return out;
}

FramedBraidWord markov_stabilize(const FramedBraidWord& b, int sign,
                                 StabilizationMode mode) {
  if (sign != 1 && sign != -1)
    throw InvalidParameter("stabilization sign must be +1 or -1");
  FramedBraidWord out = b;
  if (mode == StabilizationMode::TwistSide) {
    out.letters.push_back(BraidLetter{BraidLetter::Tau, b.strands, sign});
  } else {
    out.strands = b.strands + 1;
    out.letters.push_back(BraidLetter{BraidLetter::Sigma, b.strands, sign});
  }
  return out;
}

FramedBraidWord connected_sum_word(const FramedBraidWord& b1,
                                   const FramedBraidWord& b2) {
  if (closure_components(b1) != 1 || closure_components(b2) != 1)
    throw MultiComponent("connected sum requires knot closures");
  FramedBraidWord out;
  out.strands = b1.strands + b2.strands - 1;
  out.letters = b1.letters;
  for (BraidLetter l : b2.letters) {
    l.index += b1.strands - 1;
    out.letters.push_back(l);
  }
  return out;
}

const std::vector<KnotPreset>& knot_presets() {
  static const std::vector<KnotPreset> presets = {
      {"unknot", "", 1},
      {"trefoil", "s1 s1 s1", 2},
      {"figure8", "s1 S2 s1 S2", 3},
      {"cinquefoil", "s1 s1 s1 s1 s1", 2},
  };
  return presets;
}

FramedBraidWord preset_braid(const std::string& name) {
  for (const KnotPreset& k : knot_presets())
    if (k.name == name) return parse_braid_word(k.word, k.strands);
  throw InvalidParameter("unknown preset knot '" + name + "'");
}

}  // namespace logknot
