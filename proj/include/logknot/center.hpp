#pragma once

#include <vector>

#include "logknot/tangle.hpp"

namespace logknot {

// Coefficients of the tangle operator of a knot against the canonical
// central idempotents and nilpotents: a[s] for s = 0..p (a[0] is the scalar
// on the irreducible of dimension p in the minus family, a[p] the scalar on
// the Steinberg module), and b_plus[s-1], b_minus[s-1] for s = 1..p-1.
// These are invariants of the framed closure; `framing` records the word's
// framing so callers can renormalize by ribbon scalars if desired.
struct CentralDecomposition {
  int p = 0;
  long framing = 0;
  std::vector<Cyclo> a;        // size p+1, indexed by s
  std::vector<Cyclo> b_plus;   // size p-1, b_plus[s-1] = b_s^+
  std::vector<Cyclo> b_minus;  // size p-1, b_minus[s-1] = b_s^-
};

bool operator==(const CentralDecomposition& l, const CentralDecomposition& r);

// FullMatrices evaluates whole tangle operators and asserts the complete
// scalar-plus-nilpotent structure; ColumnExtraction evaluates one column
// per module (cheaper on wide braids) and asserts the structure visible in
// that column. Both produce identical decompositions.
enum class DecomposeMode { FullMatrices, ColumnExtraction };

struct DecomposeOptions {
  DecomposeMode mode = DecomposeMode::FullMatrices;
  TangleOptions tangle;
};

CentralDecomposition decompose(const FramedBraidWord& b, int p,
                               const DecomposeOptions& opts = {});

// a_s alone: the scalar action on the s-th plus-family irreducible
// (scalarness asserted). Normalized so the unknot gives 1.
Cyclo colored_jones(const FramedBraidWord& b, int p, int s,
                    const DecomposeOptions& opts = {});

// Connected-sum identities: a_s is multiplicative and b_s^± satisfies the
// Leibniz rule. All comparisons are exact.
struct ConnectedSumReport {
  CentralDecomposition left, right, sum;
  bool multiplicative = false;  // a_s(K1 # K2) = a_s(K1) a_s(K2), all s
  bool leibniz = false;  // b_s(K1 # K2) = a_s(K1) b_s(K2) + b_s(K1) a_s(K2)
  bool pass() const { return multiplicative && leibniz; }
};

ConnectedSumReport verify_connected_sum(const FramedBraidWord& b1,
                                        const FramedBraidWord& b2, int p,
                                        const DecomposeOptions& opts = {});

}  // namespace logknot
