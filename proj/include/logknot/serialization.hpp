#pragma once

#include <string>

#include "logknot/center.hpp"

namespace logknot {

// A decomposition together with the braid it came from, as carried by the
// machine-readable output formats.
struct DecompositionRecord {
  FramedBraidWord braid;
  CentralDecomposition dec;
};

// JSON document, schema version 1:
//   {schema, p, knot: {braid, strands, framing},
//    a: [{s, exact, approx}...], b_plus: [...], b_minus: [...]}
// `exact` is the canonical cyclotomic text (authoritative, parseable by
// parse_cyclo); `approx` is an advisory decimal embedding at zeta = e^{i
// pi/2p} with the given number of significant digits.
std::string to_json_text(const DecompositionRecord& r, int digits = 24);

// Inverse of to_json_text: rebuilds the record with exact coefficients.
// Throws ParseError on malformed documents or wrong schema version.
DecompositionRecord record_from_json(const std::string& text);

// CSV with header "family,s,exact,approx" and one row per coefficient.
std::string to_csv_text(const DecompositionRecord& r, int digits = 24);

// Human-readable table.
std::string to_table_text(const DecompositionRecord& r, int digits = 12);

}  // namespace logknot
