#include "logknot/serialization.hpp"

#include <json.hpp>

#include <sstream>

#include "logknot/numeric.hpp"

namespace logknot {

namespace {

using nlohmann::json;

std::string approx_text(const Cyclo& x, int digits) {
  return complex_to_string(to_complex<Float128>(x), digits);
}

json coefficient_entry(int s, const Cyclo& x, int digits) {
  return json{{"s", s}, {"exact", x.to_string()}, {"approx", approx_text(x, digits)}};
}

json family_array(const std::vector<Cyclo>& xs, int first_s, int digits) {
  json arr = json::array();
  for (size_t i = 0; i < xs.size(); ++i)
    arr.push_back(coefficient_entry(first_s + int(i), xs[i], digits));
  return arr;
}

std::vector<Cyclo> family_from_json(const json& arr, int p, int first_s,
                                    size_t want) {
  if (!arr.is_array() || arr.size() != want)
    throw ParseError("coefficient family has the wrong length");
  std::vector<Cyclo> out(want);
  for (size_t i = 0; i < want; ++i) {
    const json& e = arr.at(i);
    if (e.at("s").get<int>() != first_s + int(i))
      throw ParseError("coefficient family indices out of order");
    out[i] = parse_cyclo(p, e.at("exact").get<std::string>());
  }
  return out;
}

}  // namespace

std::string to_json_text(const DecompositionRecord& r, int digits) {
  json doc;
  doc["schema"] = 1;
  doc["p"] = r.dec.p;
  doc["knot"] = {{"braid", format_braid_word(r.braid)},
                 {"strands", r.braid.strands},
                 {"framing", r.dec.framing}};
  doc["a"] = family_array(r.dec.a, 0, digits);
  doc["b_plus"] = family_array(r.dec.b_plus, 1, digits);
  doc["b_minus"] = family_array(r.dec.b_minus, 1, digits);
  return doc.dump(2) + "\n";
}

DecompositionRecord record_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<int>() != 1)
      throw ParseError("unsupported schema version");
    DecompositionRecord r;
    r.dec.p = doc.at("p").get<int>();
    if (r.dec.p < 2) throw ParseError("p out of range");
    const json& knot = doc.at("knot");
    r.braid = parse_braid_word(knot.at("braid").get<std::string>(),
                               knot.at("strands").get<int>());
    r.dec.framing = knot.at("framing").get<long>();
    const size_t p = size_t(r.dec.p);
    r.dec.a = family_from_json(doc.at("a"), r.dec.p, 0, p + 1);
    r.dec.b_plus = family_from_json(doc.at("b_plus"), r.dec.p, 1, p - 1);
    r.dec.b_minus = family_from_json(doc.at("b_minus"), r.dec.p, 1, p - 1);
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed decomposition document: ") +
                     e.what());
  }
}

std::string to_csv_text(const DecompositionRecord& r, int digits) {
  std::ostringstream out;
  out << "family,s,exact,approx\n";
  auto rows = [&](const char* family, const std::vector<Cyclo>& xs,
                  int first_s) {
    for (size_t i = 0; i < xs.size(); ++i)
      out << family << ',' << first_s + int(i) << ",\"" << xs[i].to_string()
          << "\",\"" << approx_text(xs[i], digits) << "\"\n";
  };
  rows("a", r.dec.a, 0);
  rows("b_plus", r.dec.b_plus, 1);
  rows("b_minus", r.dec.b_minus, 1);
  return out.str();
}

std::string to_table_text(const DecompositionRecord& r, int digits) {
  std::ostringstream out;
  out << "braid: " << format_braid_word(r.braid) << "  (strands "
      << r.braid.strands << ", framing " << r.dec.framing << ", p " << r.dec.p
      << ")\n";
  auto rows = [&](const char* family, const std::vector<Cyclo>& xs,
                  int first_s) {
    for (size_t i = 0; i < xs.size(); ++i) {
      out << "  " << family << "[" << first_s + int(i)
          << "] = " << approx_text(xs[i], digits) << "    exact: "
          << xs[i].to_string() << "\n";
    }
  };
  rows("a", r.dec.a, 0);
  rows("b+", r.dec.b_plus, 1);
  rows("b-", r.dec.b_minus, 1);
  return out.str();
}

}  // namespace logknot
