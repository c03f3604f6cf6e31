#pragma once

// JSON spec documents.
//
//   {
//     "name": "...",
//     "dimension": 3,
//     "coordinates": ["x", "y", "z"],
//     "parameters": ["alpha", "beta"],          optional; alpha, beta always added
//     "frame": [["0", "0", "x"], ...],          row i: coefficients of E_i on d/dx^a
//     "structure_functions": {"1,3": ["1", "0", "0"], ...},   [E_i, E_j], 1-based
//     "metric": [["1", "0", "0"], ...],         optional, default identity
//     "domain_note": "x > 0",                   optional
//     "contact": {
//       "phi": [[...], ...],                    row k, column j: E_k component of phi E_j
//       "xi": ["0", "0", "1"],
//       "eta": ["0", "0", "1"]                  optional, default g(., xi)
//     },
//     "connection": {"1,1": ["0", "0", "-1"], ...},   optional custom nabla_{E_i} E_j
//     "notes": ...                              ignored
//   }
//
// At least one of "frame" and "structure_functions" is required. Pairs that
// are not listed in "structure_functions" or "connection" are zero.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kenmotsu/connection.hpp"
#include "kenmotsu/contact.hpp"
#include "kenmotsu/manifold.hpp"
#include "kenmotsu/parser.hpp"

namespace kenmotsu {

struct SpecDocument {
  ManifoldSpec manifold;
  ContactStructure contact;
  std::optional<ConnectionTable> connection;
};

namespace detail {

using json = nlohmann::json;

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

inline std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw SpecError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SpecError(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Expr parse_entry(const json& j, const SymbolTablePtr& symbols, const std::string& what) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    throw SpecError(what + " must be an expression string");
  }
  try {
    return parse(text, symbols);
  } catch (const SymbolicError& e) {
    throw SpecError(what + ": " + e.what());
  }
}

inline std::vector<Expr> expr_row(const json& j, std::size_t n, const SymbolTablePtr& symbols,
                                  const std::string& what) {
  if (!j.is_array()) throw SpecError(what + " must be an array");
  if (j.size() != n) {
    throw SpecError(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<Expr> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(parse_entry(j[k], symbols, what + "[" + std::to_string(k) + "]"));
  return out;
}

inline ExprMatrix expr_matrix(const json& j, std::size_t n, const SymbolTablePtr& symbols, const std::string& what) {
  if (!j.is_array()) throw SpecError(what + " must be an array of rows");
  if (j.size() != n) {
    throw SpecError(what + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(n));
  }
  ExprMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = expr_row(j[r], n, symbols, what + " row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

// "i,j" -> (i-1, j-1).
inline std::pair<std::size_t, std::size_t> index_pair(const std::string& key, std::size_t n, const std::string& what) {
  std::istringstream in(key);
  long long i = 0, j = 0;
  char comma = 0;
  if (!(in >> i >> comma >> j) || comma != ',' || !(in >> std::ws).eof() || i < 1 || j < 1 ||
      static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
    throw SpecError(what + " key '" + key + "' must be \"i,j\" with 1 <= i, j <= " + std::to_string(n));
  }
  return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
}

inline Tensor12 pair_table(const json& j, std::size_t n, const SymbolTablePtr& symbols, const std::string& what,
                           bool antisymmetric) {
  if (!j.is_object()) throw SpecError(what + " must be an object keyed by \"i,j\"");
  Tensor12 t(n);
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const auto& [key, value] : j.items()) {
    const auto [i, k] = index_pair(key, n, what);
    const auto row = expr_row(value, n, symbols, what + " \"" + key + "\"");
    given.insert({i, k});
    for (std::size_t l = 0; l < n; ++l) {
      t(i, k, l) = row[l];
      if (antisymmetric && !given.count({k, i})) t(k, i, l) = -row[l];
    }
  }
  return t;
}

}  // namespace detail

inline SpecDocument load_spec(const nlohmann::json& doc) {
  using detail::json;
  if (!doc.is_object()) throw SpecError("spec must be a JSON object");
  static const std::set<std::string> known{"name",   "dimension",   "coordinates", "parameters",
                                           "frame",  "structure_functions", "metric", "domain_note",
                                           "contact", "connection", "notes"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw SpecError("unknown key '" + key + "'");
  }
  for (const char* key : {"name", "dimension", "contact"}) {
    if (!doc.contains(key)) throw SpecError(std::string("missing required key '") + key + "'");
  }
  if (!doc["name"].is_string()) throw SpecError("name must be a string");
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1) {
    throw SpecError("dimension must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["dimension"].get<long long>());
  if (!doc.contains("frame") && !doc.contains("structure_functions")) {
    throw SpecError("either 'frame' or 'structure_functions' is required");
  }

  std::vector<std::string> coords;
  if (doc.contains("coordinates")) coords = detail::string_list(doc["coordinates"], "coordinates");
  std::vector<std::string> params;
  if (doc.contains("parameters")) params = detail::string_list(doc["parameters"], "parameters");
  for (const char* p : {"alpha", "beta"}) {
    if (std::find(params.begin(), params.end(), p) == params.end()) params.emplace_back(p);
  }
  std::set<std::string> seen;
  for (const auto* list : {&coords, &params}) {
    for (const auto& s : *list) {
      if (!detail::is_identifier(s)) throw SpecError("'" + s + "' is not a valid symbol name");
      if (!seen.insert(s).second) throw SpecError("symbol '" + s + "' is declared twice");
    }
  }
  if (doc.contains("frame") && coords.size() != n) {
    throw SpecError("dimension is " + std::to_string(n) + " but " + std::to_string(coords.size()) +
                    " coordinates are declared");
  }
  const SymbolTablePtr symbols = make_symbols(coords, params);

  std::optional<ExprMatrix> frame;
  if (doc.contains("frame")) frame = detail::expr_matrix(doc["frame"], n, symbols, "frame");
  std::optional<Tensor12> structure;
  if (doc.contains("structure_functions")) {
    structure = detail::pair_table(doc["structure_functions"], n, symbols, "structure_functions", true);
  }
  std::optional<Tensor02> metric;
  if (doc.contains("metric")) {
    const ExprMatrix g = detail::expr_matrix(doc["metric"], n, symbols, "metric");
    metric = Tensor02::generate(n, [&](const auto& idx) { return g(idx[0], idx[1]); });
  }
  std::string note;
  if (doc.contains("domain_note")) {
    if (!doc["domain_note"].is_string()) throw SpecError("domain_note must be a string");
    note = doc["domain_note"].get<std::string>();
  }

  ManifoldSpec manifold(doc["name"].get<std::string>(), coords, params, std::move(frame), std::move(structure),
                        std::move(metric), std::move(note), symbols);

  const json& cj = doc["contact"];
  if (!cj.is_object()) throw SpecError("contact must be an object");
  for (const auto& [key, value] : cj.items()) {
    if (key != "phi" && key != "xi" && key != "eta") throw SpecError("unknown key 'contact." + key + "'");
  }
  if (!cj.contains("phi") || !cj.contains("xi")) throw SpecError("contact requires 'phi' and 'xi'");
  const ExprMatrix phi_m = detail::expr_matrix(cj["phi"], n, symbols, "contact.phi");
  Tensor11 phi = Tensor11::generate(n, [&](const auto& idx) { return phi_m(idx[1], idx[0]); });
  const auto xi_row = detail::expr_row(cj["xi"], n, symbols, "contact.xi");
  FrameVec xi = FrameVec::generate(n, [&](const auto& idx) { return xi_row[idx[0]]; });
  std::optional<CoVec> eta;
  if (cj.contains("eta")) {
    const auto eta_row = detail::expr_row(cj["eta"], n, symbols, "contact.eta");
    eta = CoVec::generate(n, [&](const auto& idx) { return eta_row[idx[0]]; });
  }
  ContactStructure contact = make_contact(manifold, std::move(phi), std::move(xi), std::move(eta));

  std::optional<ConnectionTable> connection;
  if (doc.contains("connection")) {
    connection = ConnectionTable{detail::pair_table(doc["connection"], n, symbols, "connection", false), "custom"};
  }
  return {std::move(manifold), std::move(contact), std::move(connection)};
}

inline SpecDocument load_spec_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  return load_spec(doc);
}

inline SpecDocument load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec_text(buf.str());
}

}  // namespace kenmotsu
