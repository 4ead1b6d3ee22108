#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <variant>

#include "matos/complexes.hpp"
#include "matos/osequences.hpp"
#include "matos/stanley.hpp"

namespace matos {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Input parsing.

inline std::vector<int> mask_to_list(Mask m) { return elements_of(m); }

inline json masks_to_json(const std::vector<Mask>& fam) {
  json out = json::array();
  for (Mask f : fam) out.push_back(mask_to_list(f));
  return out;
}

/// Complex input: {"n": 6, "facets": [[1,2,3],...]} or
/// {"n": 6, "circuits": [[1,2,5,6],...]} with exactly one of the two keys.
inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("complex input: object with integer \"n\" required");
  int n = j["n"].get<int>();
  bool has_f = j.contains("facets"), has_c = j.contains("circuits");
  if (has_f == has_c)
    throw std::invalid_argument("complex input: exactly one of \"facets\"/\"circuits\" required");
  const json& fam = j[has_f ? "facets" : "circuits"];
  if (!fam.is_array()) throw std::invalid_argument("complex input: set family must be an array");
  std::vector<Mask> masks;
  for (const json& s : fam) {
    if (!s.is_array()) throw std::invalid_argument("complex input: each set must be an array");
    Mask m = 0;
    for (const json& e : s) {
      if (!e.is_number_integer()) throw std::invalid_argument("complex input: elements are integers");
      long long v = e.get<long long>();
      if (v < 1 || v > n) throw std::invalid_argument("complex input: element out of range [1,n]");
      m |= bit(static_cast<int>(v));
    }
    masks.push_back(m);
  }
  return has_f ? from_facets(n, masks) : from_circuits(n, masks);
}

/// Sequence input: {"h": [1,7,9,12]}.
inline IntSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("h") || !j["h"].is_array())
    throw std::invalid_argument("sequence input: object with array \"h\" required");
  IntSequence h;
  for (const json& e : j["h"]) {
    if (!e.is_number_integer()) throw std::invalid_argument("sequence input: entries are integers");
    h.push_back(e.get<long long>());
  }
  if (h.empty()) throw std::invalid_argument("sequence input: \"h\" must be nonempty");
  return h;
}

/// Either kind of analyze input, discriminated by which key is present.
inline std::variant<SimplicialComplex, IntSequence> input_from_json(const json& j) {
  if (j.is_object() && j.contains("h")) return sequence_from_json(j);
  return complex_from_json(j);
}

// ---------------------------------------------------------------------------
// Output serialization.

inline json complex_to_json(const SimplicialComplex& c) {
  json j;
  j["n"] = c.n;
  j["facets"] = masks_to_json(c.facets);
  return j;
}

inline json ideal_to_json(const OrderIdeal& X) {
  json j;
  j["r"] = X.r;
  j["maxima"] = json::array();
  for (const Monomial& m : maximal_monomials(X)) j["maxima"].push_back(m);
  return j;
}

inline json purity_to_json(const PurityVerdict& v) {
  json j;
  switch (v.outcome) {
    case Purity::pure: j["pure"] = true; break;
    case Purity::not_pure: j["pure"] = false; break;
    case Purity::undecided: j["pure"] = "undecided"; break;
  }
  j["decided_by"] = v.decided_by;
  if (v.witness) j["witness"] = ideal_to_json(*v.witness);
  return j;
}

inline json verdict_to_json(const Verdict& v) {
  json j;
  switch (v.outcome) {
    case Verdict::Outcome::pass: j["outcome"] = "pass"; break;
    case Verdict::Outcome::fail: j["outcome"] = "fail"; break;
    case Verdict::Outcome::undecided: j["outcome"] = "undecided"; break;
  }
  j["method"] = v.method;
  if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
  return j;
}

inline json certificate_to_json(const StanleyCertificate& cert) {
  json j;
  j["case"] = certificate_case_name(cert.case_tag);
  if (cert.case_tag == StanleyCertificate::Case::inductive_vertex) j["vertex"] = cert.vertex;
  j["h"] = cert.h;
  if (cert.witness) j["witness"] = ideal_to_json(*cert.witness);
  j["children"] = json::array();
  for (const auto& child : cert.children) j["children"].push_back(certificate_to_json(child));
  return j;
}

inline json partition_to_json(const GroundPartition& p) {
  json out = json::array();
  for (Mask b : p.blocks) out.push_back(mask_to_list(b));
  return out;
}

/// Full analyze report for a complex: f, h, circuits, ground-set classes,
/// recognizer/purity/cone/CI flags, Brown-Colbourn, and the Tutte cross-check.
inline json analyze_complex_report(const SimplicialComplex& c,
                                   long long cap = kDefaultSearchCap) {
  json j;
  j["input"] = complex_to_json(c);
  j["f"] = f_vector(c);
  j["h"] = h_vector(c);
  j["circuits"] = masks_to_json(circuits(c));
  j["series_classes"] = partition_to_json(series_classes(c));
  j["parallel_classes"] = partition_to_json(parallel_classes(c));
  bool matroid = is_matroid(c);
  j["matroid"] = matroid;
  j["cone"] = is_cone(c);
  j["complete_intersection"] = matroid && is_complete_intersection(c);
  j["tutte_agrees"] = tutte_h(c) == h_vector(c);
  if (matroid) {
    auto res = stanley_check(c, cap);
    j["h_nonzero"] = res.h;
    j["purity"] = purity_to_json(res.purity);
    j["brown_colbourn"] = verdict_to_json(brown_colbourn_check(
        h_vector(c), {Rational(1), Rational(3, 2), Rational(2)}));
  }
  return j;
}

/// Full analyze report for a sequence: O-sequence, differentiable,
/// flawless, and the layered purity verdict with witness.
inline json analyze_sequence_report(const IntSequence& h,
                                    long long cap = kDefaultSearchCap) {
  json j;
  j["h"] = h;
  j["o_sequence"] = is_O_sequence(h);
  j["differentiable"] = is_differentiable(h);
  j["flawless"] = is_flawless(h);
  j["purity"] = purity_to_json(is_pure_O_sequence(h, cap));
  return j;
}

// ---------------------------------------------------------------------------
// Table rendering: a stable plain-text view of the same JSON data.

namespace detail {

inline void render_table_rec(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      render_table_rec(it.value(), key, out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    int idx = 0;
    for (const json& e : j) render_table_rec(e, prefix + "[" + std::to_string(idx++) + "]", out);
  } else {
    out += prefix;
    out += "  ";
    out += j.dump();
    out += "\n";
  }
}

}  // namespace detail

/// Flattens a report into "dotted.path  value" lines, one scalar per line.
inline std::string render_table(const json& j) {
  std::string out;
  detail::render_table_rec(j, "", out);
  return out;
}

}  // namespace matos
