#pragma once

/// @file report_json.hpp
/// @brief JSON and plain-text renderings of reports.
///
/// Serialization is deterministic: object keys are emitted in sorted order,
/// no floating-point values are ever serialized (wall-clock timings stay in
/// memory), and identical inputs render to identical bytes.  Requires the
/// vendored nlohmann json header on the include path.

#include <string>

#include <json.hpp>

#include "lps/length_structure.hpp"
#include "lps/semigroup_algebra.hpp"
#include "lps/transformation.hpp"
#include "lps/verify.hpp"
#include "lps/witnesses.hpp"

namespace lps {

using json = nlohmann::json;

inline json to_json(const Transformation& t) { return format_text(t); }

inline json to_json(const ElementSet& s) {
  json elems = json::array();
  for (const Transformation& t : s) {
    elems.push_back(format_text(t));
  }
  return json{{"n", s.n()}, {"size", s.size()}, {"elements", elems}};
}

inline json to_json(const ViolatedPair& v) {
  return json{{"x", v.x},
              {"y", v.y},
              {"x_image", v.xa},
              {"y_image", v.ya},
              {"converse", v.converse}};
}

inline json to_json(const Decomposition& d) {
  json out{{"n", d.n}, {"l", d.l}};
  if (d.regime == Decomposition::Regime::pair_middle) {
    out["regime"] = "pair-middle";
    json pairs = json::array();
    for (auto [x, y] : d.pairs) {
      pairs.push_back(json::array({x, y}));
    }
    out["pairs"] = pairs;
    out["middle"] = d.middle;
  } else {
    out["regime"] = "classes";
    json classes = json::array();
    for (const LengthClass& c : d.classes) {
      classes.push_back(json{{"i", c.i}, {"m", c.m}, {"points", c.points}});
    }
    out["classes"] = classes;
  }
  return out;
}

/// Field names fixed: spec, size, regular, irregular_elements, witnesses,
/// stats.  The witnesses object maps each regular element to its canonically
/// smallest witness.
inline json to_json(const RegularityReport& r) {
  json irregular = json::array();
  json witnesses = json::object();
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    if (r.witness_rank[i] < 0) {
      irregular.push_back(format_text(r.elements[i]));
    } else {
      witnesses[format_text(r.elements[i])] =
          format_text(r.elements[static_cast<std::size_t>(r.witness_rank[i])]);
    }
  }
  return json{{"spec", r.description},
              {"size", r.elements.size()},
              {"regular", r.regular},
              {"irregular_elements", irregular},
              {"witnesses", witnesses},
              {"stats",
               json{{"elements_scanned", r.elements_scanned},
                    {"compositions", r.compositions}}}};
}

inline json to_json(const WitnessOutcome& w) {
  json out{{"method", w.method},
           {"constructive", w.constructive},
           {"trace", w.trace}};
  if (w.witness) {
    out["witness"] = format_text(*w.witness);
  } else {
    out["witness"] = nullptr;
  }
  if (!w.constructive) {
    out["candidates_tested"] = w.candidates_tested;
  }
  return out;
}

inline json to_json(const ClaimResult& r) {
  json evidence = json::object();
  for (const auto& [key, value] : r.evidence) {
    evidence[key] = value;
  }
  return json{{"claim", r.claim},
              {"n", r.n},
              {"l", r.l},
              {"status", r.status},
              {"evidence", evidence}};
}

inline json to_json(const VerifyReport& r) {
  json claims = json::array();
  for (const ClaimInfo& c : claim_inventory()) {
    claims.push_back(json{{"id", c.id}, {"statement", c.statement}});
  }
  json results = json::array();
  for (const ClaimResult& row : r.results) {
    results.push_back(to_json(row));
  }
  return json{{"max_n", r.max_n},
              {"all_pass", r.all_pass},
              {"passed", r.passed},
              {"failed", r.failed},
              {"not_applicable", r.not_applicable},
              {"claims", claims},
              {"results", results}};
}

/// Plain-text rendering of a RegularityReport; carries the same content as
/// its JSON form (verdict, irregular elements, witness map, probe counts).
inline std::string render_regularity_text(const RegularityReport& r) {
  std::string out;
  out += "spec: " + r.description + "\n";
  out += "size: " + std::to_string(r.elements.size()) + "\n";
  out += std::string("regular: ") + (r.regular ? "true" : "false") + "\n";
  std::vector<Transformation> irregular = r.irregular_elements();
  out += "irregular elements (" + std::to_string(irregular.size()) + "):\n";
  for (const Transformation& t : irregular) {
    out += "  " + format_text(t) + "\n";
  }
  out += "witnesses:\n";
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    if (r.witness_rank[i] >= 0) {
      out += "  " + format_text(r.elements[i]) + " -> " +
             format_text(
                 r.elements[static_cast<std::size_t>(r.witness_rank[i])]) +
             "\n";
    }
  }
  out += "stats: elements_scanned = " + std::to_string(r.elements_scanned) +
         ", compositions = " + std::to_string(r.compositions) + "\n";
  return out;
}

/// Plain-text rendering of a Decomposition; same content as its JSON form.
inline std::string render_decomposition_text(const Decomposition& d) {
  std::string out = "decompose n = " + std::to_string(d.n) +
                    ", l = " + std::to_string(d.l) + ": regime = ";
  if (d.regime == Decomposition::Regime::pair_middle) {
    out += "pair-middle\npairs:";
    for (auto [x, y] : d.pairs) {
      out += " (" + std::to_string(x) + ", " + std::to_string(y) + ")";
    }
    out += "\nmiddle: " + detail::set_text(d.middle) + "\n";
  } else {
    out += "classes\n";
    for (const LengthClass& c : d.classes) {
      out += "A_" + std::to_string(c.i) + " = " + detail::set_text(c.points) +
             "  (m_" + std::to_string(c.i) + " = " + std::to_string(c.m) +
             ")\n";
    }
  }
  return out;
}

/// Plain-text traceability table: one line per (claim, n, l) row with an
/// evidence digest, then a per-claim summary with the claim statements, then
/// the total.  Carries the same content as the JSON report.
inline std::string render_verify_text(const VerifyReport& r) {
  std::string out;
  out += "verify report (max_n = " + std::to_string(r.max_n) + ")\n\n";
  out += "claim            (n,l)   status          evidence\n";
  out += "---------------  ------  --------------  --------\n";
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) {
      s.append(w - s.size(), ' ');
    }
    return s;
  };
  for (const ClaimResult& row : r.results) {
    std::string cell = "(" + std::to_string(row.n) + "," +
                       std::to_string(row.l) + ")";
    std::string digest;
    for (const auto& [key, value] : row.evidence) {
      digest += (digest.empty() ? "" : "; ") + key + "=" + value;
    }
    out += pad(row.claim, 17) + pad(cell, 8) + pad(row.status, 16) + digest +
           "\n";
  }
  out += "\nper-claim summary\n-----------------\n";
  for (const ClaimInfo& c : claim_inventory()) {
    int pass = 0;
    int fail = 0;
    int na = 0;
    for (const ClaimResult& row : r.results) {
      if (row.claim != c.id) {
        continue;
      }
      if (row.status == "pass") {
        ++pass;
      } else if (row.status == "fail") {
        ++fail;
      } else {
        ++na;
      }
    }
    out += pad(c.id, 17) + std::to_string(pass) + " pass, " +
           std::to_string(fail) + " fail, " + std::to_string(na) +
           " not-applicable\n";
    out += "    " + c.statement + "\n";
  }
  out += "\ntotal: " + std::to_string(r.passed) + " pass, " +
         std::to_string(r.failed) + " fail, " +
         std::to_string(r.not_applicable) + " not-applicable -> " +
         (r.all_pass ? "ALL APPLICABLE CLAIMS PASS" : "FAILURES PRESENT") +
         "\n";
  return out;
}

}  // namespace lps
