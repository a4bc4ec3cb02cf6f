#pragma once

/// @file cli.hpp
/// @brief Command-line driver: flag parsing and per-subcommand rendering over
/// the library modules.
///
/// The driver is a thin synchronous layer: every computation lives in the
/// modules it calls, and parallelism is governed by --workers inside them.
/// Exit codes: 2 for usage errors, 1 for a failed verification run, 0
/// otherwise (negative answers such as "member: false" or an exhausted
/// witness scan are answers, not failures).  Computation errors (lps::error)
/// print the module message verbatim on the error stream and exit 2.
///
/// run() writes to caller-supplied streams so the whole surface can be
/// exercised in-process by tests.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lps/element_set.hpp"
#include "lps/length_structure.hpp"
#include "lps/report_json.hpp"
#include "lps/semigroup_algebra.hpp"
#include "lps/transformation.hpp"
#include "lps/verify.hpp"
#include "lps/witnesses.hpp"

namespace lps::cli {

/// Parsed command-line surface; one instance per invocation.
struct CliConfig {
  std::string subcommand;
  int n = 0;
  int l = 0;                    ///< 0 = not given (counterexample, full)
  std::string variant = "plain";
  std::string element;          ///< empty = not given
  std::string gens_file;
  std::string out_path;         ///< empty = stdout; verify: --report
  std::string format = "text";  ///< text | json
  std::string cache_dir;        ///< empty = no enumeration cache
  int workers = 1;
  int max_n = 7;                ///< verify sweep bound
};

namespace detail {

/// Writes payload to cfg.out_path when set (with a one-line summary on out),
/// otherwise to out directly.
inline void deliver(const CliConfig& cfg, const std::string& payload,
                    const std::string& summary, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) {
    throw error(cfg.subcommand + ": cannot write " + cfg.out_path);
  }
  file << payload;
  out << summary << '\n';
}

/// The semigroup a subcommand addresses; l is forced to 1 for the full
/// variant, where it plays no role.
inline SemigroupSpec make_spec(const CliConfig& cfg) {
  Variant v = variant_from_token(cfg.variant).value();
  SemigroupSpec spec{cfg.n, v == Variant::full ? 1 : cfg.l, v};
  spec.validate();
  return spec;
}

/// Parses --element and pins its length to --n.
inline Transformation parse_element(const CliConfig& cfg) {
  Transformation t = parse_text(cfg.element);
  if (t.n() != cfg.n) {
    throw error(cfg.subcommand + ": element [" + format_text(t) + "] has " +
                std::to_string(t.n()) + " points but n = " +
                std::to_string(cfg.n));
  }
  return t;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

/// One "violated pair" line naming the offending direction.
inline std::string violation_text(const ViolatedPair& v, int l) {
  std::string line = "violated pair: (" + std::to_string(v.x) + ", " +
                     std::to_string(v.y) + ") -> images (" +
                     std::to_string(v.xa) + ", " + std::to_string(v.ya) +
                     ")  [";
  if (v.converse) {
    line += "|x - y| != " + std::to_string(l) +
            " but |x_image - y_image| = " + std::to_string(l);
  } else {
    line += "|x - y| = " + std::to_string(l) +
            " but |x_image - y_image| != " + std::to_string(l);
  }
  return line + "]";
}

inline int run_enumerate(const CliConfig& cfg, std::ostream& out) {
  SemigroupSpec spec = make_spec(cfg);
  EnumerateOptions options;
  options.workers = cfg.workers;
  options.cache_dir = cfg.cache_dir;
  ElementSet s = enumerate(spec, options);
  std::string payload;
  if (cfg.format == "json") {
    json j{{"spec", spec.name()},
           {"n", spec.n},
           {"variant", variant_token(spec.variant)},
           {"size", s.size()}};
    if (spec.variant != Variant::full) {
      j["l"] = spec.l;
    }
    json elems = json::array();
    for (const Transformation& t : s) {
      elems.push_back(format_text(t));
    }
    j["elements"] = elems;
    payload = j.dump(2) + "\n";
  } else {
    // Text listing doubles as a valid cache file for --cache reuse.
    std::string tag = spec.cache_file();
    tag.resize(tag.size() - 4);
    std::ostringstream os;
    write_elements(os, s, "spec=" + tag + " size=" + std::to_string(s.size()));
    payload = os.str();
  }
  deliver(cfg, payload,
          spec.name() + ": " + std::to_string(s.size()) +
              " elements written to " + cfg.out_path,
          out);
  return 0;
}

inline int run_member(const CliConfig& cfg, std::ostream& out) {
  SemigroupSpec spec = make_spec(cfg);
  Transformation t = parse_element(cfg);
  std::optional<ViolatedPair> v = first_violation(t, spec.l, spec.variant);
  bool member = !v.has_value();
  if (cfg.format == "json") {
    json j{{"spec", spec.name()},
           {"element", format_text(t)},
           {"member", member},
           {"violation", v ? to_json(*v) : json(nullptr)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "spec: " << spec.name() << "\n"
      << "element: " << format_text(t) << "\n"
      << "member: " << bool_text(member) << "\n";
  if (v) {
    out << violation_text(*v, spec.l) << "\n";
  }
  return 0;
}

inline int run_regular(const CliConfig& cfg, std::ostream& out) {
  SemigroupSpec spec = make_spec(cfg);
  EnumerateOptions options;
  options.workers = cfg.workers;
  options.cache_dir = cfg.cache_dir;
  ElementSet s = enumerate(spec, options);
  std::string payload;
  std::string summary;
  if (!cfg.element.empty()) {
    Transformation t = parse_element(cfg);
    if (!is_member(t, spec)) {
      auto v = first_violation(t, spec.l, spec.variant);
      throw error("regular: [" + format_text(t) + "] is not in " +
                  spec.name() +
                  (v ? " (violated pair (" + std::to_string(v->x) + ", " +
                           std::to_string(v->y) + "))"
                     : ""));
    }
    std::ptrdiff_t rank = witness_rank(t, s);
    bool regular = rank >= 0;
    if (cfg.format == "json") {
      json j{{"spec", spec.name()},
             {"size", s.size()},
             {"element", format_text(t)},
             {"regular", regular},
             {"witness_rank", static_cast<std::int64_t>(rank)},
             {"witness",
              regular ? json(format_text(s[static_cast<std::size_t>(rank)]))
                      : json(nullptr)}};
      payload = j.dump(2) + "\n";
    } else {
      payload = "spec: " + spec.name() + "\n" +
                "size: " + std::to_string(s.size()) + "\n" +
                "element: " + format_text(t) + "\n" +
                "regular: " + bool_text(regular) + "\n";
      if (regular) {
        payload += "witness: " +
                   format_text(s[static_cast<std::size_t>(rank)]) +
                   "  (rank " + std::to_string(rank) + ")\n";
      } else {
        payload += "witness: none  (all " + std::to_string(s.size()) +
                   " candidates exhausted)\n";
      }
    }
    summary = "regular: element report for " + spec.name() + " written to " +
              cfg.out_path;
  } else {
    RegularityReport report =
        is_regular_semigroup(std::move(s), spec.name(), cfg.workers);
    payload = cfg.format == "json" ? to_json(report).dump(2) + "\n"
                                   : render_regularity_text(report);
    summary = "regular: report for " + spec.name() + " written to " +
              cfg.out_path;
  }
  deliver(cfg, payload, summary, out);
  return 0;
}

inline int run_witness(const CliConfig& cfg, std::ostream& out) {
  SemigroupSpec spec = make_spec(cfg);
  Transformation t = parse_element(cfg);
  EnumerateOptions options;
  options.workers = cfg.workers;
  options.cache_dir = cfg.cache_dir;
  WitnessOutcome w = find_witness(t, spec, nullptr, options);
  if (cfg.format == "json") {
    json j = to_json(w);
    j["spec"] = spec.name();
    j["element"] = format_text(t);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "spec: " << spec.name() << "\n"
      << "element: " << format_text(t) << "\n"
      << "method: " << w.method << "\n"
      << "constructive: " << bool_text(w.constructive) << "\n"
      << "witness: " << (w.witness ? format_text(*w.witness) : "none") << "\n";
  if (!w.constructive) {
    out << "candidates_tested: " << w.candidates_tested << "\n";
  }
  out << "trace:\n";
  for (const std::string& line : w.trace) {
    out << "  " << line << "\n";
  }
  return 0;
}

inline int run_counterexample(const CliConfig& cfg, std::ostream& out) {
  int l = cfg.l == 0 ? 1 : cfg.l;
  std::vector<std::string> trace;
  Transformation t = l == 1 ? counterexample_T1(cfg.n, &trace)
                            : counterexample_Tl(cfg.n, l, &trace);
  SemigroupSpec spec{cfg.n, l, Variant::preserving};
  bool member = is_member(t, spec);
  if (cfg.format == "json") {
    json j{{"spec", spec.name()},  {"n", cfg.n},
           {"l", l},               {"element", format_text(t)},
           {"member", member},     {"trace", trace}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "spec: " << spec.name() << "\n"
      << "element: " << format_text(t) << "\n"
      << "member: " << bool_text(member) << "\n"
      << "trace:\n";
  for (const std::string& line : trace) {
    out << "  " << line << "\n";
  }
  return 0;
}

inline int run_closure(const CliConfig& cfg, std::ostream& out) {
  std::ifstream file(cfg.gens_file);
  if (!file) {
    throw error("closure: cannot read " + cfg.gens_file);
  }
  std::vector<Transformation> gens;
  try {
    gens = read_elements(file);
  } catch (const error& e) {
    throw error("closure: " + cfg.gens_file + ": " + e.what());
  }
  if (gens.empty()) {
    throw error("closure: no generators in " + cfg.gens_file);
  }
  for (const Transformation& g : gens) {
    if (g.n() != cfg.n) {
      throw error("closure: generator [" + format_text(g) + "] has " +
                  std::to_string(g.n()) + " points but n = " +
                  std::to_string(cfg.n));
    }
  }
  ClosureOptions options;
  options.workers = cfg.workers;
  ElementSet s = closure(gens, options);
  std::string header = "closure n=" + std::to_string(cfg.n) +
                       " generators=" + std::to_string(gens.size()) +
                       " size=" + std::to_string(s.size());
  std::string payload;
  if (cfg.format == "json") {
    json elems = json::array();
    for (const Transformation& t : s) {
      elems.push_back(format_text(t));
    }
    json j{{"n", cfg.n},
           {"generators", gens.size()},
           {"size", s.size()},
           {"elements", elems}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    write_elements(os, s, header);
    payload = os.str();
  }
  deliver(cfg, payload,
          "closure of " + std::to_string(gens.size()) + " generators: " +
              std::to_string(s.size()) + " elements written to " +
              cfg.out_path,
          out);
  return 0;
}

inline int run_decompose(const CliConfig& cfg, std::ostream& out) {
  SemigroupSpec{cfg.n, cfg.l, Variant::preserving}.validate();
  Decomposition d = decompose(cfg.n, cfg.l);
  if (cfg.format == "json") {
    out << to_json(d).dump(2) << "\n";
  } else {
    out << render_decomposition_text(d);
  }
  return 0;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.max_n = cfg.max_n;
  options.workers = cfg.workers;
  options.cache_dir = cfg.cache_dir;
  VerifyReport report = verify_all(options);
  std::string payload = cfg.format == "json" ? to_json(report).dump(2) + "\n"
                                             : render_verify_text(report);
  std::string summary = "verify: " + std::to_string(report.passed) +
                        " pass, " + std::to_string(report.failed) +
                        " fail, " + std::to_string(report.not_applicable) +
                        " not-applicable -> report written to " +
                        cfg.out_path;
  deliver(cfg, payload, summary, out);
  return report.all_pass ? 0 : 1;
}

}  // namespace detail

/// Runs one invocation.  args excludes the program name; out receives
/// reports, err receives usage and computation errors.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"length-preserving transformation semigroups T_n(l) and "
               "T*_n(l): enumeration, membership, regularity, witnesses",
               "lps"};
  app.require_subcommand(1);

  const std::string variant_help =
      "plain = T_n(l), star = T*_n(l), full = T_n";
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_workers = [&cfg](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers,
                    "worker threads (default 1); results are identical for "
                    "any count");
  };
  auto add_cache = [&cfg](CLI::App* sub) {
    sub->add_option("--cache", cfg.cache_dir,
                    "enumeration cache directory (opt-in; entries are "
                    "revalidated before trust)");
  };

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "list all elements in canonical order");
  enumerate_cmd->add_option("--n", cfg.n, "chain size")->required();
  CLI::Option* enumerate_l =
      enumerate_cmd->add_option("--l", cfg.l, "distance (ignored for full)");
  enumerate_cmd->add_option("--variant", cfg.variant, variant_help)
      ->check(CLI::IsMember({"plain", "star", "full"}));
  enumerate_cmd->add_option("--out", cfg.out_path, "write the listing here");
  add_format(enumerate_cmd);
  add_workers(enumerate_cmd);
  add_cache(enumerate_cmd);

  CLI::App* member_cmd = app.add_subcommand(
      "member", "test membership, reporting the first violated pair");
  member_cmd->add_option("--n", cfg.n, "chain size")->required();
  member_cmd->add_option("--l", cfg.l, "distance")->required();
  member_cmd->add_option("--variant", cfg.variant, variant_help)
      ->check(CLI::IsMember({"plain", "star"}));
  member_cmd
      ->add_option("--element", cfg.element,
                   "1-based images, e.g. \"1 1 1 4 4\"")
      ->required();
  add_format(member_cmd);

  CLI::App* regular_cmd = app.add_subcommand(
      "regular", "regularity of one element or of the whole semigroup");
  regular_cmd->add_option("--n", cfg.n, "chain size")->required();
  regular_cmd->add_option("--l", cfg.l, "distance")->required();
  regular_cmd->add_option("--variant", cfg.variant, variant_help)
      ->check(CLI::IsMember({"plain", "star"}));
  regular_cmd->add_option("--element", cfg.element,
                          "element verdict instead of the full report");
  regular_cmd->add_option("--out", cfg.out_path, "write the report here");
  add_format(regular_cmd);
  add_workers(regular_cmd);
  add_cache(regular_cmd);

  CLI::App* witness_cmd = app.add_subcommand(
      "witness", "construct a regularity witness with a derivation trace");
  witness_cmd->add_option("--n", cfg.n, "chain size")->required();
  witness_cmd->add_option("--l", cfg.l, "distance")->required();
  witness_cmd->add_option("--variant", cfg.variant, variant_help)
      ->check(CLI::IsMember({"plain", "star"}));
  witness_cmd
      ->add_option("--element", cfg.element,
                   "1-based images, e.g. \"1 1 3 3\"")
      ->required();
  add_format(witness_cmd);
  add_workers(witness_cmd);
  add_cache(witness_cmd);

  CLI::App* counterexample_cmd = app.add_subcommand(
      "counterexample",
      "construct the canonical irregular element of T_n(l)");
  counterexample_cmd->add_option("--n", cfg.n, "chain size")->required();
  counterexample_cmd->add_option("--l", cfg.l,
                                 "distance (default 1, the T_n(1) family)");
  add_format(counterexample_cmd);

  CLI::App* closure_cmd = app.add_subcommand(
      "closure", "composition closure of a generator file");
  closure_cmd->add_option("--n", cfg.n, "chain size")->required();
  closure_cmd
      ->add_option("--gens", cfg.gens_file,
                   "file of generators, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  closure_cmd->add_option("--out", cfg.out_path, "write the listing here");
  add_format(closure_cmd);
  add_workers(closure_cmd);

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "distance-l pairs/middle or classes A_i with m_i");
  decompose_cmd->add_option("--n", cfg.n, "chain size")->required();
  decompose_cmd->add_option("--l", cfg.l, "distance")->required();
  add_format(decompose_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "replay every tracked claim and report pass/fail");
  verify_cmd->add_option("--max-n", cfg.max_n,
                         "largest chain size to sweep (default 7)");
  verify_cmd->add_option("--report", cfg.out_path, "write the report here");
  add_format(verify_cmd);
  add_workers(verify_cmd);
  add_cache(verify_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (enumerate_cmd->parsed() && cfg.variant != "full" &&
      enumerate_l->count() == 0) {
    err << "--l is required for --variant plain|star\n"
           "Run with --help for more information.\n";
    return 2;
  }

  try {
    if (cfg.subcommand == "enumerate") {
      return detail::run_enumerate(cfg, out);
    }
    if (cfg.subcommand == "member") {
      return detail::run_member(cfg, out);
    }
    if (cfg.subcommand == "regular") {
      return detail::run_regular(cfg, out);
    }
    if (cfg.subcommand == "witness") {
      return detail::run_witness(cfg, out);
    }
    if (cfg.subcommand == "counterexample") {
      return detail::run_counterexample(cfg, out);
    }
    if (cfg.subcommand == "closure") {
      return detail::run_closure(cfg, out);
    }
    if (cfg.subcommand == "decompose") {
      return detail::run_decompose(cfg, out);
    }
    return detail::run_verify(cfg, out);
  } catch (const error& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace lps::cli
