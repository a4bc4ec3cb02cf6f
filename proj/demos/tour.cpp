/// A short tour of the library: enumerate a small semigroup, test
/// membership, decompose the chain, and construct regularity witnesses.

#include <iostream>

#include "lps/length_structure.hpp"
#include "lps/report_json.hpp"
#include "lps/semigroup_algebra.hpp"
#include "lps/witnesses.hpp"

int main() {
  using namespace lps;

  // T_5(2): all self-maps of {1..5} sending pairs at distance 2 to pairs at
  // distance 2.
  SemigroupSpec spec{5, 2, Variant::preserving};
  ElementSet s = enumerate(spec);
  std::cout << spec.name() << " has " << s.size() << " elements; first is ["
            << format_text(s[0]) << "], last is [" << format_text(s[s.size() - 1])
            << "]\n\n";

  // Membership comes with the first violated pair when it fails.
  Transformation a = Transformation::make(5, {1, 1, 1, 4, 4});
  SemigroupSpec star{5, 3, Variant::reflecting};
  std::cout << "[" << format_text(a) << "] in T_5(3): "
            << (is_member(a, {5, 3, Variant::preserving}) ? "yes" : "no")
            << "; in T*_5(3): " << (is_member(a, star) ? "yes" : "no")
            << "\n";
  if (auto v = first_violation(a, 3, Variant::reflecting)) {
    std::cout << "  first violated pair: (" << v->x << ", " << v->y
              << ") -> images (" << v->xa << ", " << v->ya << ")\n\n";
  }

  // The chain decomposes differently on the two sides of 2l = n.
  std::cout << render_decomposition_text(decompose(5, 2)) << "\n";
  std::cout << render_decomposition_text(decompose(7, 5)) << "\n";

  // Witnesses: T*_5(3) elements get constructive ones, with a trace.
  Transformation b = Transformation::make(5, {4, 5, 3, 1, 2});
  WitnessOutcome outcome = find_witness(b, star);
  std::cout << "witness for [" << format_text(b) << "] in " << star.name()
            << " via " << outcome.method << ": ["
            << format_text(*outcome.witness) << "]\n";
  for (const std::string& line : outcome.trace) {
    std::cout << "  " << line << "\n";
  }

  // Whole-semigroup regularity, with canonical witnesses for every element.
  RegularityReport report = is_regular_semigroup(s, spec.name());
  std::cout << "\n" << spec.name() << " regular: "
            << (report.regular ? "true" : "false") << " ("
            << report.irregular_elements().size()
            << " irregular elements)\n";
  return 0;
}
