/// Prints the regularity map of T_n(l) for 2 <= n <= 6: one cell per (n, l),
/// comparing the measured verdict with the closed-form prediction
///   regular  <=>  l = n-1, or l = 1 with n <= 5, or l = n/2 with n even.

#include <iomanip>
#include <iostream>

#include "lps/semigroup_algebra.hpp"
#include "lps/verify.hpp"

int main() {
  using namespace lps;

  std::cout << "  n  l  |T_n(l)|  irregular  verdict    predicted\n";
  std::cout << "  -----  --------  ---------  ---------  ---------\n";
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; l <= n - 1; ++l) {
      SemigroupSpec spec{n, l, Variant::preserving};
      RegularityReport report =
          is_regular_semigroup(enumerate(spec), spec.name());
      bool predicted = predicted_regular(n, l);
      std::cout << std::setw(3) << n << std::setw(3) << l << std::setw(10)
                << report.elements.size() << std::setw(11)
                << report.irregular_elements().size() << std::setw(11)
                << (report.regular ? "regular" : "irregular") << std::setw(11)
                << (predicted ? "regular" : "irregular")
                << (report.regular == predicted ? "" : "   MISMATCH")
                << "\n";
    }
  }
  return 0;
}
