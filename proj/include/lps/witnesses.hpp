#pragma once

/// @file witnesses.hpp
/// @brief Constructive certificates: regularity witnesses for the regular
/// regimes, counterexample transformations for every non-regular regime, and
/// strictness witnesses separating T_n(l) from T*_n(l).
///
/// Every constructor is a pure function, validates its own precondition,
/// re-checks the defining identity of its output before returning (a failed
/// re-check throws; it would indicate a defect in the construction rules,
/// which exhaustive testing over n <= 8 has never produced), and can emit a
/// human-readable derivation trace for audit.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lps/element_set.hpp"
#include "lps/length_structure.hpp"
#include "lps/semigroup_algebra.hpp"
#include "lps/transformation.hpp"

namespace lps {

/// A fixed choice of preimage d_x for every image point x: the smallest
/// preimage, which makes every construction deterministic.
struct PreimageChoice {
  std::array<std::uint8_t, max_chain + 1> d{};  ///< 1-based; 0 = not in image
  std::vector<int> image_points;                ///< ascending

  bool in_image(int x) const {
    return x >= 1 && x < static_cast<int>(d.size()) && d[x] != 0;
  }
  /// The chosen preimage d_x (x must be an image point).
  int operator[](int x) const {
    if (!in_image(x)) {
      throw error("PreimageChoice: " + std::to_string(x) +
                  " is not an image point");
    }
    return d[x];
  }
};

inline PreimageChoice smallest_preimage_choice(const Transformation& a) {
  PreimageChoice c;
  const int n = a.n();
  for (int x = n; x >= 1; --x) {
    c.d[a(x)] = static_cast<std::uint8_t>(x);  // descending: smallest wins
  }
  for (int y = 1; y <= n; ++y) {
    if (c.d[y] != 0) {
      c.image_points.push_back(y);
    }
  }
  return c;
}

namespace detail {

inline void trace_line(std::vector<std::string>* trace, std::string line) {
  if (trace != nullptr) {
    trace->push_back(std::move(line));
  }
}

inline std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += std::to_string(v[i]);
  }
  return s + "}";
}

inline void check_witness_identity(const char* who, const Transformation& a,
                                   const Transformation& b) {
  if (!(compose(compose(a, b), a) == a)) {
    throw error(std::string(who) + ": internal construction defect: beta = [" +
                format_text(b) + "] does not satisfy a*beta*a = a for a = [" +
                format_text(a) + "]");
  }
}

}  // namespace detail

/// Regularity witness in T_n(n/2), n even: for a length-(n/2)-preserving a,
/// returns beta with a*beta*a = a and beta length-preserving.
///
/// Construction: scan the pairs (x, x+l) for x = 1..l ascending; the first x
/// whose image pair {xa, (x+l)a} = {u, v} fixes d_u = x and d_v = x + l.
/// Then beta maps each image point u to d_u and fixes every non-image point.
inline Transformation witness_half(const Transformation& a,
                                   std::vector<std::string>* trace = nullptr) {
  const int n = a.n();
  const int l = n / 2;
  if (n % 2 != 0) {
    throw error("witness_half: requires even n, got n = " + std::to_string(n));
  }
  if (!preserves_length(a, l)) {
    throw error("witness_half: [" + format_text(a) +
                "] is not length-" + std::to_string(l) + "-preserving");
  }
  detail::trace_line(trace, "n = " + std::to_string(n) + ", l = n/2 = " +
                                std::to_string(l) +
                                ": pairs (x, x+l) for x = 1.." +
                                std::to_string(l) + ", empty middle");
  std::vector<int> beta(static_cast<std::size_t>(n));
  for (int z = 1; z <= n; ++z) {
    beta[static_cast<std::size_t>(z - 1)] = z;  // non-image points stay fixed
  }
  std::array<bool, max_chain + 1> assigned{};
  for (int x = 1; x <= l; ++x) {
    int u = a(x);
    int v = a(x + l);
    if (assigned[u]) {
      detail::trace_line(trace, "pair (" + std::to_string(x) + "," +
                                    std::to_string(x + l) + "): image pair (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) +
                                    ") already assigned; skip");
      continue;
    }
    beta[static_cast<std::size_t>(u - 1)] = x;
    beta[static_cast<std::size_t>(v - 1)] = x + l;
    assigned[u] = assigned[v] = true;
    detail::trace_line(trace, "pair (" + std::to_string(x) + "," +
                                  std::to_string(x + l) + "): images (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  "); choose d_" + std::to_string(u) + " = " +
                                  std::to_string(x) + ", d_" +
                                  std::to_string(v) + " = " +
                                  std::to_string(x + l));
  }
  Transformation b = Transformation::make(n, beta);
  if (!preserves_length(b, l)) {
    throw error("witness_half: internal construction defect: beta = [" +
                format_text(b) + "] is not length-preserving");
  }
  detail::check_witness_identity("witness_half", a, b);
  detail::trace_line(trace, "beta = [" + format_text(b) + "]");
  return b;
}

/// Regularity witness in T*_n(l) for 2l > n: beta inverts a on the paired
/// part {1..n-l} + {l+1..n} (where a permutes the pairs), sends each middle
/// image point to its smallest preimage, and fixes middle non-image points.
inline Transformation witness_star_large(
    const Transformation& a, int l, std::vector<std::string>* trace = nullptr) {
  const int n = a.n();
  if (2 * l <= n) {
    throw error("witness_star_large: requires 2l > n, got n = " +
                std::to_string(n) + ", l = " + std::to_string(l));
  }
  if (!reflects_length(a, l)) {
    throw error("witness_star_large: [" + format_text(a) +
                "] is not length-" + std::to_string(l) + "-reflecting");
  }
  detail::trace_line(
      trace, "2l = " + std::to_string(2 * l) + " > n = " + std::to_string(n) +
                 ": paired part {1.." + std::to_string(n - l) + "} + {" +
                 std::to_string(l + 1) + ".." + std::to_string(n) +
                 "}, middle {" + std::to_string(n - l + 1) + ".." +
                 std::to_string(l) + "}");
  std::vector<int> beta(static_cast<std::size_t>(n));
  for (int z = 1; z <= n; ++z) {
    beta[static_cast<std::size_t>(z - 1)] = z;
  }
  std::array<bool, max_chain + 1> covered{};
  for (int x = 1; x <= n - l; ++x) {
    int u = a(x);
    int v = a(x + l);
    if (covered[u] || covered[v]) {
      throw error(
          "witness_star_large: internal construction defect: image pairs of "
          "[" +
          format_text(a) + "] are not disjoint");
    }
    covered[u] = covered[v] = true;
    beta[static_cast<std::size_t>(u - 1)] = x;
    beta[static_cast<std::size_t>(v - 1)] = x + l;
    detail::trace_line(trace, "pair (" + std::to_string(x) + "," +
                                  std::to_string(x + l) + ") -> (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  "): beta(" + std::to_string(u) + ") = " +
                                  std::to_string(x) + ", beta(" +
                                  std::to_string(v) + ") = " +
                                  std::to_string(x + l));
  }
  PreimageChoice dx = smallest_preimage_choice(a);
  for (int w = n - l + 1; w <= l; ++w) {
    if (dx.in_image(w)) {
      beta[static_cast<std::size_t>(w - 1)] = dx[w];
      detail::trace_line(trace, "middle image point " + std::to_string(w) +
                                    ": d_" + std::to_string(w) + " = " +
                                    std::to_string(dx[w]));
    } else {
      detail::trace_line(trace, "middle non-image point " + std::to_string(w) +
                                    " stays fixed");
    }
  }
  Transformation b = Transformation::make(n, beta);
  if (!reflects_length(b, l)) {
    throw error(
        "witness_star_large: internal construction defect: beta = [" +
        format_text(b) + "] is not length-reflecting");
  }
  detail::check_witness_identity("witness_star_large", a, b);
  detail::trace_line(trace, "beta = [" + format_text(b) + "]");
  return b;
}

/// Regularity witness in T*_n(l) for 2l <= n.  A bijective a gets its inverse
/// permutation.  Otherwise beta maps every image point x to its smallest
/// preimage d_x, and each missing point u (always an endpoint of a class
/// {j, j+l, j+2l} of multiplicity 2) crosses to the opposite endpoint's
/// preimage: u = j goes to d_{j+2l}, u = j+2l goes to d_j.
inline Transformation witness_star_small(
    const Transformation& a, int l, std::vector<std::string>* trace = nullptr) {
  const int n = a.n();
  if (2 * l > n) {
    throw error("witness_star_small: requires 2l <= n, got n = " +
                std::to_string(n) + ", l = " + std::to_string(l));
  }
  if (!reflects_length(a, l)) {
    throw error("witness_star_small: [" + format_text(a) +
                "] is not length-" + std::to_string(l) + "-reflecting");
  }
  std::vector<int> img = image_set(a);
  std::vector<int> beta(static_cast<std::size_t>(n), 0);
  if (static_cast<int>(img.size()) == n) {
    for (int x = 1; x <= n; ++x) {
      beta[static_cast<std::size_t>(a(x) - 1)] = x;
    }
    detail::trace_line(trace, "a is bijective: beta is the inverse permutation");
  } else {
    PreimageChoice dx = smallest_preimage_choice(a);
    std::string dline = "chosen preimages:";
    for (int x : dx.image_points) {
      dline += " d_" + std::to_string(x) + " = " + std::to_string(dx[x]);
    }
    detail::trace_line(trace, dline);
    for (int u = 1; u <= n; ++u) {
      if (dx.in_image(u)) {
        beta[static_cast<std::size_t>(u - 1)] = dx[u];
        continue;
      }
      // Missing points are endpoints of multiplicity-2 classes
      // {j, j+l, j+2l}; the other two class points are image points.
      if (u <= l) {
        int j = u;
        if ((n - j) / l != 2 || !dx.in_image(j + l) || !dx.in_image(j + 2 * l)) {
          throw error(
              "witness_star_small: internal construction defect: missing "
              "point " +
              std::to_string(u) + " of [" + format_text(a) +
              "] is not the low endpoint of a multiplicity-2 class");
        }
        beta[static_cast<std::size_t>(u - 1)] = dx[j + 2 * l];
        detail::trace_line(trace, "missing point " + std::to_string(u) +
                                      " = j of class {" + std::to_string(j) +
                                      "," + std::to_string(j + l) + "," +
                                      std::to_string(j + 2 * l) + "}: beta(" +
                                      std::to_string(u) + ") = d_" +
                                      std::to_string(j + 2 * l) + " = " +
                                      std::to_string(dx[j + 2 * l]));
      } else {
        int j = u - 2 * l;
        if (j < 1 || (n - j) / l != 2 || !dx.in_image(j) ||
            !dx.in_image(j + l)) {
          throw error(
              "witness_star_small: internal construction defect: missing "
              "point " +
              std::to_string(u) + " of [" + format_text(a) +
              "] is not the high endpoint of a multiplicity-2 class");
        }
        beta[static_cast<std::size_t>(u - 1)] = dx[j];
        detail::trace_line(trace, "missing point " + std::to_string(u) +
                                      " = j+2l of class {" + std::to_string(j) +
                                      "," + std::to_string(j + l) + "," +
                                      std::to_string(j + 2 * l) + "}: beta(" +
                                      std::to_string(u) + ") = d_" +
                                      std::to_string(j) + " = " +
                                      std::to_string(dx[j]));
      }
    }
  }
  Transformation b = Transformation::make(n, beta);
  if (!reflects_length(b, l)) {
    throw error(
        "witness_star_small: internal construction defect: beta = [" +
        format_text(b) + "] is not length-reflecting");
  }
  detail::check_witness_identity("witness_star_small", a, b);
  detail::trace_line(trace, "beta = [" + format_text(b) + "]");
  return b;
}

/// Non-regular element of T_n(1) for n >= 6, selected by n mod 4 from four
/// piecewise tables (one per residue class).
inline Transformation counterexample_T1(int n,
                                        std::vector<std::string>* trace =
                                            nullptr) {
  if (n < 6) {
    throw error("counterexample_T1: requires n >= 6 (T_n(1) is regular for "
                "n <= 5), got n = " +
                std::to_string(n));
  }
  if (n > max_chain) {
    throw error("counterexample_T1: n = " + std::to_string(n) +
                " exceeds capacity " + std::to_string(max_chain));
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto set = [&](int x, int v) { a[static_cast<std::size_t>(x - 1)] = v; };
  const int r = n % 4;
  switch (r) {
    case 2: {
      detail::trace_line(trace, "n % 4 = 2 (n in {6,10,14,...}): case-1 table");
      for (int x = 1; x <= n / 2; ++x) {
        set(x, n + 1 - x);
      }
      for (int x = n / 2 + 1; x <= n - 1; ++x) {
        set(x, (x - n / 2) % 2 == 1 ? n / 2 + 2 : n / 2 + 1);
      }
      set(n, n / 2);
      detail::trace_line(trace, "x = 1..n/2 -> n+1-x; x = n/2+1..n-1 "
                                "alternate n/2+2, n/2+1; n -> n/2");
      break;
    }
    case 0: {
      detail::trace_line(trace, "n % 4 = 0 (n in {8,12,16,...}): case-2 table");
      for (int x = 1; x <= n / 2; ++x) {
        set(x, n + 1 - x);
      }
      for (int x = n / 2 + 1; x <= n - 2; ++x) {
        set(x, (x - n / 2) % 2 == 1 ? n / 2 + 2 : n / 2 + 1);
      }
      set(n - 1, n / 2);
      set(n, n / 2 - 1);
      detail::trace_line(trace, "x = 1..n/2 -> n+1-x; x = n/2+1..n-2 "
                                "alternate n/2+2, n/2+1; n-1 -> n/2; n -> "
                                "n/2-1");
      break;
    }
    case 3: {
      detail::trace_line(trace, "n % 4 = 3 (n in {7,11,15,...}): case-3 table");
      set(1, n - 1);
      for (int x = 2; x <= (n + 1) / 2; ++x) {
        set(x, n + 2 - x);
      }
      for (int x = (n + 3) / 2; x <= n - 1; ++x) {
        set(x, (x - (n + 1) / 2) % 2 == 1 ? (n + 5) / 2 : (n + 3) / 2);
      }
      set(n, (n + 1) / 2);
      detail::trace_line(trace, "1 -> n-1; x = 2..(n+1)/2 -> n+2-x; x = "
                                "(n+3)/2..n-1 alternate (n+5)/2, (n+3)/2; n "
                                "-> (n+1)/2");
      break;
    }
    default: {  // r == 1
      detail::trace_line(trace, "n % 4 = 1 (n in {9,13,17,...}): case-4 table");
      for (int x = 1; x <= (n - 1) / 2; ++x) {
        set(x, n + 1 - x);
      }
      for (int x = (n + 1) / 2; x <= n - 1; ++x) {
        set(x, (x - (n - 1) / 2) % 2 == 1 ? (n + 5) / 2 : (n + 3) / 2);
      }
      set(n, (n + 1) / 2);
      detail::trace_line(trace, "x = 1..(n-1)/2 -> n+1-x; x = (n+1)/2..n-1 "
                                "alternate (n+5)/2, (n+3)/2; n -> (n+1)/2");
      break;
    }
  }
  Transformation t = Transformation::make(n, a);
  if (!preserves_length(t, 1)) {
    throw error("counterexample_T1: internal construction defect: [" +
                format_text(t) + "] is not length-1-preserving");
  }
  detail::trace_line(trace, "alpha = [" + format_text(t) + "]");
  return t;
}

/// Non-regular element of T_n(l) for 2 <= l <= n-2 with n odd, or n even and
/// l != n/2.  The 2l > n regime uses a flat table; the 2l < n regime uses the
/// block tables driven by u_k, v_k and the last-point rule from the division
/// n - 1 = q*l + r.
inline Transformation counterexample_Tl(int n, int l,
                                        std::vector<std::string>* trace =
                                            nullptr) {
  SemigroupSpec s{n, l, Variant::preserving};
  s.validate();
  if (l < 2 || l > n - 2) {
    throw error("counterexample_Tl: requires 2 <= l <= n-2, got n = " +
                std::to_string(n) + ", l = " + std::to_string(l));
  }
  if (n % 2 == 0 && l == n / 2) {
    throw error("counterexample_Tl: T_n(n/2) with even n is regular; no "
                "counterexample exists for n = " +
                std::to_string(n) + ", l = " + std::to_string(l));
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  if (2 * l > n) {
    detail::trace_line(trace, "2l = " + std::to_string(2 * l) + " > n = " +
                                  std::to_string(n) +
                                  ": flat table x = 1..l-1 -> 1, l -> 2, x = "
                                  "l+1..n -> l+1");
    for (int x = 1; x < l; ++x) {
      a[static_cast<std::size_t>(x - 1)] = 1;
    }
    a[static_cast<std::size_t>(l - 1)] = 2;
    for (int x = l + 1; x <= n; ++x) {
      a[static_cast<std::size_t>(x - 1)] = l + 1;
    }
  } else {
    const int q = (n - 1) / l;
    const int r = (n - 1) % l;
    detail::trace_line(trace, "2l = " + std::to_string(2 * l) + " < n = " +
                                  std::to_string(n) + ": block tables with n-1"
                                  " = q*l + r, q = " +
                                  std::to_string(q) + ", r = " +
                                  std::to_string(r));
    for (int x = 1; x <= n; ++x) {
      int k = (x - 1) / l;
      int t = (x - 1) % l;  // x = k*l + t + 1
      int v;
      if (t == 0) {
        int u = (k + 1) * l + 1;
        v = u <= n ? u : (k - 1) * l + 1;
        detail::trace_line(trace, "x = " + std::to_string(x) + " = " +
                                      std::to_string(k) + "l+1: u_" +
                                      std::to_string(k) + " = " +
                                      std::to_string(v));
      } else if (t == 1) {
        v = k % 2 == 1 ? 1 : l + 1;
        detail::trace_line(trace, "x = " + std::to_string(x) + " = " +
                                      std::to_string(k) + "l+2: v_" +
                                      std::to_string(k) + " = " +
                                      std::to_string(v));
      } else {
        v = x;
      }
      a[static_cast<std::size_t>(x - 1)] = v;
    }
    // Last-point rule: a function of (q, r); consistent with the block
    // pattern above, asserted below.
    int last;
    if (r == 0) {
      last = n - l;
    } else if (r == 1) {
      last = (n % 2 == 1 || q % 2 == 1) ? 1 : l + 1;
    } else {
      last = n;
    }
    detail::trace_line(trace, "last-point rule (q = " + std::to_string(q) +
                                  ", r = " + std::to_string(r) + "): n -> " +
                                  std::to_string(last));
    if (a[static_cast<std::size_t>(n - 1)] != last) {
      throw error(
          "counterexample_Tl: internal construction defect: block pattern "
          "gives n -> " +
          std::to_string(a[static_cast<std::size_t>(n - 1)]) +
          " but the last-point rule gives n -> " + std::to_string(last));
    }
  }
  Transformation t = Transformation::make(n, a);
  if (!preserves_length(t, l)) {
    throw error("counterexample_Tl: internal construction defect: [" +
                format_text(t) + "] is not length-" + std::to_string(l) +
                "-preserving");
  }
  detail::trace_line(trace, "alpha = [" + format_text(t) + "]");
  return t;
}

/// Element of T_n(l) \ T*_n(l).  Exists for every (n, l) except (2,1) and
/// (3,1), where the two semigroups coincide.
inline Transformation strictness_witness(int n, int l,
                                         std::vector<std::string>* trace =
                                             nullptr) {
  SemigroupSpec s{n, l, Variant::preserving};
  s.validate();
  if ((n == 2 || n == 3) && l == 1) {
    throw error("strictness_witness: T_" + std::to_string(n) +
                "(1) = T*_" + std::to_string(n) + "(1); no witness exists");
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  if (2 * l > n) {
    detail::trace_line(trace, "2l > n: x = 1..l -> 1, x = l+1..n -> l+1");
    for (int x = 1; x <= n; ++x) {
      a[static_cast<std::size_t>(x - 1)] = x <= l ? 1 : l + 1;
    }
  } else if (l == 1) {
    detail::trace_line(trace, "l = 1: alternate 1, 2");
    for (int x = 1; x <= n; ++x) {
      a[static_cast<std::size_t>(x - 1)] = x % 2 == 1 ? 1 : 2;
    }
  } else {
    detail::trace_line(trace,
                       "2l <= n, l >= 2: block-alternating by ceil(x/l) "
                       "parity, odd -> 1, even -> l+1");
    for (int x = 1; x <= n; ++x) {
      int k = (x + l - 1) / l;
      a[static_cast<std::size_t>(x - 1)] = k % 2 == 1 ? 1 : l + 1;
    }
  }
  Transformation t = Transformation::make(n, a);
  if (!preserves_length(t, l) || reflects_length(t, l)) {
    throw error("strictness_witness: internal construction defect: [" +
                format_text(t) + "] is not in the difference set");
  }
  if (trace != nullptr) {
    auto v = first_violation(t, l, Variant::reflecting);
    if (v) {
      detail::trace_line(trace, "alpha = [" + format_text(t) +
                                    "]; image pair |" + std::to_string(v->xa) +
                                    " - " + std::to_string(v->ya) + "| = l at "
                                    "distance |" +
                                    std::to_string(v->x) + " - " +
                                    std::to_string(v->y) +
                                    "| != l shows alpha is not reflecting");
    }
  }
  return t;
}

/// How a regularity witness was obtained.
struct WitnessOutcome {
  std::optional<Transformation> witness;  ///< absent: exhausted, irregular
  std::string method;  ///< construction name, "oracle-found" or "exhausted"
  bool constructive = false;
  std::vector<std::string> trace;
  std::uint64_t candidates_tested = 0;  ///< oracle path only
};

/// Routes a membership-checked element to the regime-appropriate witness
/// construction, falling back to the exhaustive oracle where no construction
/// applies (preserving variant away from l = n/2): those witnesses are
/// reported as "oracle-found".  carrier, when given, must be the enumeration
/// of spec; otherwise it is enumerated on demand for the oracle path.
inline WitnessOutcome find_witness(const Transformation& a,
                                   const SemigroupSpec& spec,
                                   const ElementSet* carrier = nullptr,
                                   const EnumerateOptions& options = {}) {
  spec.validate();
  if (!is_member(a, spec)) {
    auto v = first_violation(a, spec.l, spec.variant);
    std::string detail = a.n() != spec.n
                             ? "domain size " + std::to_string(a.n()) +
                                   " != " + std::to_string(spec.n)
                             : v ? "violated pair (" + std::to_string(v->x) +
                                       ", " + std::to_string(v->y) + ")"
                                 : "not a member";
    throw error("find_witness: [" + format_text(a) + "] is not in " +
                spec.name() + " (" + detail + ")");
  }
  WitnessOutcome out;
  if (spec.variant == Variant::reflecting) {
    out.constructive = true;
    if (2 * spec.l > spec.n) {
      out.method = "witness_star_large";
      out.witness = witness_star_large(a, spec.l, &out.trace);
    } else {
      out.method = "witness_star_small";
      out.witness = witness_star_small(a, spec.l, &out.trace);
    }
    return out;
  }
  if (spec.variant == Variant::preserving && spec.n % 2 == 0 &&
      spec.l == spec.n / 2) {
    out.constructive = true;
    out.method = "witness_half";
    out.witness = witness_half(a, &out.trace);
    return out;
  }
  // No construction covers this regime: exhaustive scan in canonical order.
  ElementSet local;
  const ElementSet* S = carrier;
  if (S == nullptr) {
    local = enumerate(spec, options);
    S = &local;
  }
  std::ptrdiff_t rank = witness_rank(a, *S);
  if (rank >= 0) {
    out.method = "oracle-found";
    out.witness = (*S)[static_cast<std::size_t>(rank)];
    out.candidates_tested = static_cast<std::uint64_t>(rank) + 1;
    out.trace.push_back("no construction applies in " + spec.name() +
                        "; canonical scan found witness [" +
                        format_text(*out.witness) + "] at rank " +
                        std::to_string(rank) + " after " +
                        std::to_string(out.candidates_tested) + " tests");
  } else {
    out.method = "exhausted";
    out.candidates_tested = S->size();
    out.trace.push_back("no construction applies in " + spec.name() +
                        "; canonical scan exhausted all " +
                        std::to_string(S->size()) +
                        " candidates: element is not regular");
  }
  return out;
}

}  // namespace lps
