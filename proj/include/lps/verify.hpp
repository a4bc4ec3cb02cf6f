#pragma once

/// @file verify.hpp
/// @brief Claim-replay harness: every cataloged claim about T_n(l) and
/// T*_n(l) is mapped to an executable check against the enumeration oracle,
/// producing a traceable pass / fail / not-applicable report per (claim, n, l)
/// cell.
///
/// The harness is deterministic: identical reports across runs and worker
/// counts.  Wall-clock time is kept in memory for display but never
/// serialized, so serialized reports are byte-stable.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lps/element_set.hpp"
#include "lps/length_structure.hpp"
#include "lps/semigroup_algebra.hpp"
#include "lps/transformation.hpp"
#include "lps/witnesses.hpp"

namespace lps {

/// The regularity dichotomy for the preserving family: T_n(l) is regular
/// exactly when l = n-1, or l = 1 with n <= 5, or n is even with l = n/2.
inline bool predicted_regular(int n, int l) {
  SemigroupSpec{n, l, Variant::preserving}.validate();
  if (l == n - 1) {
    return true;
  }
  if (l == 1) {
    return n <= 5;
  }
  return n % 2 == 0 && l == n / 2;
}

/// Outcome of one claim check at one (n, l) cell.
struct ClaimResult {
  std::string claim;
  int n = 0;
  int l = 0;
  std::string status;  ///< "pass" | "fail" | "not-applicable"
  /// Ordered key/value evidence: counts, witnesses, failing elements, or the
  /// reason a claim does not apply at this cell.
  std::vector<std::pair<std::string, std::string>> evidence;
  /// Wall-clock cost of this cell; kept for display, never serialized.
  double elapsed_seconds = 0.0;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};

/// The full claim catalog, sorted by id.  Every id appearing in a
/// ClaimResult comes from this inventory.
inline const std::vector<ClaimInfo>& claim_inventory() {
  static const std::vector<ClaimInfo> inventory = {
      {"Example-5a",
       "In T_5(3), a = [1 1 3 4 4] satisfies a = a*a*a (so a is regular in "
       "T_5(3)) yet a is outside T*_5(3): T*_n(l) does not exhaust the "
       "regular elements of T_n(l)."},
      {"Example-5b",
       "In T_6(2), a = [1 1 3 3 5 5] satisfies a = a*a*a (so a is regular in "
       "T_6(2)) yet a is outside T*_6(2)."},
      {"Lemma-4.1",
       "For odd n >= 5 and 2 <= l <= n-2, T_n(l) is not regular: the "
       "block-table element has no witness in T_n(l)."},
      {"Lemma-4.2",
       "For even n >= 6 and 2 <= l <= n-2 with l != n/2, T_n(l) is not "
       "regular: the block-table element has no witness in T_n(l)."},
      {"Lemma-5.1",
       "For 2l > n, every a in T*_n(l) maps the middle {n-l+1..l} into "
       "itself, and the image pairs {xa, (x+l)a} are disjoint pairs at "
       "distance l covering the paired part."},
      {"Lemma-5.3",
       "For 2l <= n and a in T*_n(l): x < y and xa = ya imply y = x + 2l."},
      {"Lemma-5.4",
       "For 2l <= n and a in T*_n(l): if one point of class A_i lands in "
       "A_j, then A_i a is contained in A_j."},
      {"Lemma-5.5",
       "For 2l <= n and a in T*_n(l): distinct classes have disjoint images "
       "- x in A_i, y in A_j with i != j imply xa != ya."},
      {"Lemma-5.6",
       "For 2l <= n and a in T*_n(l): a class of multiplicity m_i >= 3 maps "
       "to a strictly monotone progression of step l."},
      {"Lemma-5.7",
       "For 2l <= n and a in T*_n(l): if m_i < m_j and m_j >= 3, then A_i "
       "does not meet A_j a, and A_j does not meet A_i a."},
      {"Lemma-5.8",
       "For 2l <= n and a in T*_n(l): the classes of each multiplicity m >= "
       "3 are permuted among themselves - A_j a = A_sigma(j) for a bijection "
       "sigma on the index set Z_m."},
      {"Lemma-5.9",
       "For 2l <= n and a in T*_n(l): every point missing from the image is "
       "an endpoint of a multiplicity-2 class {j, j+l, j+2l} whose opposite "
       "endpoint and midpoint j+l are image points."},
      {"Prop-1.3",
       "T_n(l) is always a proper subsemigroup of T_n: the constant map "
       "kappa(x) = 1 lies in T_n but never in T_n(l)."},
      {"Prop-1.4",
       "T_n(l) = T*_n(l) exactly for (n,l) in {(2,1),(3,1)}; at every other "
       "cell the difference T_n(l) \\ T*_n(l) is nonempty, witnessed "
       "constructively."},
      {"Rem-4.3",
       "For even n and l = n/2, every a in T_n(n/2) maps each pair (x, x+l) "
       "onto a pair at distance exactly l (in one of the two orientations)."},
      {"Rem-5.6",
       "For 2l <= n and a in T*_n(l): a class of multiplicity m_i >= 3 maps "
       "injectively, |A_i a| = |A_i| = m_i + 1."},
      {"Remark-2.1",
       "For n = 2..5, T_n(1) equals the closure of an explicit small "
       "generating set, and is a regular semigroup."},
      {"Thm-2.2-PG",
       "T_n(n-1) = {a in T_n : {a(1), a(n)} = {1, n}}; it is a regular "
       "semigroup of size exactly 2*n^(n-2)."},
      {"Thm-3.2",
       "T_n(1) is a regular semigroup if and only if n <= 5."},
      {"Thm-4.5",
       "For 2 <= l <= n-2, T_n(l) is regular if and only if n is even and "
       "l = n/2; in the regular case the pair-scan construction produces a "
       "witness for every element."},
      {"Thm-5.10",
       "For 2l <= n, T*_n(l) is regular: the inverse permutation (bijective "
       "case) or the smallest-preimage table with endpoint crossing yields a "
       "witness for every element."},
      {"Thm-5.2",
       "For 2l > n, T*_n(l) is regular: inverting the paired part and "
       "sending middle image points to their smallest preimages yields a "
       "witness for every element."},
  };
  return inventory;
}

struct VerifyOptions {
  int max_n = 7;
  int workers = 1;
  std::uint64_t budget = 5'000'000;
  std::string cache_dir;  ///< forwarded to enumerate()
};

struct VerifyReport {
  int max_n = 7;
  std::vector<ClaimResult> results;  ///< sorted by (claim, n, l)
  bool all_pass = true;              ///< no "fail" rows
  int passed = 0;
  int failed = 0;
  int not_applicable = 0;
};

namespace detail {

/// Per-run enumeration cache; verify runs never share state across calls.
class VerifyContext {
 public:
  explicit VerifyContext(const VerifyOptions& options) : opt_(options) {}

  const VerifyOptions& options() const { return opt_; }

  const ElementSet& set(int n, int l, Variant v) {
    auto key = std::make_tuple(n, l, static_cast<int>(v));
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      return it->second;
    }
    EnumerateOptions eo;
    eo.workers = opt_.workers;
    eo.budget = opt_.budget;
    eo.cache_dir = opt_.cache_dir;
    auto [pos, inserted] =
        cache_.emplace(key, enumerate(SemigroupSpec{n, l, v}, eo));
    return pos->second;
  }

 private:
  VerifyOptions opt_;
  std::map<std::tuple<int, int, int>, ElementSet> cache_;
};

inline int class_of(int l, int x) { return (x - 1) % l + 1; }

inline std::string yesno(bool b) { return b ? "true" : "false"; }

/// First small-regime suite violation of the given letter for a, or ""
/// when the property holds.  Letters match the claim mapping:
/// a = Lemma-5.3, b = Lemma-5.4, c = Lemma-5.5, d = Lemma-5.6, e = Rem-5.6,
/// f = Lemma-5.7, g = Lemma-5.8, h = Lemma-5.9.
inline std::string suite_violation(const Transformation& a, int l,
                                   char letter) {
  const int n = a.n();
  std::vector<LengthClass> A = classes_view(n, l);
  switch (letter) {
    case 'a': {
      for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
          if (a(x) == a(y) && y - x != 2 * l) {
            return "xa = ya at (x,y) = (" + std::to_string(x) + "," +
                   std::to_string(y) + ") with y - x != 2l";
          }
        }
      }
      return "";
    }
    case 'b': {
      for (const LengthClass& c : A) {
        int j0 = class_of(l, a(c.points.front()));
        for (int p : c.points) {
          if (class_of(l, a(p)) != j0) {
            return "class A_" + std::to_string(c.i) +
                   " maps into two different classes";
          }
        }
      }
      return "";
    }
    case 'c': {
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = i + 1; j < A.size(); ++j) {
          for (int p : A[i].points) {
            for (int q : A[j].points) {
              if (a(p) == a(q)) {
                return "A_" + std::to_string(A[i].i) + " and A_" +
                       std::to_string(A[j].i) + " share image point " +
                       std::to_string(a(p));
              }
            }
          }
        }
      }
      return "";
    }
    case 'd': {
      for (const LengthClass& c : A) {
        if (c.m < 3) {
          continue;
        }
        int step0 = a(c.points[1]) - a(c.points[0]);
        if (step0 != l && step0 != -l) {
          return "A_" + std::to_string(c.i) + " image step is not +-l";
        }
        for (std::size_t k = 1; k + 1 < c.points.size(); ++k) {
          if (a(c.points[k + 1]) - a(c.points[k]) != step0) {
            return "A_" + std::to_string(c.i) +
                   " image progression is not monotone with step l";
          }
        }
      }
      return "";
    }
    case 'e': {
      for (const LengthClass& c : A) {
        if (c.m < 3) {
          continue;
        }
        std::vector<int> img;
        for (int p : c.points) {
          img.push_back(a(p));
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (static_cast<int>(img.size()) != c.m + 1) {
          return "|A_" + std::to_string(c.i) + " a| = " +
                 std::to_string(img.size()) + " != m_i + 1 = " +
                 std::to_string(c.m + 1);
        }
      }
      return "";
    }
    case 'f': {
      for (const LengthClass& ci : A) {
        for (const LengthClass& cj : A) {
          if (!(ci.m < cj.m && cj.m >= 3)) {
            continue;
          }
          for (int q : cj.points) {
            for (int p : ci.points) {
              if (a(q) == p) {
                return "A_" + std::to_string(ci.i) + " meets the image of A_" +
                       std::to_string(cj.i) + " at " + std::to_string(p);
              }
            }
          }
          for (int p : ci.points) {
            for (int q : cj.points) {
              if (a(p) == q) {
                return "A_" + std::to_string(cj.i) + " meets the image of A_" +
                       std::to_string(ci.i) + " at " + std::to_string(q);
              }
            }
          }
        }
      }
      return "";
    }
    case 'g': {
      std::vector<int> mults;
      for (const LengthClass& c : A) {
        if (c.m >= 3) {
          mults.push_back(c.m);
        }
      }
      std::sort(mults.begin(), mults.end());
      mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
      for (int mult : mults) {
        std::vector<int> zs;
        std::vector<int> dest;
        for (const LengthClass& c : A) {
          if (c.m == mult) {
            zs.push_back(c.i);
            dest.push_back(class_of(l, a(c.points.front())));
          }
        }
        std::sort(dest.begin(), dest.end());
        if (dest != zs) {
          return "classes of multiplicity " + std::to_string(mult) +
                 " are not permuted among themselves";
        }
      }
      return "";
    }
    case 'h': {
      std::array<bool, max_chain + 1> in_img{};
      for (int x = 1; x <= n; ++x) {
        in_img[a(x)] = true;
      }
      for (int u = 1; u <= n; ++u) {
        if (in_img[u]) {
          continue;
        }
        bool ok;
        if (u <= l) {
          ok = (n - u) / l == 2 && in_img[u + l] && in_img[u + 2 * l];
        } else {
          int j = u - 2 * l;
          ok = j >= 1 && (n - j) / l == 2 && in_img[j] && in_img[j + l];
        }
        if (!ok) {
          return "missing point " + std::to_string(u) +
                 " is not a compliant multiplicity-2 endpoint";
        }
      }
      return "";
    }
    default:
      throw error("suite_violation: unknown letter");
  }
}

/// First large-regime structure violation for a in T*_n(l), 2l > n, or "".
inline std::string large_structure_violation(const Transformation& a, int l) {
  const int n = a.n();
  for (int z = n - l + 1; z <= l; ++z) {
    int w = a(z);
    if (w < n - l + 1 || w > l) {
      return "middle point " + std::to_string(z) +
             " maps outside the middle to " + std::to_string(w);
    }
  }
  std::array<bool, max_chain + 1> seen{};
  for (int x = 1; x <= n - l; ++x) {
    int u = a(x);
    int v = a(x + l);
    int d = u - v;
    if (d != l && d != -l) {
      return "pair (" + std::to_string(x) + "," + std::to_string(x + l) +
             ") does not map to a pair at distance l";
    }
    if (seen[u] || seen[v]) {
      return "image pairs overlap at pair (" + std::to_string(x) + "," +
             std::to_string(x + l) + ")";
    }
    seen[u] = seen[v] = true;
  }
  return "";
}

/// Generating sets for T_n(1), n = 2..5.
inline std::vector<Transformation> t1_generators(int n) {
  switch (n) {
    case 2:
      return {Transformation::make(2, {2, 1})};
    case 3:
      return {Transformation::make(3, {2, 1, 2}),
              Transformation::make(3, {3, 2, 1})};
    case 4:
      return {Transformation::make(4, {2, 3, 2, 1}),
              Transformation::make(4, {3, 4, 3, 2}),
              Transformation::make(4, {4, 3, 2, 1})};
    case 5:
      return {Transformation::make(5, {2, 3, 4, 5, 4}),
              Transformation::make(5, {3, 2, 1, 2, 3}),
              Transformation::make(5, {4, 3, 2, 1, 2}),
              Transformation::make(5, {5, 4, 3, 2, 1})};
    default:
      throw error("t1_generators: listing covers n = 2..5 only");
  }
}

inline std::uint64_t pow_u64(int base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= static_cast<std::uint64_t>(base);
  }
  return r;
}

using Evidence = std::vector<std::pair<std::string, std::string>>;

/// One claim's verdict at one cell; "" reason means applicable.
struct CellOutcome {
  bool applicable = true;
  bool pass = true;
  Evidence evidence;

  static CellOutcome not_applicable(std::string reason) {
    CellOutcome o;
    o.applicable = false;
    o.evidence.emplace_back("reason", std::move(reason));
    return o;
  }
  void fail(std::string key, std::string value) {
    pass = false;
    evidence.emplace_back(std::move(key), std::move(value));
  }
  void note(std::string key, std::string value) {
    evidence.emplace_back(std::move(key), std::move(value));
  }
};

inline CellOutcome run_claim(const std::string& id, int n, int l,
                             VerifyContext& ctx) {
  const int w = ctx.options().workers;
  CellOutcome o;

  if (id == "Prop-1.3") {
    Transformation constant =
        Transformation::make(n, std::vector<int>(static_cast<std::size_t>(n), 1));
    bool in_plain = preserves_length(constant, l);
    o.note("constant_map", format_text(constant));
    o.note("constant_in_T_n_l", yesno(in_plain));
    o.note("identity_in_T_n_l", yesno(preserves_length(identity(n), l)));
    if (in_plain || !preserves_length(identity(n), l)) {
      o.fail("defect", "T_n(l) is not a proper subsemigroup containing id");
    }
    return o;
  }

  if (id == "Prop-1.4") {
    const ElementSet& plain = ctx.set(n, l, Variant::preserving);
    const ElementSet& star = ctx.set(n, l, Variant::reflecting);
    bool equal = plain == star;
    bool expected = (n == 2 || n == 3) && l == 1;
    o.note("size_plain", std::to_string(plain.size()));
    o.note("size_star", std::to_string(star.size()));
    o.note("equal", yesno(equal));
    o.note("expected_equal", yesno(expected));
    if (equal != expected) {
      o.fail("defect", "equality locus mismatch");
      return o;
    }
    if (!expected) {
      Transformation wit = strictness_witness(n, l);
      bool in_plain = plain.contains(wit);
      bool in_star = star.contains(wit);
      o.note("strictness_witness", format_text(wit));
      o.note("witness_in_plain", yesno(in_plain));
      o.note("witness_in_star", yesno(in_star));
      if (!in_plain || in_star) {
        o.fail("defect", "strictness witness is not in the difference set");
      }
    }
    return o;
  }

  if (id == "Remark-2.1") {
    if (l != 1 || n > 5) {
      return CellOutcome::not_applicable(
          "generator listing covers T_n(1) for n = 2..5 only");
    }
    std::vector<Transformation> gens = t1_generators(n);
    ClosureOptions co;
    co.workers = w;
    ElementSet gen_closure = closure(gens, co);
    const ElementSet& plain = ctx.set(n, 1, Variant::preserving);
    bool equal = gen_closure == plain;
    std::string gtext;
    for (const Transformation& g : gens) {
      gtext += (gtext.empty() ? "" : "; ") + format_text(g);
    }
    o.note("generators", gtext);
    o.note("closure_size", std::to_string(gen_closure.size()));
    o.note("equals_enumeration", yesno(equal));
    if (!equal) {
      o.fail("defect", "closure does not equal T_n(1)");
      return o;
    }
    RegularityReport rep =
        is_regular_semigroup(gen_closure, "closure of T_" + std::to_string(n) +
                                              "(1) generators", w);
    o.note("regular", yesno(rep.regular));
    if (!rep.regular) {
      o.fail("defect", "closure is not regular");
    }
    return o;
  }

  if (id == "Thm-3.2") {
    if (l != 1) {
      return CellOutcome::not_applicable("concerns l = 1 only");
    }
    const ElementSet& plain = ctx.set(n, 1, Variant::preserving);
    RegularityReport rep = is_regular_semigroup(plain, "T_" + std::to_string(n) + "(1)", w);
    bool expected = predicted_regular(n, 1);
    o.note("size", std::to_string(plain.size()));
    o.note("regular", yesno(rep.regular));
    o.note("expected", yesno(expected));
    o.note("elements_scanned", std::to_string(rep.elements_scanned));
    if (!rep.regular) {
      std::vector<Transformation> irr = rep.irregular_elements();
      o.note("irregular_count", std::to_string(irr.size()));
      o.note("first_irregular", format_text(irr.front()));
    }
    if (rep.regular != expected) {
      o.fail("defect", "regularity does not match the dichotomy");
      return o;
    }
    if (n >= 6) {
      // The case-table element certifies non-regularity constructively.
      Transformation alpha = counterexample_T1(n);
      bool member = plain.contains(alpha);
      std::ptrdiff_t rank = witness_rank(alpha, plain);
      o.note("counterexample", format_text(alpha));
      o.note("counterexample_member", yesno(member));
      o.note("counterexample_exhausted", std::to_string(plain.size()));
      if (!member) {
        o.fail("defect", "counterexample is not a member of T_n(1)");
      } else if (rank >= 0) {
        o.fail("unexpected_witness",
               format_text(plain[static_cast<std::size_t>(rank)]));
      }
    }
    return o;
  }

  if (id == "Rem-4.3") {
    if (n % 2 != 0 || l != n / 2) {
      return CellOutcome::not_applicable("concerns even n with l = n/2");
    }
    const ElementSet& plain = ctx.set(n, l, Variant::preserving);
    for (const Transformation& a : plain) {
      for (int x = 1; x <= l; ++x) {
        int d = a(x) - a(x + l);
        if (d != l && d != -l) {
          o.fail("first_violation", format_text(a) + " at pair (" +
                                        std::to_string(x) + "," +
                                        std::to_string(x + l) + ")");
          return o;
        }
      }
    }
    o.note("elements_checked", std::to_string(plain.size()));
    o.note("violations", "0");
    return o;
  }

  if (id == "Lemma-4.1" || id == "Lemma-4.2") {
    bool odd_case = id == "Lemma-4.1";
    if (l < 2 || l > n - 2) {
      return CellOutcome::not_applicable("concerns 2 <= l <= n-2 only");
    }
    if (odd_case && n % 2 == 0) {
      return CellOutcome::not_applicable("concerns odd n (even n is Lemma-4.2)");
    }
    if (!odd_case && n % 2 == 1) {
      return CellOutcome::not_applicable("concerns even n (odd n is Lemma-4.1)");
    }
    if (!odd_case && l == n / 2) {
      return CellOutcome::not_applicable(
          "excludes l = n/2, where T_n(n/2) is regular");
    }
    Transformation alpha = counterexample_Tl(n, l);
    const ElementSet& plain = ctx.set(n, l, Variant::preserving);
    bool member = plain.contains(alpha);
    std::ptrdiff_t rank = witness_rank(alpha, plain);
    o.note("alpha", format_text(alpha));
    o.note("member", yesno(member));
    o.note("carrier_size", std::to_string(plain.size()));
    o.note("candidates_exhausted", std::to_string(plain.size()));
    if (!member) {
      o.fail("defect", "counterexample is not a member");
    } else if (rank >= 0) {
      o.fail("unexpected_witness", format_text(plain[static_cast<std::size_t>(rank)]));
    }
    return o;
  }

  if (id == "Thm-4.5") {
    if (l < 2 || l > n - 2) {
      return CellOutcome::not_applicable("concerns 2 <= l <= n-2 only");
    }
    const ElementSet& plain = ctx.set(n, l, Variant::preserving);
    RegularityReport rep = is_regular_semigroup(
        plain, SemigroupSpec{n, l, Variant::preserving}.name(), w);
    bool expected = predicted_regular(n, l);
    o.note("size", std::to_string(plain.size()));
    o.note("regular", yesno(rep.regular));
    o.note("expected", yesno(expected));
    o.note("elements_scanned", std::to_string(rep.elements_scanned));
    if (!rep.regular) {
      std::vector<Transformation> irr = rep.irregular_elements();
      o.note("irregular_count", std::to_string(irr.size()));
      o.note("first_irregular", format_text(irr.front()));
    }
    if (rep.regular != expected) {
      o.fail("defect", "regularity does not match the dichotomy");
      return o;
    }
    if (expected) {
      std::uint64_t constructed = 0;
      for (const Transformation& a : plain) {
        Transformation b = witness_half(a);  // throws on any defect
        if (!plain.contains(b)) {
          o.fail("witness_outside_carrier", format_text(b));
          return o;
        }
        ++constructed;
      }
      o.note("constructive_witnesses", std::to_string(constructed));
    }
    return o;
  }

  if (id == "Thm-2.2-PG") {
    if (l != n - 1) {
      return CellOutcome::not_applicable("concerns l = n-1 only");
    }
    const ElementSet& plain = ctx.set(n, l, Variant::preserving);
    std::uint64_t formula = 2 * pow_u64(n, n - 2);
    o.note("size", std::to_string(plain.size()));
    o.note("formula_2n_pow_n-2", std::to_string(formula));
    for (const Transformation& a : plain) {
      int lo = a(1);
      int hi = a(n);
      if (!((lo == 1 && hi == n) || (lo == n && hi == 1))) {
        o.fail("endpoint_violation", format_text(a));
        return o;
      }
    }
    o.note("endpoint_characterization", "true");
    if (plain.size() != formula) {
      o.fail("defect", "size does not match 2*n^(n-2)");
      return o;
    }
    RegularityReport rep = is_regular_semigroup(
        plain, SemigroupSpec{n, l, Variant::preserving}.name(), w);
    o.note("regular", yesno(rep.regular));
    o.note("elements_scanned", std::to_string(rep.elements_scanned));
    if (!rep.regular) {
      o.fail("defect", "T_n(n-1) must be regular");
    }
    return o;
  }

  if (id == "Lemma-5.1" || id == "Thm-5.2") {
    if (2 * l <= n) {
      return CellOutcome::not_applicable("concerns 2l > n only");
    }
    const ElementSet& star = ctx.set(n, l, Variant::reflecting);
    if (id == "Lemma-5.1") {
      for (const Transformation& a : star) {
        std::string v = large_structure_violation(a, l);
        if (!v.empty()) {
          o.fail("first_violation", format_text(a) + ": " + v);
          return o;
        }
      }
      o.note("elements_checked", std::to_string(star.size()));
      o.note("violations", "0");
      return o;
    }
    std::uint64_t constructed = 0;
    for (const Transformation& a : star) {
      Transformation b = witness_star_large(a, l);  // throws on any defect
      if (!star.contains(b)) {
        o.fail("witness_outside_carrier", format_text(b));
        return o;
      }
      ++constructed;
    }
    o.note("size", std::to_string(star.size()));
    o.note("constructive_witnesses", std::to_string(constructed));
    o.note("oracle_fallbacks", "0");
    return o;
  }

  if (id == "Thm-5.10" || id == "Lemma-5.3" || id == "Lemma-5.4" ||
      id == "Lemma-5.5" || id == "Lemma-5.6" || id == "Rem-5.6" ||
      id == "Lemma-5.7" || id == "Lemma-5.8" || id == "Lemma-5.9") {
    if (2 * l > n) {
      return CellOutcome::not_applicable("concerns 2l <= n only");
    }
    const ElementSet& star = ctx.set(n, l, Variant::reflecting);
    if (id == "Thm-5.10") {
      std::uint64_t constructed = 0;
      std::uint64_t bijective = 0;
      for (const Transformation& a : star) {
        Transformation b = witness_star_small(a, l);  // throws on any defect
        if (!star.contains(b)) {
          o.fail("witness_outside_carrier", format_text(b));
          return o;
        }
        ++constructed;
        if (static_cast<int>(image_set(a).size()) == n) {
          ++bijective;
        }
      }
      o.note("size", std::to_string(star.size()));
      o.note("constructive_witnesses", std::to_string(constructed));
      o.note("bijective_elements", std::to_string(bijective));
      o.note("oracle_fallbacks", "0");
      return o;
    }
    char letter = 'a';
    if (id == "Lemma-5.3") {
      letter = 'a';
    } else if (id == "Lemma-5.4") {
      letter = 'b';
    } else if (id == "Lemma-5.5") {
      letter = 'c';
    } else if (id == "Lemma-5.6") {
      letter = 'd';
    } else if (id == "Rem-5.6") {
      letter = 'e';
    } else if (id == "Lemma-5.7") {
      letter = 'f';
    } else if (id == "Lemma-5.8") {
      letter = 'g';
    } else {
      letter = 'h';
    }
    for (const Transformation& a : star) {
      std::string v = suite_violation(a, l, letter);
      if (!v.empty()) {
        o.fail("first_violation", format_text(a) + ": " + v);
        return o;
      }
    }
    o.note("elements_checked", std::to_string(star.size()));
    o.note("violations", "0");
    return o;
  }

  if (id == "Example-5a" || id == "Example-5b") {
    bool is_a = id == "Example-5a";
    int en = is_a ? 5 : 6;
    int el = is_a ? 3 : 2;
    if (n != en || l != el) {
      return CellOutcome::not_applicable(
          "concerns the single cell (n,l) = (" + std::to_string(en) + "," +
          std::to_string(el) + ")");
    }
    Transformation alpha =
        is_a ? Transformation::make(5, {1, 1, 3, 4, 4})
             : Transformation::make(6, {1, 1, 3, 3, 5, 5});
    const ElementSet& plain = ctx.set(n, l, Variant::preserving);
    const ElementSet& star = ctx.set(n, l, Variant::reflecting);
    bool member = plain.contains(alpha);
    bool in_star = star.contains(alpha);
    bool self_witness = compose(compose(alpha, alpha), alpha) == alpha;
    std::ptrdiff_t rank = witness_rank(alpha, plain);
    o.note("alpha", format_text(alpha));
    o.note("member_plain", yesno(member));
    o.note("member_star", yesno(in_star));
    o.note("alpha_eq_alpha_cubed", yesno(self_witness));
    if (rank >= 0) {
      o.note("canonical_witness", format_text(plain[static_cast<std::size_t>(rank)]));
      o.note("canonical_witness_rank", std::to_string(rank));
    }
    if (!member || in_star || !self_witness || rank < 0) {
      o.fail("defect", "example element must be regular in T_n(l) and "
                       "outside T*_n(l)");
    }
    return o;
  }

  throw error("run_claim: unknown claim id " + id);
}

}  // namespace detail

/// Replays every claim of the inventory over all cells 2 <= n <= max_n,
/// 1 <= l <= n-1.  Every (claim, n, l) combination gets a row; claims that
/// do not apply at a cell are reported "not-applicable" with the reason,
/// never silently skipped.  Deterministic across runs and worker counts.
inline VerifyReport verify_all(const VerifyOptions& options = {}) {
  if (options.max_n < 2 || options.max_n > max_chain) {
    throw error("verify: max_n = " + std::to_string(options.max_n) +
                " out of range; need 2 <= max_n <= " +
                std::to_string(max_chain));
  }
  if (options.workers < 1) {
    throw error("verify: workers must be >= 1");
  }
  detail::VerifyContext ctx(options);
  VerifyReport report;
  report.max_n = options.max_n;
  for (const ClaimInfo& info : claim_inventory()) {
    for (int n = 2; n <= options.max_n; ++n) {
      for (int l = 1; l <= n - 1; ++l) {
        ClaimResult row;
        row.claim = info.id;
        row.n = n;
        row.l = l;
        auto t0 = std::chrono::steady_clock::now();
        detail::CellOutcome outcome;
        try {
          outcome = detail::run_claim(info.id, n, l, ctx);
        } catch (const error& e) {
          outcome.applicable = true;
          outcome.pass = false;
          outcome.evidence.emplace_back("error", e.what());
        }
        row.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        row.status = !outcome.applicable ? "not-applicable"
                     : outcome.pass      ? "pass"
                                         : "fail";
        row.evidence = std::move(outcome.evidence);
        if (row.status == "pass") {
          ++report.passed;
        } else if (row.status == "fail") {
          ++report.failed;
          report.all_pass = false;
        } else {
          ++report.not_applicable;
        }
        report.results.push_back(std::move(row));
      }
    }
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const ClaimResult& a, const ClaimResult& b) {
              return std::tie(a.claim, a.n, a.l) < std::tie(b.claim, b.n, b.l);
            });
  return report;
}

}  // namespace lps
