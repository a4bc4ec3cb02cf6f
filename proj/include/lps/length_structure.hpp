#pragma once

/// @file length_structure.hpp
/// @brief The distance-l structure of X_n: membership predicates, the two
/// structural decompositions, and constraint-propagating enumeration of
/// T_n(l) and T*_n(l).
///
/// Definitions.  For 1 <= l <= n-1,
///   T_n(l)  = { a : |x - y| = l  implies |xa - ya| = l }   (preserving)
///   T*_n(l) = { a : |x - y| = l  iff     |xa - ya| = l }   (reflecting)
/// Both are closed under composition, T*_n(l) is a subsemigroup of T_n(l),
/// and the identity lies in T*_n(l).
///
/// Two regimes drive all structure theory:
///   * pair/middle view (2l >= n): pairs (x, x+l) for x = 1..n-l and the
///     middle {n-l+1, ..., l} (empty exactly when 2l = n);
///   * class view (2l <= n): A_i = {i, i+l, ..., i+m_i*l} for i = 1..l
///     partition X_n, with multiplicity m_i = max{k : i + k*l <= n} >= 1.
/// The boundary 2l = n belongs to both; there the classes are exactly the
/// pairs (m_i = 1) and decompose() reports the pair/middle form.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lps/element_set.hpp"
#include "lps/transformation.hpp"

namespace lps {

enum class Variant {
  preserving,  ///< T_n(l)
  reflecting,  ///< T*_n(l)
  full,        ///< T_n (no length constraint)
};

inline const char* variant_token(Variant v) {
  switch (v) {
    case Variant::preserving:
      return "plain";
    case Variant::reflecting:
      return "star";
    case Variant::full:
      return "full";
  }
  return "plain";
}

inline std::optional<Variant> variant_from_token(const std::string& tok) {
  if (tok == "plain") {
    return Variant::preserving;
  }
  if (tok == "star") {
    return Variant::reflecting;
  }
  if (tok == "full") {
    return Variant::full;
  }
  return std::nullopt;
}

struct SemigroupSpec {
  int n = 0;
  int l = 0;
  Variant variant = Variant::preserving;

  void validate() const {
    if (n < 2 || n > max_chain) {
      throw error("spec: n = " + std::to_string(n) +
                  " out of range; capacity is 2 <= n <= " +
                  std::to_string(max_chain));
    }
    if (l < 1 || l > n - 1) {
      throw error("spec: l = " + std::to_string(l) +
                  " out of range; need 1 <= l <= n-1 = " +
                  std::to_string(n - 1));
    }
  }

  /// Display name: "T_5(2)", "T*_5(2)" or "T_5".
  std::string name() const {
    if (variant == Variant::full) {
      return "T_" + std::to_string(n);
    }
    std::string base = variant == Variant::reflecting ? "T*_" : "T_";
    return base + std::to_string(n) + "(" + std::to_string(l) + ")";
  }

  /// Cache file name: "T_{n}_{l}_{variant}.txt".
  std::string cache_file() const {
    return "T_" + std::to_string(n) + "_" + std::to_string(l) + "_" +
           variant_token(variant) + ".txt";
  }

  friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;
};

/// |x - y| = l implies |xa - ya| = l  (checked on the pairs (x, x+l)).
inline bool preserves_length(const Transformation& a, int l) {
  const int n = a.n();
  for (int i = 0; i + l < n; ++i) {
    int d = static_cast<int>(a.raw(i)) - static_cast<int>(a.raw(i + l));
    if (d != l && d != -l) {
      return false;
    }
  }
  return true;
}

/// |x - y| = l iff |xa - ya| = l.
inline bool reflects_length(const Transformation& a, int l) {
  if (!preserves_length(a, l)) {
    return false;
  }
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j - i == l) {
        continue;
      }
      int d = static_cast<int>(a.raw(i)) - static_cast<int>(a.raw(j));
      if (d == l || d == -l) {
        return false;
      }
    }
  }
  return true;
}

/// A pair of points witnessing a failed membership test (all 1-based).
/// converse = false: |x-y| = l but |xa-ya| != l.
/// converse = true:  |xa-ya| = l but |x-y| != l (reflecting variant only).
struct ViolatedPair {
  int x = 0;
  int y = 0;
  int xa = 0;
  int ya = 0;
  bool converse = false;
};

/// First violated pair in lexicographic (x, y) order, or nullopt if a belongs
/// to the requested variant.  Variant::full never has violations.
inline std::optional<ViolatedPair> first_violation(const Transformation& a,
                                                   int l, Variant variant) {
  if (variant == Variant::full) {
    return std::nullopt;
  }
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int d = static_cast<int>(a.raw(i)) - static_cast<int>(a.raw(j));
      bool img_l = (d == l || d == -l);
      if (j - i == l && !img_l) {
        return ViolatedPair{i + 1, j + 1, static_cast<int>(a.raw(i)) + 1,
                            static_cast<int>(a.raw(j)) + 1, false};
      }
      if (variant == Variant::reflecting && j - i != l && img_l) {
        return ViolatedPair{i + 1, j + 1, static_cast<int>(a.raw(i)) + 1,
                            static_cast<int>(a.raw(j)) + 1, true};
      }
    }
  }
  return std::nullopt;
}

/// Membership in the semigroup a spec describes.
inline bool is_member(const Transformation& a, const SemigroupSpec& spec) {
  if (a.n() != spec.n) {
    return false;
  }
  switch (spec.variant) {
    case Variant::preserving:
      return preserves_length(a, spec.l);
    case Variant::reflecting:
      return reflects_length(a, spec.l);
    case Variant::full:
      return true;
  }
  return false;
}

/// One class A_i = {i, i+l, ..., i+m*l} of the 2l <= n partition.
struct LengthClass {
  int i = 0;                ///< class label, 1 <= i <= l
  int m = 0;                ///< multiplicity m_i
  std::vector<int> points;  ///< the m_i + 1 points, ascending
};

/// Class view of X_n; valid exactly when 2l <= n (every class then has
/// m_i >= 1, and the multiplicities satisfy m_l <= ... <= m_1).
inline std::vector<LengthClass> classes_view(int n, int l) {
  if (2 * l > n) {
    throw error("classes_view: requires 2l <= n, got n = " +
                std::to_string(n) + ", l = " + std::to_string(l));
  }
  std::vector<LengthClass> out;
  out.reserve(l);
  for (int i = 1; i <= l; ++i) {
    LengthClass c;
    c.i = i;
    c.m = (n - i) / l;
    for (int p = i; p <= n; p += l) {
      c.points.push_back(p);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Structural decomposition of (n, l).
struct Decomposition {
  enum class Regime { pair_middle, classes };
  Regime regime = Regime::pair_middle;
  int n = 0;
  int l = 0;
  std::vector<std::pair<int, int>> pairs;  ///< pair_middle: (x, x+l), x ascending
  std::vector<int> middle;                 ///< pair_middle: {n-l+1, ..., l}
  std::vector<LengthClass> classes;        ///< classes regime
};

/// pair_middle when 2l >= n (middle empty exactly at 2l = n), classes when
/// 2l < n.  At the 2l = n boundary both views exist and coincide (classes of
/// multiplicity 1 are exactly the pairs); classes_view() remains available
/// there for the structural lemma machinery.
inline Decomposition decompose(int n, int l) {
  SemigroupSpec s{n, l, Variant::preserving};
  s.validate();
  Decomposition d;
  d.n = n;
  d.l = l;
  if (2 * l >= n) {
    d.regime = Decomposition::Regime::pair_middle;
    for (int x = 1; x <= n - l; ++x) {
      d.pairs.emplace_back(x, x + l);
    }
    for (int z = n - l + 1; z <= l; ++z) {
      d.middle.push_back(z);
    }
  } else {
    d.regime = Decomposition::Regime::classes;
    d.classes = classes_view(n, l);
  }
  return d;
}

struct EnumerateOptions {
  int workers = 1;
  std::uint64_t budget = 5'000'000;  ///< maximum number of elements
  std::string cache_dir;             ///< empty: no file cache
};

namespace detail {

/// Backtracking enumeration of one first-image block (img[0] = first, 0-based)
/// in lexicographic order.  first < 0 enumerates all blocks.
///
/// Candidates: for x >= l the image is img[x-l] +- l (ascending), which
/// enforces the preserving direction as the sequence is filled; smaller x is
/// unconstrained.  The reflecting variant additionally keeps per-value
/// preimage bitmasks and rejects an assignment img[x] = v as soon as some
/// already-assigned position p with |img[p] - v| = l is not the licensed
/// partner x-l or x+l — that is the converse direction, checked eagerly.
inline void enumerate_block(const SemigroupSpec& spec, int first,
                            std::uint64_t budget,
                            std::vector<Transformation>& out) {
  const int n = spec.n;
  const int l = spec.l;
  const bool star = spec.variant == Variant::reflecting;
  std::array<std::uint8_t, max_chain> img{};
  std::array<std::uint16_t, max_chain> pre{};  // positions mapping to value v

  struct Frame {
    int cand[2];
    int count;
    int next;
  };
  std::array<Frame, max_chain> frames{};

  // Iterative backtracking over positions 0..n-1.
  int x = 0;
  std::vector<int> root;  // candidates for x = 0
  if (first >= 0) {
    root = {first};
  } else {
    root.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      root[v] = v;
    }
  }
  std::size_t root_next = 0;

  auto admissible = [&](int pos, int v) {
    if (!star) {
      return true;
    }
    std::uint16_t allowed = 0;
    if (pos - l >= 0) {
      allowed |= static_cast<std::uint16_t>(1u << (pos - l));
    }
    if (pos + l < n) {
      allowed |= static_cast<std::uint16_t>(1u << (pos + l));
    }
    for (int w : {v - l, v + l}) {
      if (w >= 0 && w < n && (pre[w] & ~allowed) != 0) {
        return false;
      }
    }
    return true;
  };

  while (true) {
    if (x == n) {
      if (out.size() >= budget) {
        throw error("enumerate: " + spec.name() + " exceeds the " +
                    std::to_string(budget) + "-element capacity budget");
      }
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        images[i] = img[i] + 1;
      }
      out.push_back(Transformation::make(n, images));
      --x;  // backtrack into the deepest frame
      if (x < 0) {
        return;
      }
      pre[img[x]] = static_cast<std::uint16_t>(pre[img[x]] & ~(1u << x));
    }
    // Advance position x to its next candidate.
    bool advanced = false;
    while (!advanced) {
      int v = -1;
      if (x == 0) {
        if (root_next < root.size()) {
          v = root[root_next++];
        }
      } else {
        Frame& f = frames[x];
        if (f.next == 0) {
          f.count = 0;
          int base = img[x - l >= 0 ? x - l : 0];
          if (x >= l) {
            if (base - l >= 0) {
              f.cand[f.count++] = base - l;
            }
            if (base + l < n) {
              f.cand[f.count++] = base + l;
            }
          } else {
            // unconstrained: candidates are 0..n-1, streamed via next
          }
        }
        if (x >= l) {
          if (f.next < f.count) {
            v = f.cand[f.next++];
          }
        } else {
          if (f.next < n) {
            v = f.next++;
          }
        }
      }
      if (v < 0) {
        // frame exhausted: backtrack
        if (x == 0) {
          return;
        }
        frames[x].next = 0;
        --x;
        if (x == 0 && root.size() == 1 && root_next == 1) {
          // single-block mode: root consumed means this block is done once
          // its subtree is exhausted; fall through to root handling
        }
        pre[img[x]] = static_cast<std::uint16_t>(pre[img[x]] & ~(1u << x));
        continue;
      }
      if (!admissible(x, v)) {
        continue;
      }
      img[x] = static_cast<std::uint8_t>(v);
      pre[v] = static_cast<std::uint16_t>(pre[v] | (1u << x));
      ++x;
      if (x < n) {
        frames[x].next = 0;
      }
      advanced = true;
    }
  }
}

inline std::uint64_t pow_checked(int base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / static_cast<std::uint64_t>(base)) {
      return cap + 1;
    }
    r *= static_cast<std::uint64_t>(base);
  }
  return r;
}

/// Odometer over all n^n maps, filtered by the LengthSpec membership predicate.
inline std::vector<Transformation> enumerate_filtered(
    const SemigroupSpec& spec, std::uint64_t budget) {
  const int n = spec.n;
  if (pow_checked(n, n, budget) > budget &&
      spec.variant == Variant::full) {
    throw error("enumerate: " + spec.name() + " has " + std::to_string(n) +
                "^" + std::to_string(n) + " elements, over the " +
                std::to_string(budget) + "-element capacity budget");
  }
  std::vector<Transformation> out;
  std::vector<int> images(static_cast<std::size_t>(n), 1);
  while (true) {
    Transformation t = Transformation::make(n, images);
    if (is_member(t, spec)) {
      if (out.size() >= budget) {
        throw error("enumerate: " + spec.name() + " exceeds the " +
                    std::to_string(budget) + "-element capacity budget");
      }
      out.push_back(t);
    }
    int i = n - 1;
    while (i >= 0 && images[i] == n) {
      images[i] = 1;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++images[i];
  }
  return out;
}

inline bool load_cached(const SemigroupSpec& spec, const std::string& dir,
                        ElementSet& out) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(dir) / spec.cache_file();
  std::ifstream in(path);
  if (!in) {
    return false;
  }
  // Header: "# spec=T_{n}_{l}_{variant} size=K"
  std::string header;
  if (!std::getline(in, header)) {
    return false;
  }
  std::string spec_tag = spec.cache_file();
  spec_tag.resize(spec_tag.size() - 4);  // drop ".txt"
  std::string expect = "# spec=" + spec_tag + " size=";
  if (header.rfind(expect, 0) != 0) {
    return false;
  }
  std::uint64_t size = 0;
  try {
    size = std::stoull(header.substr(expect.size()));
  } catch (const std::exception&) {
    return false;
  }
  std::vector<Transformation> elems;
  try {
    elems = read_elements(in);
  } catch (const error&) {
    return false;
  }
  if (elems.size() != size) {
    return false;
  }
  for (const Transformation& t : elems) {
    if (t.n() != spec.n) {
      return false;
    }
  }
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (!(elems[i - 1] < elems[i])) {
      return false;
    }
  }
  // Sampled membership revalidation (the full predicate on <= 64 elements).
  std::size_t stride = elems.size() / 64 + 1;
  for (std::size_t i = 0; i < elems.size(); i += stride) {
    if (!is_member(elems[i], spec)) {
      return false;
    }
  }
  out = ElementSet::from_sorted_unique(std::move(elems));
  return true;
}

inline void store_cached(const SemigroupSpec& spec, const std::string& dir,
                         const ElementSet& s) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  fs::path path = fs::path(dir) / spec.cache_file();
  std::ofstream out(path);
  if (!out) {
    throw error("enumerate: cannot write cache file " + path.string());
  }
  std::string spec_tag = spec.cache_file();
  spec_tag.resize(spec_tag.size() - 4);
  write_elements(out, s,
                 "spec=" + spec_tag + " size=" + std::to_string(s.size()));
}

}  // namespace detail

/// Enumerates the semigroup a spec describes, in canonical order.
///
/// The preserving/reflecting variants use constraint-propagating backtracking
/// (see detail::enumerate_block); the full variant is a filtered odometer.
/// With workers > 1 the search is partitioned by the first image value and
/// the per-block results are concatenated in value order, so the output is
/// identical for every worker count.  An opt-in file cache (options.cache_dir)
/// stores "T_{n}_{l}_{variant}.txt" files which are revalidated by size and a
/// sampled membership check before being trusted.
inline ElementSet enumerate(const SemigroupSpec& spec,
                            const EnumerateOptions& options = {}) {
  spec.validate();
  if (options.workers < 1) {
    throw error("enumerate: workers must be >= 1");
  }
  if (!options.cache_dir.empty()) {
    ElementSet cached;
    if (detail::load_cached(spec, options.cache_dir, cached)) {
      return cached;
    }
  }
  ElementSet result;
  if (spec.variant == Variant::full) {
    result = ElementSet::from_sorted_unique(
        detail::enumerate_filtered(spec, options.budget));
  } else if (options.workers == 1) {
    std::vector<Transformation> all;
    detail::enumerate_block(spec, -1, options.budget, all);
    result = ElementSet::from_sorted_unique(std::move(all));
  } else {
    // One block per first image value, round-robin over workers, then
    // concatenated in value order: canonical order without a sort.
    std::vector<std::vector<Transformation>> blocks(
        static_cast<std::size_t>(spec.n));
    std::vector<std::string> errors(static_cast<std::size_t>(options.workers));
    std::vector<std::thread> threads;
    int workers = std::min(options.workers, spec.n);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        try {
          for (int v = w; v < spec.n; v += workers) {
            detail::enumerate_block(spec, v, options.budget,
                                    blocks[static_cast<std::size_t>(v)]);
          }
        } catch (const std::exception& e) {
          errors[static_cast<std::size_t>(w)] = e.what();
        }
      });
    }
    for (std::thread& t : threads) {
      t.join();
    }
    for (const std::string& e : errors) {
      if (!e.empty()) {
        throw error(e);
      }
    }
    std::vector<Transformation> all;
    std::uint64_t total = 0;
    for (const auto& b : blocks) {
      total += b.size();
    }
    if (total > options.budget) {
      throw error("enumerate: " + spec.name() + " exceeds the " +
                  std::to_string(options.budget) +
                  "-element capacity budget");
    }
    all.reserve(total);
    for (auto& b : blocks) {
      all.insert(all.end(), b.begin(), b.end());
    }
    result = ElementSet::from_sorted_unique(std::move(all));
  }
  if (!options.cache_dir.empty()) {
    detail::store_cached(spec, options.cache_dir, result);
  }
  return result;
}

/// Reference implementation: filters all n^n maps through the membership
/// predicate.  Kept as the differential-testing oracle for enumerate().
inline ElementSet enumerate_naive(const SemigroupSpec& spec,
                                  std::uint64_t budget = 50'000'000) {
  spec.validate();
  if (detail::pow_checked(spec.n, spec.n, budget) > budget) {
    throw error("enumerate_naive: " + std::to_string(spec.n) + "^" +
                std::to_string(spec.n) + " candidates exceed the budget");
  }
  return ElementSet::from_sorted_unique(
      detail::enumerate_filtered(spec, budget));
}

}  // namespace lps
