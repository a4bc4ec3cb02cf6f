#pragma once

/// @file semigroup_algebra.hpp
/// @brief Generic subsemigroup closure from generators and the brute-force
/// regularity oracle.
///
/// An element a of a finite semigroup S is regular when a = a*b*a for some
/// b in S (left-to-right composition); b is a witness.  S is regular when
/// every element is.  Non-regularity is certified only by exhausting S, and
/// the scan statistics are reported so that exhaustion is auditable.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lps/element_set.hpp"
#include "lps/transformation.hpp"

namespace lps {

struct ClosureOptions {
  std::uint64_t budget = 5'000'000;  ///< maximum closure size
  int workers = 1;
};

/// Least composition-closed superset of the generators, in canonical order.
///
/// Worklist breadth-first search: every frontier element is multiplied by
/// every generator on both sides, so non-monoid generator sets are handled
/// correctly.  The result is independent of the worker count.
inline ElementSet closure(const std::vector<Transformation>& generators,
                          const ClosureOptions& options = {}) {
  if (generators.empty()) {
    throw error("closure: empty generator set");
  }
  if (options.workers < 1) {
    throw error("closure: workers must be >= 1");
  }
  const int n = generators.front().n();
  for (const Transformation& g : generators) {
    if (g.n() != n) {
      throw error("closure: generators mix domain sizes " +
                  std::to_string(n) + " and " + std::to_string(g.n()));
    }
  }

  std::vector<Transformation> elems;
  std::vector<std::uint64_t> keys;
  detail::FlatKeySet index;
  auto rebuild = [&]() { index.build(keys); };
  auto known = [&](const Transformation& t) {
    return index.contains(t.key());
  };

  for (const Transformation& g : generators) {
    bool dup = false;
    for (const Transformation& e : elems) {
      if (e == g) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      elems.push_back(g);
      keys.push_back(g.key());
    }
  }
  rebuild();

  std::size_t frontier_begin = 0;
  while (frontier_begin < elems.size()) {
    std::size_t frontier_end = elems.size();
    // Two-sided products of the frontier with the generators.
    std::vector<Transformation> products;
    auto emit_range = [&](std::size_t lo, std::size_t hi,
                          std::vector<Transformation>& out) {
      for (std::size_t i = lo; i < hi; ++i) {
        for (const Transformation& g : generators) {
          out.push_back(compose(elems[i], g));
          out.push_back(compose(g, elems[i]));
        }
      }
    };
    if (options.workers == 1 || frontier_end - frontier_begin < 64) {
      emit_range(frontier_begin, frontier_end, products);
    } else {
      int workers = options.workers;
      std::vector<std::vector<Transformation>> parts(
          static_cast<std::size_t>(workers));
      std::vector<std::thread> threads;
      std::size_t count = frontier_end - frontier_begin;
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = frontier_begin + count * static_cast<std::size_t>(w) /
                                              static_cast<std::size_t>(workers);
        std::size_t hi = frontier_begin +
                         count * static_cast<std::size_t>(w + 1) /
                             static_cast<std::size_t>(workers);
        threads.emplace_back([&, lo, hi, w]() {
          emit_range(lo, hi, parts[static_cast<std::size_t>(w)]);
        });
      }
      for (std::thread& t : threads) {
        t.join();
      }
      for (auto& p : parts) {
        products.insert(products.end(), p.begin(), p.end());
      }
    }
    // Admit the new ones (sequential: the index must stay coherent).
    for (const Transformation& p : products) {
      if (known(p)) {
        continue;
      }
      bool dup = false;
      for (std::size_t i = frontier_end; i < elems.size(); ++i) {
        if (elems[i] == p) {
          dup = true;
          break;
        }
      }
      if (dup) {
        continue;
      }
      if (elems.size() >= options.budget) {
        throw error("closure: exceeds the " + std::to_string(options.budget) +
                    "-element capacity budget");
      }
      elems.push_back(p);
      keys.push_back(p.key());
    }
    rebuild();
    frontier_begin = frontier_end;
  }
  return ElementSet(std::move(elems));
}

/// A pair whose product escapes the set (composition-closure failure).
struct ClosureDefect {
  Transformation a;
  Transformation b;
  Transformation product;  ///< compose(a, b), not in the set
};

namespace detail {

/// Compact key of a composed pair, compatible with Transformation::key():
/// image of position i sits in nibble (15 - i).
inline std::uint64_t composed_key(const Transformation& a,
                                  const Transformation& b, int n) {
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i) {
    k = (k << 4) | b.raw(a.raw(i));
  }
  return k << (4 * (16 - n));
}

}  // namespace detail

/// First pair (in lexicographic index order) whose product lies outside S,
/// or nullopt when S is closed under composition.  Deterministic for any
/// worker count.
inline std::optional<ClosureDefect> closure_defect(const ElementSet& S,
                                                   int workers = 1) {
  if (workers < 1) {
    throw error("closure_defect: workers must be >= 1");
  }
  if (S.empty()) {
    return std::nullopt;
  }
  const int n = S.n();
  const std::size_t size = S.size();
  detail::FlatKeySet index;
  {
    std::vector<std::uint64_t> keys;
    keys.reserve(size);
    for (const Transformation& t : S) {
      keys.push_back(t.key());
    }
    index.build(keys);
  }
  auto scan_rows = [&](std::size_t lo, std::size_t hi)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t i = lo; i < hi; ++i) {
      const Transformation& a = S[i];
      for (std::size_t j = 0; j < size; ++j) {
        if (!index.contains(detail::composed_key(a, S[j], n))) {
          return std::make_pair(i, j);
        }
      }
    }
    return std::nullopt;
  };
  std::optional<std::pair<std::size_t, std::size_t>> first;
  if (workers == 1 || size < 256) {
    first = scan_rows(0, size);
  } else {
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> hits(
        static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = size * static_cast<std::size_t>(w) /
                       static_cast<std::size_t>(workers);
      std::size_t hi = size * static_cast<std::size_t>(w + 1) /
                       static_cast<std::size_t>(workers);
      threads.emplace_back(
          [&, lo, hi, w]() { hits[static_cast<std::size_t>(w)] = scan_rows(lo, hi); });
    }
    for (std::thread& t : threads) {
      t.join();
    }
    for (const auto& h : hits) {
      if (h && (!first || *h < *first)) {
        first = h;
      }
    }
  }
  if (!first) {
    return std::nullopt;
  }
  const Transformation& a = S[first->first];
  const Transformation& b = S[first->second];
  return ClosureDefect{a, b, compose(a, b)};
}

/// Index in S of the canonically smallest witness b with a*b*a = a, or -1
/// after exhausting S.  The scan visits candidates in canonical order and
/// stops at the first witness, so the result is the least witness index.
inline std::ptrdiff_t witness_rank(const Transformation& a,
                                   const ElementSet& S) {
  const int n = a.n();
  if (!S.empty() && S.n() != n) {
    throw error("witness_rank: element has n = " + std::to_string(n) +
                " but the set has n = " + std::to_string(S.n()));
  }
  const std::size_t size = S.size();
  for (std::size_t r = 0; r < size; ++r) {
    const Transformation& b = S[r];
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      // x(aba) = ((xa)b)a must equal xa.
      if (a.raw(b.raw(a.raw(i))) != a.raw(i)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return static_cast<std::ptrdiff_t>(r);
    }
  }
  return -1;
}

/// Canonically smallest witness b in S with a*b*a = a, or nullopt after
/// exhausting S.  With workers > 1 the candidate range is partitioned and
/// the minimum surviving index is selected, so the witness is identical to
/// the sequential scan's.
inline std::optional<Transformation> is_regular_element(
    const Transformation& a, const ElementSet& S, int workers = 1) {
  if (workers < 1) {
    throw error("is_regular_element: workers must be >= 1");
  }
  if (workers == 1 || S.size() < 1024) {
    std::ptrdiff_t r = witness_rank(a, S);
    if (r < 0) {
      return std::nullopt;
    }
    return S[static_cast<std::size_t>(r)];
  }
  const int n = a.n();
  if (S.n() != n) {
    throw error("is_regular_element: element has n = " + std::to_string(n) +
                " but the set has n = " + std::to_string(S.n()));
  }
  const std::size_t size = S.size();
  std::atomic<std::size_t> best{size};
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      for (std::size_t r = static_cast<std::size_t>(w); r < size;
           r += static_cast<std::size_t>(workers)) {
        if (r >= best.load(std::memory_order_relaxed)) {
          break;  // a smaller witness index is already known
        }
        const Transformation& b = S[r];
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (a.raw(b.raw(a.raw(i))) != a.raw(i)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (r < cur &&
                 !best.compare_exchange_weak(cur, r,
                                             std::memory_order_relaxed)) {
          }
          break;
        }
      }
    });
  }
  for (std::thread& t : threads) {
    t.join();
  }
  std::size_t r = best.load();
  if (r == size) {
    return std::nullopt;
  }
  return S[r];
}

/// Outcome of the element-by-element regularity scan of a whole carrier set.
///
/// witness_rank[i] is the index in elements of the canonically smallest
/// witness for elements[i], or -1 when elements[i] is irregular.  The scan
/// statistics are the canonical-scan cost: an element of witness rank r
/// costs r + 1 candidate tests, an irregular element costs size() tests
/// (full exhaustion), and every candidate test performs two compositions.
/// Both numbers are pure functions of the result, hence identical across
/// runs and worker counts.
struct RegularityReport {
  std::string description;
  ElementSet elements;
  std::vector<std::int32_t> witness_rank;
  bool regular = true;
  std::uint64_t elements_scanned = 0;
  std::uint64_t compositions = 0;

  std::vector<Transformation> irregular_elements() const {
    std::vector<Transformation> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (witness_rank[i] < 0) {
        out.push_back(elements[i]);
      }
    }
    return out;
  }

  std::optional<Transformation> witness_of(std::size_t i) const {
    if (witness_rank[i] < 0) {
      return std::nullopt;
    }
    return elements[static_cast<std::size_t>(witness_rank[i])];
  }
};

/// Regularity of every element of S, which must be composition-closed;
/// a closure defect is rejected with the offending product spelled out.
/// Elements are scanned independently, so any worker count produces the
/// identical report.
inline RegularityReport is_regular_semigroup(ElementSet S,
                                             std::string description = "",
                                             int workers = 1) {
  if (workers < 1) {
    throw error("is_regular_semigroup: workers must be >= 1");
  }
  if (S.empty()) {
    throw error("is_regular_semigroup: empty set");
  }
  if (auto defect = closure_defect(S, workers)) {
    throw error("is_regular_semigroup: input is not composition-closed: [" +
                format_text(defect->a) + "] * [" + format_text(defect->b) +
                "] = [" + format_text(defect->product) +
                "] is outside the set");
  }
  RegularityReport report;
  report.description = std::move(description);
  report.elements = std::move(S);
  const std::size_t size = report.elements.size();
  report.witness_rank.assign(size, -1);
  auto scan = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      report.witness_rank[i] = static_cast<std::int32_t>(
          witness_rank(report.elements[i], report.elements));
    }
  };
  if (workers == 1 || size < 256) {
    scan(0, size);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = size * static_cast<std::size_t>(w) /
                       static_cast<std::size_t>(workers);
      std::size_t hi = size * static_cast<std::size_t>(w + 1) /
                       static_cast<std::size_t>(workers);
      threads.emplace_back([&, lo, hi]() { scan(lo, hi); });
    }
    for (std::thread& t : threads) {
      t.join();
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (report.witness_rank[i] < 0) {
      report.regular = false;
      report.elements_scanned += size;
    } else {
      report.elements_scanned +=
          static_cast<std::uint64_t>(report.witness_rank[i]) + 1;
    }
  }
  report.compositions = 2 * report.elements_scanned;
  return report;
}

}  // namespace lps
