#pragma once

/// @file element_set.hpp
/// @brief Canonically ordered element storage with O(1) membership, plus the
/// one-element-per-line text format shared by files and the CLI.
///
/// An ElementSet stores transformations of one fixed n in canonical
/// (lexicographic) order.  The ordering is part of the contract: enumeration
/// output, witness scans and report listings all follow it.  Membership is
/// answered by an open-addressing table over the packed keys; the sorted key
/// array doubles as the rank index.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lps/transformation.hpp"

namespace lps {
namespace detail {

/// Open-addressing set of packed keys (linear probing, power-of-two table).
/// Build once, query often; tuned for the closure-precondition check where
/// every probe is a hit.
class FlatKeySet {
 public:
  void build(const std::vector<std::uint64_t>& keys) {
    std::size_t cap = 16;
    while (cap < keys.size() * 2) {
      cap <<= 1;
    }
    table_.assign(cap, kEmpty);
    mask_ = cap - 1;
    for (std::uint64_t k : keys) {
      std::size_t i = static_cast<std::size_t>(mix(k)) & mask_;
      while (table_[i] != kEmpty) {
        i = (i + 1) & mask_;
      }
      table_[i] = k;
    }
  }

  bool contains(std::uint64_t k) const {
    if (table_.empty()) {
      return false;
    }
    std::size_t i = static_cast<std::size_t>(mix(k)) & mask_;
    while (true) {
      std::uint64_t v = table_[i];
      if (v == k) {
        return true;
      }
      if (v == kEmpty) {
        return false;
      }
      i = (i + 1) & mask_;
    }
  }

 private:
  // splitmix64 finalizer; keys are nibble-packed and need the stirring.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // All-ones is unreachable: a packed key never has nibble 15 (images are
  // 0-based and bounded by max_chain - 1 = 11).
  static constexpr std::uint64_t kEmpty = ~0ull;

  std::vector<std::uint64_t> table_;
  std::size_t mask_ = 0;
};

}  // namespace detail

class ElementSet {
 public:
  ElementSet() = default;

  /// Sorts, deduplicates and validates that all elements share one n.
  explicit ElementSet(std::vector<Transformation> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    init(std::move(elems), /*trusted=*/false);
  }

  /// Adopts an already canonical (sorted, duplicate-free, same-n) vector.
  static ElementSet from_sorted_unique(std::vector<Transformation> elems) {
    ElementSet s;
    s.init(std::move(elems), /*trusted=*/true);
    return s;
  }

  /// Chain size of the elements; 0 when empty.
  int n() const { return n_; }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  const Transformation& operator[](std::size_t i) const { return elems_[i]; }

  std::vector<Transformation>::const_iterator begin() const {
    return elems_.begin();
  }
  std::vector<Transformation>::const_iterator end() const {
    return elems_.end();
  }

  bool contains(const Transformation& t) const {
    return t.n() == n_ && index_.contains(t.key());
  }

  /// Canonical rank of t, or -1 when absent.
  std::ptrdiff_t index_of(const Transformation& t) const {
    if (t.n() != n_) {
      return -1;
    }
    auto it = std::lower_bound(keys_.begin(), keys_.end(), t.key());
    if (it == keys_.end() || *it != t.key()) {
      return -1;
    }
    return it - keys_.begin();
  }

  /// Fast membership by packed key (same-n assumed; used by hot loops).
  bool contains_key(std::uint64_t k) const { return index_.contains(k); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.keys_ == b.keys_;
  }

 private:
  void init(std::vector<Transformation> elems, bool trusted) {
    elems_ = std::move(elems);
    keys_.clear();
    keys_.reserve(elems_.size());
    n_ = elems_.empty() ? 0 : elems_.front().n();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i].n() != n_) {
        throw error("ElementSet: mixed chain sizes " + std::to_string(n_) +
                    " and " + std::to_string(elems_[i].n()));
      }
      keys_.push_back(elems_[i].key());
    }
    if (trusted) {
      for (std::size_t i = 1; i < keys_.size(); ++i) {
        if (keys_[i - 1] >= keys_[i]) {
          throw error("ElementSet: input is not in strict canonical order");
        }
      }
    }
    index_.build(keys_);
  }

  int n_ = 0;
  std::vector<Transformation> elems_;
  std::vector<std::uint64_t> keys_;
  detail::FlatKeySet index_;
};

/// Reads the element text format: one transformation per line, 1-based images
/// separated by spaces; '#' starts a comment line; blank lines are ignored.
inline std::vector<Transformation> read_elements(std::istream& in) {
  std::vector<Transformation> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    try {
      out.push_back(parse_text(line));
    } catch (const error& e) {
      throw error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

/// Writes the element text format; a non-empty header becomes a '#' line.
inline void write_elements(std::ostream& out, const ElementSet& s,
                           const std::string& header) {
  if (!header.empty()) {
    out << "# " << header << '\n';
  }
  for (const Transformation& t : s) {
    out << format_text(t) << '\n';
  }
}

}  // namespace lps
