#pragma once

/// @file transformation.hpp
/// @brief Full transformations of the finite chain X_n = {1, ..., n}.
///
/// A transformation a is stored by its image sequence [1a, 2a, ..., na] and
/// composition is left-to-right: x(ab) = (xa)b.  The canonical order used
/// throughout the library is the lexicographic order on image sequences.
/// Points and images are 1-based at every public boundary; the internal
/// storage is 0-based and never visible.

#include <array>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lps {

/// Single exception type for the library.  Messages are written to be shown
/// to the user verbatim.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest supported chain size.  Guards the packed-key representation
/// (4 bits per image, 12 images in a 64-bit key) used for fast membership.
inline constexpr int max_chain = 12;

class Transformation {
 public:
  /// Empty sentinel (n = 0); not a valid transformation.
  Transformation() : n_(0), img_{} {}

  /// Builds a transformation from 1-based images.  Validates everything.
  static Transformation make(int n, const std::vector<int>& images) {
    if (n < 1 || n > max_chain) {
      throw error("make: n = " + std::to_string(n) +
                  " out of range; capacity is 1 <= n <= " +
                  std::to_string(max_chain));
    }
    if (static_cast<int>(images.size()) != n) {
      throw error("make: expected " + std::to_string(n) + " images, got " +
                  std::to_string(images.size()));
    }
    Transformation t;
    t.n_ = n;
    for (int i = 0; i < n; ++i) {
      if (images[i] < 1 || images[i] > n) {
        throw error("make: image " + std::to_string(images[i]) +
                    " at point " + std::to_string(i + 1) +
                    " out of range for n = " + std::to_string(n));
      }
      t.img_[i] = static_cast<std::uint8_t>(images[i] - 1);
    }
    return t;
  }

  /// Chain size.
  int n() const { return n_; }

  /// Applies the map to a 1-based point.
  int operator()(int x) const {
    if (x < 1 || x > n_) {
      throw error("apply: point " + std::to_string(x) +
                  " out of range for n = " + std::to_string(n_));
    }
    return img_[x - 1] + 1;
  }

  /// 0-based unchecked access for hot loops: raw(i) == (i+1)a - 1.
  std::uint8_t raw(int i) const { return img_[i]; }

  /// Packed key: image i in the (15 - i)-th nibble, so that numeric order on
  /// keys equals the canonical (lexicographic) order for a fixed n.  Keys are
  /// only comparable between transformations of the same n.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) {
      k |= static_cast<std::uint64_t>(img_[i]) << (4 * (15 - i));
    }
    return k;
  }

  /// Canonical order: by n, then lexicographically by images (the unused
  /// tail of img_ is always zero, so array comparison is exact).
  friend auto operator<=>(const Transformation&,
                          const Transformation&) = default;

  friend Transformation compose(const Transformation& a,
                                const Transformation& b);
  friend Transformation identity(int n);

 private:
  int n_;
  std::array<std::uint8_t, max_chain> img_;
};

/// Left-to-right composition: x(ab) = (xa)b.
inline Transformation compose(const Transformation& a,
                              const Transformation& b) {
  if (a.n() != b.n()) {
    throw error("compose: mismatched chain sizes " + std::to_string(a.n()) +
                " and " + std::to_string(b.n()));
  }
  Transformation r;
  r.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) {
    r.img_[i] = b.img_[a.img_[i]];
  }
  return r;
}

/// The identity map on X_n.
inline Transformation identity(int n) {
  if (n < 1 || n > max_chain) {
    throw error("identity: n = " + std::to_string(n) +
                " out of range; capacity is 1 <= n <= " +
                std::to_string(max_chain));
  }
  Transformation r;
  r.n_ = n;
  for (int i = 0; i < n; ++i) {
    r.img_[i] = static_cast<std::uint8_t>(i);
  }
  return r;
}

/// Sorted distinct images, 1-based.
inline std::vector<int> image_set(const Transformation& a) {
  std::array<bool, max_chain> seen{};
  for (int i = 0; i < a.n(); ++i) {
    seen[a.raw(i)] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < a.n(); ++v) {
    if (seen[v]) {
      out.push_back(v + 1);
    }
  }
  return out;
}

/// Ascending preimages of a 1-based point y.
inline std::vector<int> preimage(const Transformation& a, int y) {
  if (y < 1 || y > a.n()) {
    throw error("preimage: point " + std::to_string(y) +
                " out of range for n = " + std::to_string(a.n()));
  }
  std::vector<int> out;
  for (int i = 0; i < a.n(); ++i) {
    if (a.raw(i) == y - 1) {
      out.push_back(i + 1);
    }
  }
  return out;
}

/// Renders "1a 2a ... na" with 1-based images.
inline std::string format_text(const Transformation& a) {
  std::string out;
  for (int i = 0; i < a.n(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(a.raw(i) + 1);
  }
  return out;
}

/// Parses one whitespace-separated image sequence; n is the token count.
inline Transformation parse_text(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> images;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw error("parse_text: bad integer '" + tok + "'");
    }
    if (pos != tok.size()) {
      throw error("parse_text: bad integer '" + tok + "'");
    }
    images.push_back(v);
  }
  if (images.empty()) {
    throw error("parse_text: empty element text");
  }
  if (static_cast<int>(images.size()) > max_chain) {
    throw error("parse_text: element has " + std::to_string(images.size()) +
                " entries; capacity is n <= " + std::to_string(max_chain));
  }
  return Transformation::make(static_cast<int>(images.size()), images);
}

}  // namespace lps
