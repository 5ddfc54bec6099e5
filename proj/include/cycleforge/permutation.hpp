#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"

namespace cycleforge {

// Raised when a brute-force enumeration is asked to exceed its cap.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bijection of {1,...,n}. image_of(i) is where i goes; storage is an
// image table indexed from 0, but the whole public surface is 1-indexed.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("image table is not a bijection of {1..n}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("identity: negative size");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int image_of(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(images_[i]);
    }
    return out + "]";
  }

 private:
  std::vector<int> images_;
};

// Composition uv: apply v first, then u.
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("compose: size mismatch " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  std::vector<int> img(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) img[static_cast<std::size_t>(i - 1)] = u.image_of(v.image_of(i));
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> img(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) img[static_cast<std::size_t>(w.image_of(i) - 1)] = i;
  return Permutation(std::move(img));
}

namespace detail {

// Cycle lengths of an image table (1-indexed values), unsorted.
inline std::vector<int> cycle_lengths(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = images[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace detail

// Cycle type including fixed points, as a partition of n.
inline Partition cycle_type(const Permutation& w) {
  return Partition(detail::cycle_lengths(w.images()));
}

// Number of cycles (fixed points count).
inline int kappa(const Permutation& w) {
  return static_cast<int>(detail::cycle_lengths(w.images()).size());
}

// True when 1,...,k all lie in one cycle of w.
inline bool same_cycle_prefix(const Permutation& w, int k) {
  if (k < 1 || k > w.size()) throw std::invalid_argument("same_cycle_prefix: k out of range");
  int found = 1;
  int j = w.image_of(1);
  while (j != 1) {
    if (j <= k) ++found;
    j = w.image_of(j);
  }
  return found == k;
}

// The permutation whose cycles are consecutive blocks of {1,...,n} in the
// order of mu's parts: (3,3,2) gives (1,2,3)(4,5,6)(7,8). For mu = (n) this
// is the canonical n-cycle 1 -> 2 -> ... -> n -> 1.
inline Permutation canonical_of_type(const Partition& mu) {
  std::vector<int> img(static_cast<std::size_t>(mu.n()));
  int base = 1;
  for (int part : mu.parts()) {
    for (int i = 0; i < part - 1; ++i) img[static_cast<std::size_t>(base + i - 1)] = base + i + 1;
    img[static_cast<std::size_t>(base + part - 2)] = base;
    base += part;
  }
  return Permutation(std::move(img));
}

inline constexpr int kDefaultClassEnumerationCap = 9;

/*
 * Every permutation of cycle type lambda, each exactly once, in a fixed
 * deterministic order.
 *
 * Generation is direct: the smallest unplaced element anchors the next
 * cycle, its length runs over the distinct part sizes still owed, and the
 * rest of the cycle is an ordered tuple of unplaced elements taken in
 * lexicographic order. Anchoring at the minimum kills both sources of
 * double counting (rotations within a cycle and swaps of equal-length
 * cycles), so the count comes out to exactly n!/z_lambda.
 */
inline std::vector<Permutation> enumerate_class(const Partition& lambda,
                                                int cap = kDefaultClassEnumerationCap) {
  const int n = lambda.n();
  if (n > cap)
    throw cap_exceeded("enumerate_class: n = " + std::to_string(n) +
                       " exceeds the brute-force cap " + std::to_string(cap));
  std::vector<Permutation> out;
  if (n == 0) {
    out.push_back(Permutation::identity(0));
    return out;
  }

  auto mults = lambda.multiplicities();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  int placed = 0;

  std::function<void()> place_cycle = [&] {
    if (placed == n) {
      out.emplace_back(Permutation(img));
      return;
    }
    int anchor = 1;
    while (used[static_cast<std::size_t>(anchor)]) ++anchor;
    used[static_cast<std::size_t>(anchor)] = true;
    ++placed;

    for (auto& [len, mult] : mults) {
      if (mult == 0) continue;
      --mult;
      // Ordered (len-1)-tuple of successors after the anchor.
      std::function<void(int, int)> extend = [&](int prev, int depth) {
        if (depth == len - 1) {
          img[static_cast<std::size_t>(prev - 1)] = anchor;
          place_cycle();
          return;
        }
        for (int c = anchor + 1; c <= n; ++c) {
          if (used[static_cast<std::size_t>(c)]) continue;
          used[static_cast<std::size_t>(c)] = true;
          ++placed;
          img[static_cast<std::size_t>(prev - 1)] = c;
          extend(c, depth + 1);
          used[static_cast<std::size_t>(c)] = false;
          --placed;
        }
      };
      extend(anchor, 0);
      ++mult;
    }

    used[static_cast<std::size_t>(anchor)] = false;
    --placed;
  };

  place_cycle();
  return out;
}

}  // namespace cycleforge
