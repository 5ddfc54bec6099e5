#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cycleforge {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the single partition of 0. Parts are cycle lengths throughout.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }

  // CLI text form: comma-separated positive integers in any order,
  // e.g. "2,3,3" -> (3,3,2).
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      const std::string piece = text.substr(pos, next - pos);
      if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad partition '" + text + "': expected comma-separated positive integers");
      long v = std::stol(piece);
      if (v < 1 || v > 1'000'000)
        throw std::invalid_argument("bad partition part '" + piece + "'");
      parts.push_back(static_cast<int>(v));
      pos = next + 1;
    }
    if (parts.empty()) throw std::invalid_argument("empty partition string");
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Multiplicity of each distinct part, ascending by part.
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  friend bool operator==(const Partition& a, const Partition& b) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n in reverse-lexicographic order, starting at (n).
// n = 0 yields the single empty partition.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  if (n == 0) return {Partition()};
  std::vector<Partition> out;
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(Partition(a));
    // Everything after the rightmost part > 1 is a run of ones.
    int k = static_cast<int>(a.size()) - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == 1) --k;
    if (k < 0) break;
    const int ones = static_cast<int>(a.size()) - 1 - k;
    const int v = a[static_cast<std::size_t>(k)] - 1;
    int rest = a[static_cast<std::size_t>(k)] + ones;
    a.resize(static_cast<std::size_t>(k));
    while (rest > 0) {
      const int piece = std::min(v, rest);
      a.push_back(piece);
      rest -= piece;
    }
  }
  return out;
}

// z_lambda = prod_i i^{m_i} m_i! over part multiplicities; the centralizer
// order of the class with cycle type lambda.
inline Integer z_of(const Partition& lambda) {
  Integer z = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    for (int j = 0; j < mult; ++j) z *= part;
    z *= factorial(mult);
  }
  return z;
}

// n! / z_lambda, the number of permutations with cycle type lambda.
inline Integer class_size(const Partition& lambda) {
  const Integer nf = factorial(lambda.n());
  const Integer z = z_of(lambda);
  Integer size = nf / z;
  if (size * z != nf) throw std::logic_error("class size " + lambda.to_string() + ": z does not divide n!");
  return size;
}

}  // namespace cycleforge
