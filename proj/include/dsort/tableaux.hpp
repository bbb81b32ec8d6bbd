#pragma once

// Integer partitions, hook lengths, standard Young tableaux and
// Robinson-Schensted row insertion.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsort/exact.hpp"
#include "dsort/permcore.hpp"

namespace dsort {

class Partition {
 public:
  Partition() = default;
  // Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  // Sum of parts.
  std::size_t size() const { return n_; }
  // Number of parts.
  std::size_t length() const { return parts_.size(); }
  std::size_t first_row() const { return parts_.empty() ? 0 : parts_.front(); }
  std::size_t first_column() const { return parts_.size(); }
  // 1-based box test.
  bool contains(std::size_t row, std::size_t col) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
};

std::string to_string(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// Steps through the partitions of n in reverse lexicographic order of parts,
// starting at (n) and ending at (1,...,1). n = 0 yields the empty partition once.
class PartitionWalker {
 public:
  explicit PartitionWalker(std::size_t n);

  bool done() const { return done_; }
  std::span<const std::size_t> parts() const { return {parts_.data(), len_}; }
  void advance();

 private:
  std::vector<std::size_t> parts_;
  std::size_t len_ = 0;
  bool done_ = false;
};

std::vector<Partition> partitions(std::size_t n);

// Partition function p(n) via Euler's pentagonal recurrence.
BigInt partition_count(std::size_t n);

// Arm + leg + 1 for the box at (row, col), 1-based. Throws BoxOutsideShape.
std::size_t hook_length(const Partition& lambda, std::size_t row, std::size_t col);

// Number of standard Young tableaux of shape lambda, n! / prod of hooks.
BigInt syt_count(const Partition& lambda);

struct StandardTableau {
  std::vector<std::vector<std::size_t>> rows;

  // Throws InvalidPartition when row lengths are not a partition.
  Partition shape() const;
  bool is_standard() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

inline constexpr std::size_t kSytEnumerationBound = 12;

// All standard tableaux of shape lambda; throws SizeLimitExceeded above bound.
std::vector<StandardTableau> syt_enumerate(const Partition& lambda,
                                           std::size_t bound = kSytEnumerationBound);

struct RskResult {
  StandardTableau insertion;
  StandardTableau recording;
  Partition shape;
};

// Row insertion: each value bumps the smallest entry strictly greater than it.
RskResult rsk_shape(const Permutation& p);

}  // namespace dsort
