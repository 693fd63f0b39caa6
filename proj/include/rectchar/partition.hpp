#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rectchar/numeric.hpp"

namespace rectchar {

/// A square of a diagram in English notation: rows grow downward, columns
/// grow to the right, both 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  auto operator<=>(const Cell&) const = default;
};

/// Integer partition with weakly decreasing positive parts. Trailing zeros
/// passed to the constructor are dropped, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// p parts all equal to q (the p x q rectangle).
  static Partition rectangle(int p, int q);

  /// Parses "4,3,1"; "-" or "" is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// lambda_i for 1-based i, 0 past the last part.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  bool contains(Cell u) const { return u.row >= 1 && u.col >= 1 && u.col <= row(u.row); }
  bool fits_in_box(int p, int q) const { return length() <= p && largest_part() <= q; }
  bool is_rectangle() const { return !parts_.empty() && parts_.front() == parts_.back(); }

  /// Comma-separated parts, "-" for the empty partition.
  std::string to_string() const;

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& shape);

int hook_length(const Partition& shape, Cell u);
inline int content(Cell u) { return u.col - u.row; }

/// H_lambda, the product of all hook lengths (1 for the empty partition).
Integer hook_product(const Partition& shape);

/// f^lambda by the hook length formula.
Integer syt_count(const Partition& shape);

/// 180-degree complement of shape inside the p x q box.
Partition complement(const Partition& shape, int p, int q);

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// All partitions whose diagram fits in the p x q box.
std::vector<Partition> partitions_in_box(int p, int q);

/// Partitions of n that fit in the p x q box.
std::vector<Partition> partitions_in_box(int p, int q, int n);

/// Partition formed by appending `count` parts equal to 1.
Partition with_ones(const Partition& shape, int count);

using CellSet = std::set<Cell>;

CellSet diagram(const Partition& shape);

/// The skew diagram SQ(lambda). The block of lambda rotated by 180 degrees is
/// cut from the lower right corner of the p x q box; one copy of it is glued
/// on top of the box, flush with column q, and one copy to the left of the
/// box, flush with row p. Coordinates are then shifted down by l(lambda) and
/// right by lambda_1 so every cell has row, col >= 1.
CellSet sq_shape(const Partition& shape, int p, int q);

/// True when every row and column of `cells` is a contiguous run and the row
/// intervals move weakly left going down (a skew diagram).
bool is_skew_diagram(const CellSet& cells);

/// Hook lengths (arm + leg + 1, counted inside the set) sorted ascending.
/// Throws std::invalid_argument if `cells` is not a skew diagram.
std::vector<int> cellset_hooks(const CellSet& cells);

/// Sorted multiset union.
std::vector<int> multiset_union(std::span<const int> a, std::span<const int> b);

}  // namespace rectchar
