#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"

namespace rectchar {

inline constexpr int kDefaultEnumerationCap = 10;

/// A bijection of {1..k}, stored in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  /// One-line notation with 1-based images; throws if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  /// Builds from disjoint cycles on {1..k}; unlisted points are fixed.
  static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1 2 3)(4)" on {1..k}.
  static Permutation parse_cycles(int k, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }

  /// w(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;

  friend struct PermutationAccess;
};

/// Mutable access for the in-place enumerators below.
struct PermutationAccess {
  static std::vector<int>& images(Permutation& w) { return w.images_; }
};

/// (u v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

Permutation inverse(const Permutation& w);

int cycle_count(const Permutation& w);
Partition cycle_type(const Permutation& w);

/// The consecutive-block representative (1..mu_1)(mu_1+1..mu_1+mu_2)...
Permutation canonical_permutation(const Partition& cycle_type);

/// z_mu = prod_i i^{m_i} m_i!.
Integer centralizer_order(const Partition& cycle_type);

/// Cycle notation including fixed points, e.g. "(1 2)(3)".
std::string to_cycle_notation(const Permutation& w);

inline void check_enumeration_cap(int k, int cap) {
  if (k < 0) throw std::invalid_argument("negative permutation degree");
  if (k > cap) {
    throw std::out_of_range("enumeration of S_" + std::to_string(k) + " exceeds the cap k <= " +
                            std::to_string(cap));
  }
}

/// Visits every permutation of {1..k} in lexicographic order of one-line
/// notation. The reference passed to `visit` is only valid during the call.
template <class F>
void for_each_permutation(int k, F&& visit, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(k, cap);
  Permutation w = Permutation::identity(k);
  do {
    visit(static_cast<const Permutation&>(w));
  } while (std::next_permutation(PermutationAccess::images(w).begin(), PermutationAccess::images(w).end()));
}

/// The lexicographic block of permutations with w(1) = first. The blocks for
/// first = 1..k partition S_k, which is how enumeration is sharded.
template <class F>
void for_each_permutation_with_first(int k, int first, F&& visit, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(k, cap);
  if (first < 1 || first > k) throw std::invalid_argument("first image out of range");
  Permutation w = Permutation::identity(k);
  std::vector<int>& images = PermutationAccess::images(w);
  std::rotate(images.begin(), images.begin() + (first - 1), images.begin() + first);
  do {
    visit(static_cast<const Permutation&>(w));
  } while (std::next_permutation(images.begin() + 1, images.end()));
}

/// All k! permutations in lexicographic order.
std::vector<Permutation> enumerate_sym(int k, int cap = kDefaultEnumerationCap);

}  // namespace rectchar
