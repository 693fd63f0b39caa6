#pragma once

#include <span>
#include <vector>

#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"

namespace rectchar {

/// One way of removing a border strip (rim hook) from a straight shape.
struct BorderStripRemoval {
  Partition source;
  int length = 0;
  Partition result;
  int height = 0;  // rows spanned minus one
};

/// Every border strip of `length` cells whose removal leaves a partition.
std::vector<BorderStripRemoval> border_strip_removals(const Partition& shape, int length);

/// chi^shape at the class of `cycle_type` (Murnaghan-Nakayama).
Integer mn_character(const Partition& shape, const Partition& cycle_type);

/// Same, but strips are removed in the order the cycle lengths are listed.
/// The value does not depend on the order; this overload exists to test that.
Integer mn_character(const Partition& shape, std::span<const int> cycle_lengths);

/// (n)_k chi^shape(mu, 1^{n-k}) / f^shape for mu a partition of k <= n.
Rational normalized_character(const Partition& shape, const Partition& mu);

/// sum over lambda of k inside p x q of chi^lambda(mu) f^{complement(lambda)},
/// which equals chi^{p x q}(mu, 1^{pq-k}).
Integer rect_character_sum(int p, int q, const Partition& mu);

/// H_{p x q} sum over lambda of k inside p x q of chi^lambda(mu) / H_{complement(lambda)}.
Rational rect_normalized_via_complements(int p, int q, const Partition& mu);

}  // namespace rectchar
