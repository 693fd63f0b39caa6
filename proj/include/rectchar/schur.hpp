#pragma once

#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"

namespace rectchar {

/// s_lambda(1^p) = prod over cells (p + c(u)) / h(u). Polynomial in p, so any
/// integer p is accepted.
Rational schur_principal(const Partition& shape, const Integer& p);

/// s_lambda(1^{-q}) = prod over cells (-q + c(u)) / h(u).
Rational schur_negative(const Partition& shape, const Integer& q);

/// H_{p x q} == (-1)^{|lambda|} H_lambda H_{complement} s_lambda(1^p) s_lambda(1^{-q}).
bool lemma_check(const Partition& shape, int p, int q);

/// Hooks of SQ(lambda) equal hooks(p x q) union hooks(lambda) as multisets.
bool sq_hook_multiset_check(const Partition& shape, int p, int q);

/// prod hooks(SQ(lambda)) == H_{complement} prod_{u in lambda} (p + c(u))
/// prod_{v in lambda'} (q + c(v)).
bool sq_hook_product_check(const Partition& shape, int p, int q);

}  // namespace rectchar
