#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rectchar/multivar_poly.hpp"
#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"
#include "rectchar/permutation.hpp"

namespace rectchar {

/// Polynomial in (p, q); variable 0 is p and variable 1 is q.
using BivariatePoly = IntPoly;

/// Number of factorizations u v = w with kappa(u) = a and kappa(v) = b.
struct FactorizationCounts {
  int degree = 0;
  std::vector<std::uint64_t> table;  // row-major, (degree + 1) x (degree + 1)

  std::uint64_t count(int a, int b) const {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(degree + 1) + static_cast<std::size_t>(b)];
  }
};

/// Enumerates u over S_k with v = u^{-1} w. Shards by u(1) across
/// configured_threads(); the result does not depend on the thread count.
FactorizationCounts factorization_counts(const Permutation& w, int cap = kDefaultEnumerationCap);

/// (-1)^k sum_{a,b} count(a,b) p^a (-q)^b.
BivariatePoly poly_from_counts(const FactorizationCounts& counts);

/// (-1)^k sum over u v = w_mu of p^kappa(u) (-q)^kappa(v).
BivariatePoly factorization_poly(const Partition& mu, int cap = kDefaultEnumerationCap);
BivariatePoly factorization_poly(const Permutation& w, int cap = kDefaultEnumerationCap);

/// normalized_character(p x q, mu) == factorization_poly(mu)(p, q).
/// Throws std::invalid_argument if |mu| > pq.
bool theorem1_check(int p, int q, const Partition& mu, int cap = kDefaultEnumerationCap);

/// (-1)^k sum_{lambda |- k} H_lambda s_lambda(1^p) s_lambda(1^{-q}) chi^lambda(mu).
Rational schur_side(int p, int q, const Partition& mu);

/// schur_side(p, q, mu) == factorization_poly(mu)(p, q).
bool sss_identity_check(int p, int q, const Partition& mu, int cap = kDefaultEnumerationCap);

/// Pairs with u v = (1 2 ... k) and kappa(u) + kappa(v) = k + 1.
Integer catalan_pair_count(int k, int cap = kDefaultEnumerationCap);

/// i -> number of pairs with u v = (1 2 ... k), kappa(u) = i, kappa(v) = k + 1 - i.
std::map<int, Integer> narayana_refinement(int k, int cap = kDefaultEnumerationCap);

}  // namespace rectchar
