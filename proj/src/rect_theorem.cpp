#include "rectchar/rect_theorem.hpp"

#include <stdexcept>

#include "rectchar/character.hpp"
#include "rectchar/parallel.hpp"
#include "rectchar/schur.hpp"

namespace rectchar {

namespace {

// Cycles of the 1-based one-line word `images`, using `seen` as scratch.
int count_cycles(const std::vector<int>& images, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  int cycles = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images[i] - 1)) seen[i] = 1;
  }
  return cycles;
}

}  // namespace

FactorizationCounts factorization_counts(const Permutation& w, int cap) {
  const int k = w.degree();
  check_enumeration_cap(k, cap);
  const std::size_t side = static_cast<std::size_t>(k + 1);
  FactorizationCounts result{k, std::vector<std::uint64_t>(side * side, 0)};
  if (k == 0) {
    result.table[0] = 1;
    return result;
  }

  std::vector<std::vector<std::uint64_t>> shards(static_cast<std::size_t>(k));
  parallel_for(static_cast<std::size_t>(k), [&](std::size_t shard) {
    std::vector<std::uint64_t> local(side * side, 0);
    std::vector<int> u_inverse(static_cast<std::size_t>(k));
    std::vector<int> v(static_cast<std::size_t>(k));
    std::vector<char> seen(static_cast<std::size_t>(k));
    const auto& target = w.images();
    for_each_permutation_with_first(
        k, static_cast<int>(shard) + 1,
        [&](const Permutation& u) {
          const auto& image = u.images();
          for (int i = 0; i < k; ++i) u_inverse[static_cast<std::size_t>(image[static_cast<std::size_t>(i)] - 1)] = i + 1;
          for (int i = 0; i < k; ++i) {
            v[static_cast<std::size_t>(i)] = u_inverse[static_cast<std::size_t>(target[static_cast<std::size_t>(i)] - 1)];
          }
          const int a = count_cycles(image, seen);
          const int b = count_cycles(v, seen);
          ++local[static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)];
        },
        cap);
    shards[shard] = std::move(local);
  });
  for (const auto& local : shards) {
    for (std::size_t i = 0; i < local.size(); ++i) result.table[i] += local[i];
  }
  return result;
}

BivariatePoly poly_from_counts(const FactorizationCounts& counts) {
  const int k = counts.degree;
  BivariatePoly out(2);
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      const std::uint64_t c = counts.count(a, b);
      if (c == 0) continue;
      Integer coefficient;
      mpz_set_ui(coefficient.get_mpz_t(), static_cast<unsigned long>(c));
      if ((k + b) % 2 != 0) coefficient = -coefficient;
      Exponents e{};
      e[0] = static_cast<std::uint8_t>(a);
      e[1] = static_cast<std::uint8_t>(b);
      out += BivariatePoly::monomial(2, e, coefficient);
    }
  }
  return out;
}

BivariatePoly factorization_poly(const Permutation& w, int cap) { return poly_from_counts(factorization_counts(w, cap)); }

BivariatePoly factorization_poly(const Partition& mu, int cap) {
  check_enumeration_cap(mu.size(), cap);
  return factorization_poly(canonical_permutation(mu), cap);
}

bool theorem1_check(int p, int q, const Partition& mu, int cap) {
  if (p < 1 || q < 1) throw std::invalid_argument("rectangle sides must be positive");
  if (mu.size() > p * q) throw std::invalid_argument("|mu| exceeds pq");
  const std::vector<Integer> point{Integer(p), Integer(q)};
  const Integer poly_value = factorization_poly(mu, cap).evaluate<Integer>(point);
  return normalized_character(Partition::rectangle(p, q), mu) == Rational(poly_value);
}

Rational schur_side(int p, int q, const Partition& mu) {
  const int k = mu.size();
  Rational total(0);
  for (const Partition& lambda : partitions_of(k)) {
    total += Rational(hook_product(lambda)) * schur_principal(lambda, Integer(p)) * schur_negative(lambda, Integer(q)) *
             Rational(mn_character(lambda, mu));
  }
  return k % 2 == 0 ? total : Rational(-total);
}

bool sss_identity_check(int p, int q, const Partition& mu, int cap) {
  const std::vector<Integer> point{Integer(p), Integer(q)};
  const Integer poly_value = factorization_poly(mu, cap).evaluate<Integer>(point);
  return schur_side(p, q, mu) == Rational(poly_value);
}

namespace {

FactorizationCounts long_cycle_counts(int k, int cap) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  check_enumeration_cap(k, cap);
  return factorization_counts(canonical_permutation(Partition({k})), cap);
}

}  // namespace

Integer catalan_pair_count(int k, int cap) {
  const FactorizationCounts counts = long_cycle_counts(k, cap);
  Integer total(0);
  for (int a = 1; a <= k; ++a) total += static_cast<unsigned long>(counts.count(a, k + 1 - a));
  return total;
}

std::map<int, Integer> narayana_refinement(int k, int cap) {
  const FactorizationCounts counts = long_cycle_counts(k, cap);
  std::map<int, Integer> out;
  for (int i = 1; i <= k; ++i) out[i] = static_cast<unsigned long>(counts.count(i, k + 1 - i));
  return out;
}

}  // namespace rectchar
