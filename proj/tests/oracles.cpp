#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rectchar/permutation.hpp"

namespace oracle {

Integer syt_count(const Partition& shape) {
  static std::map<std::vector<int>, Integer> memo;
  if (shape.size() <= 1) return Integer(1);
  const std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  Integer total(0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
    if (!corner) continue;
    std::vector<int> smaller = parts;
    --smaller[i];
    total += oracle::syt_count(Partition(smaller));
  }
  memo.emplace(parts, total);
  return total;
}

Integer ssyt_count(const Partition& shape, int p) {
  const std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  std::vector<std::vector<int>> filling;
  for (int len : parts) filling.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  Integer count(0);
  std::function<void(std::size_t)> fill = [&](std::size_t index) {
    if (index == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[index];
    int low = 1;
    if (c > 0) low = std::max(low, filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) low = std::max(low, filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = low; v <= p; ++v) {
      filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      fill(index + 1);
    }
  };
  fill(0);
  return count;
}

namespace {

// Ways to send each part (from index i on) to one of the variables so that
// variable j receives exactly remaining[j]: [x^remaining] of a product of
// power sums.
Integer assignments(std::span<const int> parts, std::size_t i, std::vector<int>& remaining,
                    std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
  if (i == parts.size()) {
    return std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; }) ? Integer(1) : Integer(0);
  }
  const auto key = std::make_pair(i, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total(0);
  for (std::size_t j = 0; j < remaining.size(); ++j) {
    if (remaining[j] < parts[i]) continue;
    remaining[j] -= parts[i];
    total += assignments(parts, i + 1, remaining, memo);
    remaining[j] += parts[i];
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer frobenius_character(const Partition& shape, const Partition& type) {
  if (shape.size() != type.size()) return Integer(0);
  const int r = std::max(1, shape.length());
  // [x^{lambda + delta}] a_delta p_type, expanding a_delta = sum sgn(s) x^{s(delta)}.
  std::vector<int> sigma(static_cast<std::size_t>(r));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  Integer total(0);
  do {
    std::vector<int> remaining(static_cast<std::size_t>(r));
    bool feasible = true;
    for (int i = 0; i < r; ++i) {
      const int delta_i = r - 1 - i;
      const int moved = r - 1 - sigma[static_cast<std::size_t>(i)];
      remaining[static_cast<std::size_t>(i)] = shape.row(i + 1) + delta_i - moved;
      feasible = feasible && remaining[static_cast<std::size_t>(i)] >= 0;
    }
    if (!feasible) continue;
    int inversions = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) inversions += sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)];
    }
    const Integer ways = assignments(type.parts(), 0, remaining, memo);
    total += inversions % 2 == 0 ? ways : Integer(-ways);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Rational normalized_character(const Partition& shape, const Partition& mu) {
  const int n = shape.size();
  const int k = mu.size();
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  parts.insert(parts.end(), static_cast<std::size_t>(n - k), 1);
  Integer falling(1);
  for (int j = 0; j < k; ++j) falling *= n - j;
  Rational value(falling * frobenius_character(shape, Partition(parts)), oracle::syt_count(shape));
  value.canonicalize();
  return value;
}

std::vector<std::vector<Integer>> factorization_table(const rectchar::Permutation& w) {
  const int k = w.degree();
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(k + 1),
                                          std::vector<Integer>(static_cast<std::size_t>(k + 1), Integer(0)));
  const auto all = rectchar::enumerate_sym(k);
  for (const auto& u : all) {
    for (const auto& v : all) {
      if (rectchar::compose(u, v) == w) {
        ++table[static_cast<std::size_t>(rectchar::cycle_count(u))][static_cast<std::size_t>(rectchar::cycle_count(v))];
      }
    }
  }
  return table;
}

std::vector<Integer> catalan(int count) {
  std::vector<Integer> c{Integer(1)};
  for (int n = 0; n < count; ++n) {
    Integer next(0);
    for (int i = 0; i <= n; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
    c.push_back(next);
  }
  return c;
}

std::vector<Integer> schroder(int count) {
  std::vector<Integer> r{Integer(1)};
  for (int n = 1; n <= count; ++n) {
    Integer next = r[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k < n; ++k) next += r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - 1 - k)];
    r.push_back(next);
  }
  return r;
}

}  // namespace oracle
