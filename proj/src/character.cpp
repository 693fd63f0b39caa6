#include "rectchar/character.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace rectchar {

namespace {

struct StripResult {
  std::vector<int> parts;
  int height;
};

// Rim hooks of size r correspond to beta-numbers b with b - r >= 0 free; the
// height is the number of beta-numbers jumped over.
std::vector<StripResult> remove_strips(std::span<const int> parts, int r) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;

  std::vector<StripResult> out;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    // beta is strictly decreasing, so the entries between `to` and `from` are contiguous.
    int height = 0;
    bool occupied = false;
    for (int j = i + 1; j < len; ++j) {
      const int b = beta[static_cast<std::size_t>(j)];
      if (b == to) {
        occupied = true;
        break;
      }
      if (b < to) break;
      ++height;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> result(parts.size());
    for (int j = 0; j < len; ++j) result[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
    while (!result.empty() && result.back() == 0) result.pop_back();
    out.push_back({std::move(result), height});
  }
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class MnEvaluator {
 public:
  explicit MnEvaluator(std::span<const int> cycles) : cycles_(cycles), ones_from_(cycles.size() + 1) {
    // ones_from_[i]: cycles[i..] are all fixed points.
    ones_from_[cycles.size()] = true;
    for (std::size_t i = cycles.size(); i-- > 0;) ones_from_[i] = ones_from_[i + 1] && cycles[i] == 1;
  }

  Integer evaluate(const std::vector<int>& parts, std::size_t index) {
    if (ones_from_[index]) return syt_count(Partition(parts));
    std::vector<int> key = parts;
    key.push_back(-static_cast<int>(index) - 1);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Integer total = 0;
    for (auto& strip : remove_strips(parts, cycles_[index])) {
      Integer value = evaluate(strip.parts, index + 1);
      if (strip.height % 2 == 0) {
        total += value;
      } else {
        total -= value;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::span<const int> cycles_;
  std::vector<bool> ones_from_;
  std::unordered_map<std::vector<int>, Integer, KeyHash> memo_;
};

}  // namespace

std::vector<BorderStripRemoval> border_strip_removals(const Partition& shape, int length) {
  if (length <= 0) throw std::invalid_argument("border strip length must be positive");
  std::vector<BorderStripRemoval> out;
  for (auto& strip : remove_strips(shape.parts(), length)) {
    out.push_back({shape, length, Partition(std::move(strip.parts)), strip.height});
  }
  return out;
}

Integer mn_character(const Partition& shape, std::span<const int> cycle_lengths) {
  long total = 0;
  for (int c : cycle_lengths) {
    if (c <= 0) throw std::invalid_argument("cycle lengths must be positive");
    total += c;
  }
  if (total != shape.size()) {
    throw std::invalid_argument("character of " + shape.to_string() + " evaluated at a class of size " +
                                std::to_string(total));
  }
  MnEvaluator evaluator(cycle_lengths);
  return evaluator.evaluate(std::vector<int>(shape.parts().begin(), shape.parts().end()), 0);
}

Integer mn_character(const Partition& shape, const Partition& cycle_type) {
  return mn_character(shape, cycle_type.parts());
}

Rational normalized_character(const Partition& shape, const Partition& mu) {
  const int n = shape.size();
  const int k = mu.size();
  if (k > n) {
    throw std::invalid_argument("cycle type " + mu.to_string() + " is larger than shape " + shape.to_string());
  }
  const Integer chi = mn_character(shape, with_ones(mu, n - k));
  return make_rational(falling_factorial(Integer(n), k) * chi, syt_count(shape));
}

Integer rect_character_sum(int p, int q, const Partition& mu) {
  if (mu.size() > p * q) throw std::invalid_argument("cycle type larger than the rectangle");
  Integer total = 0;
  for (const Partition& lambda : partitions_in_box(p, q, mu.size())) {
    total += mn_character(lambda, mu) * syt_count(complement(lambda, p, q));
  }
  return total;
}

Rational rect_normalized_via_complements(int p, int q, const Partition& mu) {
  if (mu.size() > p * q) throw std::invalid_argument("cycle type larger than the rectangle");
  Rational sum = 0;
  for (const Partition& lambda : partitions_in_box(p, q, mu.size())) {
    sum += make_rational(mn_character(lambda, mu), hook_product(complement(lambda, p, q)));
  }
  return sum * Rational(hook_product(Partition::rectangle(p, q)));
}

}  // namespace rectchar
