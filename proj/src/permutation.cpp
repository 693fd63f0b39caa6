#include "rectchar/permutation.hpp"

#include <cctype>
#include <map>

namespace rectchar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 1 || image > degree() || seen[static_cast<std::size_t>(image - 1)]) {
      throw std::invalid_argument("one-line notation is not a bijection of {1..k}");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

Permutation Permutation::identity(int k) {
  if (k < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  Permutation w;
  w.images_ = std::move(images);
  return w;
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int point = cycle[i];
      if (point < 1 || point > k || used[static_cast<std::size_t>(point - 1)]) {
        throw std::invalid_argument("cycles are not disjoint subsets of {1..k}");
      }
      used[static_cast<std::size_t>(point - 1)] = true;
      images[static_cast<std::size_t>(point - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(int k, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (current != nullptr) throw std::invalid_argument("nested '(' in cycle notation");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (current == nullptr) throw std::invalid_argument("unbalanced ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (current == nullptr) throw std::invalid_argument("point outside a cycle");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      current->push_back(value);
    } else if (c == ' ' || c == ',') {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character in cycle notation");
    }
  }
  if (current != nullptr) throw std::invalid_argument("unterminated cycle");
  return from_cycles(k, cycles);
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(u.degree()));
  for (int i = 1; i <= u.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> images(static_cast<std::size_t>(w.degree()));
  for (int i = 1; i <= w.degree(); ++i) images[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(std::move(images));
}

namespace {

std::vector<int> cycle_lengths(const Permutation& w) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<std::size_t>(w.degree()), false);
  for (int start = 1; start <= w.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int length = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = w(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return lengths;
}

}  // namespace

int cycle_count(const Permutation& w) { return static_cast<int>(cycle_lengths(w).size()); }

Partition cycle_type(const Permutation& w) {
  auto lengths = cycle_lengths(w);
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Permutation canonical_permutation(const Partition& cycle_type) {
  std::vector<int> images(static_cast<std::size_t>(cycle_type.size()));
  int start = 1;
  for (int length : cycle_type.parts()) {
    for (int j = 0; j < length; ++j) {
      images[static_cast<std::size_t>(start + j - 1)] = start + (j + 1) % length;
    }
    start += length;
  }
  return Permutation(std::move(images));
}

Integer centralizer_order(const Partition& cycle_type) {
  std::map<int, long> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  Integer z = 1;
  for (const auto& [part, count] : multiplicity) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(count));
    z *= power * factorial(count);
  }
  return z;
}

std::string to_cycle_notation(const Permutation& w) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(w.degree()), false);
  for (int start = 1; start <= w.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    out += '(';
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = w(i)) {
      if (i != start) out += ' ';
      out += std::to_string(i);
      seen[static_cast<std::size_t>(i - 1)] = true;
    }
    out += ')';
  }
  return out;
}

std::vector<Permutation> enumerate_sym(int k, int cap) {
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& w) { out.push_back(w); }, cap);
  return out;
}

}  // namespace rectchar
