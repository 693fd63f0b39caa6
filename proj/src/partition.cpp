#include "rectchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace rectchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::rectangle(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
  if (p == 0 || q == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(p), q));
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view token = text.substr(start, stop - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    start = stop + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& shape) {
  std::vector<int> parts(static_cast<std::size_t>(shape.largest_part()), 0);
  for (int part : shape.parts()) {
    for (int j = 0; j < part; ++j) ++parts[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(parts));
}

int hook_length(const Partition& shape, Cell u) {
  if (!shape.contains(u)) {
    throw std::invalid_argument("cell (" + std::to_string(u.row) + "," + std::to_string(u.col) +
                                ") is outside " + shape.to_string());
  }
  int column_height = 0;
  while (shape.row(column_height + 1) >= u.col) ++column_height;
  return shape.row(u.row) + column_height - u.row - u.col + 1;
}

Integer hook_product(const Partition& shape) {
  const Partition transpose = conjugate(shape);
  Integer product = 1;
  for (int i = 1; i <= shape.length(); ++i) {
    for (int j = 1; j <= shape.row(i); ++j) product *= shape.row(i) + transpose.row(j) - i - j + 1;
  }
  return product;
}

Integer syt_count(const Partition& shape) { return factorial(shape.size()) / hook_product(shape); }

Partition complement(const Partition& shape, int p, int q) {
  if (!shape.fits_in_box(p, q)) {
    throw std::invalid_argument(shape.to_string() + " does not fit in the " + std::to_string(p) + "x" +
                                std::to_string(q) + " box");
  }
  std::vector<int> parts(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) parts[static_cast<std::size_t>(i - 1)] = q - shape.row(p + 1 - i);
  return Partition(std::move(parts));
}

namespace {

void partitions_bounded(int remaining, int max_part, int max_length, std::vector<int>& prefix,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_bounded(remaining - part, part, max_length - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_bounded(n, n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_in_box(int p, int q, int n) {
  std::vector<Partition> out;
  if (n < 0 || n > p * q) return out;
  std::vector<int> prefix;
  partitions_bounded(n, q, p, prefix, out);
  return out;
}

std::vector<Partition> partitions_in_box(int p, int q) {
  std::vector<Partition> out;
  for (int n = 0; n <= p * q; ++n) {
    auto level = partitions_in_box(p, q, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Partition with_ones(const Partition& shape, int count) {
  if (count < 0) throw std::invalid_argument("negative number of fixed points");
  std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  parts.insert(parts.end(), static_cast<std::size_t>(count), 1);
  return Partition(std::move(parts));
}

CellSet diagram(const Partition& shape) {
  CellSet cells;
  for (int i = 1; i <= shape.length(); ++i) {
    for (int j = 1; j <= shape.row(i); ++j) cells.insert({i, j});
  }
  return cells;
}

CellSet sq_shape(const Partition& shape, int p, int q) {
  if (!shape.fits_in_box(p, q)) {
    throw std::invalid_argument(shape.to_string() + " does not fit in the " + std::to_string(p) + "x" +
                                std::to_string(q) + " box");
  }
  const int row_shift = shape.length();
  const int col_shift = shape.largest_part();
  CellSet cells;
  for (int i = 1; i <= p; ++i) {
    // Row i keeps its first q - lambda_{p+1-i} cells; the rest is the corner block.
    const int kept = q - shape.row(p + 1 - i);
    for (int j = 1; j <= q; ++j) {
      if (j <= kept) {
        cells.insert({i + row_shift, j + col_shift});
      } else {
        cells.insert({i - p + row_shift, j + col_shift});
        cells.insert({i + row_shift, j - q + col_shift});
      }
    }
  }
  return cells;
}

bool is_skew_diagram(const CellSet& cells) {
  std::map<int, std::pair<int, int>> rows;  // row -> [first, last] column
  std::map<int, std::pair<int, int>> cols;
  std::map<int, int> row_counts;
  std::map<int, int> col_counts;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) return false;
    auto [rit, rnew] = rows.try_emplace(c.row, c.col, c.col);
    if (!rnew) {
      rit->second.first = std::min(rit->second.first, c.col);
      rit->second.second = std::max(rit->second.second, c.col);
    }
    auto [cit, cnew] = cols.try_emplace(c.col, c.row, c.row);
    if (!cnew) {
      cit->second.first = std::min(cit->second.first, c.row);
      cit->second.second = std::max(cit->second.second, c.row);
    }
    ++row_counts[c.row];
    ++col_counts[c.col];
  }
  for (const auto& [r, span] : rows) {
    if (span.second - span.first + 1 != row_counts[r]) return false;
  }
  for (const auto& [c, span] : cols) {
    if (span.second - span.first + 1 != col_counts[c]) return false;
  }
  const std::pair<int, int>* previous = nullptr;
  for (const auto& [row, span] : rows) {
    if (previous != nullptr) {
      if (span.first > previous->first || span.second > previous->second) return false;
    }
    previous = &span;
  }
  return true;
}

std::vector<int> cellset_hooks(const CellSet& cells) {
  if (!is_skew_diagram(cells)) throw std::invalid_argument("cell set is not a skew diagram");
  std::map<int, int> row_last;
  std::map<int, int> col_last;
  for (const Cell& c : cells) {
    row_last[c.row] = std::max(row_last[c.row], c.col);
    col_last[c.col] = std::max(col_last[c.col], c.row);
  }
  std::vector<int> hooks;
  hooks.reserve(cells.size());
  for (const Cell& c : cells) hooks.push_back((row_last[c.row] - c.col) + (col_last[c.col] - c.row) + 1);
  std::sort(hooks.begin(), hooks.end());
  return hooks;
}

std::vector<int> multiset_union(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace rectchar
