#include "symdist/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symdist {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  // Reverse lexicographic: the lexicographically larger part list sorts first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

Partition transpose(const Partition& p) {
  std::vector<int> columns;
  if (!p.empty()) {
    columns.assign(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
      for (int c = 0; c < part; ++c) ++columns[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(columns));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  // Generated in lexicographically decreasing order, which is canonical.
  return out;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(inner.length()); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

std::string format(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> values;
  if (text == "-" || text.empty()) return values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                  std::string(text) + "'");
    values.push_back(value);
    pos = comma + 1;
  }
  return values;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  return Partition(parse_int_list(text, "partition"));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw std::invalid_argument("skew shape: inner partition not contained in outer");
}

int SkewShape::row_length(int row) const noexcept {
  auto i = static_cast<std::size_t>(row - 1);
  return outer_[i] - inner_[i];
}

bool SkewShape::contains_box(int row, int col) const noexcept {
  if (row < 1 || col < 1) return false;
  auto i = static_cast<std::size_t>(row - 1);
  return col > inner_[i] && col <= outer_[i];
}

std::vector<Box> SkewShape::reading_order() const {
  std::vector<Box> boxes;
  for (int r = 1; r <= rows(); ++r) {
    auto i = static_cast<std::size_t>(r - 1);
    for (int c = outer_[i]; c > inner_[i]; --c) boxes.push_back({r, c});
  }
  return boxes;
}

std::vector<int> SkewShape::column_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(outer_[0]), 0);
  for (const Box& b : reading_order()) ++counts[static_cast<std::size_t>(b.col - 1)];
  return counts;
}

SkewShape horizontal_strip(const std::vector<int>& rows) {
  std::vector<int> outer(rows.size()), inner(rows.size());
  int offset = 0;
  for (std::size_t k = rows.size(); k-- > 0;) {
    if (rows[k] < 0) throw std::invalid_argument("horizontal_strip: negative row");
    inner[k] = offset;
    outer[k] = offset + rows[k];
    offset = outer[k];
  }
  return SkewShape(Partition::from_unsorted(outer), Partition::from_unsorted(inner));
}

std::string format(const SkewShape& s) {
  return format(s.outer()) + "/" + format(s.inner());
}

SkewShape parse_skew_shape(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text), Partition());
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

bool is_horizontal_strip(const SkewShape& s) {
  auto counts = s.column_counts();
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 1; });
}

bool is_even_horizontal_strip(const SkewShape& s) {
  if (!is_horizontal_strip(s)) return false;
  for (int r = 1; r <= s.rows(); ++r)
    if (s.row_length(r) % 2 != 0) return false;
  return true;
}

HVSplit hv_split(const SkewShape& s) {
  auto counts = s.column_counts();
  HVSplit split;
  split.horizontal_rows.assign(static_cast<std::size_t>(s.rows()), 0);
  for (const Box& b : s.reading_order()) {
    int c = counts[static_cast<std::size_t>(b.col - 1)];
    if (c >= 3)
      throw std::invalid_argument("hv_split: column " + std::to_string(b.col) + " of " +
                                  format(s) + " holds " + std::to_string(c) + " boxes");
    if (c == 1) {
      split.horizontal.push_back(b);
      ++split.horizontal_rows[static_cast<std::size_t>(b.row - 1)];
    } else {
      split.vertical.push_back(b);
    }
  }
  return split;
}

bool in_gamma2(const SkewShape& s) {
  if (s.size() % 2 != 0) return false;
  auto counts = s.column_counts();
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 2; });
}

bool in_gamma2_circle(const SkewShape& s) {
  if (!in_gamma2(s)) return false;
  auto split = hv_split(s);
  return std::all_of(split.horizontal_rows.begin(), split.horizontal_rows.end(),
                     [](int r) { return r % 2 == 0; });
}

int Tableau::twos() const noexcept {
  return static_cast<int>(std::count(entries.begin(), entries.end(), 2));
}

namespace {

// Depth-first fill in reading order. Filling right to left means the box to
// the right in the same row is already set; the box above (same column,
// previous row) is set as well.
template <typename Visit>
void fill_tableaux(const SkewShape& s, Visit&& visit) {
  auto order = s.reading_order();
  auto counts = s.column_counts();
  for (int c : counts)
    if (c > 2) throw std::invalid_argument("tableaux: shape " + format(s) +
                                           " has a column with more than two boxes");
  // value lookup by (row, col)
  int width = s.outer()[0];
  std::vector<int> grid(static_cast<std::size_t>(s.rows() * std::max(width, 1)), 0);
  auto at = [&](int r, int c) -> int& {
    return grid[static_cast<std::size_t>((r - 1) * width + (c - 1))];
  };
  std::vector<int> word;
  word.reserve(order.size());
  int ones = 0, twos = 0;
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == order.size()) {
      visit(word, twos);
      return;
    }
    const Box& b = order[k];
    for (int v = 1; v <= 2; ++v) {
      if (v == 2 && twos + 1 > ones) continue;  // lattice prefix condition
      if (s.contains_box(b.row, b.col + 1) && v > at(b.row, b.col + 1)) continue;
      if (s.contains_box(b.row - 1, b.col) && v <= at(b.row - 1, b.col)) continue;
      at(b.row, b.col) = v;
      word.push_back(v);
      (v == 1 ? ones : twos)++;
      step(k + 1);
      (v == 1 ? ones : twos)--;
      word.pop_back();
      at(b.row, b.col) = 0;
    }
  };
  step(0);
}

}  // namespace

std::vector<Tableau> lr_tableaux(const SkewShape& s) {
  std::vector<Tableau> out;
  fill_tableaux(s, [&](const std::vector<int>& word, int) { out.push_back({s, word}); });
  return out;
}

std::vector<std::uint64_t> lr_tab_counts(const SkewShape& s) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(s.size() / 2 + 1), 0);
  fill_tableaux(s, [&](const std::vector<int>&, int twos) {
    ++counts[static_cast<std::size_t>(twos)];
  });
  return counts;
}

std::vector<int> merged_strip(const std::vector<int>& rows, int i) {
  if (i < 2 || i > static_cast<int>(rows.size()))
    throw std::invalid_argument("merged_strip: row index out of range");
  int top = 0;
  for (int j = 0; j < i - 1; ++j) top += rows[static_cast<std::size_t>(j)];
  std::vector<int> out{top - 1, rows[static_cast<std::size_t>(i - 1)] - 1};
  out.insert(out.end(), rows.begin() + i, rows.end());
  std::erase(out, 0);
  return out;
}

std::int64_t zeta_rows(const std::vector<int>& rows) {
  std::vector<int> nonzero(rows);
  std::erase(nonzero, 0);
  std::int64_t value = 1;
  for (int i = 2; i <= static_cast<int>(nonzero.size()); ++i)
    value -= zeta_rows(merged_strip(nonzero, i));
  return value;
}

std::int64_t zeta(const SkewShape& s, ZetaMode mode) {
  if (mode == ZetaMode::direct) {
    std::int64_t value = 0;
    auto counts = lr_tab_counts(s);
    for (std::size_t i = 0; i < counts.size(); ++i)
      value += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[i]);
    return value;
  }
  if (!is_horizontal_strip(s) || s.size() % 2 != 0)
    throw std::invalid_argument("zeta (recursive): " + format(s) +
                                " is not a horizontal strip of even size");
  std::vector<int> rows;
  for (int r = 1; r <= s.rows(); ++r) rows.push_back(s.row_length(r));
  return zeta_rows(rows);
}

}  // namespace symdist
