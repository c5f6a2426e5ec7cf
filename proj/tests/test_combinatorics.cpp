#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "symdist/combinatorics.hpp"

using namespace symdist;

namespace {

// Column lengths read off the explicit box set of the Young diagram.
Partition transpose_by_boxes(const Partition& p) {
  std::map<int, int> column;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 1; c <= p[static_cast<std::size_t>(r)]; ++c) ++column[c];
  std::vector<int> parts;
  for (auto [c, len] : column) parts.push_back(len);
  return Partition::from_unsorted(parts);
}

// All 2^|s| fillings by {1,2}, kept when rows weakly increase, columns
// strictly increase and the right-to-left, top-to-bottom word is lattice.
std::vector<std::uint64_t> brute_counts(const SkewShape& s) {
  std::vector<Box> boxes;
  for (int r = 1; r <= s.rows(); ++r)
    for (int c = s.inner()[static_cast<std::size_t>(r - 1)] + 1; c <= s.outer()[static_cast<std::size_t>(r - 1)]; ++c)
      boxes.push_back({r, c});
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(s.size() / 2 + 1), 0);
  for (unsigned mask = 0; mask < (1U << boxes.size()); ++mask) {
    std::map<std::pair<int, int>, int> value;
    int twos = 0;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      int v = (mask >> k) & 1U ? 2 : 1;
      value[{boxes[k].row, boxes[k].col}] = v;
      twos += v == 2;
    }
    bool ok = true;
    for (const auto& [pos, v] : value) {
      auto right = value.find({pos.first, pos.second + 1});
      if (right != value.end() && right->second < v) ok = false;
      auto below = value.find({pos.first + 1, pos.second});
      if (below != value.end() && below->second <= v) ok = false;
    }
    int ones = 0, seen_twos = 0;
    for (int r = 1; ok && r <= s.rows(); ++r)
      for (int c = s.outer()[static_cast<std::size_t>(r - 1)]; ok && c > s.inner()[static_cast<std::size_t>(r - 1)]; --c) {
        (value[{r, c}] == 1 ? ones : seen_twos)++;
        if (seen_twos > ones) ok = false;
      }
    if (ok) ++counts[static_cast<std::size_t>(twos)];
  }
  return counts;
}

std::vector<SkewShape> shapes_up_to(int max_size) {
  std::vector<SkewShape> out;
  for (int n = 0; n <= max_size + 4; ++n)
    for (const auto& outer : partitions_of(n))
      for (int k = std::max(0, n - max_size); k <= n; ++k)
        for (const auto& inner : partitions_of(k))
          if (contains(outer, inner)) out.emplace_back(outer, inner);
  return out;
}

bool at_most_two_per_column(const SkewShape& s) {
  for (int c : s.column_counts())
    if (c > 2) return false;
  return true;
}

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("transpose") {
  CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition{1, 1, 1}) == Partition{3});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(transpose(transpose(p)) == p);
      CHECK(transpose(p) == transpose_by_boxes(p));
    }
}

TEST_CASE("partition counts and order") {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  CHECK(Partition{3} < Partition{2, 1});
  CHECK(Partition{2, 1} < Partition{1, 1, 1});
  CHECK(Partition{5} < Partition{1, 1, 1, 1, 1, 1});
  auto list = partitions_of(6);
  CHECK(std::is_sorted(list.begin(), list.end()));
}

TEST_CASE("partition text") {
  CHECK(format(Partition{3, 1}) == "3,1");
  CHECK(format(Partition{}) == "-");
  CHECK(parse_partition("2,2,1") == Partition{2, 2, 1});
  CHECK(parse_partition("-") == Partition{});
  CHECK_THROWS(parse_partition("1,2"));
  CHECK_THROWS(parse_partition("2,x"));
  CHECK(format(parse_skew_shape("3,1/1")) == "3,1/1");
  CHECK_THROWS(SkewShape(Partition{1}, Partition{2}));
}

TEST_CASE("hv_split") {
  auto split = hv_split(parse_skew_shape("5,4,2,1/2,2"));
  CHECK(split.horizontal.size() == 2);
  CHECK(split.vertical.size() == 6);
  std::set<Box> h(split.horizontal.begin(), split.horizontal.end());
  CHECK(h == std::set<Box>{{1, 5}, {3, 2}});

  auto empty = hv_split(SkewShape());
  CHECK(empty.horizontal.empty());
  CHECK(empty.vertical.empty());

  auto row = hv_split(parse_skew_shape("2/-"));
  CHECK(row.horizontal.size() == 2);
  CHECK(row.vertical.empty());
  CHECK(row.horizontal_rows == std::vector<int>{2});

  CHECK_THROWS_AS(hv_split(parse_skew_shape("1,1,1/-")), std::invalid_argument);
}

TEST_CASE("gamma2 circle") {
  CHECK(in_gamma2_circle(parse_skew_shape("3,3/-")));
  CHECK_FALSE(in_gamma2_circle(parse_skew_shape("2,1/1")));
  CHECK(in_gamma2_circle(parse_skew_shape("2/-")));
  CHECK(in_gamma2(parse_skew_shape("2,1/1")));
  CHECK_FALSE(in_gamma2(parse_skew_shape("1,1,1,1/1")));
  CHECK_FALSE(in_gamma2_circle(parse_skew_shape("1,1,1/-")));
}

TEST_CASE("lr_tab_counts examples") {
  CHECK(lr_tab_counts(SkewShape()) == std::vector<std::uint64_t>{1});
  // Semistandard: (2)/() admits only the filling 11.
  CHECK(lr_tab_counts(parse_skew_shape("2/-")) == std::vector<std::uint64_t>{1, 0});
  CHECK(lr_tab_counts(parse_skew_shape("2,1/1")) == std::vector<std::uint64_t>{1, 1});
  CHECK(lr_tab_counts(parse_skew_shape("2,2/-")) == std::vector<std::uint64_t>{0, 0, 1});
}

TEST_CASE("lr_tab_counts against brute-force fillings") {
  int checked = 0;
  for (const auto& s : shapes_up_to(8)) {
    if (!at_most_two_per_column(s)) continue;
    CAPTURE(format(s));
    CHECK(lr_tab_counts(s) == brute_counts(s));
    CHECK(lr_tableaux(s).size() == [&] {
      std::uint64_t t = 0;
      for (auto c : brute_counts(s)) t += c;
      return t;
    }());
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("signed tableau count and shift on gamma2") {
  for (const auto& s : shapes_up_to(10)) {
    if (!in_gamma2(s)) continue;
    CAPTURE(format(s));
    auto split = hv_split(s);
    const int half_v = static_cast<int>(split.vertical.size()) / 2;
    auto counts = lr_tab_counts(s);
    std::int64_t signed_sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
      signed_sum += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(counts[i]);
    bool h_even = std::all_of(split.horizontal_rows.begin(), split.horizontal_rows.end(),
                              [](int r) { return r % 2 == 0; });
    CHECK(signed_sum == (h_even ? (half_v % 2 ? -1 : 1) : 0));

    auto h_counts = lr_tab_counts(horizontal_strip(split.horizontal_rows));
    for (std::size_t i = 0; i < counts.size(); ++i) {
      int j = static_cast<int>(i) - half_v;
      std::uint64_t want = j >= 0 && static_cast<std::size_t>(j) < h_counts.size() ? h_counts[static_cast<std::size_t>(j)] : 0;
      CHECK(counts[i] == want);
    }
  }
}

TEST_CASE("zeta examples") {
  CHECK(zeta(parse_skew_shape("2/-"), ZetaMode::direct) == 1);
  CHECK(zeta(parse_skew_shape("2/-"), ZetaMode::recursive) == 1);
  CHECK(zeta(parse_skew_shape("2,1/1"), ZetaMode::direct) == 0);
  CHECK_THROWS_AS(zeta(parse_skew_shape("2,2/-"), ZetaMode::recursive), std::invalid_argument);
  CHECK_THROWS_AS(zeta(parse_skew_shape("3/-"), ZetaMode::recursive), std::invalid_argument);
}

TEST_CASE("zeta on every horizontal strip of even size up to 10") {
  for (int size = 2; size <= 10; size += 2) {
    std::vector<std::vector<int>> all;
    std::vector<int> prefix;
    compositions(size, prefix, all);
    for (const auto& rows : all) {
      CAPTURE(size);
      auto strip = horizontal_strip(rows);
      REQUIRE(is_horizontal_strip(strip));
      bool even = std::all_of(rows.begin(), rows.end(), [](int r) { return r % 2 == 0; });
      CHECK(is_even_horizontal_strip(strip) == even);
      auto direct = zeta(strip, ZetaMode::direct);
      CHECK(direct == (even ? 1 : 0));
      CHECK(zeta(strip, ZetaMode::recursive) == direct);
      CHECK(zeta_rows(rows) == direct);
    }
  }
}

TEST_CASE("merged strip") {
  CHECK(merged_strip({3, 1}, 2) == std::vector<int>{2});
  CHECK(merged_strip({1, 1, 2}, 3) == std::vector<int>{1, 1});
  CHECK(merged_strip({2, 2, 2}, 2) == std::vector<int>{1, 1, 2});
}
