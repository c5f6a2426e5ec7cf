#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symdist {

/// Integer partition, parts stored weakly decreasing and positive.
///
/// Ordering: size first, then reverse-lexicographic on the parts, so that
/// (3) < (2,1) < (1,1,1). Every downstream listing relies on this order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts descending and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based), or 0 past the end.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// m_k: how many parts equal k.
  int multiplicity(int k) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition transpose(const Partition& p);

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

/// Row-wise containment inner ⊆ outer.
bool contains(const Partition& outer, const Partition& inner);

/// Multiset union of parts.
Partition merge(const Partition& a, const Partition& b);

/// "3,1"; the empty partition is "-".
std::string format(const Partition& p);
Partition parse_partition(std::string_view text);

/// 1-based (row, column) in English orientation.
struct Box {
  int row;
  int col;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner ⊆ outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  int rows() const noexcept { return outer_.length(); }
  int row_length(int row) const noexcept;  // 1-based

  bool contains_box(int row, int col) const noexcept;

  /// Boxes in Littlewood-Richardson reading order: rows top to bottom,
  /// right to left within a row.
  std::vector<Box> reading_order() const;

  /// Boxes per column, index 0 is column 1.
  std::vector<int> column_counts() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Horizontal strip whose k-th row from the top has rows[k] boxes; row k sits
/// entirely to the left of row k-1. Zero entries are allowed.
SkewShape horizontal_strip(const std::vector<int>& rows);

std::string format(const SkewShape& s);
SkewShape parse_skew_shape(std::string_view text);

bool is_horizontal_strip(const SkewShape& s);
/// Horizontal strip with every row of even length.
bool is_even_horizontal_strip(const SkewShape& s);

struct HVSplit {
  std::vector<Box> horizontal;  // boxes alone in their column
  std::vector<Box> vertical;    // boxes sharing their column with another
  /// Row lengths of h(s), one entry per row of s (zeros kept).
  std::vector<int> horizontal_rows;
};

/// Splits s into its single-box columns and two-box columns.
/// Throws std::invalid_argument when a column holds three or more boxes.
HVSplit hv_split(const SkewShape& s);

/// At most two boxes per column and even size.
bool in_gamma2(const SkewShape& s);
/// in_gamma2 and every row of h(s) even.
bool in_gamma2_circle(const SkewShape& s);

/// A filling of a skew shape by 1 and 2, entries listed in reading order.
struct Tableau {
  SkewShape shape;
  std::vector<int> entries;
  int twos() const noexcept;
};

/// Semistandard fillings by {1,2} whose reading word is a lattice word.
/// Requires at most two boxes per column.
std::vector<Tableau> lr_tableaux(const SkewShape& s);

/// counts[i] = number of such tableaux with exactly i entries equal to 2;
/// the vector has |s|/2 + 1 entries.
std::vector<std::uint64_t> lr_tab_counts(const SkewShape& s);

enum class ZetaMode { direct, recursive };

/// Signed tableau count Σ_T (-1)^{#2's}.
/// Direct mode enumerates tableaux of any shape with at most two boxes per
/// column. Recursive mode only accepts horizontal strips of even size and
/// evaluates 1 - Σ_{i>=2} ζ(η^{(i)}).
std::int64_t zeta(const SkewShape& s, ZetaMode mode);

/// Recursive ζ on a horizontal strip given by its row lengths, top to bottom.
std::int64_t zeta_rows(const std::vector<int>& rows);

/// η^{(i)} for 2 <= i <= number of non-zero rows: the top i-1 rows merged
/// into row i, then the right-end box of the two top rows removed.
/// Input and output skip zero-length rows.
std::vector<int> merged_strip(const std::vector<int>& rows, int i);

}  // namespace symdist
