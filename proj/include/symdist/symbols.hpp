#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "symdist/bipartition.hpp"

namespace symdist {

/// A pair of strictly increasing rows as written, before normalization.
struct RawSymbol {
  std::vector<int> top;
  std::vector<int> bottom;
};

/// Lusztig symbol: an unordered pair of finite sets of non-negative integers,
/// kept in reduced form (0 is never in both rows) with the longer row stored
/// first; rows of equal length are ordered lexicographically.
class Symbol {
 public:
  /// The empty symbol (- | -).
  Symbol() = default;
  /// Normalizes via reduce(). Throws std::invalid_argument for negative or
  /// repeated entries.
  Symbol(std::vector<int> top, std::vector<int> bottom);

  const std::vector<int>& top() const noexcept { return top_; }
  const std::vector<int>& bottom() const noexcept { return bottom_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  /// Rank, then defect, then rows lexicographically.
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);

 private:
  friend Symbol reduce(const RawSymbol& raw);
  struct Normalized {};
  Symbol(Normalized, std::vector<int> top, std::vector<int> bottom)
      : top_(std::move(top)), bottom_(std::move(bottom)) {}

  std::vector<int> top_;
  std::vector<int> bottom_;
};

/// Strips shared zeros (shifting the rest down by one) until 0 is in at most
/// one row, then orients canonically. Rank and defect are unchanged.
Symbol reduce(const RawSymbol& raw);

int rank(const Symbol& s);
int defect(const Symbol& s);

/// The bijection (α;β) -> defect-1 symbol: pad α to one more part than β,
/// parts ascending, then λ_i = α_i + i - 1 and μ_i = β_i + i - 1.
Symbol symbol_of(const Bipartition& b);
/// Inverse of symbol_of; throws std::invalid_argument unless defect is 1.
Bipartition bipartition_of(const Symbol& s);

/// Defect 1 and z_0 <= z_1 <= z_2 <= ... for top z_0,z_2,.. and bottom z_1,z_3,..
bool is_special(const Symbol& s);

struct SinglesAndDoubles {
  std::vector<int> singles;  // entries in exactly one row, ascending
  std::vector<int> doubles;  // entries in both rows (Z_0), ascending
  int d = 0;                 // (#singles - 1) / 2
};

SinglesAndDoubles singles_and_doubles(const Symbol& s);

/// Odd defect and rank equal to floor((defect/2)^2).
bool is_cuspidal(const Symbol& s);

/// (0,1,...,2d | -), of rank d^2 + d.
Symbol cuspidal_symbol(int d);

/// All reduced symbols of the given rank and defect 1, canonical order.
std::vector<Symbol> defect_one_symbols(int rank);
/// All reduced symbols of the given rank and odd defect, canonical order.
std::vector<Symbol> odd_defect_symbols(int rank);

/// "0,2,4|1,3"; an empty row is "-".
std::string format(const Symbol& s);
Symbol parse_symbol(std::string_view text);

}  // namespace symdist
