#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "symdist/combinatorics.hpp"

namespace symdist {

/// Ordered pair (α;β) of partitions. Indexes both a conjugacy class of W_n
/// (positive cycles α, negative cycles β) and an irreducible character.
///
/// Canonical order within fixed n: |α| descending, then α, then β in
/// partition order.
struct Bipartition {
  Partition alpha;
  Partition beta;

  int size() const noexcept { return alpha.size() + beta.size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b);
};

/// All bipartitions of n in canonical order.
std::vector<Bipartition> bipartitions_of(int n);

/// "2,1;1", "2;-", "-;1,1".
std::string format(const Bipartition& b);
Bipartition parse_bipartition(std::string_view text);

}  // namespace symdist
