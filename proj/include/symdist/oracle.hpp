#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symdist/wchar.hpp"

namespace symdist::oracle {

/// Element of W_n acting on {1..n, 1'..n'} and commuting with priming.
/// Point i (0-based) goes to image(i), primed when flipped(i).
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> image, std::vector<std::uint8_t> flips);
  static SignedPermutation identity(int n);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_[static_cast<std::size_t>(i)]; }
  bool flipped(int i) const { return flips_[static_cast<std::size_t>(i)] != 0; }

  /// Composition: (a * b)(x) = a(b(x)).
  SignedPermutation operator*(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> image_;
  std::vector<std::uint8_t> flips_;
};

/// Upper bound for streaming enumeration (|W_6| = 46080).
inline constexpr int kMaxStreamDegree = 6;
/// Upper bound for materialized enumeration (|W_4| = 384).
inline constexpr int kMaxMaterializedDegree = 4;

/// Visits all 2^n n! elements in a fixed order without storing them.
void for_each_element(int n, const std::function<void(const SignedPermutation&)>& visit);

/// All elements of W_n, n <= 4. Throws std::invalid_argument otherwise.
std::vector<SignedPermutation> enumerate_group(int n);

/// Positive cycles -> α, negative cycles (odd number of sign flips around the
/// cycle) -> β.
Bipartition class_of(const SignedPermutation& w);

/// Class sizes of W_n counted by enumeration.
std::map<Bipartition, std::uint64_t> class_sizes(int n);

enum class Subgroup { K, N };
enum class SubgroupCharacter { trivial, sgn_K, sgn_N };

/// σ_n = Π (i, 2n+1-i) in W_{2n}.
SignedPermutation sigma(int n);

/// K_n: underlying permutation keeps or swaps {1..n} and {n+1..2n}.
bool in_k(const SignedPermutation& w, int n);
/// N_n: centralizer of σ_n.
bool in_n(const SignedPermutation& w, int n);

/// -1 when w swaps the two halves.
int sgn_k(const SignedPermutation& w, int n);
/// (-1)^{#{i <= n : w(i) primed}}.
int sgn_n(const SignedPermutation& w, int n);

std::uint64_t subgroup_order(int n, Subgroup h);

/// True when the character is multiplicative on the subgroup (n <= 2).
bool is_linear_character(int n, Subgroup h, SubgroupCharacter chi);

/// Ind_H^{W_{2n}} χ evaluated class by class as z_c / |H| · Σ_{h ∈ H ∩ c} χ(h),
/// streaming over W_{2n}. Supports n <= 3.
ClassFunction induced_character_bruteforce(int n, Subgroup h, SubgroupCharacter chi);

/// Ind_K 1 - Ind_K sgn_K.
ClassFunction kappa_bruteforce(int n);
/// Ind_N sgn_N.
ClassFunction nu_bruteforce(int n);

struct QuadraticCharacterCheck {
  ClassFunction values{0};
  bool class_constant = true;
  bool matches_convention = true;
};

/// Evaluates (-1)^{#{w(1..n)} ∩ {1'..n'}} on every element, checks it is
/// constant on classes and equal to quadratic_character(n). n <= 4.
QuadraticCharacterCheck chi_definitional(int n);

struct Claim {
  std::string name;
  bool passed;
  std::string detail;
};

/// The brute-force checks: class sizes, subgroup orders, linearity of sgn_K
/// and sgn_N, closed-form κ and ν against induced characters, and the χ_n
/// convention. κ/ν run for n <= min(max_n, 2), plus n = 3 with include_w6.
std::vector<Claim> verify_claims(int max_n, bool include_w6);

}  // namespace symdist::oracle
