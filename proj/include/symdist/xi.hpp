#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdist/wchar.hpp"

namespace symdist {

/// Value of a multiplicative class function on a single block: the class
/// (k^m; ∅) when `negative` is false, (∅; k^m) otherwise.
using BlockRule = Rational (*)(int part, int multiplicity, bool negative);

/// Expands a block rule to a class function on W_n:
/// f(α;β) = Π_k f(k^{m_k(α)};∅) · f(∅;k^{m_k(β)}).
ClassFunction multiplicative(int n, BlockRule rule);

Rational kappa_block(int part, int multiplicity, bool negative);
Rational nu_block(int part, int multiplicity, bool negative);

/// κ_r on W_{2r}: 0 on any block with an odd part, 2^m on ((2i)^m;∅) and
/// (∅;(2i)^m).
ClassFunction kappa(int r);

/// ν_m on W_{2m}: 0 when an odd part or an even part has odd multiplicity;
/// i^k (2k)!/k! on (i^{2k};∅) and (-i)^k (2k)!/k! on (∅;i^{2k}) for odd i;
/// p^{m/2} m!/(m/2)! on (p^m;∅) and (-p)^{m/2} m!/(m/2)! on (∅;p^m) for even
/// part p and even m.
ClassFunction nu(int m);

/// Σ_{i=0}^{r} (-1)^i ((2r-i, i);∅).
Decomposition kappa_expected_decomposition(int r);
/// Σ_{α ⊢ m} (α;α).
Decomposition nu_expected_decomposition(int m);

enum class XiRoute { induction, gamma2, cells };

const char* route_name(XiRoute route);  // "A", "B", "C"

struct XiResult {
  int n = 0;
  XiRoute route = XiRoute::induction;
  ClassFunction character{0};
  std::map<Bipartition, int> decomposition;
};

/// Ξ_n on W_{2n} by the chosen route:
///   A  Σ_{r=0}^{n} induction_product(κ_r, ν_{n-r})
///   B  Σ (-1)^{|v(α/β)|/2} χ^{(α;β)} over β ⊆ α with α/β in Γ₂°
///   C  Σ over the special set of the canonical cell characters.
/// Throws ModelViolation if a coefficient is not an integer in {-1,0,1}.
XiResult xi(int n, XiRoute route);

/// The route-B coefficients alone (bipartitions of 2n with α/β ∈ Γ₂°).
std::map<Bipartition, int> gamma2_circle_terms(int n);

struct RouteAgreement {
  bool agree = true;
  std::optional<Bipartition> first_difference;
  std::string detail;
};

/// Compares class functions value by value in canonical class order.
RouteAgreement compare_routes(const XiResult& a, const XiResult& b);

/// Runs all three routes; throws ModelViolation carrying the first differing
/// class if any two disagree.
std::vector<XiResult> xi_all_routes(int n);

}  // namespace symdist
