#pragma once

#include <utility>
#include <vector>

#include "symdist/symbols.hpp"
#include "symdist/wchar.hpp"

namespace symdist {

/// An unordered pair of singles, stored (smaller, larger).
using SinglePair = std::pair<int, int>;

SinglePair make_pair_of_singles(int a, int b);

/// The singles of a special symbol split into d pairs and one isolated entry.
struct Arrangement {
  std::vector<SinglePair> pairs;  // sorted by smaller element
  int isolated = 0;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

struct CellTerm {
  int sign;
  Symbol symbol;
  friend bool operator==(const CellTerm&, const CellTerm&) = default;
};

/// Signed sum of 2^d defect-1 symbols attached to a special symbol Z, an
/// arrangement Φ of its singles and a subset Φ̂ ⊆ Φ. Terms are ordered by Ψ
/// read as a bitmask over Φ.pairs.
struct Cell {
  Symbol z;
  Arrangement phi;
  std::vector<SinglePair> phi_hat;
  std::vector<CellTerm> terms;
};

/// Index of a family member: the singles M of the special symbol and an
/// even-cardinality subset A of M. A is empty exactly for Z itself.
struct FamilyIndex {
  std::vector<int> singles;
  std::vector<int> subset;
  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};

struct FamilyMember {
  FamilyIndex index;
  Symbol symbol;
};

/// Throws std::invalid_argument unless z is special.
void require_special(const Symbol& z);

/// Column pairs (λ_i, μ_i) with λ_i != μ_i; the remaining single is isolated.
Arrangement phi_z(const Symbol& z);
/// Pairs of phi_z(z) whose entries differ by an odd amount.
std::vector<SinglePair> phi_hat_z(const Symbol& z);

/// Some pair consists of singles adjacent in the sorted singles list with no
/// doubled entry strictly between them, and removing it leaves an admissible
/// arrangement. Arrangements with no pairs are admissible.
bool is_admissible(const Symbol& z, const Arrangement& phi);

/// Every arrangement of the singles of z (for tests and reporting).
std::vector<Arrangement> all_arrangements(const Symbol& z);

/// Z with the row membership of both entries of every pair in psi swapped.
Symbol lambda_of_psi(const Symbol& z, const std::vector<SinglePair>& psi);

/// Throws std::invalid_argument when phi is not admissible for z or
/// phi_hat ⊄ phi.pairs.
Cell make_cell(const Symbol& z, const Arrangement& phi, const std::vector<SinglePair>& phi_hat);

/// The cell used for the distinguished list: (Z, Φ_Z, Φ̂_Z).
Cell canonical_cell(const Symbol& z);

/// Σ sign · χ_{L^{-1}(Λ(Ψ))} on W_rank(Z).
ClassFunction cell_character(const Cell& cell);

/// Special symbols Z of rank 2n whose bipartition (α;β) has β ⊆ α with α/β
/// an even horizontal strip, in canonical symbol order.
std::vector<Symbol> enumerate_special_set(int n);

/// The 2^{2d} symbols sharing Z's entries: for each even subset A of the
/// singles, the top row holds Z_0 and A Δ (top singles of Z).
std::vector<FamilyMember> family(const Symbol& z);

/// Family index of a member symbol: (top singles) Δ (top singles of Z),
/// replaced by its complement in M when odd. Throws std::invalid_argument if
/// the symbol is not in Z's family.
FamilyIndex family_index(const Symbol& z, const Symbol& member);

struct FourierEntry {
  FamilyMember member;
  Rational multiplicity;
};

/// Multiplicity of every family member in the cell:
/// 2^{-d} Σ_Ψ (-1)^{|Φ̂∩Ψ|} (-1)^{|A ∩ B(Ψ)|}.
std::vector<FourierEntry> fourier_multiplicities(const Cell& cell);

/// Family members of multiplicity 1. Throws ModelViolation when any
/// multiplicity lies outside {0, 1} or the count differs from 2^d.
std::vector<Symbol> fourier_constituents(const Cell& cell);

struct CellReport {
  Cell cell;
  int d = 0;
  std::vector<Symbol> constituents;
};

struct DistinguishedReport {
  int n = 0;
  int rank = 0;
  std::vector<CellReport> cells;
  std::vector<Symbol> symbols;  // the union, canonical order
  bool cuspidal_required = false;  // rank = d^2 + d for some d
  bool cuspidal_present = false;
};

/// The distinguished unipotent symbols for Sp_{4n}. Throws ModelViolation
/// if families overlap or a required cuspidal symbol is missing.
DistinguishedReport distinguished(int n);

}  // namespace symdist
