#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "symdist/arith.hpp"
#include "symdist/bipartition.hpp"

namespace symdist {

/// |W_n| = 2^n n!.
Integer hyperoctahedral_order(int n);

/// Order of the centralizer in W_n of an element of cycle type c:
/// Π_i (2i)^{m_i(α)} m_i(α)! · Π_i (2i)^{m_i(β)} m_i(β)!.
Integer centralizer_order(const Bipartition& c);

/// The conjugacy classes of W_n in canonical order, with centralizer orders.
/// Instances are built once per n and shared; lookups are thread-safe.
class ClassIndex {
 public:
  static const ClassIndex& of(int n);

  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<Bipartition>& classes() const noexcept { return classes_; }
  const Bipartition& operator[](std::size_t i) const { return classes_[i]; }

  /// Position of c; throws std::out_of_range if c is not a class of W_n.
  std::size_t index(const Bipartition& c) const;
  const Integer& centralizer(std::size_t i) const { return centralizers_[i]; }
  const Integer& group_order() const noexcept { return order_; }

 private:
  explicit ClassIndex(int n);

  int n_;
  std::vector<Bipartition> classes_;
  std::map<Bipartition, std::size_t> positions_;
  std::vector<Integer> centralizers_;
  Integer order_;
};

/// Exact rational-valued class function on W_n, stored densely in the
/// canonical class order.
class ClassFunction {
 public:
  explicit ClassFunction(int n);

  template <typename F>
  static ClassFunction from(int n, F&& value_at) {
    ClassFunction f(n);
    for (std::size_t i = 0; i < f.values_.size(); ++i) f.values_[i] = value_at(f.classes()[i]);
    return f;
  }

  int degree() const noexcept { return index_->degree(); }
  const ClassIndex& index() const noexcept { return *index_; }
  const std::vector<Bipartition>& classes() const noexcept { return index_->classes(); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& operator[](std::size_t i) { return values_[i]; }

  /// Value on class c; throws std::out_of_range for a bipartition of the wrong size.
  const Rational& at(const Bipartition& c) const { return values_[index_->index(c)]; }
  void set(const Bipartition& c, Rational value) { values_[index_->index(c)] = std::move(value); }

  bool is_integral() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scalar);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  const ClassIndex* index_;
  std::vector<Rational> values_;
};

/// Σ_c f(c) g(c) / z_c. Throws std::invalid_argument on degree mismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Character of Ind_{W_a × W_b}^{W_{a+b}} (f ⊗ g): sum over splittings of the
/// cycle type into two sub-multisets, weighted by z_γ / (z_γ' z_γ'').
ClassFunction induction_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction trivial_character(int n);

/// χ_n(w) = (-1)^{#{i : w(i) is primed}}; on class (γ;δ) this is (-1)^{ℓ(δ)}.
ClassFunction quadratic_character(int n);

/// Irreducible character χ^shape of S_n at cycle type `cycle_type`
/// (Murnaghan-Nakayama, largest part removed first, memoized per thread).
Integer sym_character(const Partition& shape, const Partition& cycle_type);

/// ρ̄_S(α): the S_|α| character pulled back to W_|α| through W -> S.
ClassFunction lifted_character(const Partition& alpha);
/// ρ̄_S(β) ⊗ χ_|β|.
ClassFunction twisted_lifted_character(const Partition& beta);

/// Character of the irreducible W_n-module labelled (α;β):
/// induction_product(lifted(α), twisted_lifted(β)).
ClassFunction w_irreducible(const Bipartition& b);

/// All irreducible characters of W_n, in the canonical bipartition order.
/// Built once per n; safe to call concurrently.
const std::vector<ClassFunction>& character_table(int n);

using Decomposition = std::map<Bipartition, Rational>;

/// Multiplicity of each irreducible (non-zero entries only).
Decomposition decompose(const ClassFunction& f);

/// Σ coefficient · χ_b on W_n.
ClassFunction recompose(int n, const Decomposition& d);

}  // namespace symdist
