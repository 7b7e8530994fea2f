#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "loophh/forms.hpp"
#include "loophh/groups.hpp"

namespace loophh {

/// a_0 ⊗ ... ⊗ a_k as a tuple of monomial exponent vectors.
using Tensor = std::vector<Exponents>;

/// Homogeneous Hochschild k-chain of the polynomial algebra on `space`.
struct TensorChain {
  CoordinateSpace space;
  int k = 0;
  std::map<Tensor, Scalar> terms;

  TensorChain() = default;
  TensorChain(CoordinateSpace s, int k_) : space(std::move(s)), k(k_) {}

  void add(const Tensor& t, const Scalar& c);
  void add(const TensorChain& other, const Scalar& c = Scalar(1));
  bool is_zero() const { return terms.empty(); }
  /// Internal degree of the first term (chains built here are homogeneous); -1 when zero.
  int degree() const;
  friend bool operator==(const TensorChain& a, const TensorChain& b) { return a.k == b.k && a.terms == b.terms; }
};

/// a ∘ g as a polynomial, for a monomial a and g acting on all variables.
Polynomial compose(const Exponents& a, const Matrix& g);
/// Applies a ↦ a ∘ slot_maps[i] in slot i; an empty matrix leaves the slot alone.
TensorChain act_slots(const TensorChain& c, const std::vector<Matrix>& slot_maps);

/// b = sum_{i<k} (-1)^i b_i + (-1)^k b_k with b_k(a_0 ⊗ ... ⊗ a_k) = (a_k ∘ h) a_0 ⊗ ... ⊗ a_{k-1}.
/// h is given as for FiniteGroup elements.
TensorChain bar_differential_twisted(const TensorChain& c, const Matrix& h);

struct BarGuard {
  int max_k = 3;
  int max_n = 5;
  std::size_t max_piece = 20000;

  /// Defaults overridden by LOOPHH_MAX_FORM_DEGREE, LOOPHH_MAX_DEGREE and LOOPHH_MAX_PIECE.
  static BarGuard from_environment();
  /// Throws SizeGuardExceeded with the piece sizes if (k, n) is outside the guard.
  void check(const CoordinateSpace& space, int k, int n) const;
};

/// dim of the homogeneous piece C_k of internal degree n: monomials of degree n in (k+1)·d variables.
std::size_t bar_piece_dimension(const CoordinateSpace& space, int k, int n);
std::vector<Tensor> bar_basis(const CoordinateSpace& space, int k, int n);

/// Homology of the h-twisted bar complex at (k, n) by exact elimination.
std::size_t brute_twisted_hh(const CoordinateSpace& space, const Matrix& h, int k, int n,
                             const BarGuard& guard = BarGuard::from_environment(), unsigned jobs = 1);

/// Fixed-subspace chart of gamma: columns are the kernel basis of gamma - I in the variables.
Matrix fixed_chart(const CoordinateSpace& space, const Matrix& gamma);
/// Coordinate space for a chart; reuses the original variable names when the chart is a coordinate inclusion.
CoordinateSpace chart_space(const CoordinateSpace& space, const Matrix& chart);

/// f_0 df_1 ∧ ... ∧ df_k, restricted to the fixed subspace of gamma.
PolyForm hkr_map(const TensorChain& c, const Matrix& gamma);

/// Function from group elements (by index) to k-chains.
struct EquivariantChain {
  int k = 0;
  std::map<std::size_t, TensorChain> values;

  bool is_zero() const;
  friend bool operator==(const EquivariantChain& a, const EquivariantChain& b);
};

/// (b_tw F)(g) = sum_{i<k} (-1)^i b_i F(g) + (-1)^k b_k^{g^{-1}} F(g), where g^{-1}·a = a ∘ g.
EquivariantChain twisted_equivariant_differential(const EquivariantChain& f, const FiniteGroup& g);
/// h · F(g) with h acting diagonally by a ↦ a ∘ h^{-1}.
TensorChain act_diagonal(const FiniteGroup& g, std::size_t h, const TensorChain& c);
/// F(h g h^{-1}) = h · F(g) for all g, h.
bool is_invariant(const EquivariantChain& f, const FiniteGroup& g);
/// (1/|G|) sum_h h · F(h^{-1} g h).
EquivariantChain average_invariant(const EquivariantChain& f, const FiniteGroup& g);

}  // namespace loophh
