#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "loophh/groups.hpp"
#include "loophh/hochschild.hpp"
#include "loophh/koszul.hpp"

namespace loophh {

/// Hochschild k-chain of G ⋉ A: sum of c · (a_0 δ_{g_0}) ⊗ ... ⊗ (a_k δ_{g_k}).
/// The product is (a δ_g)(b δ_h) = (1/|G|) a (g·b) δ_{gh} with (g·b)(x) = b(g^{-1} x).
struct CrossedChain {
  int k = 0;
  std::map<std::pair<std::vector<std::size_t>, Tensor>, Scalar> terms;

  void add(const std::vector<std::size_t>& elems, const Tensor& t, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
};

CrossedChain crossed_differential(const CrossedChain& f, const FiniteGroup& g);

/// Chain on G ⋉ A to the equivariant complex: the normalized-sum formula
///   F~(g) = |G|^{-k} sum_{h_1..h_k} (g^{-1}h_1..h_k ⊗ 1 ⊗ h_1 ⊗ ... ⊗ h_1..h_{k-1}) · F(h_k^{-1}..h_1^{-1} g, h_1, ..., h_k)
/// followed by averaging over the adjoint action, so the result is invariant.
EquivariantChain qism_tilde(const CrossedChain& f, const FiniteGroup& g, const CoordinateSpace& space);
/// The formula alone, without the final averaging.
EquivariantChain qism_tilde_raw(const CrossedChain& f, const FiniteGroup& g, const CoordinateSpace& space);

struct CrossedProductReport {
  std::vector<HomologyReport> per_class;  // one per conjugacy class, in class order
  HomologyReport total;
};

/// For each class representative gamma: dim of the centralizer-invariant part of Ω^k_n(V^gamma); summed.
CrossedProductReport crossed_product_hh_finite(const FiniteGroup& g, int kmax, int nmax, unsigned jobs = 1);

/// Independent count: rank of the whole-group averaging operator on ⊕_gamma Ω^k_n(V^gamma),
/// with h carrying the gamma summand to the h gamma h^{-1} summand.
std::size_t invariant_strata_forms_dimension(const FiniteGroup& g, int k, int n);

/// dim HH_0 of G ⋉ A in internal degree n, as C_0 / b(C_1) by exact elimination.
std::size_t crossed_product_hh0_brute(const FiniteGroup& g, int n);

}  // namespace loophh
