#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "loophh/forms.hpp"
#include "loophh/groups.hpp"

namespace loophh {

/// Circle weight of a monomial form on stratum_space(s): sum_k w_k (α_k - β_k + γ_k - δ_k).
long form_weight(const CircleAction& a, const CircleStratum& s, const FormKey& key);

/// Kernel of i_E on the (k, n) piece of forms in the fixed coordinates of the stratum.
std::vector<PolyForm> horizontal_basis(const CircleAction& a, const CircleStratum& s, int k, int n);
/// Horizontal forms of weight zero.
std::vector<PolyForm> basic_basis(const CircleAction& a, const CircleStratum& s, int k, int n);

/// Polynomial model Q[s, z, z̄] near a stratum point, s = t - t0.
CoordinateSpace loop_model_space(const CircleAction& a);

/// One local description of the vanishing ideal: generators plus the restrictions cutting out the loop space.
struct IdealModel {
  std::string name;
  std::vector<Exponents> generators;  // monomials in loop_model_space
  /// Each restriction sets the listed variables to zero.
  std::vector<std::vector<std::size_t>> restrictions;
};

/// Models that apply at a stratum: near the origin, away from it along the fixed subspace, or generic.
std::vector<IdealModel> ideal_models(const CircleAction& a, const CircleStratum& s);

struct IdealCheckRow {
  std::string model;
  int degree = 0;
  std::size_t generator_dim = 0;
  std::size_t kernel_dim = 0;
  bool ok() const { return generator_dim == kernel_dim; }
};

struct IdealCheckReport {
  std::string stratum;
  std::vector<IdealCheckRow> rows;
  bool ok() const;
};

IdealCheckReport vanishing_ideal_check(const CircleAction& a, const CircleStratum& s, int nmax);

struct ThetaRow {
  std::string model;
  int k = 0;
  int n = 0;
  std::size_t quotient_dim = 0;    // Ω^k_n / (J Ω^k + dJ ∧ Ω^{k-1})_n
  std::size_t restricted_dim = 0;  // rank of restriction to the stratum bundle
  bool submodule_killed = true;    // J Ω^k + dJ ∧ Ω^{k-1} restricts to zero
  bool ok() const { return submodule_killed && quotient_dim == restricted_dim; }
};

struct ThetaReport {
  std::string stratum;
  std::vector<ThetaRow> rows;
  bool ok() const;
};

/// Rows for every model of the stratum and every n in [k, nmax].
ThetaReport theta_injectivity_check(const CircleAction& a, const CircleStratum& s, int k, int nmax);

struct BasicFormsRow {
  std::string stratum;
  int k = 0;
  int n = 0;
  std::size_t relative = 0;
  std::size_t horizontal = 0;
  std::size_t basic = 0;
};

struct BasicFormsTable {
  std::vector<BasicFormsRow> rows;
};

BasicFormsTable basic_forms_table(const CircleAction& a, int kmax, int nmax, unsigned jobs = 1);
/// Finite groups: horizontality is vacuous and basic forms are the invariant families per conjugacy class.
BasicFormsTable basic_forms_table(const FiniteGroup& g, int kmax, int nmax, unsigned jobs = 1);

}  // namespace loophh
