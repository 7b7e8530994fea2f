#include "loophh/relforms.hpp"

#include <algorithm>
#include <map>

#include "loophh/crossed_product.hpp"
#include "loophh/error.hpp"
#include "loophh/koszul.hpp"
#include "loophh/linalg.hpp"
#include "loophh/parallel.hpp"

namespace loophh {

long form_weight(const CircleAction& a, const CircleStratum& s, const FormKey& key) {
  const std::size_t f = s.fixed.size();
  long w = 0;
  for (std::size_t i = 0; i < f; ++i) {
    const long wk = a.weights[s.fixed[i]];
    w += wk * (key.exps[i] - key.exps[f + i]);
  }
  for (int d : key.dx) {
    const std::size_t i = static_cast<std::size_t>(d);
    w += i < f ? a.weights[s.fixed[i]] : -a.weights[s.fixed[i - f]];
  }
  return w;
}

namespace {

std::vector<PolyForm> kernel_on_keys(const GradedPiece& src, const std::vector<std::size_t>& cols,
                                     const GradedPiece& dst, const PolyVectorField& e) {
  SparseMatrix m(dst.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    PolyForm img = contract(e, src.element(cols[c]));
    for (const auto& [key, v] : img.terms()) {
      auto r = dst.index_of(key);
      if (r < 0) throw Error(ErrorCode::DimensionMismatch, "contraction leaves the target piece");
      m.set(static_cast<std::size_t>(r), c, v);
    }
  }
  std::vector<PolyForm> out;
  for (const auto& v : kernel_basis(m)) {
    PolyForm f(src.space());
    for (std::size_t c = 0; c < cols.size(); ++c) f.add_key(src.keys()[cols[c]], v[c]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<PolyForm> horizontal_impl(const CircleAction& a, const CircleStratum& s, int k, int n, bool weight_zero) {
  const CoordinateSpace space = stratum_space(s);
  GradedPiece src(space, k, n);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (!weight_zero || form_weight(a, s, src.keys()[i]) == 0) cols.push_back(i);
  if (k == 0) {
    std::vector<PolyForm> out;
    for (std::size_t c : cols) out.push_back(src.element(c));
    return out;
  }
  GradedPiece dst(space, k - 1, n);
  return kernel_on_keys(src, cols, dst, isotropy_field(a, s));
}

}  // namespace

std::vector<PolyForm> horizontal_basis(const CircleAction& a, const CircleStratum& s, int k, int n) {
  return horizontal_impl(a, s, k, n, false);
}

std::vector<PolyForm> basic_basis(const CircleAction& a, const CircleStratum& s, int k, int n) {
  return horizontal_impl(a, s, k, n, true);
}

CoordinateSpace loop_model_space(const CircleAction& a) {
  const CoordinateSpace c = a.space();
  std::vector<std::string> names{"s"};
  for (const auto& nm : c.variable_names()) names.push_back(nm);
  const std::size_t d = names.size();
  return CoordinateSpace::real(d, std::move(names));
}

std::vector<IdealModel> ideal_models(const CircleAction& a, const CircleStratum& s) {
  const std::size_t m = a.weights.size();
  const std::size_t nv = 1 + 2 * m;
  auto in_k = [&](std::size_t k) { return std::find(s.fixed.begin(), s.fixed.end(), k) != s.fixed.end(); };
  auto unit = [&](std::initializer_list<std::size_t> vars) {
    Exponents e(nv, 0);
    for (std::size_t v : vars) ++e[v];
    return e;
  };
  std::vector<std::size_t> all_z, moving_z;
  for (std::size_t k = 0; k < m; ++k) {
    all_z.push_back(1 + k);
    all_z.push_back(1 + m + k);
    if (!in_k(k)) {
      moving_z.push_back(1 + k);
      moving_z.push_back(1 + m + k);
    }
  }
  std::vector<IdealModel> out;
  if (s.generic) {
    IdealModel g{"generic", {}, {all_z}};
    for (std::size_t v : all_z) g.generators.push_back(unit({v}));
    out.push_back(std::move(g));
    return out;
  }
  IdealModel origin{"origin", {}, {}};
  for (std::size_t k = 0; k < m; ++k) {
    if (in_k(k)) {
      origin.generators.push_back(unit({0, 1 + k}));
      origin.generators.push_back(unit({0, 1 + m + k}));
    } else {
      origin.generators.push_back(unit({1 + k}));
      origin.generators.push_back(unit({1 + m + k}));
    }
  }
  std::vector<std::size_t> r1{0};
  r1.insert(r1.end(), moving_z.begin(), moving_z.end());
  origin.restrictions = {r1, all_z};
  out.push_back(origin);
  if (!s.fixed.empty()) {
    IdealModel off{"off-origin", {unit({0})}, {r1}};
    for (std::size_t v : moving_z) off.generators.push_back(unit({v}));
    out.push_back(std::move(off));
  }
  return out;
}

namespace {

bool survives(const FormKey& key, const std::vector<std::size_t>& zeroed) {
  for (std::size_t v : zeroed) {
    if (key.exps[v] != 0) return false;
    if (std::find(key.dx.begin(), key.dx.end(), static_cast<int>(v)) != key.dx.end()) return false;
  }
  return true;
}

// Stacked restriction maps on a piece: each restriction keeps the surviving basis keys.
SparseMatrix restriction_matrix(const GradedPiece& piece, const std::vector<std::vector<std::size_t>>& restrictions) {
  SparseMatrix m(restrictions.size() * piece.size(), piece.size());
  for (std::size_t r = 0; r < restrictions.size(); ++r)
    for (std::size_t c = 0; c < piece.size(); ++c)
      if (survives(piece.keys()[c], restrictions[r])) m.set(r * piece.size() + c, c, Scalar(1));
  return m;
}

std::vector<bool> relative_mask(std::size_t nv) {
  std::vector<bool> mask(nv, true);
  mask[0] = false;
  return mask;
}

// Spanning vectors of (J Ω^k + dJ ∧ Ω^{k-1}) in degree n, as coordinates in `piece`.
std::vector<Vector> submodule_span(const IdealModel& model, const GradedPiece& piece, const std::vector<bool>& mask) {
  const CoordinateSpace& space = piece.space();
  const int k = piece.k(), n = piece.n();
  std::vector<Vector> span;
  for (const auto& g : model.generators) {
    const int dg = total_degree(g);
    const PolyForm gen = PolyForm::monomial(space, g, {});
    GradedPiece lower(space, k, n - dg, {}, mask);
    for (std::size_t i = 0; i < lower.size(); ++i) span.push_back(piece.coordinates(wedge(gen, lower.element(i))));
    if (k == 0) continue;
    for (int a = 0; dg + a + (k - 1) <= n; ++a) {
      GradedPiece rest(space, k - 1, n - dg - a, {}, mask);
      if (rest.size() == 0) continue;
      for (const auto& m : monomials_of_degree(space.num_vars(), a)) {
        PolyForm dgm = d_rel(wedge(gen, PolyForm::monomial(space, m, {})), mask);
        if (dgm.is_zero()) continue;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          PolyForm w = wedge(dgm, rest.element(i));
          if (!w.is_zero()) span.push_back(piece.coordinates(w));
        }
      }
    }
  }
  return span;
}

}  // namespace

bool IdealCheckReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
}

bool ThetaReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
}

IdealCheckReport vanishing_ideal_check(const CircleAction& a, const CircleStratum& s, int nmax) {
  const CoordinateSpace space = loop_model_space(a);
  IdealCheckReport out;
  out.stratum = s.label;
  for (const auto& model : ideal_models(a, s)) {
    for (int d = 0; d <= nmax; ++d) {
      GradedPiece piece(space, 0, d);
      std::vector<Vector> span;
      for (const auto& g : model.generators) {
        for (const auto& m : monomials_of_degree(space.num_vars(), d - total_degree(g))) {
          Exponents e(m.size());
          for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] + g[i];
          span.push_back(piece.coordinates(PolyForm::monomial(space, e, {})));
        }
      }
      IdealCheckRow row;
      row.model = model.name;
      row.degree = d;
      row.generator_dim = rank_of_vectors(span, piece.size());
      row.kernel_dim = kernel_basis(restriction_matrix(piece, model.restrictions)).size();
      out.rows.push_back(row);
    }
  }
  return out;
}

ThetaReport theta_injectivity_check(const CircleAction& a, const CircleStratum& s, int k, int nmax) {
  const CoordinateSpace space = loop_model_space(a);
  const std::vector<bool> mask = relative_mask(space.num_vars());
  ThetaReport out;
  out.stratum = s.label;
  for (const auto& model : ideal_models(a, s)) {
    for (int n = std::max(k, 0); n <= nmax; ++n) {
      GradedPiece piece(space, k, n, {}, mask);
      ThetaRow row;
      row.model = model.name;
      row.k = k;
      row.n = n;
      const std::vector<Vector> span = submodule_span(model, piece, mask);
      row.quotient_dim = piece.size() - rank_of_vectors(span, piece.size());
      const SparseMatrix theta = restriction_matrix(piece, model.restrictions);
      row.restricted_dim = rank(theta);
      for (const auto& v : span) {
        for (const auto& x : theta.apply(v)) {
          if (!x.is_zero()) row.submodule_killed = false;
        }
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

BasicFormsTable basic_forms_table(const CircleAction& a, int kmax, int nmax, unsigned jobs) {
  const auto strata = circle_singular_points(a);
  std::vector<BasicFormsRow> rows;
  for (const auto& s : strata)
    for (int k = 0; k <= kmax; ++k)
      for (int n = k; n <= nmax; ++n) rows.push_back(BasicFormsRow{s.label, k, n, 0, 0, 0});
  const std::size_t per = rows.size() / strata.size();
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const CircleStratum& s = strata[i / per];
    BasicFormsRow& r = rows[i];
    r.relative = GradedPiece(stratum_space(s), r.k, r.n).size();
    r.horizontal = horizontal_basis(a, s, r.k, r.n).size();
    r.basic = basic_basis(a, s, r.k, r.n).size();
  });
  return BasicFormsTable{std::move(rows)};
}

BasicFormsTable basic_forms_table(const FiniteGroup& g, int kmax, int nmax, unsigned jobs) {
  const CrossedProductReport report = crossed_product_hh_finite(g, kmax, nmax, jobs);
  BasicFormsTable out;
  const auto& classes = g.conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t f = fixed_subspace(g.variable_action(classes[c].front())).size();
    for (const auto& e : report.per_class[c].table) {
      const std::size_t rel = fixed_form_dimension(f, e.k, e.n);
      out.rows.push_back(BasicFormsRow{report.per_class[c].stratum, e.k, e.n, rel, rel, e.dim});
    }
  }
  return out;
}

}  // namespace loophh
