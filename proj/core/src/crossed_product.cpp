#include "loophh/crossed_product.hpp"

#include "loophh/error.hpp"
#include "loophh/linalg.hpp"
#include "loophh/parallel.hpp"

namespace loophh {

void CrossedChain::add(const std::vector<std::size_t>& elems, const Tensor& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({elems, t}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

namespace {

// g·b = b ∘ g^{-1}.
Polynomial act(const FiniteGroup& g, std::size_t e, const Exponents& b) {
  return compose(b, g.variable_action(g.inverse(e)));
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

CrossedChain crossed_differential(const CrossedChain& f, const FiniteGroup& g) {
  CrossedChain out;
  out.k = f.k - 1;
  if (f.k == 0) return out;
  const Scalar inv_order = Scalar(1) / Scalar(static_cast<long>(g.order()));
  const std::size_t k = static_cast<std::size_t>(f.k);
  for (const auto& [key, c] : f.terms) {
    const auto& [elems, t] = key;
    // Faces i < k multiply slots i and i+1; face k multiplies slot k into slot 0.
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t left = i < k ? i : k;
      const std::size_t right = i < k ? i + 1 : 0;
      const Scalar coeff = (i % 2 == 0 ? c : -c) * inv_order;
      const std::size_t ge = g.multiply(elems[left], elems[right]);
      const Polynomial moved = act(g, elems[left], t[right]);
      for (const auto& [e, v] : moved.terms()) {
        std::vector<std::size_t> ne;
        Tensor nt;
        if (i < k) {
          for (std::size_t s = 0; s < i; ++s) {
            ne.push_back(elems[s]);
            nt.push_back(t[s]);
          }
          ne.push_back(ge);
          nt.push_back(product(t[i], e));
          for (std::size_t s = i + 2; s <= k; ++s) {
            ne.push_back(elems[s]);
            nt.push_back(t[s]);
          }
        } else {
          ne.push_back(ge);
          nt.push_back(product(t[k], e));
          for (std::size_t s = 1; s < k; ++s) {
            ne.push_back(elems[s]);
            nt.push_back(t[s]);
          }
        }
        out.add(ne, nt, coeff * v);
      }
    }
  }
  return out;
}

EquivariantChain qism_tilde_raw(const CrossedChain& f, const FiniteGroup& g, const CoordinateSpace& space) {
  EquivariantChain out;
  out.k = f.k;
  Scalar scale(1);
  for (int i = 0; i < f.k; ++i) scale /= Scalar(static_cast<long>(g.order()));
  const std::size_t k = static_cast<std::size_t>(f.k);
  for (const auto& [key, c] : f.terms) {
    const auto& [elems, t] = key;
    // h_i = g_i for i >= 1 and g = h_1 ... h_k g_0.
    std::vector<std::size_t> prefix(k + 1, g.identity());  // prefix[i] = h_1 ... h_i
    for (std::size_t i = 1; i <= k; ++i) prefix[i] = g.multiply(prefix[i - 1], elems[i]);
    const std::size_t target = g.multiply(prefix[k], elems[0]);
    std::vector<Matrix> maps(k + 1);
    // Slot 0 is acted on by g^{-1} h_1 ... h_k = g_0^{-1}; slot i >= 2 by h_1 ... h_{i-1}.
    // An element x acts by a ↦ a ∘ x^{-1}.
    maps[0] = g.variable_action(elems[0]);
    for (std::size_t i = 2; i <= k; ++i) maps[i] = g.variable_action(g.inverse(prefix[i - 1]));
    TensorChain single(space, f.k);
    single.add(t, c * scale);
    TensorChain moved = act_slots(single, maps);
    auto [it, inserted] = out.values.try_emplace(target, space, f.k);
    it->second.add(moved);
    if (it->second.is_zero()) out.values.erase(it);
  }
  return out;
}

EquivariantChain qism_tilde(const CrossedChain& f, const FiniteGroup& g, const CoordinateSpace& space) {
  return average_invariant(qism_tilde_raw(f, g, space), g);
}

namespace {

struct StratumChart {
  Matrix chart;           // num_vars x f
  CoordinateSpace space;  // Real(f)
};

StratumChart stratum_chart(const FiniteGroup& g, std::size_t e) {
  Matrix chart = Matrix::from_columns(g.space().num_vars(), fixed_subspace(g.variable_action(e)));
  return {chart, CoordinateSpace::real(chart.cols())};
}

// N with m · source.chart = target.chart · N, i.e. m maps V^source into V^target.
Matrix chart_transition(const Matrix& m, const Matrix& source, const Matrix& target) {
  Matrix moved = m * source;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < target.cols(); ++c) basis.push_back(target.column(c));
  Matrix n(target.cols(), source.cols());
  for (std::size_t c = 0; c < moved.cols(); ++c) {
    Vector coords = coordinates_in_basis(basis, moved.column(c));
    for (std::size_t r = 0; r < coords.size(); ++r) n(r, c) = coords[r];
  }
  return n;
}

}  // namespace

CrossedProductReport crossed_product_hh_finite(const FiniteGroup& g, int kmax, int nmax, unsigned jobs) {
  const auto& classes = g.conjugacy_classes();
  CrossedProductReport out;
  out.per_class.resize(classes.size());
  std::vector<std::pair<int, int>> keys;
  for (int k = 0; k <= kmax; ++k)
    for (int n = k; n <= nmax; ++n) keys.emplace_back(k, n);
  std::vector<std::vector<std::size_t>> dims(classes.size(), std::vector<std::size_t>(keys.size()));
  std::vector<StratumChart> charts;
  std::vector<std::vector<Matrix>> actions(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t rep = classes[c].front();
    charts.push_back(stratum_chart(g, rep));
    for (std::size_t z : g.centralizer(rep))
      actions[c].push_back(chart_transition(g.variable_action(z), charts[c].chart, charts[c].chart));
  }
  parallel_for(classes.size() * keys.size(), jobs, [&](std::size_t idx) {
    const std::size_t c = idx / keys.size();
    const auto [k, n] = keys[idx % keys.size()];
    GradedPiece piece(charts[c].space, k, n);
    if (piece.size() == 0) return;
    SparseMatrix sum(piece.size(), piece.size());
    for (const Matrix& m : actions[c]) {
      SparseMatrix pm = operator_matrix(piece, piece, [&](const PolyForm& w) { return pullback(m, w); });
      for (std::size_t r = 0; r < pm.rows(); ++r)
        for (const auto& [col, v] : pm.row(r)) sum.add(r, col, v);
    }
    dims[c][idx % keys.size()] = rank(sum);
  });
  out.total.stratum = "total";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out.per_class[c].stratum = "class" + std::to_string(c) + ":g" + std::to_string(classes[c].front());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out.per_class[c].table.push_back(HomologyEntry{keys[i].first, keys[i].second, dims[c][i], {}});
    }
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t t = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) t += dims[c][i];
    out.total.table.push_back(HomologyEntry{keys[i].first, keys[i].second, t, {}});
  }
  return out;
}

std::size_t invariant_strata_forms_dimension(const FiniteGroup& g, int k, int n) {
  const std::size_t order = g.order();
  std::vector<StratumChart> charts;
  std::vector<GradedPiece> pieces;
  std::vector<std::size_t> offset(order + 1, 0);
  for (std::size_t e = 0; e < order; ++e) {
    charts.push_back(stratum_chart(g, e));
    pieces.emplace_back(charts[e].space, k, n);
    offset[e + 1] = offset[e] + pieces[e].size();
  }
  SparseMatrix sum(offset[order], offset[order]);
  for (std::size_t h = 0; h < order; ++h) {
    const Matrix& hinv = g.variable_action(g.inverse(h));
    for (std::size_t e = 0; e < order; ++e) {
      if (pieces[e].size() == 0) continue;
      const std::size_t t = g.conjugate(h, e);
      // Pull a form on V^e back along V^t -> V^e, x ↦ h^{-1} x.
      const Matrix n_map = chart_transition(hinv, charts[t].chart, charts[e].chart);
      SparseMatrix block = operator_matrix(pieces[e], pieces[t], [&](const PolyForm& w) {
        return pullback_linear(n_map, w, charts[t].space);
      });
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (const auto& [c, v] : block.row(r)) sum.add(offset[t] + r, offset[e] + c, v);
    }
  }
  return rank(sum);
}

std::size_t crossed_product_hh0_brute(const FiniteGroup& g, int n) {
  const CoordinateSpace& space = g.space();
  const std::size_t order = g.order();
  std::vector<std::pair<std::size_t, Exponents>> c0;
  std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
  for (std::size_t e = 0; e < order; ++e)
    for (const auto& m : monomials_of_degree(space.num_vars(), n)) {
      index.emplace(std::pair(e, m), c0.size());
      c0.emplace_back(e, m);
    }
  std::vector<CrossedChain> columns;
  for (const auto& t : bar_basis(space, 1, n)) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        CrossedChain f;
        f.k = 1;
        f.add({a, b}, t, Scalar(1));
        columns.push_back(crossed_differential(f, g));
      }
  }
  SparseMatrix m(c0.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [key, v] : columns[c].terms) m.set(index.at({key.first[0], key.second[0]}), c, v);
  return c0.size() - rank(m);
}

}  // namespace loophh
