#include "loophh/hochschild.hpp"

#include <cstdlib>
#include <string>

#include "loophh/error.hpp"
#include "loophh/linalg.hpp"
#include "loophh/parallel.hpp"

namespace loophh {

void TensorChain::add(const Tensor& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void TensorChain::add(const TensorChain& other, const Scalar& c) {
  for (const auto& [t, v] : other.terms) add(t, c * v);
}

int TensorChain::degree() const {
  if (terms.empty()) return -1;
  int d = 0;
  for (const auto& e : terms.begin()->first) d += total_degree(e);
  return d;
}

Polynomial compose(const Exponents& a, const Matrix& g) {
  const std::size_t n = a.size();
  if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimensionMismatch, "composition matrix size");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = g(i, j);
    images.push_back(Polynomial::linear(row));
  }
  return Polynomial::monomial(a).substitute(images);
}

namespace {

class ComposeCache {
 public:
  explicit ComposeCache(const Matrix& g) : g_(g), identity_(g.is_identity()) {}
  const Polynomial& operator()(const Exponents& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    Polynomial p = identity_ ? Polynomial::monomial(a) : compose(a, g_);
    return cache_.emplace(a, std::move(p)).first->second;
  }

 private:
  const Matrix& g_;
  bool identity_;
  std::map<Exponents, Polynomial> cache_;
};

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

void apply_bar(const Tensor& t, const Scalar& c, ComposeCache& twist, TensorChain& out) {
  const std::size_t k = t.size() - 1;
  for (std::size_t i = 0; i < k; ++i) {
    Tensor face;
    face.reserve(k);
    for (std::size_t s = 0; s < i; ++s) face.push_back(t[s]);
    face.push_back(product(t[i], t[i + 1]));
    for (std::size_t s = i + 2; s <= k; ++s) face.push_back(t[s]);
    out.add(face, i % 2 == 0 ? c : -c);
  }
  const Scalar last = k % 2 == 0 ? c : -c;
  for (const auto& [e, v] : twist(t[k]).terms()) {
    Tensor face;
    face.reserve(k);
    face.push_back(product(e, t[0]));
    for (std::size_t s = 1; s < k; ++s) face.push_back(t[s]);
    out.add(face, last * v);
  }
}

}  // namespace

TensorChain act_slots(const TensorChain& c, const std::vector<Matrix>& slot_maps) {
  TensorChain out(c.space, c.k);
  for (const auto& [t, v] : c.terms) {
    std::map<Tensor, Scalar> partial{{Tensor{}, v}};
    for (std::size_t s = 0; s < t.size(); ++s) {
      std::map<Tensor, Scalar> next;
      if (s >= slot_maps.size() || slot_maps[s].rows() == 0) {
        for (auto& [pt, pv] : partial) {
          Tensor ext = pt;
          ext.push_back(t[s]);
          next.emplace(std::move(ext), pv);
        }
      } else {
        Polynomial img = compose(t[s], slot_maps[s]);
        for (auto& [pt, pv] : partial)
          for (const auto& [e, ev] : img.terms()) {
            Tensor ext = pt;
            ext.push_back(e);
            auto [it, inserted] = next.try_emplace(std::move(ext), pv * ev);
            if (!inserted) it->second += pv * ev;
          }
      }
      partial = std::move(next);
    }
    for (const auto& [pt, pv] : partial) out.add(pt, pv);
  }
  return out;
}

TensorChain bar_differential_twisted(const TensorChain& c, const Matrix& h) {
  TensorChain out(c.space, c.k - 1);
  if (c.k == 0) return out;
  const Matrix full = variable_matrix(c.space, h);
  ComposeCache twist(full);
  for (const auto& [t, v] : c.terms) {
    if (static_cast<int>(t.size()) != c.k + 1) throw Error(ErrorCode::DimensionMismatch, "tensor length differs from k+1");
    apply_bar(t, v, twist, out);
  }
  return out;
}

BarGuard BarGuard::from_environment() {
  BarGuard g;
  auto read = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) {
      try {
        slot = static_cast<std::remove_reference_t<decltype(slot)>>(std::stoll(v));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, std::string("cannot parse ") + name + "=" + v);
      }
    }
  };
  read("LOOPHH_MAX_FORM_DEGREE", g.max_k);
  read("LOOPHH_MAX_DEGREE", g.max_n);
  read("LOOPHH_MAX_PIECE", g.max_piece);
  return g;
}

std::size_t bar_piece_dimension(const CoordinateSpace& space, int k, int n) {
  if (k < 0) return 0;
  return monomial_count(static_cast<std::size_t>(k + 1) * space.num_vars(), n);
}

void BarGuard::check(const CoordinateSpace& space, int k, int n) const {
  const std::size_t here = bar_piece_dimension(space, k, n);
  const std::size_t above = bar_piece_dimension(space, k + 1, n);
  if (k > max_k || n > max_n || here > max_piece || above > max_piece) {
    throw Error(ErrorCode::SizeGuardExceeded,
                "bar complex at (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ") has pieces of size " +
                    std::to_string(here) + " and " + std::to_string(above) + "; limits k<=" + std::to_string(max_k) +
                    ", n<=" + std::to_string(max_n) + ", piece<=" + std::to_string(max_piece));
  }
}

std::vector<Tensor> bar_basis(const CoordinateSpace& space, int k, int n) {
  std::vector<Tensor> out;
  if (k < 0) return out;
  const std::size_t nv = space.num_vars();
  for (const auto& e : monomials_of_degree(static_cast<std::size_t>(k + 1) * nv, n)) {
    Tensor t;
    for (int s = 0; s <= k; ++s)
      t.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(s * nv), e.begin() + static_cast<std::ptrdiff_t>((s + 1) * nv));
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

SparseMatrix bar_matrix(const CoordinateSpace& space, const Matrix& full, int k, int n) {
  const auto src = bar_basis(space, k, n);
  const auto dst = bar_basis(space, k - 1, n);
  std::map<Tensor, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
  SparseMatrix m(dst.size(), src.size());
  ComposeCache twist(full);
  for (std::size_t c = 0; c < src.size(); ++c) {
    TensorChain img(space, k - 1);
    apply_bar(src[c], Scalar(1), twist, img);
    for (const auto& [t, v] : img.terms) m.set(index.at(t), c, v);
  }
  return m;
}

}  // namespace

std::size_t brute_twisted_hh(const CoordinateSpace& space, const Matrix& h, int k, int n, const BarGuard& guard,
                             unsigned jobs) {
  if (k < 0 || n < 0) return 0;
  guard.check(space, k, n);
  const Matrix full = variable_matrix(space, h);
  std::size_t ranks[2] = {0, 0};
  parallel_for(2, jobs, [&](std::size_t i) {
    const int kk = k + static_cast<int>(i);
    if (kk == 0) return;
    ranks[i] = rank(bar_matrix(space, full, kk, n));
  });
  return bar_piece_dimension(space, k, n) - ranks[0] - ranks[1];
}

Matrix fixed_chart(const CoordinateSpace& space, const Matrix& gamma) {
  const Matrix full = variable_matrix(space, gamma);
  return Matrix::from_columns(full.rows(), fixed_subspace(full));
}

CoordinateSpace chart_space(const CoordinateSpace& space, const Matrix& chart) {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < chart.cols(); ++c) {
    std::size_t hit = chart.rows();
    bool unit = true;
    for (std::size_t r = 0; r < chart.rows(); ++r) {
      if (chart(r, c).is_zero()) continue;
      if (hit != chart.rows() || !chart(r, c).is_one()) unit = false;
      hit = r;
    }
    if (!unit || hit == chart.rows()) {
      names.clear();
      break;
    }
    names.push_back(space.variable_name(hit));
  }
  if (names.empty() && chart.cols() > 0) {
    for (std::size_t c = 0; c < chart.cols(); ++c) names.push_back("y" + std::to_string(c + 1));
  }
  return CoordinateSpace::real(chart.cols(), std::move(names));
}

PolyForm hkr_map(const TensorChain& c, const Matrix& gamma) {
  PolyForm form(c.space);
  for (const auto& [t, v] : c.terms) {
    PolyForm term = PolyForm::monomial(c.space, t[0], {}, v);
    for (std::size_t s = 1; s < t.size(); ++s) {
      term = wedge(term, d_rel(PolyForm::monomial(c.space, t[s], {})));
      if (term.is_zero()) break;
    }
    form += term;
  }
  const Matrix chart = fixed_chart(c.space, gamma);
  return pullback_linear(chart, form, chart_space(c.space, chart));
}

bool EquivariantChain::is_zero() const {
  for (const auto& [g, c] : values)
    if (!c.is_zero()) return false;
  return true;
}

bool operator==(const EquivariantChain& a, const EquivariantChain& b) {
  auto nonzero = [](const EquivariantChain& x) {
    std::map<std::size_t, std::map<Tensor, Scalar>> out;
    for (const auto& [g, c] : x.values)
      if (!c.is_zero()) out.emplace(g, c.terms);
    return out;
  };
  return nonzero(a) == nonzero(b);
}

EquivariantChain twisted_equivariant_differential(const EquivariantChain& f, const FiniteGroup& g) {
  EquivariantChain out;
  out.k = f.k - 1;
  for (const auto& [e, chain] : f.values) {
    TensorChain img = bar_differential_twisted(chain, g.element(e));
    if (!img.is_zero()) out.values.emplace(e, std::move(img));
  }
  return out;
}

TensorChain act_diagonal(const FiniteGroup& g, std::size_t h, const TensorChain& c) {
  const Matrix& inv = g.variable_action(g.inverse(h));
  return act_slots(c, std::vector<Matrix>(static_cast<std::size_t>(c.k + 1), inv));
}

bool is_invariant(const EquivariantChain& f, const FiniteGroup& g) {
  const TensorChain empty(g.space(), f.k);
  auto value = [&](std::size_t e) -> const TensorChain& {
    auto it = f.values.find(e);
    return it == f.values.end() ? empty : it->second;
  };
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t h = 0; h < g.order(); ++h)
      if (!(value(g.conjugate(h, e)).terms == act_diagonal(g, h, value(e)).terms)) return false;
  return true;
}

EquivariantChain average_invariant(const EquivariantChain& f, const FiniteGroup& g) {
  EquivariantChain out;
  out.k = f.k;
  const Scalar scale = Scalar(1) / Scalar(static_cast<long>(g.order()));
  for (std::size_t e = 0; e < g.order(); ++e) {
    TensorChain acc(g.space(), f.k);
    for (std::size_t h = 0; h < g.order(); ++h) {
      auto it = f.values.find(g.conjugate(g.inverse(h), e));
      if (it == f.values.end()) continue;
      acc.add(act_diagonal(g, h, it->second), scale);
    }
    if (!acc.is_zero()) out.values.emplace(e, std::move(acc));
  }
  return out;
}

}  // namespace loophh
