#include "loophh/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "loophh/error.hpp"
#include "loophh/linalg.hpp"

namespace loophh {

bool is_formally_unitary(const Matrix& g) {
  return g.is_square() && (g * g.conj_transpose()).is_identity();
}

std::vector<std::size_t> FiniteGroup::centralizer(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < order(); ++h)
    if (mul_[h][g] == mul_[g][h]) out.push_back(h);
  return out;
}

FiniteGroup close_generators(const CoordinateSpace& space, const std::vector<Matrix>& gens, std::size_t bound) {
  const std::size_t size = space.is_complex() ? space.rank() : space.num_vars();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != size) {
      throw Error(ErrorCode::DimensionMismatch, "generator has size " + std::to_string(g.rows()) + ", expected " +
                                                    std::to_string(size));
    }
    if (rank(g) != size) throw Error(ErrorCode::NonInvertibleGenerator, "generator " + g.to_string() + " is singular");
    if (!is_formally_unitary(g)) throw Error(ErrorCode::NonUnitary, "generator " + g.to_string() + " is not unitary");
  }
  FiniteGroup G;
  G.space_ = space;
  G.elements_.push_back(Matrix::identity(size));
  auto find = [&](const Matrix& m) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < G.elements_.size(); ++i)
      if (G.elements_[i] == m) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix p = G.elements_[a] * g;
      if (find(p) >= 0) continue;
      if (G.elements_.size() >= bound) {
        throw Error(ErrorCode::NotClosedWithinBound, "group exceeds " + std::to_string(bound) + " elements");
      }
      G.elements_.push_back(std::move(p));
      queue.push_back(G.elements_.size() - 1);
    }
  }
  const std::size_t n = G.elements_.size();
  G.mul_.assign(n, std::vector<std::size_t>(n));
  G.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto idx = find(G.elements_[a] * G.elements_[b]);
      if (idx < 0) throw Error(ErrorCode::NotClosedWithinBound, "closure is not multiplicatively closed");
      G.mul_[a][b] = static_cast<std::size_t>(idx);
      if (idx == 0) G.inv_[a] = b;
    }
  }
  for (const auto& m : G.elements_) G.full_.push_back(variable_matrix(space, m));
  G.class_of_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (G.class_of_[g] != n) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) cls.push_back(G.conjugate(h, g));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (std::size_t c : cls) G.class_of_[c] = G.classes_.size();
    G.classes_.push_back(std::move(cls));
  }
  return G;
}

std::vector<Vector> fixed_subspace(const Matrix& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "fixed subspace of a non-square matrix");
  return kernel_basis(g - Matrix::identity(g.rows()));
}

std::vector<FiniteStratum> loop_space_finite(const FiniteGroup& g) {
  std::vector<FiniteStratum> out;
  for (std::size_t e = 0; e < g.order(); ++e) {
    FiniteStratum s;
    s.element = e;
    s.conjugacy_class = g.class_of(e);
    s.fixed_basis = fixed_subspace(g.variable_action(e));
    s.centralizer = g.centralizer(e);
    s.label = "g" + std::to_string(e);
    out.push_back(std::move(s));
  }
  return out;
}

CircleAction CircleAction::make(std::vector<int> weights) {
  if (weights.empty()) throw Error(ErrorCode::InvalidInput, "circle action needs at least one weight");
  CircleAction a;
  a.w = 1;
  for (int x : weights) {
    if (x == 0) throw Error(ErrorCode::InvalidInput, "zero weight is not allowed; split off trivial factors");
    a.w = std::lcm(a.w, std::abs(x));
  }
  a.weights = std::move(weights);
  return a;
}

std::vector<CircleStratum> circle_singular_points(const CircleAction& a) {
  std::vector<CircleStratum> out;
  for (int j = 0; j < a.w; ++j) {
    CircleStratum s;
    s.j = j;
    for (std::size_t k = 0; k < a.weights.size(); ++k) {
      if ((static_cast<long>(j) * a.weights[k]) % a.w == 0) s.fixed.push_back(k);
    }
    const int g = std::gcd(j, a.w);
    s.label = j == 0 ? "t=0" : "t=" + std::to_string(j / g) + "/" + std::to_string(a.w / g);
    out.push_back(std::move(s));
  }
  CircleStratum gen;
  gen.generic = true;
  gen.label = "generic";
  out.push_back(std::move(gen));
  return out;
}

SparseMatrix reynolds_projector(const FiniteGroup& g, int k, int n) {
  GradedPiece piece(g.space(), k, n);
  SparseMatrix sum(piece.size(), piece.size());
  const Scalar scale = Scalar(1) / Scalar(static_cast<long>(g.order()));
  for (std::size_t e = 0; e < g.order(); ++e) {
    const Matrix& m = g.variable_action(e);
    SparseMatrix pm = operator_matrix(piece, piece, [&](const PolyForm& f) { return pullback(m, f); });
    for (std::size_t r = 0; r < pm.rows(); ++r)
      for (const auto& [c, v] : pm.row(r)) sum.add(r, c, v);
  }
  return scale * sum;
}

}  // namespace loophh
