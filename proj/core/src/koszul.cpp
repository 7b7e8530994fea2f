#include "loophh/koszul.hpp"

#include <algorithm>

#include "loophh/error.hpp"
#include "loophh/linalg.hpp"
#include "loophh/parallel.hpp"

namespace loophh {

std::size_t HomologyReport::dim(int k, int n) const {
  for (const auto& e : table)
    if (e.k == k && e.n == n) return e.dim;
  return 0;
}

void HomologyReport::set(int k, int n, std::size_t d) {
  for (auto& e : table) {
    if (e.k == k && e.n == n) {
      e.dim = d;
      return;
    }
  }
  table.push_back(HomologyEntry{k, n, d, {}});
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    return std::pair(a.k, a.n) < std::pair(b.k, b.n);
  });
}

GradedComplex::GradedComplex(PolyVectorField field, int nmax, std::string label, std::vector<bool> poly_mask,
                             std::vector<bool> form_mask, unsigned jobs)
    : field_(std::move(field)), nmax_(nmax), label_(std::move(label)), poly_mask_(std::move(poly_mask)),
      form_mask_(std::move(form_mask)) {
  top_ = form_mask_.empty() ? static_cast<int>(field_.space.num_vars())
                            : static_cast<int>(std::count(form_mask_.begin(), form_mask_.end(), true));
  std::vector<std::pair<int, int>> keys;
  for (int k = 0; k <= top_; ++k)
    for (int n = k; n <= nmax_; ++n) keys.emplace_back(k, n);
  std::vector<SparseMatrix> mats(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) {
    auto [k, n] = keys[i];
    GradedPiece src = piece(k, n);
    if (k == 0) {
      mats[i] = SparseMatrix(0, src.size());
      return;
    }
    mats[i] = operator_matrix(src, piece(k - 1, n), [&](const PolyForm& f) { return contract(field_, f); });
  });
  for (std::size_t i = 0; i < keys.size(); ++i) diffs_.emplace(keys[i], std::move(mats[i]));
}

GradedPiece GradedComplex::piece(int k, int n) const {
  return GradedPiece(field_.space, k, n, poly_mask_, form_mask_);
}

const SparseMatrix& GradedComplex::differential(int k, int n) const {
  auto it = diffs_.find({k, n});
  if (it == diffs_.end()) {
    throw Error(ErrorCode::DimensionMismatch,
                "no differential stored at (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  return it->second;
}

bool GradedComplex::composes_to_zero() const {
  for (const auto& [key, m] : diffs_) {
    auto [k, n] = key;
    if (k < 2) continue;
    if (!(differential(k - 1, n) * m).is_zero()) return false;
  }
  return true;
}

GradedComplex build_twisted_koszul(const CoordinateSpace& space, const Matrix& h, int nmax, unsigned jobs) {
  return GradedComplex(PolyVectorField::twisted(space, h), nmax, "twisted " + h.to_string(), {}, {}, jobs);
}

HomologyReport homology(const GradedComplex& c, int kmax, int nmax, unsigned jobs, bool representatives) {
  if (nmax > c.nmax()) throw Error(ErrorCode::DimensionMismatch, "homology requested beyond the built degree");
  std::vector<std::pair<int, int>> keys;
  for (int k = 0; k <= std::min(kmax, c.top_degree()); ++k)
    for (int n = k; n <= nmax; ++n) keys.emplace_back(k, n);
  std::vector<std::size_t> ranks(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) {
    ranks[i] = rank(c.differential(keys[i].first, keys[i].second));
  });
  auto rank_at = [&](int k, int n) -> std::size_t {
    if (k > c.top_degree() || k > n) return 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == std::pair(k, n)) return ranks[i];
    return rank(c.differential(k, n));
  };
  HomologyReport out;
  out.stratum = c.label();
  for (int k = 0; k <= kmax; ++k) {
    for (int n = k; n <= nmax; ++n) {
      HomologyEntry e{k, n, 0, {}};
      if (k <= c.top_degree()) {
        const std::size_t size = c.piece(k, n).size();
        e.dim = size - rank_at(k, n) - rank_at(k + 1, n);
        if (representatives && e.dim > 0) {
          GradedPiece piece = c.piece(k, n);
          std::vector<Vector> span;
          if (k + 1 <= c.top_degree() && k + 1 <= n) {
            const SparseMatrix& up = c.differential(k + 1, n);
            Matrix dense = up.to_dense();
            for (std::size_t j = 0; j < dense.cols(); ++j) span.push_back(dense.column(j));
          }
          std::size_t r = rank_of_vectors(span, size);
          for (auto& v : kernel_basis(c.differential(k, n))) {
            span.push_back(v);
            const std::size_t r2 = rank_of_vectors(span, size);
            if (r2 > r) {
              e.representatives.push_back(piece.combination(v));
              r = r2;
            } else {
              span.pop_back();
            }
          }
        }
      }
      out.table.push_back(std::move(e));
    }
  }
  return out;
}

std::size_t fixed_form_dimension(std::size_t f, int k, int n) {
  if (k < 0 || n < k) return 0;
  return binomial(f, static_cast<std::size_t>(k)) * monomial_count(f, n - k);
}

namespace {

Matrix diagonal_action(const CoordinateSpace& space, const Matrix& h) {
  Matrix full = variable_matrix(space, h);
  if (!full.is_diagonal()) throw Error(ErrorCode::NotDiagonal, "homotopy needs h diagonal in the coordinates");
  return full;
}

bool fixed_only(const FormKey& key, const std::vector<bool>& fixed) {
  for (std::size_t j = 0; j < fixed.size(); ++j)
    if (!fixed[j] && key.exps[j] != 0) return false;
  for (int i : key.dx)
    if (!fixed[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

PolyForm fixed_projection(const Matrix& h, const PolyForm& a) {
  const Matrix full = diagonal_action(a.space(), h);
  std::vector<bool> fixed(full.rows());
  for (std::size_t j = 0; j < fixed.size(); ++j) fixed[j] = full(j, j).is_one();
  PolyForm out(a.space());
  for (const auto& [key, c] : a.terms())
    if (fixed_only(key, fixed)) out.add_key(key, c);
  return out;
}

PolyForm koszul_homotopy(const Matrix& h, const PolyForm& a) {
  const Matrix full = diagonal_action(a.space(), h);
  const std::size_t nv = full.rows();
  std::vector<bool> fixed(nv), moving(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    fixed[j] = full(j, j).is_one();
    moving[j] = !fixed[j];
  }
  PolyForm out(a.space());
  for (const auto& [key, coeff] : a.terms()) {
    if (fixed_only(key, fixed)) continue;
    Scalar c;
    for (std::size_t j = 0; j < nv; ++j) {
      if (fixed[j]) continue;
      const long mult = key.exps[j] + (std::find(key.dx.begin(), key.dx.end(), static_cast<int>(j)) != key.dx.end());
      if (mult) c += Scalar(mult) * (Scalar(1) - full(j, j));
    }
    if (c.is_zero()) throw Error(ErrorCode::ResonantWeight, "vanishing weight on a non-fixed monomial");
    PolyForm term(a.space());
    term.add_key(key, coeff);
    PolyForm dw = d_rel(term, moving);
    dw *= c.inverse();
    out += dw;
  }
  return out;
}

namespace {

PolyVectorField euler_field(const CoordinateSpace& space, const std::vector<std::size_t>& fixed,
                            std::vector<bool>& normal) {
  normal.assign(space.num_vars(), true);
  for (std::size_t f : fixed) {
    if (f >= space.num_vars()) throw Error(ErrorCode::DimensionMismatch, "fixed index out of range");
    normal[f] = false;
  }
  Vector c(space.num_vars());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = normal[j] ? Scalar(1) : Scalar(0);
  return PolyVectorField::diagonal(space, c);
}

}  // namespace

HomologyReport euler_koszul_check(const CoordinateSpace& space, const std::vector<std::size_t>& fixed, int kmax,
                                  int nmax, unsigned jobs) {
  std::vector<bool> normal;
  GradedComplex c(euler_field(space, fixed, normal), nmax, "euler", {}, {}, jobs);
  return homology(c, kmax, nmax, jobs);
}

HomologyReport parametrized_euler_koszul(const CoordinateSpace& space, const std::vector<std::size_t>& fixed,
                                         int kmax, int nmax, unsigned jobs) {
  std::vector<bool> normal;
  PolyVectorField y = euler_field(space, fixed, normal);
  GradedComplex c(std::move(y), nmax, "euler-normal", {}, normal, jobs);
  return homology(c, kmax, nmax, jobs);
}

CoordinateSpace stratum_space(const CircleStratum& s) {
  std::vector<std::string> labels;
  for (std::size_t k : s.fixed) labels.push_back("z" + std::to_string(k + 1));
  return CoordinateSpace::complex_pairs(s.fixed.size(), std::move(labels));
}

PolyVectorField isotropy_field(const CircleAction& a, const CircleStratum& s) {
  const std::size_t f = s.fixed.size();
  Vector c(2 * f);
  for (std::size_t i = 0; i < f; ++i) {
    c[i] = Scalar(a.weights[s.fixed[i]]);
    c[f + i] = Scalar(-a.weights[s.fixed[i]]);
  }
  return PolyVectorField::diagonal(stratum_space(s), c);
}

HomologyReport circle_stalk_homology(const CircleAction& a, const CircleStratum& s, int kmax, int nmax,
                                     unsigned jobs) {
  // Directions moved at t0: Koszul complex of Y at t0 itself (evaluated at a generic witness t = 1/(2w)).
  std::vector<std::size_t> moving;
  for (std::size_t k = 0; k < a.weights.size(); ++k)
    if (std::find(s.fixed.begin(), s.fixed.end(), k) == s.fixed.end()) moving.push_back(k);
  std::vector<std::string> labels;
  Vector diag;
  for (std::size_t k : moving) {
    labels.push_back("z" + std::to_string(k + 1));
    diag.push_back(s.generic ? Scalar::root_of_unity(2 * a.w, a.weights[k])
                             : Scalar::root_of_unity(a.w, static_cast<long>(a.weights[k]) * s.j));
  }
  const CoordinateSpace moving_space = CoordinateSpace::complex_pairs(moving.size(), labels);
  const int moving_top = static_cast<int>(2 * moving.size());
  HomologyReport h1 =
      homology(build_twisted_koszul(moving_space, Matrix::diagonal(diag), nmax, jobs), moving_top, nmax, jobs);

  // Fixed directions: the E-Koszul complex is exact above degree 0, so ker i_E = im i_E there.
  const CoordinateSpace fixed_space = stratum_space(s);
  const PolyVectorField e = isotropy_field(a, s);
  const int fixed_top = static_cast<int>(fixed_space.num_vars());
  std::map<std::pair<int, int>, std::size_t> f;
  std::vector<std::pair<int, int>> keys;
  for (int k = 0; k <= std::min(kmax, fixed_top); ++k)
    for (int n = k; n <= nmax; ++n) keys.emplace_back(k, n);
  std::vector<std::size_t> dims(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) {
    auto [k, n] = keys[i];
    if (k == 0) {
      dims[i] = monomial_count(fixed_space.num_vars(), n);
      return;
    }
    if (k + 1 > fixed_top || k + 1 > n) {
      dims[i] = 0;
      return;
    }
    GradedPiece src(fixed_space, k + 1, n), dst(fixed_space, k, n);
    dims[i] = rank(operator_matrix(src, dst, [&](const PolyForm& w) { return contract(e, w); }));
  });
  for (std::size_t i = 0; i < keys.size(); ++i) f[keys[i]] = dims[i];

  HomologyReport out;
  out.stratum = s.label;
  for (int k = 0; k <= kmax; ++k) {
    for (int n = k; n <= nmax; ++n) {
      std::size_t total = 0;
      for (const auto& h : h1.table) {
        auto it = f.find({k - h.k, n - h.n});
        if (h.dim && it != f.end()) total += h.dim * it->second;
      }
      out.table.push_back(HomologyEntry{k, n, total, {}});
    }
  }
  return out;
}

HomologyReport circle_stalk_homology(const CircleAction& a, int j, int kmax, int nmax, unsigned jobs) {
  if (j < 0 || j >= a.w) {
    throw Error(ErrorCode::NotASingularPoint, "j=" + std::to_string(j) + " is not in [0, " + std::to_string(a.w) + ")");
  }
  return circle_stalk_homology(a, circle_singular_points(a)[static_cast<std::size_t>(j)], kmax, nmax, jobs);
}

}  // namespace loophh
