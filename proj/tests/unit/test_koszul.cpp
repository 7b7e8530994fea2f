#include <doctest.h>

#include <random>

#include "loophh/error.hpp"
#include "loophh/koszul.hpp"
#include "loophh/linalg.hpp"

using namespace loophh;

namespace {

Matrix diag(std::initializer_list<Scalar> d) { return Matrix::diagonal(Vector(d)); }

const CoordinateSpace R1 = CoordinateSpace::real(1);
const CoordinateSpace R2 = CoordinateSpace::real(2);
const CoordinateSpace R3 = CoordinateSpace::real(3);
const CoordinateSpace C1 = CoordinateSpace::complex_pairs(1);

std::size_t full_dim(const CoordinateSpace& s, int k, int n) { return GradedPiece(s, k, n).size(); }

}  // namespace

TEST_CASE("twisted Koszul differentials") {
  const GradedComplex id = build_twisted_koszul(R2, Matrix::identity(2), 4);
  for (int k = 1; k <= 2; ++k)
    for (int n = k; n <= 4; ++n) CHECK(id.differential(k, n).nonzeros() == 0);

  const GradedComplex minus = build_twisted_koszul(R2, diag({Scalar(-1), Scalar(-1)}), 3);
  const SparseMatrix& d11 = minus.differential(1, 1);
  CHECK(d11.to_dense() == Matrix::from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(2)}}));
  CHECK(minus.composes_to_zero());

  const Scalar z = Scalar::root_of_unity(3);
  const GradedComplex rot = build_twisted_koszul(C1, diag({z}), 2);
  // basis of (1,1): dz, dz̄; of (0,1): z, z̄
  CHECK(rot.differential(1, 1).to_dense() ==
        Matrix::from_rows({{Scalar(1) - z, Scalar(0)}, {Scalar(0), Scalar(1) - z.conj()}}));
}

TEST_CASE("twisted Koszul homology examples") {
  const HomologyReport minus = homology(build_twisted_koszul(R2, diag({Scalar(-1), Scalar(-1)}), 4), 2, 4);
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= 4; ++n) CHECK(minus.dim(k, n) == (k == 0 && n == 0 ? 1u : 0u));

  const HomologyReport id = homology(build_twisted_koszul(R2, Matrix::identity(2), 4), 2, 4);
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= 4; ++n) CHECK(id.dim(k, n) == full_dim(R2, k, n));

  const HomologyReport block = homology(build_twisted_koszul(R3, diag({Scalar(-1), Scalar(-1), Scalar(1)}), 4), 3, 4);
  for (int n = 0; n <= 4; ++n) CHECK(block.dim(0, n) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(block.dim(1, n) == 1);
  for (int k = 2; k <= 3; ++k)
    for (int n = k; n <= 4; ++n) CHECK(block.dim(k, n) == 0);
}

TEST_CASE("representatives are cycles") {
  const Matrix h = diag({Scalar(-1), Scalar(1)});
  const GradedComplex c = build_twisted_koszul(R2, h, 3);
  const HomologyReport r = homology(c, 2, 3, 2, true);
  for (const auto& e : r.table) {
    CHECK(e.representatives.size() == e.dim);
    for (const auto& w : e.representatives) CHECK(contract(c.field(), w).is_zero());
  }
}

TEST_CASE("homotopy examples") {
  const Matrix minus1 = diag({Scalar(-1)});
  const PolyForm x = PolyForm::variable(R1, 0);
  CHECK(koszul_homotopy(minus1, x) == Scalar::fraction(1, 2) * PolyForm::differential(R1, 0));

  const PolyForm zdzb = wedge(PolyForm::variable(C1, 0), PolyForm::differential(C1, 1));
  const Matrix rot4 = diag({Scalar::root_of_unity(4)});
  const PolyForm s = koszul_homotopy(rot4, zdzb);
  CHECK(s == Scalar::fraction(1, 2) * wedge(PolyForm::differential(C1, 0), PolyForm::differential(C1, 1)));
  const PolyVectorField y = PolyVectorField::twisted(C1, rot4);
  CHECK(contract(y, s) + koszul_homotopy(rot4, contract(y, zdzb)) == zdzb);

  const Matrix h = diag({Scalar(-1), Scalar(1)});
  const PolyForm fixed = PolyForm::monomial(R2, {0, 3}, {1});
  CHECK(koszul_homotopy(h, fixed).is_zero());
  CHECK(fixed_projection(h, fixed) == fixed);

  CHECK_THROWS_WITH_AS(koszul_homotopy(Matrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}), fixed),
                       doctest::Contains("NotDiagonal"), Error);
}

TEST_CASE("homotopy identity on random forms") {
  std::mt19937 rng(41);
  const std::vector<std::pair<CoordinateSpace, Matrix>> cases{
      {R2, diag({Scalar(-1), Scalar(1)})},
      {CoordinateSpace::complex_pairs(2), diag({Scalar::root_of_unity(3), Scalar(1)})},
      {CoordinateSpace::complex_pairs(1), diag({Scalar::root_of_unity(5, 2)})}};
  for (const auto& [space, h] : cases) {
    const PolyVectorField y = PolyVectorField::twisted(space, h);
    for (int t = 0; t < 15; ++t) {
      const int k = static_cast<int>(rng() % 3), n = k + static_cast<int>(rng() % 3);
      PolyForm w(space);
      for (const auto& b : graded_basis(space, k, n))
        if (rng() % 2) w += Scalar(static_cast<long>(rng() % 7) - 3) * b;
      CHECK(contract(y, koszul_homotopy(h, w)) + koszul_homotopy(h, contract(y, w)) + fixed_projection(h, w) == w);
    }
  }
}

TEST_CASE("Euler field contraction") {
  const HomologyReport all = euler_koszul_check(R2, {0, 1}, 2, 3);
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= 3; ++n) CHECK(all.dim(k, n) == full_dim(R2, k, n));

  const HomologyReport none = euler_koszul_check(R1, {}, 1, 4);
  for (int k = 0; k <= 1; ++k)
    for (int n = k; n <= 4; ++n) CHECK(none.dim(k, n) == (k == 0 && n == 0 ? 1u : 0u));

  const HomologyReport one = euler_koszul_check(R2, {1}, 2, 4);
  for (int n = 0; n <= 4; ++n) CHECK(one.dim(0, n) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(one.dim(1, n) == 1);
  for (int n = 2; n <= 4; ++n) CHECK(one.dim(2, n) == 0);

  // normal directions only: exact above degree 0, functions of the fixed variables at degree 0
  const HomologyReport par = parametrized_euler_koszul(R3, {2}, 2, 4);
  for (int n = 0; n <= 4; ++n) CHECK(par.dim(0, n) == 1);
  for (int k = 1; k <= 2; ++k)
    for (int n = k; n <= 4; ++n) CHECK(par.dim(k, n) == 0);
}

TEST_CASE("circle stalk examples") {
  const CircleAction one = CircleAction::make({1});
  const auto s1 = circle_singular_points(one);
  CHECK(circle_stalk_homology(one, 0, 2, 2).dim(1, 2) == 1);
  const HomologyReport generic = circle_stalk_homology(one, s1.back(), 2, 4);
  for (int k = 0; k <= 2; ++k)
    for (int n = k; n <= 4; ++n) CHECK(generic.dim(k, n) == (k == 0 && n == 0 ? 1u : 0u));

  const CircleAction a12 = CircleAction::make({1, 2});
  CHECK(circle_stalk_homology(a12, 1, 1, 2).dim(0, 0) == 1);
  CHECK_THROWS_WITH_AS(circle_stalk_homology(a12, 2, 1, 2), doctest::Contains("NotASingularPoint"), Error);
  CHECK_THROWS_AS(circle_stalk_homology(a12, -1, 1, 2), Error);
}

TEST_CASE("stalk at t=0 with equal weights matches direct kernel enumeration") {
  for (int w : {1, 3}) {
    const CircleAction a = CircleAction::make({w, w});
    const CircleStratum s = circle_singular_points(a)[0];
    const HomologyReport r = circle_stalk_homology(a, s, 3, 4);
    const CoordinateSpace c2 = CoordinateSpace::complex_pairs(2);
    const PolyVectorField e = PolyVectorField::diagonal(c2, {Scalar(w), Scalar(w), Scalar(-w), Scalar(-w)});
    for (int k = 0; k <= 3; ++k)
      for (int n = k; n <= 4; ++n) {
        const auto basis = graded_basis(c2, k, n);
        std::size_t kernel = basis.size();
        if (k > 0) {
          GradedPiece dst(c2, k - 1, n);
          std::vector<Vector> cols;
          for (const auto& b : basis) cols.push_back(dst.coordinates(contract(e, b)));
          kernel -= rank(Matrix::from_columns(dst.size(), cols), EliminationOptions{1u << 20});
        }
        CHECK(r.dim(k, n) == kernel);
      }
  }
}
