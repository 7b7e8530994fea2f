#include <doctest.h>

#include "loophh/error.hpp"
#include "loophh/groups.hpp"
#include "loophh/linalg.hpp"

using namespace loophh;

namespace {

Matrix diag(std::initializer_list<Scalar> d) { return Matrix::diagonal(Vector(d)); }

const Matrix kMinusI2 = diag({Scalar(-1), Scalar(-1)});

Matrix quarter_turn() { return Matrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}); }

bool same_columns(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  return rank_of_vectors(a, a.empty() ? 0 : a[0].size()) == a.size() && a.size() == b.size() &&
         quotient_dim(a, b, a.empty() ? 0 : a[0].size()) == 0;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(close_generators(CoordinateSpace::real(2), {kMinusI2}).order() == 2);
  CHECK(close_generators(CoordinateSpace::complex_pairs(1), {diag({Scalar::root_of_unity(3)})}).order() == 3);
  CHECK(close_generators(CoordinateSpace::real(2), {quarter_turn()}).order() == 4);
  CHECK(close_generators(CoordinateSpace::real(2), {diag({Scalar::root_of_unity(4), Scalar::root_of_unity(4, 3)})})
            .order() == 4);
  const FiniteGroup d4 = close_generators(CoordinateSpace::real(2), {quarter_turn(), diag({Scalar(1), Scalar(-1)})});
  CHECK(d4.order() == 8);
  CHECK(d4.conjugacy_classes().size() == 5);
  CHECK(d4.element(d4.identity()).is_identity());
  for (std::size_t a = 0; a < d4.order(); ++a) {
    CHECK(d4.multiply(a, d4.inverse(a)) == d4.identity());
    for (std::size_t b = 0; b < d4.order(); ++b)
      CHECK(d4.element(d4.multiply(a, b)) == d4.element(a) * d4.element(b));
  }
}

TEST_CASE("closure errors") {
  const CoordinateSpace r2 = CoordinateSpace::real(2);
  CHECK_THROWS_WITH_AS(close_generators(r2, {Matrix(2, 2)}), doctest::Contains("NonInvertibleGenerator"), Error);
  CHECK_THROWS_WITH_AS(close_generators(r2, {diag({Scalar(2), Scalar(1)})}), doctest::Contains("NonUnitary"), Error);
  CHECK_THROWS_WITH_AS(close_generators(r2, {quarter_turn()}, 3), doctest::Contains("NotClosedWithinBound"), Error);
  CHECK_THROWS_WITH_AS(close_generators(r2, {Matrix::identity(3)}), doctest::Contains("DimensionMismatch"), Error);
  CHECK_THROWS_WITH_AS(CircleAction::make({0, 1}), doctest::Contains("InvalidInput"), Error);
  CHECK_THROWS_AS(CircleAction::make({}), Error);
}

TEST_CASE("fixed subspaces") {
  CHECK(fixed_subspace(kMinusI2).empty());
  CHECK(fixed_subspace(Matrix::identity(3)).size() == 3);
  // rotation by 2 pi / 3 has entries -1/2 and +-sqrt(3)/2, sqrt(3) = zeta_12 + zeta_12^{-1}
  const Scalar half_sqrt3 = (Scalar::root_of_unity(12) + Scalar::root_of_unity(12, 11)) / Scalar(2);
  const Scalar mhalf = Scalar::fraction(-1, 2);
  const Matrix rot = block_diagonal({Matrix::from_rows({{mhalf, -half_sqrt3}, {half_sqrt3, mhalf}}), Matrix::identity(2)});
  CHECK(is_formally_unitary(rot));
  const auto f = fixed_subspace(rot);
  const Vector e3{Scalar(0), Scalar(0), Scalar(1), Scalar(0)}, e4{Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
  CHECK(same_columns(f, {e3, e4}));
  CHECK(close_generators(CoordinateSpace::real(4), {rot}).order() == 3);
}

TEST_CASE("finite loop space strata") {
  const auto z2 = loop_space_finite(close_generators(CoordinateSpace::real(2), {kMinusI2}));
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].fixed_basis.size() == 2);
  CHECK(z2[1].fixed_basis.size() == 0);
  const auto z3 = loop_space_finite(close_generators(CoordinateSpace::complex_pairs(1), {diag({Scalar::root_of_unity(3)})}));
  REQUIRE(z3.size() == 3);
  CHECK(z3[0].fixed_basis.size() == 2);
  CHECK(z3[1].fixed_basis.empty());
  CHECK(z3[2].fixed_basis.empty());
  const auto triv = loop_space_finite(close_generators(CoordinateSpace::real(3), {}));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].fixed_basis.size() == 3);
}

TEST_CASE("circle singular points") {
  auto fixed_of = [](const std::vector<int>& w) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : circle_singular_points(CircleAction::make(w))) out.push_back(s.fixed);
    return out;
  };
  using F = std::vector<std::vector<std::size_t>>;
  CHECK(fixed_of({1}) == F{{0}, {}});
  CHECK(fixed_of({1, 2}) == F{{0, 1}, {1}, {}});
  CHECK(fixed_of({2, 3}) == F{{0, 1}, {}, {1}, {0}, {1}, {}, {}});
  const auto s = circle_singular_points(CircleAction::make({2, 3}));
  CHECK(s[3].label == "t=1/2");
  CHECK(s[2].label == "t=1/3");
  CHECK(s.back().generic);
  for (const auto& w : std::vector<std::vector<int>>{{1}, {1, 1}, {1, 2}, {2, 3}, {-2, 3}}) {
    const CircleAction a = CircleAction::make(w);
    const auto st = circle_singular_points(a);
    CHECK(st[0].fixed.size() == w.size());
    for (int j = 1; j < a.w; ++j) CHECK(st[static_cast<std::size_t>(j)].fixed == st[static_cast<std::size_t>(a.w - j)].fixed);
  }
}

TEST_CASE("reynolds projector") {
  const FiniteGroup z2 = close_generators(CoordinateSpace::real(2), {kMinusI2});
  CHECK(reynolds_projector(z2, 0, 1).nonzeros() == 0);
  CHECK(reynolds_projector(z2, 1, 2) == SparseMatrix::identity(4));
  CHECK(reynolds_projector(close_generators(CoordinateSpace::real(2), {}), 1, 3) == SparseMatrix::identity(6));
  const FiniteGroup d4 = close_generators(CoordinateSpace::real(2), {quarter_turn(), diag({Scalar(1), Scalar(-1)})});
  const FiniteGroup z3 = close_generators(CoordinateSpace::complex_pairs(2),
                                          {diag({Scalar::root_of_unity(3), Scalar::root_of_unity(3, 2)})});
  for (const FiniteGroup* g : {&d4, &z3}) {
    for (int k = 0; k <= 2; ++k)
      for (int n = k; n <= 3; ++n) {
        const SparseMatrix p = reynolds_projector(*g, k, n);
        CHECK(p * p == p);
        GradedPiece piece(g->space(), k, n);
        for (std::size_t e = 0; e < g->order(); ++e) {
          const SparseMatrix pe = operator_matrix(piece, piece, [&](const PolyForm& w) { return pullback(g->element(e), w); });
          CHECK(pe * p == p);
        }
      }
  }
}

TEST_CASE("strata are conjugation equivariant") {
  const FiniteGroup d4 = close_generators(CoordinateSpace::real(2), {quarter_turn(), diag({Scalar(1), Scalar(-1)})});
  for (const auto& s : loop_space_finite(d4)) {
    for (const auto& v : s.fixed_basis) CHECK(d4.variable_action(s.element) * v == v);
    for (std::size_t h = 0; h < d4.order(); ++h)
      CHECK(fixed_subspace(d4.element(d4.conjugate(h, s.element))).size() == s.fixed_basis.size());
  }
}
