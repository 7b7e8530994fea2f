#include <doctest.h>

#include <random>

#include "loophh/crossed_product.hpp"
#include "loophh/error.hpp"
#include "loophh/hochschild.hpp"
#include "loophh/report.hpp"

using namespace loophh;

namespace {

Matrix diag(std::initializer_list<Scalar> d) { return Matrix::diagonal(Vector(d)); }

const CoordinateSpace R1 = CoordinateSpace::real(1);
const CoordinateSpace R2 = CoordinateSpace::real(2);

TensorChain chain(const CoordinateSpace& s, Tensor t, const Scalar& c = Scalar(1)) {
  TensorChain out(s, static_cast<int>(t.size()) - 1);
  out.add(t, c);
  return out;
}

TensorChain random_chain(std::mt19937& rng, const CoordinateSpace& s, int k, int n) {
  TensorChain c(s, k);
  const auto basis = bar_basis(s, k, n);
  for (int i = 0; i < 5; ++i) c.add(basis[rng() % basis.size()], Scalar(static_cast<long>(rng() % 7) - 3));
  return c;
}

FiniteGroup dihedral8() {
  return close_generators(R2, {Matrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}),
                               diag({Scalar(1), Scalar(-1)})});
}

}  // namespace

TEST_CASE("bar differential examples") {
  const Matrix minus = diag({Scalar(-1)});
  CHECK(bar_differential_twisted(chain(R1, {{1}, {1}}), minus) == chain(R1, {{2}}, Scalar(2)));
  CHECK(bar_differential_twisted(chain(R1, {{1}, {1}}), Matrix::identity(1)).is_zero());
  const Matrix h = Matrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}});
  // b(1 ⊗ x1) = x1 - x1∘h = x1 + x2
  TensorChain expected(R2, 0);
  expected.add({{1, 0}}, Scalar(1));
  expected.add({{0, 1}}, Scalar(1));
  CHECK(bar_differential_twisted(chain(R2, {{0, 0}, {1, 0}}), h) == expected);
}

TEST_CASE("b squared vanishes on random chains") {
  std::mt19937 rng(53);
  const std::vector<std::pair<CoordinateSpace, Matrix>> cases{
      {R2, Matrix::identity(2)},
      {R2, Matrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}})},
      {CoordinateSpace::complex_pairs(1), diag({Scalar::root_of_unity(3)})}};
  for (const auto& [s, h] : cases)
    for (int t = 0; t < 10; ++t) {
      const TensorChain c = random_chain(rng, s, 2 + static_cast<int>(rng() % 2), 3);
      CHECK(bar_differential_twisted(bar_differential_twisted(c, h), h).is_zero());
    }
}

TEST_CASE("brute twisted homology examples") {
  const Matrix minus1 = diag({Scalar(-1)});
  CHECK(brute_twisted_hh(R1, minus1, 0, 0) == 1);
  CHECK(brute_twisted_hh(R1, minus1, 0, 1) == 0);
  CHECK(brute_twisted_hh(R2, diag({Scalar(-1), Scalar(-1)}), 1, 2) == 0);
  CHECK(brute_twisted_hh(R2, Matrix::identity(2), 1, 2) == 4);
}

TEST_CASE("bar guard") {
  BarGuard g;
  CHECK_NOTHROW(g.check(R2, 2, 4));
  CHECK_THROWS_WITH_AS(g.check(R2, 0, 50), doctest::Contains("SizeGuardExceeded"), Error);
  CHECK_THROWS_AS(g.check(R2, 4, 4), Error);
  g.max_piece = 10;
  CHECK_THROWS_AS(brute_twisted_hh(R2, Matrix::identity(2), 1, 2, g), Error);
  CHECK(bar_piece_dimension(R2, 1, 2) == 10);
}

TEST_CASE("hkr map examples") {
  CHECK(hkr_map(chain(R1, {{1}, {1}}), Matrix::identity(1)) ==
        wedge(PolyForm::variable(R1, 0), PolyForm::differential(R1, 0)));
  CHECK(hkr_map(chain(R2, {{0, 0}, {1, 0}, {0, 1}}), Matrix::identity(2)) ==
        wedge(PolyForm::differential(R2, 0), PolyForm::differential(R2, 1)));
  const PolyForm restricted = hkr_map(chain(R2, {{1, 0}, {1, 0}}), diag({Scalar(1), Scalar(-1)}));
  const CoordinateSpace axis = CoordinateSpace::real(1, {"x1"});
  CHECK(restricted == wedge(PolyForm::variable(axis, 0), PolyForm::differential(axis, 0)));
}

TEST_CASE("hkr map annihilates twisted boundaries") {
  std::mt19937 rng(59);
  const std::vector<std::pair<CoordinateSpace, Matrix>> cases{
      {R2, Matrix::identity(2)},
      {R2, diag({Scalar(1), Scalar(-1)})},
      {CoordinateSpace::real(3), diag({Scalar(-1), Scalar(-1), Scalar(1)})},
      {CoordinateSpace::complex_pairs(2), diag({Scalar::root_of_unity(3), Scalar(1)})}};
  for (const auto& [s, g] : cases)
    for (int t = 0; t < 10; ++t) {
      const TensorChain c = random_chain(rng, s, 1 + static_cast<int>(rng() % 2), 3);
      CHECK(hkr_map(bar_differential_twisted(c, g), g).is_zero());
    }
}

TEST_CASE("equivariant differential") {
  const FiniteGroup z2 = close_generators(R1, {diag({Scalar(-1)})});
  EquivariantChain f;
  f.k = 1;
  CHECK(twisted_equivariant_differential(f, z2).is_zero());
  f.values.emplace(1, chain(R1, {{1}, {1}}));
  const EquivariantChain b = twisted_equivariant_differential(f, z2);
  REQUIRE(b.values.count(1));
  CHECK(b.values.at(1) == chain(R1, {{2}}, Scalar(2)));
  EquivariantChain at_id;
  at_id.k = 2;
  at_id.values.emplace(0, chain(R1, {{1}, {1}, {0}}));
  const EquivariantChain b_id = twisted_equivariant_differential(at_id, z2);
  CHECK(b_id.values.size() == 1);
  CHECK(b_id.values.at(0) == chain(R1, {{2}, {0}}));

  std::mt19937 rng(61);
  const FiniteGroup d4 = dihedral8();
  for (int t = 0; t < 5; ++t) {
    EquivariantChain r;
    r.k = 2;
    for (std::size_t e = 0; e < d4.order(); ++e) r.values.emplace(e, random_chain(rng, R2, 2, 2));
    CHECK(twisted_equivariant_differential(twisted_equivariant_differential(r, d4), d4).is_zero());
  }
}

TEST_CASE("qism tilde examples") {
  const FiniteGroup triv = close_generators(R1, {});
  CrossedChain f;
  f.k = 1;
  f.add({0, 0}, {{1}, {2}}, Scalar(3));
  const EquivariantChain t = qism_tilde(f, triv, R1);
  CHECK(t.values.size() == 1);
  CHECK(t.values.at(0) == chain(R1, {{1}, {2}}, Scalar(3)));

  // Z/2, k = 0, F = δ_I · 1: one translate per g, so F̃(I) = 1 and F̃(-I) = 0
  const FiniteGroup z2 = close_generators(R1, {diag({Scalar(-1)})});
  CrossedChain f0;
  f0.k = 0;
  f0.add({0}, {{0}}, Scalar(1));
  const EquivariantChain t0 = qism_tilde(f0, z2, R1);
  CHECK(t0.values.at(0) == chain(R1, {{0}}));
  CHECK(t0.values.count(1) == 0);

  // Z/2, k = 1, F on (I, I) with a_0 ⊗ a_1 = x ⊗ x: h_1 = I gives g = I; the (1/2)-weighted term lands at I
  CrossedChain f1;
  f1.k = 1;
  f1.add({0, 0}, {{1}, {1}}, Scalar(1));
  const EquivariantChain t1 = qism_tilde(f1, z2, R1);
  CHECK(t1.values.size() == 1);
  CHECK(t1.values.at(0) == chain(R1, {{1}, {1}}, Scalar::fraction(1, 2)));
  // F on (-I, I): slot 0 is acted on by g_0^{-1}, so x ↦ -x at g = -I
  CrossedChain f2;
  f2.k = 1;
  f2.add({1, 0}, {{1}, {1}}, Scalar(1));
  CHECK(qism_tilde(f2, z2, R1).values.at(1) == chain(R1, {{1}, {1}}, Scalar::fraction(-1, 2)));
}

TEST_CASE("qism tilde is invariant and a chain map") {
  std::mt19937 rng(67);
  const std::vector<FiniteGroup> groups{close_generators(R1, {diag({Scalar(-1)})}),
                                        close_generators(CoordinateSpace::complex_pairs(1), {diag({Scalar::root_of_unity(3)})}),
                                        dihedral8()};
  for (const auto& g : groups)
    for (int k = 0; k <= 2; ++k)
      for (int t = 0; t < 4; ++t) {
        CrossedChain f;
        f.k = k;
        const auto basis = bar_basis(g.space(), k, 2);
        for (int i = 0; i < 3; ++i) {
          std::vector<std::size_t> el;
          for (int s = 0; s <= k; ++s) el.push_back(rng() % g.order());
          f.add(el, basis[rng() % basis.size()], Scalar(static_cast<long>(rng() % 5) - 2));
        }
        const EquivariantChain ft = qism_tilde(f, g, g.space());
        CHECK(is_invariant(ft, g));
        if (k > 0)
          CHECK(qism_tilde(crossed_differential(f, g), g, g.space()) == twisted_equivariant_differential(ft, g));
        CHECK(crossed_differential(crossed_differential(f, g), g).is_zero());
      }
}

TEST_CASE("finite crossed product homology") {
  const FiniteGroup triv = close_generators(R2, {});
  const CrossedProductReport t = crossed_product_hh_finite(triv, 2, 3);
  for (const auto& e : t.total.table) CHECK(e.dim == GradedPiece(R2, e.k, e.n).size());

  const FiniteGroup z2 = close_generators(R2, {diag({Scalar(-1), Scalar(-1)})});
  const CrossedProductReport r = crossed_product_hh_finite(z2, 2, 4);
  CHECK(r.total.dim(1, 2) == 4);
  CHECK(r.total.dim(0, 0) == 2);
  CHECK(r.per_class.size() == 2);

  const FiniteGroup z3 = close_generators(CoordinateSpace::complex_pairs(1), {diag({Scalar::root_of_unity(3)})});
  CHECK(crossed_product_hh_finite(z3, 0, 0).total.dim(0, 0) == 3);
  CHECK(crossed_product_hh0_brute(z3, 0) == 3);
  CHECK(invariant_strata_forms_dimension(z3, 0, 0) == 3);

  const FiniteGroup d4 = dihedral8();
  const CrossedProductReport rd = crossed_product_hh_finite(d4, 2, 3);
  for (const auto& e : rd.total.table) CHECK(e.dim == invariant_strata_forms_dimension(d4, e.k, e.n));
  for (int n = 0; n <= 2; ++n) CHECK(rd.total.dim(0, n) == crossed_product_hh0_brute(d4, n));
}

TEST_CASE("chain serialization") {
  TensorChain c(R2, 1);
  c.add({{1, 0}, {0, 2}}, Scalar::fraction(3, 4));
  CHECK(to_json_text(c) == "[\n  {\n    \"coeff\": \"3/4\",\n    \"monomials\": [\n      \"x1\",\n      \"x2^2\"\n    ]\n  }\n]\n");
}
