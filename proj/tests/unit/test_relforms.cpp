#include <doctest.h>

#include "loophh/crossed_product.hpp"
#include "loophh/koszul.hpp"
#include "loophh/linalg.hpp"
#include "loophh/relforms.hpp"

using namespace loophh;

namespace {

CircleStratum stratum(const CircleAction& a, std::size_t i) { return circle_singular_points(a)[i]; }

}  // namespace

TEST_CASE("horizontal forms") {
  const CircleAction one = CircleAction::make({1});
  const CircleStratum s0 = stratum(one, 0);
  const auto h = horizontal_basis(one, s0, 1, 2);
  REQUIRE(h.size() == 1);
  const CoordinateSpace sp = stratum_space(s0);
  const PolyForm w = wedge(PolyForm::variable(sp, 1), PolyForm::differential(sp, 0)) +
                     wedge(PolyForm::variable(sp, 0), PolyForm::differential(sp, 1));
  GradedPiece piece(sp, 1, 2);
  CHECK(rank_of_vectors({piece.coordinates(h[0]), piece.coordinates(w)}, piece.size()) == 1);
  CHECK(horizontal_basis(one, s0, 0, 3).size() == monomial_count(2, 3));

  const CircleAction a12 = CircleAction::make({1, 2});
  const CircleStratum s1 = stratum(a12, 1);
  CHECK(s1.fixed == std::vector<std::size_t>{1});
  CHECK(horizontal_basis(a12, s1, 1, 2).size() == 1);
  for (const auto& f : horizontal_basis(a12, s1, 2, 4)) CHECK(contract(isotropy_field(a12, s1), f).is_zero());
}

TEST_CASE("basic forms") {
  const CircleAction one = CircleAction::make({1});
  const CircleStratum s0 = stratum(one, 0);
  CHECK(basic_basis(one, s0, 1, 2).size() == 1);
  CHECK(basic_basis(one, s0, 0, 0).size() == 1);
  CHECK(form_weight(one, s0, FormKey{{1, 0}, {0}}) == 2);
  CHECK(form_weight(one, s0, FormKey{{0, 1}, {0}}) == 0);
  const CircleAction a23 = CircleAction::make({2, 3});
  for (const auto& s : circle_singular_points(a23))
    for (const auto& f : basic_basis(a23, s, 2, 4))
      for (const auto& [key, v] : f.terms()) CHECK(form_weight(a23, s, key) == 0);
}

TEST_CASE("vanishing ideal") {
  const CircleAction one = CircleAction::make({1});
  const IdealCheckReport r = vanishing_ideal_check(one, stratum(one, 0), 3);
  CHECK(r.ok());
  for (const auto& row : r.rows) {
    if (row.model == "origin" && row.degree == 2) {
      CHECK(row.generator_dim == 2);
      CHECK(row.kernel_dim == 2);
    }
    if (row.degree == 0) CHECK(row.generator_dim == 0);
  }
  const CircleAction a12 = CircleAction::make({1, 2});
  for (const auto& s : circle_singular_points(a12)) CHECK(vanishing_ideal_check(a12, s, 3).ok());
}

TEST_CASE("theta injectivity") {
  const CircleAction one = CircleAction::make({1});
  const CircleStratum s0 = stratum(one, 0);
  CHECK(theta_injectivity_check(one, s0, 1, 2).ok());
  const ThetaReport top = theta_injectivity_check(one, s0, 3, 4);
  for (const auto& row : top.rows) {
    CHECK(row.quotient_dim == 0);
    CHECK(row.restricted_dim == 0);
  }
  CHECK(theta_injectivity_check(one, s0, 0, 3).ok());
}

TEST_CASE("basic forms tables") {
  CHECK(basic_forms_table(CircleAction::make({1}), 1, 1).rows.size() == 2 * 3);
  const CircleAction a23 = CircleAction::make({2, 3});
  const BasicFormsTable t = basic_forms_table(a23, 2, 4, 3);
  const auto strata = circle_singular_points(a23);
  const std::size_t per = t.rows.size() / strata.size();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    CHECK(r.basic <= r.horizontal);
    CHECK(r.horizontal <= r.relative);
    const std::size_t j = i / per;
    if (j > 0 && j < 6) {
      const auto& mirror = t.rows[(6 - j) * per + i % per];
      CHECK(mirror.horizontal == r.horizontal);
      CHECK(mirror.basic == r.basic);
    }
  }
  const CircleAction a12 = CircleAction::make({1, 2});
  const BasicFormsTable t12 = basic_forms_table(a12, 2, 3);
  CHECK(t12.rows.size() == 3 * 9);
  for (const auto& s : circle_singular_points(a12)) {
    const HomologyReport stalk = circle_stalk_homology(a12, s, 2, 3);
    for (const auto& r : t12.rows)
      if (r.stratum == s.label) CHECK(r.horizontal == stalk.dim(r.k, r.n));
  }
}

TEST_CASE("finite group table agrees with crossed product output") {
  const FiniteGroup z2 =
      close_generators(CoordinateSpace::real(2), {Matrix::diagonal({Scalar(-1), Scalar(-1)})});
  const BasicFormsTable t = basic_forms_table(z2, 2, 4);
  const CrossedProductReport cp = crossed_product_hh_finite(z2, 2, 4);
  std::size_t i = 0;
  for (const auto& pc : cp.per_class)
    for (const auto& e : pc.table) {
      REQUIRE(i < t.rows.size());
      CHECK(t.rows[i].stratum == pc.stratum);
      CHECK(t.rows[i].basic == e.dim);
      CHECK(t.rows[i].horizontal == t.rows[i].relative);
      ++i;
    }
  CHECK(i == t.rows.size());
}
