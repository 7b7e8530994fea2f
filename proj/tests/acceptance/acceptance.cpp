#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "loophh/crossed_product.hpp"
#include "loophh/hochschild.hpp"
#include "loophh/koszul.hpp"
#include "loophh/relforms.hpp"
#include "loophh/scenario.hpp"

using namespace loophh;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string witness;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) witness = what;
    pass = pass && ok;
  }
  void expect_eq(std::size_t a, std::size_t b, const std::string& what) {
    expect(a == b, what + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
};

std::string at(const std::string& label, int k, int n) {
  return label + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

Matrix diag(std::initializer_list<Scalar> d) { return Matrix::diagonal(Vector(d)); }

struct Twist {
  std::string label;
  CoordinateSpace space;
  Matrix h;
};

std::vector<Twist> twists() {
  return {{"I on R2", CoordinateSpace::real(2), Matrix::identity(2)},
          {"-I on R1", CoordinateSpace::real(1), diag({Scalar(-1)})},
          {"-I on R2", CoordinateSpace::real(2), diag({Scalar(-1), Scalar(-1)})},
          {"rotation 2pi/3 on C", CoordinateSpace::complex_pairs(1), diag({Scalar::root_of_unity(3)})},
          {"diag(-I2, I1) on R3", CoordinateSpace::real(3), diag({Scalar(-1), Scalar(-1), Scalar(1)})}};
}

struct Group {
  std::string label;
  FiniteGroup g;
};

std::vector<Group> groups() {
  return {{"Z/2 on R2", close_generators(CoordinateSpace::real(2), {diag({Scalar(-1), Scalar(-1)})})},
          {"Z/3 on C", close_generators(CoordinateSpace::complex_pairs(1), {diag({Scalar::root_of_unity(3)})})},
          {"Z/4 on C", close_generators(CoordinateSpace::complex_pairs(1), {diag({Scalar::root_of_unity(4)})})}};
}

Outcome twisted_hkr() {
  Outcome o;
  const BarGuard guard;
  for (const auto& t : twists()) {
    const HomologyReport kz = homology(build_twisted_koszul(t.space, t.h, 4), 2, 4);
    const std::size_t f = fixed_subspace(variable_matrix(t.space, t.h)).size();
    for (int k = 0; k <= 2; ++k)
      for (int n = k; n <= 4; ++n) {
        // C(f, k) * C(n - k + f - 1, f - 1), with the f = 0 case meaning constants only
        const std::size_t closed = binomial(f, static_cast<std::size_t>(k)) *
                                   (f == 0 ? (n == k ? 1u : 0u) : binomial(static_cast<std::size_t>(n - k) + f - 1, f - 1));
        const std::size_t bar = brute_twisted_hh(t.space, t.h, k, n, guard);
        o.expect_eq(kz.dim(k, n), bar, at(t.label + " koszul=bar", k, n));
        o.expect_eq(kz.dim(k, n), closed, at(t.label + " koszul=closed form", k, n));
      }
  }
  return o;
}

Outcome homotopy_identity() {
  Outcome o;
  for (const auto& t : twists()) {
    const PolyVectorField y = PolyVectorField::twisted(t.space, t.h);
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= std::min<int>(n, static_cast<int>(t.space.num_vars())); ++k)
        for (const auto& w : graded_basis(t.space, k, n)) {
          const PolyForm lhs = contract(y, koszul_homotopy(t.h, w)) + koszul_homotopy(t.h, contract(y, w));
          o.expect(lhs == w - fixed_projection(t.h, w), t.label + " on " + w.to_string());
        }
  }
  return o;
}

Outcome finite_crossed_product() {
  Outcome o;
  for (const auto& [label, g] : groups()) {
    const CrossedProductReport r = crossed_product_hh_finite(g, 2, 4);
    for (const auto& e : r.total.table) {
      o.expect_eq(e.dim, invariant_strata_forms_dimension(g, e.k, e.n), at(label + " invariants", e.k, e.n));
      if (e.k == 0) o.expect_eq(e.dim, crossed_product_hh0_brute(g, e.n), at(label + " HH0", e.k, e.n));
    }
  }
  return o;
}

const std::vector<std::vector<int>> kWeights{{1}, {1, 1}, {1, 2}, {2, 3}};

Outcome stalk_equals_horizontal() {
  Outcome o;
  for (const auto& w : kWeights) {
    const CircleAction a = CircleAction::make(w);
    for (const auto& s : circle_singular_points(a)) {
      const HomologyReport r = circle_stalk_homology(a, s, 2, 4);
      for (int k = 0; k <= 2; ++k)
        for (int n = k; n <= 4; ++n)
          o.expect_eq(r.dim(k, n), horizontal_basis(a, s, k, n).size(), at(s.label, k, n));
    }
  }
  return o;
}

Outcome vanishing_ideals() {
  Outcome o;
  for (const auto& w : {std::vector<int>{1}, std::vector<int>{1, 2}}) {
    const CircleAction a = CircleAction::make(w);
    for (const auto& s : circle_singular_points(a))
      for (const auto& row : vanishing_ideal_check(a, s, 4).rows)
        o.expect_eq(row.generator_dim, row.kernel_dim, s.label + " " + row.model + " degree " + std::to_string(row.degree));
  }
  return o;
}

Outcome theta_injective() {
  Outcome o;
  const CircleAction a = CircleAction::make({1});
  for (const auto& s : circle_singular_points(a))
    for (int k = 0; k <= 2; ++k)
      for (const auto& row : theta_injectivity_check(a, s, k, 4).rows) {
        o.expect_eq(row.quotient_dim, row.restricted_dim, at(s.label + " " + row.model, row.k, row.n));
        o.expect(row.submodule_killed, at(s.label + " " + row.model + " submodule survives", row.k, row.n));
      }
  return o;
}

Outcome euler_exactness() {
  Outcome o;
  for (std::size_t moving = 1; moving <= 3; ++moving)
    for (std::size_t fixed = 0; fixed <= 1; ++fixed) {
      const CoordinateSpace space = CoordinateSpace::real(moving + fixed);
      std::vector<std::size_t> fixed_idx;
      for (std::size_t i = moving; i < moving + fixed; ++i) fixed_idx.push_back(i);
      const int kmax = static_cast<int>(moving);
      const HomologyReport r = parametrized_euler_koszul(space, fixed_idx, kmax, 4);
      const std::string label = std::to_string(moving) + " normal + " + std::to_string(fixed) + " fixed";
      for (int n = 0; n <= 4; ++n) o.expect_eq(r.dim(0, n), monomial_count(fixed, n), at(label, 0, n));
      for (int k = 1; k <= kmax; ++k)
        for (int n = k; n <= 4; ++n) o.expect_eq(r.dim(k, n), 0, at(label, k, n));
    }
  return o;
}

PolyForm random_form(std::mt19937_64& rng, const CoordinateSpace& s, int k, int n) {
  PolyForm out(s);
  for (const auto& b : graded_basis(s, k, n))
    if (rng() % 2) out += Scalar(static_cast<long>(rng() % 7) - 3) * b;
  return out;
}

TensorChain random_chain(std::mt19937_64& rng, const CoordinateSpace& s, int k, int n) {
  TensorChain c(s, k);
  const auto basis = bar_basis(s, k, n);
  for (int i = 0; i < 6; ++i) c.add(basis[rng() % basis.size()], Scalar(static_cast<long>(rng() % 7) - 3));
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome structural() {
  Outcome o;
  std::mt19937_64 rng(20261019);
  for (const auto& t : twists()) {
    const PolyVectorField y = PolyVectorField::twisted(t.space, t.h);
    for (int i = 0; i < 10; ++i) {
      const int k = static_cast<int>(rng() % 3), n = k + static_cast<int>(rng() % 3);
      const PolyForm w = random_form(rng, t.space, k, n);
      o.expect(d_rel(d_rel(w)).is_zero(), t.label + " d^2 on " + w.to_string());
      o.expect(contract(y, contract(y, w)).is_zero(), t.label + " i_Y^2 on " + w.to_string());
      const TensorChain c = random_chain(rng, t.space, 2 + static_cast<int>(rng() % 2), 3);
      const Matrix id = Matrix::identity(t.h.rows());
      o.expect(bar_differential_twisted(bar_differential_twisted(c, id), id).is_zero(), t.label + " b^2");
      o.expect(bar_differential_twisted(bar_differential_twisted(c, t.h), t.h).is_zero(), t.label + " twisted b^2");
    }
  }
  for (const auto& [label, g] : groups()) {
    EquivariantChain f;
    f.k = 2;
    for (std::size_t e = 0; e < g.order(); ++e) f.values.emplace(e, random_chain(rng, g.space(), 2, 3));
    o.expect(twisted_equivariant_differential(twisted_equivariant_differential(f, g), g).is_zero(), label + " b_tw^2");
    for (int k = 0; k <= 2; ++k)
      for (int n = k; n <= 4; ++n) {
        const SparseMatrix p = reynolds_projector(g, k, n);
        o.expect(p * p == p, at(label + " Reynolds idempotence", k, n));
      }
  }

  Scenario s;
  s.circle = CircleAction::make({1, 2});
  s.kmax = 2;
  s.nmax = 3;
  s.tasks = {"circle-strata", "koszul", "basic-forms", "vanishing-ideal", "theta-check", "verify-all"};
  s.seed = rng();
  const fs::path base = fs::temp_directory_path() / "loophh_acceptance_determinism";
  fs::remove_all(base);
  std::ostringstream log, err;
  RunOptions a, b;
  a.out_dir = (base / "a").string();
  b.out_dir = (base / "b").string();
  b.jobs = 4;
  o.expect(run_scenario(s, a, log, err) == kExitOk && run_scenario(s, b, log, err) == kExitOk, "scenario runs");
  for (const auto& e : fs::directory_iterator(*a.out_dir))
    o.expect(slurp(e.path()) == slurp(fs::path(*b.out_dir) / e.path().filename()),
             "byte-identical " + e.path().filename().string());
  fs::remove_all(base);
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"twisted HKR: Koszul = bar oracle = fixed-form count", 60, twisted_hkr},
      {"homotopy identity on monomial forms, n <= 5", 10, homotopy_identity},
      {"finite crossed product = invariant strata forms, HH0 brute force", 120, finite_crossed_product},
      {"circle stalk homology = horizontal forms", 60, stalk_equals_horizontal},
      {"vanishing ideal generators = restriction kernels", 30, vanishing_ideals},
      {"theta injectivity, weights (1)", 30, theta_injective},
      {"parametrized Euler-field Koszul exactness", 10, euler_exactness},
      {"structural invariants and output determinism", 30, structural},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.witness = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= criteria[i].limit_seconds;
    const bool ok = o.pass && in_time;
    failed += !ok;
    std::printf("%s  [%zu] %s  (%zu checks, %.2fs / %.0fs)", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.checks, secs,
                criteria[i].limit_seconds);
    if (!o.pass) std::printf("  first failure: %s", o.witness.c_str());
    if (!in_time) std::printf("  over time limit");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
