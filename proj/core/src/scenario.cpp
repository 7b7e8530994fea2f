#include "loophh/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "loophh/crossed_product.hpp"
#include "loophh/error.hpp"
#include "loophh/hochschild.hpp"
#include "loophh/koszul.hpp"
#include "loophh/relforms.hpp"
#include "loophh/report.hpp"

namespace loophh {

using nlohmann::json;
using nlohmann::ordered_json;

CoordinateSpace GroupSpec::space() const {
  return complex ? CoordinateSpace::complex_pairs(dim) : CoordinateSpace::real(dim);
}

namespace {

const std::vector<std::string> kTasks{"koszul",      "bar-oracle",      "hkr-finite",  "circle-strata",
                                      "basic-forms", "vanishing-ideal", "theta-check", "verify-all"};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

int read_int(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) invalid(std::string(key) + " must be an integer");
  return j[key].get<int>();
}

Scalar read_scalar(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  invalid("matrix entries must be strings or integers");
}

GroupSpec read_group(const json& j) {
  GroupSpec g;
  const std::string kind = j.value("space", std::string("real"));
  if (kind != "real" && kind != "complex") invalid("group space must be \"real\" or \"complex\"");
  g.complex = kind == "complex";
  const int dim = read_int(j, "dim", -1);
  if (dim <= 0) invalid("group dim must be a positive integer");
  g.dim = static_cast<std::size_t>(dim);
  if (!j.contains("generators") || !j["generators"].is_array()) invalid("group needs a generators array");
  for (const auto& m : j["generators"]) {
    if (!m.is_array() || m.size() != g.dim) invalid("each generator needs " + std::to_string(g.dim) + " rows");
    Matrix mat(g.dim, g.dim);
    for (std::size_t r = 0; r < g.dim; ++r) {
      if (!m[r].is_array() || m[r].size() != g.dim) invalid("generator row length differs from dim");
      for (std::size_t c = 0; c < g.dim; ++c) mat(r, c) = read_scalar(m[r][c]);
    }
    g.generators.push_back(std::move(mat));
  }
  return g;
}

std::string fmt(std::size_t v) { return std::to_string(v); }

CheckResult make_check(std::string check, std::string stratum, int k, int n, std::size_t lhs, std::size_t rhs) {
  return CheckResult{std::move(check), std::move(stratum), k, n, fmt(lhs), fmt(rhs), lhs == rhs};
}

// Diagonal element of the circle acting at a stratum; the generic stratum uses t = 1/(2w).
Matrix circle_element(const CircleAction& a, const CircleStratum& s) {
  Vector diag;
  for (int wk : a.weights)
    diag.push_back(s.generic ? Scalar::root_of_unity(2 * a.w, wk) : Scalar::root_of_unity(a.w, static_cast<long>(wk) * s.j));
  return Matrix::diagonal(diag);
}

struct Named {
  std::string label;
  Matrix h;
};

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& o, std::ostream& log, std::ostream& err)
      : s_(s), jobs_(std::max(1u, o.jobs)), log_(log), err_(err) {
    format_ = o.format.value_or(s.format);
    if (format_ != "json" && format_ != "csv") invalid("format must be json or csv");
    out_ = o.out_dir.value_or(s.output);
    seed_ = o.seed.value_or(s.seed);
    if (s.group) {
      space_ = s.group->space();
      group_ = close_generators(space_, s.group->generators);
    } else {
      space_ = s.circle->space();
    }
  }

  int run(const std::vector<std::string>& tasks) {
    std::filesystem::create_directories(out_);
    int code = kExitOk;
    for (const auto& t : tasks) code = std::max(code, run_task(t));
    return code;
  }

 private:
  bool finite() const { return group_.has_value(); }

  std::vector<Named> elements() const {
    std::vector<Named> out;
    if (finite()) {
      const auto& classes = group_->conjugacy_classes();
      for (std::size_t c = 0; c < classes.size(); ++c)
        out.push_back({"class" + std::to_string(c) + ":g" + std::to_string(classes[c].front()),
                       group_->element(classes[c].front())});
    } else {
      for (const auto& st : circle_singular_points(*s_.circle)) out.push_back({st.label, circle_element(*s_.circle, st)});
    }
    return out;
  }

  void write(const std::string& task, const std::string& json_text, const std::string& csv_text) {
    const auto path = std::filesystem::path(out_) / (task + "." + format_);
    std::ofstream f(path, std::ios::binary);
    if (!f) invalid("cannot write " + path.string());
    f << (format_ == "json" ? json_text : csv_text);
    log_ << task << ": wrote " << path.string() << "\n";
  }

  void require_circle(const std::string& task) const {
    if (finite()) invalid(task + " needs a circle action");
  }

  std::vector<HomologyReport> koszul_reports() const {
    std::vector<HomologyReport> out;
    if (finite()) {
      for (const auto& e : elements()) {
        HomologyReport r = homology(build_twisted_koszul(space_, e.h, s_.nmax, jobs_), s_.kmax, s_.nmax, jobs_);
        r.stratum = e.label;
        out.push_back(std::move(r));
      }
    } else {
      for (const auto& st : circle_singular_points(*s_.circle))
        out.push_back(circle_stalk_homology(*s_.circle, st, s_.kmax, s_.nmax, jobs_));
    }
    return out;
  }

  std::vector<HomologyReport> bar_reports(const BarGuard& guard) const {
    for (int k = 0; k <= s_.kmax; ++k) guard.check(space_, k, s_.nmax);
    std::vector<HomologyReport> out;
    for (const auto& e : elements()) {
      HomologyReport r;
      r.stratum = e.label;
      for (int k = 0; k <= s_.kmax; ++k)
        for (int n = k; n <= s_.nmax; ++n) r.set(k, n, brute_twisted_hh(space_, e.h, k, n, guard, jobs_));
      out.push_back(std::move(r));
    }
    return out;
  }

  void strata_task() {
    ordered_json j = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    if (finite()) {
      rows.push_back({"stratum", "element", "class", "fixed_dim", "centralizer_order"});
      for (const auto& st : loop_space_finite(*group_)) {
        j.push_back({{"stratum", st.label},
                     {"element", st.element},
                     {"class", st.conjugacy_class},
                     {"fixed_dim", st.fixed_basis.size()},
                     {"centralizer_order", st.centralizer.size()}});
        rows.push_back({st.label, fmt(st.element), fmt(st.conjugacy_class), fmt(st.fixed_basis.size()),
                        fmt(st.centralizer.size())});
      }
    } else {
      rows.push_back({"stratum", "j", "generic", "fixed_pairs"});
      for (const auto& st : circle_singular_points(*s_.circle)) {
        std::vector<std::size_t> pairs;
        std::string text;
        for (std::size_t k : st.fixed) {
          pairs.push_back(k + 1);
          text += (text.empty() ? "" : " ") + fmt(k + 1);
        }
        j.push_back({{"stratum", st.label}, {"j", st.j}, {"generic", st.generic}, {"fixed_pairs", pairs}});
        rows.push_back({st.label, std::to_string(st.j), st.generic ? "true" : "false", text});
      }
    }
    write("circle-strata", j.dump(2) + "\n", aligned_csv(rows));
  }

  std::vector<IdealCheckReport> ideal_reports() const {
    std::vector<IdealCheckReport> out;
    for (const auto& st : circle_singular_points(*s_.circle)) out.push_back(vanishing_ideal_check(*s_.circle, st, s_.nmax));
    return out;
  }

  std::vector<ThetaReport> theta_reports() const {
    std::vector<ThetaReport> out;
    for (const auto& st : circle_singular_points(*s_.circle)) {
      ThetaReport merged;
      merged.stratum = st.label;
      for (int k = 0; k <= s_.kmax; ++k) {
        ThetaReport r = theta_injectivity_check(*s_.circle, st, k, s_.nmax);
        merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
      }
      out.push_back(std::move(merged));
    }
    return out;
  }

  // Random homogeneous 2-chain with small integer coefficients.
  TensorChain random_chain(std::mt19937_64& rng, int n) const {
    TensorChain c(space_, 2);
    const auto basis = bar_basis(space_, 2, n);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, basis.empty() ? 0 : basis.size() - 1);
    for (int i = 0; i < 6 && !basis.empty(); ++i) c.add(basis[pick(rng)], Scalar(coeff(rng)));
    return c;
  }

  std::vector<CheckResult> verify() const {
    const BarGuard guard = BarGuard::from_environment();
    std::vector<CheckResult> out;
    const auto koszul = koszul_reports();
    const auto elems = elements();

    if (finite()) {
      const auto bar = bar_reports(guard);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        const std::size_t f = fixed_subspace(variable_matrix(space_, elems[i].h)).size();
        for (const auto& e : koszul[i].table) {
          out.push_back(make_check("koszul=bar", elems[i].label, e.k, e.n, e.dim, bar[i].dim(e.k, e.n)));
          out.push_back(make_check("koszul=fixed-forms", elems[i].label, e.k, e.n, e.dim, fixed_form_dimension(f, e.k, e.n)));
        }
        const GradedComplex c = build_twisted_koszul(space_, elems[i].h, s_.nmax, jobs_);
        out.push_back({"contraction-squared", elems[i].label, -1, s_.nmax, "", "", c.composes_to_zero()});
      }
      const CrossedProductReport cp = crossed_product_hh_finite(*group_, s_.kmax, s_.nmax, jobs_);
      for (const auto& e : cp.total.table) {
        out.push_back(make_check("hkr-finite=invariants", "total", e.k, e.n, e.dim,
                                 invariant_strata_forms_dimension(*group_, e.k, e.n)));
        if (e.k == 0) {
          guard.check(space_, 1, e.n);
          out.push_back(make_check("hkr-finite=hh0", "total", 0, e.n, e.dim, crossed_product_hh0_brute(*group_, e.n)));
        }
      }
    } else {
      const auto& a = *s_.circle;
      const auto strata = circle_singular_points(a);
      for (std::size_t i = 0; i < strata.size(); ++i)
        for (const auto& e : koszul[i].table)
          out.push_back(make_check("stalk=horizontal", strata[i].label, e.k, e.n, e.dim,
                                   horizontal_basis(a, strata[i], e.k, e.n).size()));
      for (int k = 0; k <= s_.kmax; ++k) guard.check(space_, k, s_.nmax);
      for (std::size_t i = 0; i < strata.size(); ++i) {
        const HomologyReport r = homology(build_twisted_koszul(space_, elems[i].h, s_.nmax, jobs_), s_.kmax, s_.nmax, jobs_);
        const std::size_t f = fixed_subspace(variable_matrix(space_, elems[i].h)).size();
        for (const auto& e : r.table) {
          out.push_back(make_check("koszul=bar", strata[i].label, e.k, e.n, e.dim,
                                   brute_twisted_hh(space_, elems[i].h, e.k, e.n, guard, jobs_)));
          out.push_back(make_check("koszul=fixed-forms", strata[i].label, e.k, e.n, e.dim, fixed_form_dimension(f, e.k, e.n)));
        }
      }
      for (const auto& r : ideal_reports())
        for (const auto& row : r.rows)
          out.push_back(make_check("ideal:" + row.model, r.stratum, 0, row.degree, row.generator_dim, row.kernel_dim));
      for (const auto& r : theta_reports())
        for (const auto& row : r.rows) {
          out.push_back(make_check("theta:" + row.model, r.stratum, row.k, row.n, row.quotient_dim, row.restricted_dim));
          out.push_back({"theta-kills-submodule:" + row.model, r.stratum, row.k, row.n, "", "", row.submodule_killed});
        }
    }

    std::mt19937_64 rng(seed_);
    const int n = std::min(s_.nmax, 3);
    for (const auto& e : elems) {
      const TensorChain c = random_chain(rng, n);
      const bool zero = bar_differential_twisted(bar_differential_twisted(c, e.h), e.h).is_zero();
      out.push_back({"bar-squared(seed=" + std::to_string(seed_) + ")", e.label, 2, n, "", "", zero});
    }
    return out;
  }

  int run_task(const std::string& task) {
    if (task == "koszul") {
      const auto r = koszul_reports();
      write(task, to_json_text(r), to_csv_text(r));
    } else if (task == "bar-oracle") {
      const auto r = bar_reports(BarGuard::from_environment());
      write(task, to_json_text(r), to_csv_text(r));
    } else if (task == "hkr-finite") {
      if (!finite()) invalid("hkr-finite needs a finite group");
      CrossedProductReport cp = crossed_product_hh_finite(*group_, s_.kmax, s_.nmax, jobs_);
      std::vector<HomologyReport> r = cp.per_class;
      r.push_back(cp.total);
      write(task, to_json_text(r), to_csv_text(r));
    } else if (task == "circle-strata") {
      strata_task();
    } else if (task == "basic-forms") {
      const BasicFormsTable t = finite() ? basic_forms_table(*group_, s_.kmax, s_.nmax, jobs_)
                                         : basic_forms_table(*s_.circle, s_.kmax, s_.nmax, jobs_);
      write(task, to_json_text(t), to_csv_text(t));
    } else if (task == "vanishing-ideal") {
      require_circle(task);
      const auto r = ideal_reports();
      write(task, to_json_text(r), to_csv_text(r));
      if (!std::all_of(r.begin(), r.end(), [](const auto& x) { return x.ok(); })) return kExitVerifyFailed;
    } else if (task == "theta-check") {
      require_circle(task);
      const auto r = theta_reports();
      write(task, to_json_text(r), to_csv_text(r));
      if (!std::all_of(r.begin(), r.end(), [](const auto& x) { return x.ok(); })) return kExitVerifyFailed;
    } else if (task == "verify-all") {
      const auto r = verify();
      write(task, to_json_text(r), to_csv_text(r));
      std::size_t failed = 0;
      for (const auto& c : r) {
        if (c.pass) continue;
        ++failed;
        err_ << "FAIL " << c.check << " " << c.stratum << " k=" << c.k << " n=" << c.n << " lhs=" << c.lhs
             << " rhs=" << c.rhs << "\n";
      }
      log_ << "verify-all: " << r.size() - failed << "/" << r.size() << " checks passed\n";
      if (failed) return kExitVerifyFailed;
    }
    return kExitOk;
  }

  const Scenario& s_;
  unsigned jobs_;
  std::ostream& log_;
  std::ostream& err_;
  std::string format_, out_;
  std::uint64_t seed_;
  CoordinateSpace space_;
  std::optional<FiniteGroup> group_;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "scenario must be an object");
  Scenario s;
  try {
    if (!j.contains("action") || !j["action"].is_object()) invalid("scenario needs an action object");
    const json& action = j["action"];
    if (action.contains("group") == action.contains("circle")) invalid("action must name exactly one of group, circle");
    if (action.contains("group")) {
      s.group = read_group(action["group"]);
    } else {
      const json& c = action["circle"];
      if (!c.contains("weights") || !c["weights"].is_array()) invalid("circle needs a weights array");
      std::vector<int> weights;
      for (const auto& w : c["weights"]) {
        if (!w.is_number_integer()) invalid("weights must be integers");
        weights.push_back(w.get<int>());
      }
      s.circle = CircleAction::make(std::move(weights));
    }
    if (j.contains("bounds")) {
      s.kmax = read_int(j["bounds"], "kmax", s.kmax);
      s.nmax = read_int(j["bounds"], "nmax", s.nmax);
    }
    if (s.kmax < 0 || s.nmax < 0) invalid("bounds must be non-negative");
    if (!j.contains("tasks") || !j["tasks"].is_array()) invalid("scenario needs a tasks array");
    for (const auto& t : j["tasks"]) {
      if (!t.is_string() || std::find(kTasks.begin(), kTasks.end(), t.get<std::string>()) == kTasks.end())
        invalid("unknown task " + t.dump());
      s.tasks.push_back(t.get<std::string>());
    }
    s.format = j.value("format", s.format);
    if (s.format != "json" && s.format != "csv") invalid("format must be json or csv");
    s.output = j.value("output", s.output);
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) invalid("seed must be a non-negative integer");
      s.seed = j["seed"].get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) invalid("cannot open " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_scenario(buf.str());
}

int run_scenario(const Scenario& s, const RunOptions& opts, std::ostream& log, std::ostream& err) {
  try {
    Runner r(s, opts, log, err);
    return r.run(opts.verify_only ? std::vector<std::string>{"verify-all"} : s.tasks);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::SizeGuardExceeded ? kExitGuard : kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
}

int run_scenario_file(const std::filesystem::path& path, const RunOptions& opts, std::ostream& log, std::ostream& err) {
  Scenario s;
  try {
    s = load_scenario(path);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
  return run_scenario(s, opts, log, err);
}

}  // namespace loophh
