#include "loophh/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace loophh {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json homology_json(const HomologyReport& r) {
  ordered_json table = ordered_json::array();
  for (const auto& e : r.table) {
    ordered_json row{{"k", e.k}, {"n", e.n}, {"dim", e.dim}};
    if (!e.representatives.empty()) {
      ordered_json reps = ordered_json::array();
      for (const auto& f : e.representatives) reps.push_back(f.to_string());
      row["representatives"] = reps;
    }
    table.push_back(row);
  }
  return {{"stratum", r.stratum}, {"table", table}};
}

}  // namespace

std::string aligned_csv(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out += r[c];
      if (c + 1 < r.size()) {
        out += ',';
        out.append(width[c] - r[c].size() + 1, ' ');
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const HomologyReport& r) { return dump(homology_json(r)); }

std::string to_json_text(const std::vector<HomologyReport>& rs) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rs) out.push_back(homology_json(r));
  return dump(out);
}

std::string to_csv_text(const std::vector<HomologyReport>& rs) {
  std::vector<std::vector<std::string>> rows{{"stratum", "k", "n", "dim"}};
  for (const auto& r : rs)
    for (const auto& e : r.table)
      rows.push_back({r.stratum, std::to_string(e.k), std::to_string(e.n), std::to_string(e.dim)});
  return aligned_csv(rows);
}

std::string to_json_text(const BasicFormsTable& t) {
  ordered_json out = ordered_json::array();
  for (const auto& r : t.rows)
    out.push_back({{"stratum", r.stratum},
                   {"k", r.k},
                   {"n", r.n},
                   {"dim_relative", r.relative},
                   {"dim_horizontal", r.horizontal},
                   {"dim_basic", r.basic}});
  return dump(out);
}

std::string to_csv_text(const BasicFormsTable& t) {
  std::vector<std::vector<std::string>> rows{{"stratum", "k", "n", "dim_relative", "dim_horizontal", "dim_basic"}};
  for (const auto& r : t.rows)
    rows.push_back({r.stratum, std::to_string(r.k), std::to_string(r.n), std::to_string(r.relative),
                    std::to_string(r.horizontal), std::to_string(r.basic)});
  return aligned_csv(rows);
}

std::string to_json_text(const std::vector<IdealCheckReport>& rs) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"model", row.model},
                      {"degree", row.degree},
                      {"generator_dim", row.generator_dim},
                      {"kernel_dim", row.kernel_dim},
                      {"pass", row.ok()}});
    out.push_back({{"stratum", r.stratum}, {"rows", rows}});
  }
  return dump(out);
}

std::string to_csv_text(const std::vector<IdealCheckReport>& rs) {
  std::vector<std::vector<std::string>> rows{{"stratum", "model", "degree", "generator_dim", "kernel_dim", "pass"}};
  for (const auto& r : rs)
    for (const auto& row : r.rows)
      rows.push_back({r.stratum, row.model, std::to_string(row.degree), std::to_string(row.generator_dim),
                      std::to_string(row.kernel_dim), row.ok() ? "true" : "false"});
  return aligned_csv(rows);
}

std::string to_json_text(const std::vector<ThetaReport>& rs) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"model", row.model},
                      {"k", row.k},
                      {"n", row.n},
                      {"quotient_dim", row.quotient_dim},
                      {"restricted_dim", row.restricted_dim},
                      {"submodule_killed", row.submodule_killed},
                      {"pass", row.ok()}});
    out.push_back({{"stratum", r.stratum}, {"rows", rows}});
  }
  return dump(out);
}

std::string to_csv_text(const std::vector<ThetaReport>& rs) {
  std::vector<std::vector<std::string>> rows{
      {"stratum", "model", "k", "n", "quotient_dim", "restricted_dim", "submodule_killed", "pass"}};
  for (const auto& r : rs)
    for (const auto& row : r.rows)
      rows.push_back({r.stratum, row.model, std::to_string(row.k), std::to_string(row.n),
                      std::to_string(row.quotient_dim), std::to_string(row.restricted_dim),
                      row.submodule_killed ? "true" : "false", row.ok() ? "true" : "false"});
  return aligned_csv(rows);
}

std::string to_json_text(const std::vector<CheckResult>& rs) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rs)
    out.push_back({{"check", r.check},
                   {"stratum", r.stratum},
                   {"k", r.k},
                   {"n", r.n},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"pass", r.pass}});
  return dump(out);
}

std::string to_csv_text(const std::vector<CheckResult>& rs) {
  std::vector<std::vector<std::string>> rows{{"check", "stratum", "k", "n", "lhs", "rhs", "pass"}};
  for (const auto& r : rs)
    rows.push_back({r.check, r.stratum, std::to_string(r.k), std::to_string(r.n), r.lhs, r.rhs,
                    r.pass ? "true" : "false"});
  return aligned_csv(rows);
}

std::string to_json_text(const TensorChain& c) {
  ordered_json out = ordered_json::array();
  for (const auto& [t, v] : c.terms) {
    ordered_json monos = ordered_json::array();
    for (const auto& e : t) monos.push_back(PolyForm::monomial(c.space, e, {}).to_string());
    out.push_back({{"coeff", v.to_string()}, {"monomials", monos}});
  }
  return dump(out);
}

}  // namespace loophh
