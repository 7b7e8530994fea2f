#pragma once

#include <string>
#include <vector>

#include "loophh/hochschild.hpp"
#include "loophh/koszul.hpp"
#include "loophh/relforms.hpp"

namespace loophh {

/// One row of a verification run.
struct CheckResult {
  std::string check;
  std::string stratum;
  int k = 0;
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool pass = true;
};

// JSON text (two-space indent, trailing newline) and aligned-column CSV.
std::string to_json_text(const HomologyReport& r);
std::string to_json_text(const std::vector<HomologyReport>& rs);
std::string to_csv_text(const std::vector<HomologyReport>& rs);

std::string to_json_text(const BasicFormsTable& t);
std::string to_csv_text(const BasicFormsTable& t);

std::string to_json_text(const std::vector<IdealCheckReport>& rs);
std::string to_csv_text(const std::vector<IdealCheckReport>& rs);

std::string to_json_text(const std::vector<ThetaReport>& rs);
std::string to_csv_text(const std::vector<ThetaReport>& rs);

std::string to_json_text(const std::vector<CheckResult>& rs);
std::string to_csv_text(const std::vector<CheckResult>& rs);

/// `[{"coeff": "...", "monomials": ["x1^2", "1", ...]}, ...]`
std::string to_json_text(const TensorChain& c);

/// Pads every column to a common width; cells never contain commas.
std::string aligned_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace loophh
