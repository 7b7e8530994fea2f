#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "loophh/error.hpp"
#include "loophh/forms.hpp"

namespace loophh {

namespace {

const std::string kWedge = "\xE2\x88\xA7";  // ∧
const std::string kBar = "\xCC\x84";

std::string monomial_text(const CoordinateSpace& space, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += space.variable_name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string differential_text(const CoordinateSpace& space, const std::vector<int>& dx) {
  std::string out;
  for (std::size_t r = 0; r < dx.size(); ++r) {
    if (r) out += kWedge;
    out += space.differential_name(static_cast<std::size_t>(dx[r]));
  }
  return out;
}

struct NamedVar {
  std::string name;
  std::size_t index;
};

std::vector<NamedVar> variable_aliases(const CoordinateSpace& space) {
  std::vector<NamedVar> out;
  for (std::size_t i = 0; i < space.num_vars(); ++i) {
    const std::string& n = space.variable_name(i);
    out.push_back({n, i});
    auto pos = n.find(kBar);
    if (pos != std::string::npos) out.push_back({n.substr(0, pos) + "b" + n.substr(pos + kBar.size()), i});
  }
  // Longest first so that x10 wins over x1.
  std::stable_sort(out.begin(), out.end(),
                   [](const NamedVar& a, const NamedVar& b) { return a.name.size() > b.name.size(); });
  return out;
}

class FormParser {
 public:
  FormParser(const CoordinateSpace& space, std::string_view text)
      : space_(space), text_(text), vars_(variable_aliases(space)) {}

  PolyForm parse() {
    PolyForm out(space_);
    skip_ws();
    if (at_end()) fail("empty form");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      parse_term(out, negative);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  long read_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  // Variable at the cursor, or npos.
  std::size_t match_variable(std::size_t at) const {
    for (const auto& v : vars_) {
      if (text_.substr(at, v.name.size()) == v.name) {
        // Reject prefixes of longer identifiers like x1 inside x12.
        std::size_t end = at + v.name.size();
        if (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])) &&
            std::isdigit(static_cast<unsigned char>(v.name.back())))
          continue;
        return v.index;
      }
    }
    return std::string::npos;
  }

  std::size_t variable_length(std::size_t at) const {
    for (const auto& v : vars_)
      if (text_.substr(at, v.name.size()) == v.name) return v.name.size();
    return 0;
  }

  void parse_term(PolyForm& out, bool negative) {
    Scalar coeff(1);
    bool have_coeff = false;
    if (peek() == '(') {
      int depth = 0;
      std::size_t start = pos_;
      do {
        if (at_end()) fail("unbalanced parenthesis");
        if (peek() == '(') ++depth;
        if (peek() == ')') --depth;
        ++pos_;
      } while (depth > 0);
      coeff = parse_scalar(text_.substr(start + 1, pos_ - start - 2));
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      read_int();
      if (!at_end() && peek() == '/') {
        ++pos_;
        read_int();
      }
      coeff = parse_scalar(text_.substr(start, pos_ - start));
      have_coeff = true;
    }
    if (have_coeff) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    Exponents e(space_.num_vars(), 0);
    bool have_factor = false;
    while (!at_end()) {
      std::size_t v = match_variable(pos_);
      if (v == std::string::npos) break;
      pos_ += variable_length(pos_);
      int power = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        power = static_cast<int>(read_int());
      }
      e[v] += power;
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        break;
      }
    }
    std::vector<int> dx;
    while (!at_end() && peek() == 'd') {
      std::size_t v = match_variable(pos_ + 1);
      if (v == std::string::npos) fail("unknown differential");
      pos_ += 1 + variable_length(pos_ + 1);
      dx.push_back(static_cast<int>(v));
      skip_ws();
      if (starts_with(kWedge)) {
        pos_ += kWedge.size();
        skip_ws();
      } else {
        break;
      }
    }
    if (!have_coeff && !have_factor && dx.empty()) fail("expected a term");
    out.add_term(e, dx, negative ? -coeff : coeff);
  }

  const CoordinateSpace& space_;
  std::string_view text_;
  std::vector<NamedVar> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string PolyForm::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const FormKey, Scalar>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    if (a->first.dx.size() != b->first.dx.size()) return a->first.dx.size() < b->first.dx.size();
    if (a->first.dx != b->first.dx) return a->first.dx < b->first.dx;
    return a->first.exps > b->first.exps;
  });
  std::string out;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const FormKey& key = order[t]->first;
    Scalar c = order[t]->second;
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      negative = sgn(c.rational()) < 0;
      if (negative) c = -c;
      coeff = c.to_string();
    } else {
      coeff = c.to_string();
      if (coeff.front() == '-') {
        negative = true;
        c = -c;
        coeff = c.to_string();
      }
      if (coeff.front() != '(') coeff = "(" + coeff + ")";
    }
    const std::string mono = monomial_text(space_, key.exps);
    const std::string diff = differential_text(space_, key.dx);
    if (c.is_one() && !(mono.empty() && diff.empty())) coeff.clear();
    std::string body = coeff;
    if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
    if (!diff.empty()) body += (body.empty() ? "" : " ") + diff;
    if (t == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

PolyForm parse_form(const CoordinateSpace& space, std::string_view text) {
  std::size_t a = 0;
  while (a < text.size() && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  if (text.substr(a) == "0") return PolyForm(space);
  return FormParser(space, text).parse();
}

}  // namespace loophh
