#include "cpg/ledger.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cpg {

using nlohmann::json;

Expr Expr::curvature(std::vector<DegreeEntry> degrees) {
  Expr e;
  e.kind_ = Kind::Curvature;
  e.degrees_ = std::move(degrees);
  return e;
}

Expr Expr::pi_rational(Rational coefficient) {
  Expr e;
  e.kind_ = Kind::PiRational;
  e.a_ = std::move(coefficient);
  return e;
}

Expr Expr::add(std::vector<Expr> terms) {
  Expr e;
  e.kind_ = Kind::Add;
  e.children_ = std::move(terms);
  return e;
}

Expr Expr::sub(Expr a, Expr b) {
  Expr e;
  e.kind_ = Kind::Sub;
  e.children_ = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::scale(Rational factor, Expr inner) {
  Expr e;
  e.kind_ = Kind::ScaleRational;
  e.a_ = std::move(factor);
  e.children_ = {std::move(inner)};
  return e;
}

Expr Expr::symbol_power(int power, std::string symbol) {
  Expr e;
  e.kind_ = Kind::SymbolPower;
  e.power_ = power;
  e.symbol_ = std::move(symbol);
  return e;
}

Expr Expr::scale_linear(Rational a, Rational b, Expr inner, std::string symbol) {
  Expr e;
  e.kind_ = Kind::ScaleLinear;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  e.symbol_ = std::move(symbol);
  e.children_ = {std::move(inner)};
  return e;
}

KLaurent Expr::evaluate() const {
  switch (kind_) {
    case Kind::Curvature:
      return cpg::curvature(degrees_);
    case Kind::PiRational:
      return KLaurent::constant(PiQuantity(a_));
    case Kind::Add: {
      KLaurent total;
      for (const Expr& child : children_) total = total + child.evaluate();
      return total;
    }
    case Kind::Sub:
      return children_[0].evaluate() - children_[1].evaluate();
    case Kind::ScaleRational:
      return a_ * children_[0].evaluate();
    case Kind::SymbolPower:
      return KLaurent::power(power_, symbol_);
    case Kind::ScaleLinear:
      return children_[0].evaluate().times_linear(a_, b_, symbol_);
  }
  throw std::logic_error("unhandled expression kind");
}

std::string relation_text(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

std::size_t LedgerReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const AssertionOutcome& o) { return o.pass; }));
}

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Best effort: the line on which the assertion with this id is declared.
std::optional<std::size_t> line_of_id(const std::string& text, const std::string& id) {
  if (id.empty()) return std::nullopt;
  const std::string needle = "\"" + id + "\"";
  std::size_t pos = text.find(needle);
  if (pos == std::string::npos) return std::nullopt;
  return line_of_offset(text, pos);
}

Rational rational_pair(const json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_integer() || !node[1].is_number_integer()) {
    throw std::invalid_argument("expected [p, q] with integer entries");
  }
  long q = node[1].get<long>();
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r{Integer(node[0].get<long>()), Integer(q)};
  r.canonicalize();
  return r;
}

Rational integer_value(const json& node) {
  if (!node.is_number_integer()) throw std::invalid_argument("expected an integer");
  return Rational(Integer(node.get<long>()));
}

Expr parse_expr(const json& node) {
  if (!node.is_object()) throw std::invalid_argument("expression must be an object");
  const std::string symbol = node.value("sym", std::string("k"));
  std::size_t kinds = 0;
  for (const char* key : {"c", "pi_rat", "add", "sub", "mul_rat", "var_k_pow", "mul_lin"}) {
    kinds += node.contains(key) ? 1 : 0;
  }
  if (kinds != 1) throw std::invalid_argument("expression must have exactly one node kind");

  if (node.contains("c")) {
    const json& list = node.at("c");
    if (!list.is_array()) throw std::invalid_argument("c expects a list of degrees");
    std::vector<DegreeEntry> degrees;
    for (const json& entry : list) {
      if (entry.is_number_integer()) {
        degrees.emplace_back(entry.get<long>());
      } else if (entry.is_string()) {
        degrees.emplace_back(entry.get<std::string>());
      } else {
        throw std::invalid_argument("degree must be an integer or a symbol");
      }
    }
    return Expr::curvature(std::move(degrees));
  }
  if (node.contains("pi_rat")) return Expr::pi_rational(rational_pair(node.at("pi_rat")));
  if (node.contains("add")) {
    const json& list = node.at("add");
    if (!list.is_array() || list.empty()) throw std::invalid_argument("add expects a nonempty list");
    std::vector<Expr> terms;
    for (const json& child : list) terms.push_back(parse_expr(child));
    return Expr::add(std::move(terms));
  }
  if (node.contains("sub")) {
    const json& list = node.at("sub");
    if (!list.is_array() || list.size() != 2) throw std::invalid_argument("sub expects two operands");
    return Expr::sub(parse_expr(list[0]), parse_expr(list[1]));
  }
  if (node.contains("mul_rat")) {
    const json& list = node.at("mul_rat");
    if (!list.is_array() || list.size() != 2) throw std::invalid_argument("mul_rat expects [[p, q], expr]");
    return Expr::scale(rational_pair(list[0]), parse_expr(list[1]));
  }
  if (node.contains("var_k_pow")) {
    const json& power = node.at("var_k_pow");
    if (!power.is_number_integer()) throw std::invalid_argument("var_k_pow expects an integer");
    int n = power.get<int>();
    if (n < -1 || n > 1) throw std::invalid_argument("var_k_pow outside {-1, 0, 1}");
    return Expr::symbol_power(n, symbol);
  }
  const json& list = node.at("mul_lin");
  if (!list.is_array() || list.size() != 2 || !list[0].is_array() || list[0].size() != 2) {
    throw std::invalid_argument("mul_lin expects [[a, b], expr]");
  }
  return Expr::scale_linear(integer_value(list[0][0]), integer_value(list[0][1]), parse_expr(list[1]), symbol);
}

Relation parse_relation(const std::string& text) {
  if (text == "<") return Relation::Less;
  if (text == "<=" || text == "≤") return Relation::LessEqual;
  if (text == "=") return Relation::Equal;
  throw std::invalid_argument("unknown relation '" + text + "'");
}

SymbolRange parse_range(const json& node) {
  if (!node.is_object()) throw std::invalid_argument("k_range must be an object");
  SymbolRange range;
  range.min = node.at("min").get<long>();
  if (node.contains("max") && !node.at("max").is_null()) range.max = node.at("max").get<long>();
  range.even_only = node.value("even", false);
  if (range.min < 1) throw std::invalid_argument("k_range.min must be positive");
  if (range.max && *range.max < range.min) throw std::invalid_argument("empty k_range");
  return range;
}

Assertion parse_assertion(const json& node) {
  if (!node.is_object()) throw std::invalid_argument("assertion must be an object");
  Assertion a;
  a.id = node.at("id").get<std::string>();
  a.lhs = parse_expr(node.at("expr_lhs"));
  a.relation = parse_relation(node.at("rel").get<std::string>());
  a.rhs = parse_expr(node.at("expr_rhs"));
  if (node.contains("k_range")) a.range = parse_range(node.at("k_range"));
  a.quote = node.value("quote", std::string());
  // Type check: one symbol overall, and a range whenever a symbol survives.
  KLaurent difference = a.lhs.evaluate() - a.rhs.evaluate();
  if (!difference.is_constant() && !a.range) {
    throw std::invalid_argument("symbolic assertion needs k_range");
  }
  return a;
}

std::vector<long> range_points(const SymbolRange& range, long upto) {
  std::vector<long> points;
  for (long k = range.min; k <= upto; ++k) {
    if (range.even_only && k % 2 != 0) continue;
    points.push_back(k);
  }
  return points;
}

bool holds(Relation r, const Rational& difference) {
  switch (r) {
    case Relation::Less: return difference < 0;
    case Relation::LessEqual: return difference <= 0;
    case Relation::Equal: return difference == 0;
  }
  return false;
}

// Smallest integer strictly above every positive root of p k^2 + z k + n.
long root_bound(const Rational& p, const Rational& z, const Rational& n) {
  Rational bound(0);
  if (p != 0) {
    bound = 1 + std::max(abs(z / p), abs(n / p));
  } else if (z != 0) {
    bound = 1 + abs(n / z);
  }
  Integer ceil_bound = bound.get_num() / bound.get_den() + 1;
  if (!ceil_bound.fits_slong_p()) throw std::overflow_error("root bound too large");
  return ceil_bound.get_si();
}

}  // namespace

std::vector<Assertion> parse_ledger(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LedgerError(e.what(), line_of_offset(json_text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_array()) throw LedgerError("ledger must be a JSON array", 1);
  std::vector<Assertion> assertions;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string id = doc[i].is_object() ? doc[i].value("id", std::string()) : std::string();
    try {
      assertions.push_back(parse_assertion(doc[i]));
    } catch (const std::exception& e) {
      throw LedgerError("assertion " + std::to_string(i) + (id.empty() ? "" : " (" + id + ")") + ": " + e.what(),
                        line_of_id(json_text, id));
    }
  }
  return assertions;
}

std::vector<Assertion> load_ledger(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw LedgerError("cannot open ledger " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ledger(buffer.str());
}

AssertionOutcome check_assertion(const Assertion& assertion) {
  AssertionOutcome out;
  out.id = assertion.id;
  out.relation = relation_text(assertion.relation);
  out.quote = assertion.quote;
  const KLaurent lhs = assertion.lhs.evaluate();
  const KLaurent rhs = assertion.rhs.evaluate();
  const KLaurent d = lhs - rhs;
  out.lhs_value = lhs.to_string();
  out.rhs_value = rhs.to_string();
  out.difference = d.to_string();

  if (d.is_constant()) {
    out.method = lhs.is_constant() && rhs.is_constant() ? "exact" : "identity";
    out.pass = holds(assertion.relation, d.k_zero());
  } else {
    const SymbolRange& range = *assertion.range;
    auto first_failure = [&](const std::vector<long>& points) -> std::optional<long> {
      for (long k : points) {
        if (!holds(assertion.relation, d.at(k).coefficient())) return k;
      }
      return std::nullopt;
    };
    if (range.max) {
      out.method = "pointwise";
      out.counterexample = first_failure(range_points(range, *range.max));
      out.pass = !out.counterexample;
    } else if (assertion.relation == Relation::Equal) {
      out.method = "identity";
      out.pass = d == KLaurent();
      if (!out.pass) out.counterexample = first_failure(range_points(range, range.min + 5));
    } else {
      // k d(k) = p k^2 + z k + n keeps its sign beyond the root bound.
      out.method = "root-bound";
      const Rational& p = d.k_pos();
      const Rational& z = d.k_zero();
      const Rational& n = d.k_neg();
      long bound = std::max(range.min, root_bound(p, z, n));
      out.counterexample = first_failure(range_points(range, bound));
      if (!out.counterexample) {
        Rational leading = p != 0 ? p : (z != 0 ? z : n);
        if (!holds(assertion.relation, leading)) {
          long k = bound + 1;
          if (range.even_only && k % 2 != 0) ++k;
          out.counterexample = k;
        }
      }
      out.pass = !out.counterexample;
    }
  }
  if (!out.pass) {
    out.message = out.lhs_value + " " + out.relation + " " + out.rhs_value + " fails";
    if (out.counterexample) {
      out.message += " at " + d.symbol() + "=" + std::to_string(*out.counterexample) + " (" +
                     lhs.at(*out.counterexample).to_string() + " vs " + rhs.at(*out.counterexample).to_string() + ")";
    }
  }
  return out;
}

LedgerReport run_ledger(const std::vector<Assertion>& assertions) {
  LedgerReport report;
  for (const Assertion& a : assertions) report.outcomes.push_back(check_assertion(a));
  return report;
}

LedgerReport run_ledger(const std::filesystem::path& file) { return run_ledger(load_ledger(file)); }

}  // namespace cpg
