#pragma once

#include "cpg/curvature.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpg {

class LedgerError : public std::runtime_error {
 public:
  LedgerError(const std::string& message, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message), line_(line) {}
  const std::optional<std::size_t>& line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

// Prefix expression tree; evaluates to a KLaurent in at most one symbol.
class Expr {
 public:
  enum class Kind { Curvature, PiRational, Add, Sub, ScaleRational, SymbolPower, ScaleLinear };

  static Expr curvature(std::vector<DegreeEntry> degrees);
  static Expr pi_rational(Rational coefficient);
  static Expr add(std::vector<Expr> terms);
  static Expr sub(Expr a, Expr b);
  static Expr scale(Rational factor, Expr e);
  static Expr symbol_power(int power, std::string symbol = "k");
  // (a * symbol + b) * e
  static Expr scale_linear(Rational a, Rational b, Expr e, std::string symbol = "k");

  Kind kind() const { return kind_; }
  KLaurent evaluate() const;

 private:
  Kind kind_ = Kind::PiRational;
  std::vector<DegreeEntry> degrees_;
  Rational a_{0};
  Rational b_{0};
  int power_ = 0;
  std::string symbol_;
  std::vector<Expr> children_;
};

enum class Relation { Less, LessEqual, Equal };
std::string relation_text(Relation r);

struct SymbolRange {
  long min = 2;
  std::optional<long> max;
  bool even_only = false;
};

struct Assertion {
  std::string id;
  Expr lhs;
  Relation relation = Relation::Equal;
  Expr rhs;
  std::optional<SymbolRange> range;
  std::string quote;
};

struct AssertionOutcome {
  std::string id;
  bool pass = false;
  std::string relation;
  std::string lhs_value;
  std::string rhs_value;
  std::string difference;
  // First symbol value at which the relation fails.
  std::optional<long> counterexample;
  std::string method;
  std::string message;
  std::string quote;
};

struct LedgerReport {
  std::vector<AssertionOutcome> outcomes;
  std::size_t passed() const;
  bool pass() const { return passed() == outcomes.size(); }
};

std::vector<Assertion> parse_ledger(const std::string& json_text);
std::vector<Assertion> load_ledger(const std::filesystem::path& file);

AssertionOutcome check_assertion(const Assertion& assertion);
LedgerReport run_ledger(const std::vector<Assertion>& assertions);
LedgerReport run_ledger(const std::filesystem::path& file);

}  // namespace cpg
