#pragma once

#include "cpg/integer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cpg {

// coefficient * pi
class PiQuantity {
 public:
  PiQuantity() = default;
  explicit PiQuantity(Rational coefficient) : coefficient_(std::move(coefficient)) { coefficient_.canonicalize(); }
  static PiQuantity ratio(long p, long q) { return PiQuantity(Rational(Integer(p), Integer(q))); }

  const Rational& coefficient() const { return coefficient_; }

  PiQuantity operator-() const { return PiQuantity(-coefficient_); }
  friend PiQuantity operator+(const PiQuantity& a, const PiQuantity& b) {
    return PiQuantity(a.coefficient_ + b.coefficient_);
  }
  friend PiQuantity operator-(const PiQuantity& a, const PiQuantity& b) {
    return PiQuantity(a.coefficient_ - b.coefficient_);
  }
  friend PiQuantity operator*(const Rational& s, const PiQuantity& a) { return PiQuantity(s * a.coefficient_); }
  friend bool operator==(const PiQuantity& a, const PiQuantity& b) { return a.coefficient_ == b.coefficient_; }
  friend bool operator<(const PiQuantity& a, const PiQuantity& b) { return a.coefficient_ < b.coefficient_; }
  friend bool operator<=(const PiQuantity& a, const PiQuantity& b) { return a.coefficient_ <= b.coefficient_; }

  // "pi/6", "-2pi/15", "0"
  std::string to_string() const;

 private:
  Rational coefficient_{0};
};

class MixedSymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (k_pos * k + k_zero + k_neg / k) * pi in one symbol.
class KLaurent {
 public:
  KLaurent() = default;
  KLaurent(Rational k_pos, Rational k_zero, Rational k_neg, std::string symbol = "k");
  static KLaurent constant(const PiQuantity& q) { return KLaurent(0, q.coefficient(), 0, ""); }
  // pi * symbol^power for power in {-1, 0, 1}.
  static KLaurent power(int power, std::string symbol = "k");

  const Rational& k_pos() const { return pos_; }
  const Rational& k_zero() const { return zero_; }
  const Rational& k_neg() const { return neg_; }
  // Empty once no symbolic term remains.
  const std::string& symbol() const { return symbol_; }
  bool is_constant() const { return pos_ == 0 && neg_ == 0; }
  PiQuantity as_constant() const;

  PiQuantity at(const Integer& k) const;

  KLaurent operator-() const { return KLaurent(-pos_, -zero_, -neg_, symbol_); }
  friend KLaurent operator+(const KLaurent& a, const KLaurent& b);
  friend KLaurent operator-(const KLaurent& a, const KLaurent& b) { return a + (-b); }
  friend KLaurent operator*(const Rational& s, const KLaurent& a) {
    return KLaurent(s * a.pos_, s * a.zero_, s * a.neg_, a.symbol_);
  }
  // Coefficientwise.
  friend bool operator==(const KLaurent& a, const KLaurent& b) {
    return a.pos_ == b.pos_ && a.zero_ == b.zero_ && a.neg_ == b.neg_;
  }

  // Multiplies by (a * symbol + b); throws std::domain_error on a symbol^2 term.
  KLaurent times_linear(const Rational& a, const Rational& b, const std::string& symbol) const;

  std::string to_string() const;

 private:
  Rational pos_{0};
  Rational zero_{0};
  Rational neg_{0};
  std::string symbol_;
};

// An integer degree or a named symbol.
using DegreeEntry = std::variant<long, std::string>;

// (2 - j) pi + 2 pi sum 1/d_i. Throws std::invalid_argument on an entry below 2,
// an empty list, or two different symbols.
PiQuantity curvature(const std::vector<long>& degrees);
KLaurent curvature(const std::vector<DegreeEntry>& degrees);

struct DegreeTriple {
  long d1 = 0;
  long d2 = 0;
  long d3 = 0;
  PiQuantity value;
  friend bool operator==(const DegreeTriple& a, const DegreeTriple& b) {
    return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3 && a.value == b.value;
  }
};

// Sorted triples d1 <= d2 <= d3 of even degrees in [4, max_degree] with positive curvature.
std::vector<DegreeTriple> positive_triangles(long max_degree);

}  // namespace cpg
