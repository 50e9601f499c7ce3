#include "cpg/curvature.hpp"

#include <sstream>

namespace cpg {

namespace {

Rational frac(long p, long q) {
  Rational r{Integer(p), Integer(q)};
  r.canonicalize();
  return r;
}

void append_term(std::ostringstream& out, bool& first, const Rational& c, const std::string& text) {
  if (c == 0) return;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  first = false;
  out << text;
}

// |c| k, |c|, |c|/k
std::string term_text(const Rational& c, int power, const std::string& symbol) {
  Rational magnitude = abs(c);
  const Integer& num = magnitude.get_num();
  const Integer& den = magnitude.get_den();
  if (power == 0) return to_string(magnitude);
  if (power == 1) return (magnitude == 1 ? "" : to_string(magnitude)) + symbol;
  if (den == 1) return to_string(num) + "/" + symbol;
  return to_string(num) + "/(" + to_string(den) + symbol + ")";
}

}  // namespace

std::string PiQuantity::to_string() const {
  if (coefficient_ == 0) return "0";
  std::ostringstream out;
  Integer num = coefficient_.get_num();
  Integer den = coefficient_.get_den();
  if (num == -1) {
    out << "-";
  } else if (num != 1) {
    out << cpg::to_string(num);
  }
  out << "pi";
  if (den != 1) out << "/" << cpg::to_string(den);
  return out.str();
}

KLaurent::KLaurent(Rational k_pos, Rational k_zero, Rational k_neg, std::string symbol)
    : pos_(std::move(k_pos)), zero_(std::move(k_zero)), neg_(std::move(k_neg)), symbol_(std::move(symbol)) {
  pos_.canonicalize();
  zero_.canonicalize();
  neg_.canonicalize();
  if (is_constant()) symbol_.clear();
}

KLaurent KLaurent::power(int power, std::string symbol) {
  switch (power) {
    case 1: return KLaurent(1, 0, 0, std::move(symbol));
    case 0: return KLaurent(0, 1, 0, "");
    case -1: return KLaurent(0, 0, 1, std::move(symbol));
    default: throw std::domain_error("power " + std::to_string(power) + " outside {-1, 0, 1}");
  }
}

PiQuantity KLaurent::as_constant() const {
  if (!is_constant()) throw std::logic_error("quantity depends on " + symbol_);
  return PiQuantity(zero_);
}

PiQuantity KLaurent::at(const Integer& k) const {
  if (neg_ != 0 && k == 0) throw std::domain_error("evaluation at zero");
  Rational value = pos_ * Rational(k) + zero_;
  if (neg_ != 0) value += neg_ / Rational(k);
  return PiQuantity(value);
}

KLaurent operator+(const KLaurent& a, const KLaurent& b) {
  std::string symbol = a.symbol_;
  if (symbol.empty()) {
    symbol = b.symbol_;
  } else if (!b.symbol_.empty() && b.symbol_ != symbol) {
    throw MixedSymbolError("expression mixes symbols " + a.symbol_ + " and " + b.symbol_);
  }
  return KLaurent(a.pos_ + b.pos_, a.zero_ + b.zero_, a.neg_ + b.neg_, symbol);
}

KLaurent KLaurent::times_linear(const Rational& a, const Rational& b, const std::string& symbol) const {
  if (a != 0 && !symbol_.empty() && symbol_ != symbol) {
    throw MixedSymbolError("expression mixes symbols " + symbol_ + " and " + symbol);
  }
  if (a != 0 && pos_ != 0) throw std::domain_error("product has a " + symbol + "^2 term");
  const std::string& s = symbol_.empty() ? symbol : symbol_;
  // (a k + b)(p k + z + n/k) = (a z + b p) k + (a n + b z) + b n / k, with a p = 0.
  return KLaurent(a * zero_ + b * pos_, a * neg_ + b * zero_, b * neg_, s);
}

std::string KLaurent::to_string() const {
  if (is_constant()) return PiQuantity(zero_).to_string();
  std::ostringstream out;
  bool first = true;
  out << "(";
  append_term(out, first, pos_, term_text(pos_, 1, symbol_));
  append_term(out, first, zero_, term_text(zero_, 0, symbol_));
  append_term(out, first, neg_, term_text(neg_, -1, symbol_));
  out << ")pi";
  return out.str();
}

PiQuantity curvature(const std::vector<long>& degrees) {
  std::vector<DegreeEntry> entries(degrees.begin(), degrees.end());
  return curvature(entries).as_constant();
}

KLaurent curvature(const std::vector<DegreeEntry>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("curvature needs at least one degree");
  const long j = static_cast<long>(degrees.size());
  KLaurent total = KLaurent::constant(PiQuantity(Rational(2 - j)));
  for (const DegreeEntry& entry : degrees) {
    if (const long* d = std::get_if<long>(&entry)) {
      if (*d < 2) throw std::invalid_argument("degree " + std::to_string(*d) + " is below 2");
      total = total + KLaurent::constant(PiQuantity(frac(2, *d)));
    } else {
      const std::string& symbol = std::get<std::string>(entry);
      if (symbol.empty()) throw std::invalid_argument("empty degree symbol");
      total = total + Rational(2) * KLaurent::power(-1, symbol);
    }
  }
  return total;
}

std::vector<DegreeTriple> positive_triangles(long max_degree) {
  if (max_degree < 4 || max_degree % 2 != 0) {
    throw std::invalid_argument("max_degree must be even and at least 4");
  }
  std::vector<DegreeTriple> out;
  for (long d1 = 4; d1 <= max_degree; d1 += 2) {
    for (long d2 = d1; d2 <= max_degree; d2 += 2) {
      for (long d3 = d2; d3 <= max_degree; d3 += 2) {
        PiQuantity c = curvature(std::vector<long>{d1, d2, d3});
        if (c.coefficient() > 0) out.push_back({d1, d2, d3, c});
      }
    }
  }
  return out;
}

}  // namespace cpg
