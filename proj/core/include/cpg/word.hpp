#pragma once

#include "cpg/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cpg {

// Values of m left out of the hyperbolicity argument.
inline const std::vector<long> kExcludedM = {1, 2, 3, 4, 6, 9, 12};

// Linear form coeff_m * m + constant, the exponent of a power of t.
class TExp {
 public:
  TExp() = default;
  TExp(Integer coeff_m, Integer constant) : coeff_m_(std::move(coeff_m)), constant_(std::move(constant)) {}
  static TExp constant(Integer c) { return TExp(0, std::move(c)); }

  const Integer& coeff_m() const { return coeff_m_; }
  const Integer& constant_term() const { return constant_; }

  Integer at(const Integer& m) const { return coeff_m_ * m + constant_; }
  bool is_zero() const { return coeff_m_ == 0 && constant_ == 0; }

  TExp operator-() const { return TExp(-coeff_m_, -constant_); }
  TExp& operator+=(const TExp& other);
  TExp& operator-=(const TExp& other);
  TExp scaled(const Integer& factor) const { return TExp(coeff_m_ * factor, constant_ * factor); }

  friend TExp operator+(TExp a, const TExp& b) { return a += b; }
  friend TExp operator-(TExp a, const TExp& b) { return a -= b; }
  friend bool operator==(const TExp& a, const TExp& b) {
    return a.coeff_m_ == b.coeff_m_ && a.constant_ == b.constant_;
  }

  // Orders by coefficient of m, then by constant.
  friend int compare(const TExp& a, const TExp& b);

  // "m-3", "2m", "-3", "0".
  std::string to_string() const;
  static TExp parse(std::string_view text);

 private:
  Integer coeff_m_{0};
  Integer constant_{0};
};

enum class Corner : std::uint8_t { Lambda, Mu, A, B, C, D, E, F, G, H };

inline constexpr Corner kAllCorners[] = {Corner::Lambda, Corner::Mu, Corner::A, Corner::B, Corner::C,
                                         Corner::D,      Corner::E,  Corner::F, Corner::G, Corner::H};

// The power of t carried by each corner letter.
TExp corner_exponent(Corner corner);
std::string_view corner_ascii(Corner corner);
std::string_view corner_symbol(Corner corner);
std::optional<Corner> corner_from_name(std::string_view name);

struct Gen {
  char name = 'x';
  int sign = 1;
  friend bool operator==(const Gen&, const Gen&) = default;
};

struct TPower {
  TExp exp;
  friend bool operator==(const TPower&, const TPower&) = default;
};

struct CornerLetter {
  Corner corner = Corner::Lambda;
  int sign = 1;
  friend bool operator==(const CornerLetter&, const CornerLetter&) = default;
};

using Letter = std::variant<Gen, TPower, CornerLetter>;

Letter gen(char name, int sign = 1);
Letter tpow(TExp exp);
Letter tpow(long long constant);
// Lambda with sign -1 is stored as Mu and vice versa.
Letter corner(Corner c, int sign = 1);

Letter inverse(const Letter& letter);
bool cancels(const Letter& a, const Letter& b);

// Corner < Gen < TPower; corners by enum order, generators by name, positive before negative.
int compare(const Letter& a, const Letter& b);

struct Torsion {
  Integer m;
  Integer order;
  friend bool operator==(const Torsion&, const Torsion&) = default;
};

// t^{2m} = 1.
Torsion torsion_for(const Integer& m);

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters, std::optional<Torsion> torsion = std::nullopt)
      : letters_(std::move(letters)), torsion_(std::move(torsion)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  const std::optional<Torsion>& torsion() const { return torsion_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word with_torsion(std::optional<Torsion> torsion) const { return Word(letters_, std::move(torsion)); }
  Word inverse() const;
  Word rotated(std::size_t offset) const;
  Word slice(std::size_t begin, std::size_t end) const;
  Word power(long long exponent) const;
  Word inserted(std::size_t position, const Word& piece) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  std::optional<Torsion> torsion_;
};

int compare(const Word& a, const Word& b);

// Cancels inverse pairs and merges adjacent powers of t. With a torsion context,
// exponents are evaluated and reduced to (-order/2, order/2].
Word free_reduce(const Word& w);
// Free reduction followed by cancellation across the ends.
Word cyclically_reduce(const Word& w);
bool is_cyclic_rotation(const Word& a, const Word& b);

TExp exponent_sum(const Word& w);

// Replaces every corner letter with its power of t.
Word substitute_corners(const Word& w);
Word substitute(const Word& w, char generator, const Word& image);

bool is_proper_power(const Word& w);

class CyclicWord {
 public:
  const Word& rep() const { return rep_; }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return compare(a.rep_, b.rep_) < 0; }

 private:
  friend CyclicWord canonical_cyclic(const Word& w);
  explicit CyclicWord(Word rep) : rep_(std::move(rep)) {}
  Word rep_;
};

// Minimal representative over all rotations of w and of its inverse.
CyclicWord canonical_cyclic(const Word& w);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Accepts tokens such as x, x^-2, t^m, t^(m-3), t^-3, a, b^-1, b⁻¹, lambda, λ, mu, μ.
Word parse_word(std::string_view text);

// Space separated ASCII tokens; parse_word(to_string(w)) == w.
std::string to_string(const Word& w);
// Compact form with Greek letters and superscript inverses, e.g. "ab⁻¹λa⁻¹bμ".
std::string to_display(const Word& w);

}  // namespace cpg
