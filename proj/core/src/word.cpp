#include "cpg/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace cpg {

TExp& TExp::operator+=(const TExp& other) {
  coeff_m_ += other.coeff_m_;
  constant_ += other.constant_;
  return *this;
}

TExp& TExp::operator-=(const TExp& other) {
  coeff_m_ -= other.coeff_m_;
  constant_ -= other.constant_;
  return *this;
}

int compare(const TExp& a, const TExp& b) {
  if (int c = cmp(a.coeff_m_, b.coeff_m_); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(a.constant_, b.constant_); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

std::string TExp::to_string() const {
  std::string out;
  if (coeff_m_ == 1) {
    out = "m";
  } else if (coeff_m_ == -1) {
    out = "-m";
  } else if (coeff_m_ != 0) {
    out = coeff_m_.get_str() + "m";
  }
  if (out.empty()) return constant_.get_str();
  if (constant_ > 0) out += "+" + constant_.get_str();
  if (constant_ < 0) out += constant_.get_str();
  return out;
}

TExp TExp::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty exponent", 0);
  TExp result;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t term_start = i;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (term_start != 0) {
      throw ParseError("expected '+' or '-' in exponent '" + s + "'", i);
    }
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer magnitude = 1;
    bool has_digits = i > digits_start;
    if (has_digits) magnitude = Integer(s.substr(digits_start, i - digits_start));
    if (i < s.size() && s[i] == 'm') {
      ++i;
      result.coeff_m_ += sign * magnitude;
    } else if (has_digits) {
      result.constant_ += sign * magnitude;
    } else {
      throw ParseError("malformed exponent '" + s + "'", i);
    }
  }
  return result;
}

TExp corner_exponent(Corner corner) {
  switch (corner) {
    case Corner::Lambda:
    case Corner::Mu:
      return TExp(0, 0);
    case Corner::A:
    case Corner::F:
      return TExp(1, -3);
    case Corner::B:
    case Corner::G:
    case Corner::H:
      return TExp(1, 0);
    case Corner::C:
    case Corner::E:
      return TExp(0, -3);
    case Corner::D:
      return TExp(1, 3);
  }
  return {};
}

namespace {

constexpr std::array<std::string_view, 10> kCornerAscii = {"lambda", "mu", "a", "b", "c", "d", "e", "f", "g", "h"};
constexpr std::array<std::string_view, 10> kCornerSymbol = {"λ", "μ", "a", "b", "c", "d", "e", "f", "g", "h"};
constexpr std::string_view kSuperMinusOne = "⁻¹";

}  // namespace

std::string_view corner_ascii(Corner corner) { return kCornerAscii[static_cast<std::size_t>(corner)]; }
std::string_view corner_symbol(Corner corner) { return kCornerSymbol[static_cast<std::size_t>(corner)]; }

std::optional<Corner> corner_from_name(std::string_view name) {
  for (Corner c : kAllCorners) {
    if (name == corner_ascii(c) || name == corner_symbol(c)) return c;
  }
  return std::nullopt;
}

Letter gen(char name, int sign) { return Gen{name, sign < 0 ? -1 : 1}; }
Letter tpow(TExp exp) { return TPower{std::move(exp)}; }
Letter tpow(long long constant) { return TPower{TExp::constant(Integer(static_cast<long>(constant)))}; }

Letter corner(Corner c, int sign) {
  if (sign < 0 && c == Corner::Lambda) return CornerLetter{Corner::Mu, 1};
  if (sign < 0 && c == Corner::Mu) return CornerLetter{Corner::Lambda, 1};
  return CornerLetter{c, sign < 0 ? -1 : 1};
}

Letter inverse(const Letter& letter) {
  if (const auto* g = std::get_if<Gen>(&letter)) return Gen{g->name, -g->sign};
  if (const auto* t = std::get_if<TPower>(&letter)) return TPower{-t->exp};
  const auto& c = std::get<CornerLetter>(letter);
  return corner(c.corner, -c.sign);
}

bool cancels(const Letter& a, const Letter& b) {
  if (std::holds_alternative<TPower>(a) || std::holds_alternative<TPower>(b)) return false;
  return inverse(a) == b;
}

namespace {

int sign_rank(int sign) { return sign > 0 ? 0 : 1; }

int three_way(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

int kind_rank(const Letter& l) {
  if (std::holds_alternative<CornerLetter>(l)) return 0;
  if (std::holds_alternative<Gen>(l)) return 1;
  return 2;
}

}  // namespace

int compare(const Letter& a, const Letter& b) {
  if (int c = three_way(kind_rank(a), kind_rank(b)); c != 0) return c;
  if (const auto* ca = std::get_if<CornerLetter>(&a)) {
    const auto& cb = std::get<CornerLetter>(b);
    if (int c = three_way(static_cast<int>(ca->corner), static_cast<int>(cb.corner)); c != 0) return c;
    return three_way(sign_rank(ca->sign), sign_rank(cb.sign));
  }
  if (const auto* ga = std::get_if<Gen>(&a)) {
    const auto& gb = std::get<Gen>(b);
    if (int c = three_way(ga->name, gb.name); c != 0) return c;
    return three_way(sign_rank(ga->sign), sign_rank(gb.sign));
  }
  return compare(std::get<TPower>(a).exp, std::get<TPower>(b).exp);
}

Torsion torsion_for(const Integer& m) { return Torsion{m, 2 * m}; }

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(cpg::inverse(*it));
  return Word(std::move(out), torsion_);
}

Word Word::rotated(std::size_t offset) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(offset % out.size()), out.end());
  return Word(std::move(out), torsion_);
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  end = std::min(end, letters_.size());
  begin = std::min(begin, end);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(end)),
              torsion_);
}

Word Word::power(long long exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(out), torsion_);
}

Word Word::inserted(std::size_t position, const Word& piece) const {
  if (position > letters_.size()) throw std::out_of_range("insertion position past end of word");
  std::vector<Letter> out = letters_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(position), piece.letters_.begin(), piece.letters_.end());
  return Word(std::move(out), torsion_);
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out), a.torsion_ ? a.torsion_ : b.torsion_);
}

int compare(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  return three_way(static_cast<int>(a.size() > b.size()), static_cast<int>(b.size() > a.size()));
}

namespace {

// Returns nullopt when the power is trivial.
std::optional<TExp> normalize_power(const TExp& exp, const std::optional<Torsion>& torsion) {
  if (!torsion) {
    if (exp.is_zero()) return std::nullopt;
    return exp;
  }
  Integer value = symmetric_mod(exp.at(torsion->m), torsion->order);
  if (value == 0) return std::nullopt;
  return TExp::constant(value);
}

void push_reduced(std::vector<Letter>& stack, const Letter& letter, const std::optional<Torsion>& torsion) {
  if (const auto* t = std::get_if<TPower>(&letter)) {
    TExp exp = t->exp;
    if (!stack.empty()) {
      if (const auto* top = std::get_if<TPower>(&stack.back())) {
        exp += top->exp;
        stack.pop_back();
      }
    }
    if (auto normalized = normalize_power(exp, torsion)) stack.push_back(TPower{*normalized});
    return;
  }
  if (!stack.empty() && cancels(stack.back(), letter)) {
    stack.pop_back();
    return;
  }
  stack.push_back(letter);
}

}  // namespace

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& letter : w.letters()) push_reduced(stack, letter, w.torsion());
  return Word(std::move(stack), w.torsion());
}

Word cyclically_reduce(const Word& w) {
  std::vector<Letter> letters = free_reduce(w).letters();
  std::size_t begin = 0;
  std::size_t end = letters.size();
  while (end - begin >= 2) {
    const Letter& first = letters[begin];
    const Letter& last = letters[end - 1];
    if (cancels(first, last)) {
      ++begin;
      --end;
      continue;
    }
    const auto* tf = std::get_if<TPower>(&first);
    const auto* tl = std::get_if<TPower>(&last);
    if (tf && tl) {
      auto merged = normalize_power(tf->exp + tl->exp, w.torsion());
      --end;
      if (merged) {
        letters[begin] = TPower{*merged};
      } else {
        ++begin;
      }
      continue;
    }
    break;
  }
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(begin),
                                  letters.begin() + static_cast<std::ptrdiff_t>(end)),
              w.torsion());
}

bool is_cyclic_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t j = 0; j < a.size(); ++j) {
    bool equal = true;
    for (std::size_t i = 0; i < a.size() && equal; ++i) equal = a[(i + j) % a.size()] == b[i];
    if (equal) return true;
  }
  return false;
}

TExp exponent_sum(const Word& w) {
  TExp total;
  for (const Letter& letter : w.letters()) {
    if (const auto* t = std::get_if<TPower>(&letter)) {
      total += t->exp;
    } else if (const auto* c = std::get_if<CornerLetter>(&letter)) {
      total += c->sign > 0 ? corner_exponent(c->corner) : -corner_exponent(c->corner);
    }
  }
  return total;
}

Word substitute_corners(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& letter : w.letters()) {
    if (const auto* c = std::get_if<CornerLetter>(&letter)) {
      TExp exp = corner_exponent(c->corner);
      out.push_back(TPower{c->sign > 0 ? exp : -exp});
    } else {
      out.push_back(letter);
    }
  }
  return Word(std::move(out), w.torsion());
}

Word substitute(const Word& w, char generator, const Word& image) {
  std::vector<Letter> out;
  Word inverse_image = image.inverse();
  for (const Letter& letter : w.letters()) {
    const auto* g = std::get_if<Gen>(&letter);
    if (g && g->name == generator) {
      const Word& piece = g->sign > 0 ? image : inverse_image;
      out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    } else {
      out.push_back(letter);
    }
  }
  return Word(std::move(out), w.torsion());
}

bool is_proper_power(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = w[i] == w[i - period];
    if (periodic) return true;
  }
  return false;
}

CyclicWord canonical_cyclic(const Word& w) {
  Word best = w;
  const Word inv = w.inverse();
  for (const Word* source : {&w, &inv}) {
    for (std::size_t j = 0; j < source->size(); ++j) {
      Word candidate = source->rotated(j);
      if (compare(candidate, best) < 0) best = std::move(candidate);
    }
  }
  return CyclicWord(std::move(best));
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    std::vector<Letter> out;
    skip_separators();
    while (pos_ < text_.size()) {
      parse_token(out);
      skip_separators();
    }
    return Word(std::move(out));
  }

 private:
  bool starts_with(std::string_view prefix) const { return text_.substr(pos_).starts_with(prefix); }

  void skip_separators() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
        ++pos_;
      } else if (starts_with("·")) {
        pos_ += std::string_view("·").size();
      } else {
        break;
      }
    }
  }

  void parse_token(std::vector<Letter>& out) {
    std::size_t start = pos_;
    for (Corner c : {Corner::Lambda, Corner::Mu}) {
      for (std::string_view name : {corner_ascii(c), corner_symbol(c)}) {
        if (starts_with(name)) {
          pos_ += name.size();
          append_repeated(out, corner(c), integer_exponent(start));
          return;
        }
      }
    }
    char ch = text_[pos_];
    if (ch == 't') {
      ++pos_;
      out.push_back(TPower{power_exponent()});
      return;
    }
    if (ch >= 'a' && ch <= 'h') {
      ++pos_;
      append_repeated(out, corner(*corner_from_name(std::string_view(&ch, 1))), integer_exponent(start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      ++pos_;
      append_repeated(out, gen(ch), integer_exponent(start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
  }

  static void append_repeated(std::vector<Letter>& out, const Letter& letter, long long exponent) {
    Letter unit = exponent < 0 ? inverse(letter) : letter;
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out.push_back(unit);
  }

  long long integer_exponent(std::size_t token_start) {
    TExp exp = power_exponent();
    if (exp.coeff_m() != 0 || !exp.constant_term().fits_slong_p()) {
      throw ParseError("symbolic exponent is only allowed on t", token_start);
    }
    return exp.constant_term().get_si();
  }

  TExp power_exponent() {
    if (starts_with(kSuperMinusOne)) {
      pos_ += kSuperMinusOne.size();
      return TExp::constant(-1);
    }
    if (pos_ >= text_.size() || text_[pos_] != '^') return TExp::constant(1);
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis", pos_);
      TExp exp = TExp::parse(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return exp;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == 'm') ++pos_;
    if (pos_ == start) throw ParseError("missing exponent after '^'", pos_);
    return TExp::parse(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string exponent_suffix(const TExp& exp) {
  if (exp == TExp::constant(1)) return "";
  std::string body = exp.to_string();
  if (exp.coeff_m() == 0 || body == "m" || body == "-m" || body.find_first_of("+-", 1) == std::string::npos) {
    return "^" + body;
  }
  return "^(" + body + ")";
}

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string to_string(const Word& w) {
  std::string out;
  auto append = [&out](const std::string& token) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  };
  for (std::size_t i = 0; i < w.size();) {
    const Letter& letter = w[i];
    if (const auto* g = std::get_if<Gen>(&letter)) {
      std::size_t run = 1;
      while (i + run < w.size() && w[i + run] == letter) ++run;
      long long exponent = static_cast<long long>(run) * g->sign;
      append(std::string(1, g->name) + (exponent == 1 ? "" : "^" + std::to_string(exponent)));
      i += run;
      continue;
    }
    if (const auto* t = std::get_if<TPower>(&letter)) {
      append("t" + exponent_suffix(t->exp));
    } else {
      const auto& c = std::get<CornerLetter>(letter);
      append(std::string(corner_ascii(c.corner)) + (c.sign < 0 ? "^-1" : ""));
    }
    ++i;
  }
  return out;
}

std::string to_display(const Word& w) {
  std::string out;
  for (const Letter& letter : w.letters()) {
    if (const auto* g = std::get_if<Gen>(&letter)) {
      out.push_back(g->name);
      if (g->sign < 0) out += kSuperMinusOne;
    } else if (const auto* t = std::get_if<TPower>(&letter)) {
      out += "t" + exponent_suffix(t->exp);
    } else {
      const auto& c = std::get<CornerLetter>(letter);
      out += corner_symbol(c.corner);
      if (c.sign < 0) out += kSuperMinusOne;
    }
  }
  return out;
}

}  // namespace cpg
