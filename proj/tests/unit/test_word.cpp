#include "cpg/word.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cpg;

namespace {

Letter random_letter(std::mt19937& rng, bool with_t) {
  std::uniform_int_distribution<int> pick(0, with_t ? 5 : 4);
  std::uniform_int_distribution<int> sign(0, 1);
  const int s = sign(rng) ? 1 : -1;
  switch (pick(rng)) {
    case 0: return gen('x', s);
    case 1: return gen('y', s);
    case 2: return corner(Corner::A, s);
    case 3: return corner(Corner::Lambda, 1);
    case 4: return corner(Corner::Mu, 1);
    default: return tpow(TExp(std::uniform_int_distribution<int>(-1, 1)(rng), std::uniform_int_distribution<int>(-4, 4)(rng)));
  }
}

Word random_word(std::mt19937& rng, std::size_t max_len, bool with_t = false) {
  std::vector<Letter> letters;
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i) letters.push_back(random_letter(rng, with_t));
  return Word(letters);
}

// Cancels adjacent inverse pairs in random order until none remain.
Word reduce_randomly(Word w, std::mt19937& rng) {
  std::vector<Letter> v = w.letters();
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (cancels(v[i], v[i + 1])) spots.push_back(i);
    }
    if (spots.empty()) break;
    const std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
  }
  return Word(v);
}

}  // namespace

TEST_SUITE("word") {
  TEST_CASE("exponent forms print and parse") {
    CHECK(TExp(1, -3).to_string() == "m-3");
    CHECK(TExp(2, 0).to_string() == "2m");
    CHECK(TExp(0, -3).to_string() == "-3");
    CHECK(TExp().to_string() == "0");
    for (const char* s : {"m-3", "2m", "-3", "0", "m+3", "-m"}) CHECK(TExp::parse(s).to_string() == s);
    CHECK(TExp(1, 3).at(5) == 8);
  }

  TEST_CASE("words round-trip through text") {
    for (const char* s : {"x t^-3", "t^m x t^(m+3) x t^(m-3)", "a b^-1 lambda a^-1 b mu", "x^-2 t^(2m)"}) {
      const Word w = parse_word(s);
      CHECK(parse_word(to_string(w)) == w);
    }
    CHECK(parse_word("λ") == parse_word("lambda"));
    CHECK(parse_word("b⁻¹") == parse_word("b^-1"));
    CHECK(to_display(parse_word("a b^-1 lambda a^-1 b mu")) == "ab⁻¹λa⁻¹bμ");
    CHECK_THROWS_AS(parse_word("x^"), ParseError);
    CHECK_THROWS_AS(parse_word("x # t"), ParseError);
  }

  TEST_CASE("lambda inverse is stored as mu") {
    CHECK(corner(Corner::Lambda, -1) == corner(Corner::Mu, 1));
    CHECK(cancels(corner(Corner::Lambda), corner(Corner::Mu)));
  }

  TEST_CASE("free reduction with torsion") {
    const Torsion tor = torsion_for(5);
    CHECK(free_reduce(parse_word("t^m t^m x").with_torsion(tor)) == parse_word("x").with_torsion(tor));
    CHECK(to_string(free_reduce(parse_word("t^7 x").with_torsion(tor))) == "t^-3 x");
    CHECK(free_reduce(parse_word("x x^-1 t^3 t^-3")).empty());
    CHECK(cyclically_reduce(parse_word("x^-1 a b x")) == parse_word("a b"));
  }

  TEST_CASE("free_reduce is idempotent, shortening and order independent") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 400; ++i) {
      const Word w = random_word(rng, 14);
      const Word r = free_reduce(w);
      CHECK(free_reduce(r) == r);
      CHECK(r.size() <= w.size());
      CHECK(reduce_randomly(w, rng) == r);
    }
  }

  TEST_CASE("exponent sums add and negate") {
    std::mt19937 rng(77);
    for (int i = 0; i < 300; ++i) {
      const Word a = random_word(rng, 8, true);
      const Word b = random_word(rng, 8, true);
      CHECK(exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b));
      CHECK(exponent_sum(a.inverse()) == -exponent_sum(a));
    }
    CHECK(exponent_sum(parse_word("a b^-1 lambda")) == TExp(0, -3));
  }

  TEST_CASE("canonical_cyclic matches the explicit minimum") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 400; ++i) {
      const Word w = cyclically_reduce(random_word(rng, 10));
      if (w.empty()) continue;
      CHECK(canonical_cyclic(w).rep() == oracle::canonical_cyclic(w));
      const std::size_t r = std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng);
      CHECK(canonical_cyclic(w.rotated(r)) == canonical_cyclic(w));
      CHECK(canonical_cyclic(w.inverse()) == canonical_cyclic(w));
    }
  }

  TEST_CASE("rotations and proper powers") {
    CHECK(is_cyclic_rotation(parse_word("a b c"), parse_word("c a b")));
    CHECK_FALSE(is_cyclic_rotation(parse_word("a b c"), parse_word("a c b")));
    CHECK(is_proper_power(parse_word("b mu b mu")));
    CHECK_FALSE(is_proper_power(parse_word("b mu b")));
  }
}
