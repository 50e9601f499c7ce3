#include "cpg/data_dir.hpp"
#include "cpg/stargraph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <chrono>

using namespace cpg;

namespace {

const std::filesystem::path kData = default_data_dir();

LabelQuery everything(GraphVariant v, const StarGraph& g, std::size_t max_degree) {
  LabelQuery q;
  q.variant = v;
  q.max_degree = max_degree;
  for (const StarEdge& e : g.edges()) q.interior.insert(e.label);
  return q;
}

bool contains_letter(const Word& w, Corner c, int sign) {
  for (const Letter& l : w.letters()) {
    if (const auto* x = std::get_if<CornerLetter>(&l); x && x->corner == c && x->sign == sign) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("stargraph") {
  TEST_CASE("solve_m on the exclusion examples") {
    const MSolution a = solve_m(TExp(1, -6));
    CHECK(a.empty());
    CHECK(a.raw() == std::set<long>{2, 6});
    const MSolution b = solve_m(TExp(1, 15));
    CHECK(b.values() == std::set<long>{5, 15});
    CHECK(b.raw() == std::set<long>{1, 3, 5, 15});
    CHECK(solve_m(TExp(2, 0)).is_all());
    CHECK(solve_m(TExp(1, 0)).empty());
  }

  TEST_CASE("solve_m agrees with trying every m") {
    for (long p = -4; p <= 4; ++p) {
      for (long q = -60; q <= 60; ++q) {
        const MSolution s = solve_m(TExp(p, q));
        const oracle::MSet o = oracle::solve_m(p, q);
        INFO("p " << p << " q " << q);
        CHECK(s.is_all() == o.all);
        if (!o.all) {
          CHECK(s.raw() == o.raw);
          CHECK(s.values() == o.values);
        }
        CHECK(solve_m(TExp(-p, -q)) == s);
      }
    }
  }

  TEST_CASE("enumeration equals the raw-sequence oracle") {
    for (GraphVariant v : {GraphVariant::FigV, GraphVariant::FigVi}) {
      const StarGraph g = load_variant(v, kData);
      for (std::size_t d : {4u, 6u, 8u}) {
        std::set<CyclicWord> fast;
        for (const Label& l : enumerate_labels(g, everything(v, g, d))) fast.insert(l.word);
        const std::set<CyclicWord> slow = oracle::labels(g, d);
        INFO(variant_name(v) << " degree " << d);
        CHECK(fast.size() == slow.size());
        CHECK(fast == slow);
      }
    }
  }

  TEST_CASE("labels are closed under inversion with the same m") {
    const StarGraph g = load_variant(GraphVariant::FigV, kData);
    for (const Label& l : enumerate_labels(g, everything(GraphVariant::FigV, g, 6))) {
      CHECK(canonical_cyclic(l.word.rep().inverse()) == l.word);
      CHECK(solve_m(exponent_sum(l.word.rep().inverse())) == l.m);
      CHECK_FALSE(l.m.empty());
      CHECK_FALSE(contains_letter(l.word.rep(), Corner::Lambda, -1));
      CHECK_FALSE(contains_letter(l.word.rep(), Corner::Mu, -1));
    }
  }

  TEST_CASE("labels on two-node edges have even length") {
    for (GraphVariant v : {GraphVariant::FigV, GraphVariant::FigVi}) {
      const StarGraph g = load_variant(v, kData);
      for (const Label& l : enumerate_labels(g, everything(v, g, 8))) {
        bool loops = contains_letter(l.word.rep(), Corner::G, 1) || contains_letter(l.word.rep(), Corner::G, -1) ||
                     contains_letter(l.word.rep(), Corner::H, 1) || contains_letter(l.word.rep(), Corner::H, -1);
        if (!loops) CHECK(l.word.rep().size() % 2 == 0);
      }
    }
  }

  TEST_CASE("vertex label lists i to iv") {
    const auto start = std::chrono::steady_clock::now();
    const Lemma32Report report = lemma32_report(kData);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const LabelComparison& c : report.parts) {
      INFO("part " << c.part);
      CHECK(c.missing.empty());
      CHECK(c.unexpected.empty());
      CHECK(c.restricted_found == c.restricted_expected);
      CHECK(c.pass);
    }
    CHECK(report.parts.size() == 7);
    CHECK(seconds < 5.0);
    const auto i = lemma32_part("i", kData);
    REQUIRE(i.size() == 1);
    CHECK(i.front().found.size() == 3);
    CHECK(lemma32_part("ii", kData).front().found.size() == 14);
    CHECK(lemma32_part("iii", kData).front().found.size() == 5);
    CHECK_THROWS(lemma32_part("v", kData));
  }

  TEST_CASE("flagged completions") {
    std::set<std::string> flagged;
    for (const LabelComparison& c : lemma32_part("iv", kData)) {
      for (const std::string& w : c.restricted_found) flagged.insert(w);
    }
    CHECK(flagged.size() == 3);
  }

  TEST_CASE("repeated labels") {
    CHECK(is_power_of_admissible(parse_word("b mu b mu b mu b mu")));
    CHECK_FALSE(is_power_of_admissible(parse_word("b mu b mu")));
    const StarGraph g = load_variant(GraphVariant::FigV, kData);
    LabelQuery q = everything(GraphVariant::FigV, g, 8);
    q.interior = {Corner::Lambda, Corner::Mu, Corner::A, Corner::B};
    q.exclude_repeated_labels = false;
    std::set<CyclicWord> all;
    for (const Label& l : enumerate_labels(g, q)) all.insert(l.word);
    CHECK(all.count(canonical_cyclic(parse_word("b mu b mu b mu b mu"))) == 1);
    CHECK(all == oracle::labels(g.restricted(q.interior, "ab"), 8, false));
  }

  TEST_CASE("query files") {
    const LabelQuery q = parse_label_query(R"({"graph": "vi", "max_degree": 4, "letters": ["a", "b"], "pattern": "a b^-1"})");
    CHECK(q.variant == GraphVariant::FigVi);
    CHECK(q.max_degree == 4);
    CHECK(q.pattern.has_value());
    CHECK_THROWS(parse_label_query(R"({"graph": "vii"})"));
    CHECK_THROWS(parse_label_query(R"({"letters": ["z"]})"));
    CHECK_THROWS(parse_label_query(R"({"boundary_count": 2})"));
  }

  TEST_CASE("graph files are checked against the corner dictionary") {
    CHECK_THROWS(StarGraph::parse(R"({"name": "x", "nodes": ["P", "N"], "edges": [
      {"label": "a", "from": "P", "to": "N", "coeff_m": 1, "const": 0, "directed": false}]})"));
  }
}
