#include "cpg/data_dir.hpp"
#include "cpg/ledger.hpp"

#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace cpg;
using nlohmann::json;

namespace {

const std::filesystem::path kLedger = default_data_dir() / "ledger" / "ledger.json";
const std::filesystem::path kErrata = default_data_dir() / "ledger" / "errata.json";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const AssertionOutcome* find(const LedgerReport& r, const std::string& id) {
  for (const AssertionOutcome& o : r.outcomes) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("ledger") {
  TEST_CASE("shipped ledger holds") {
    const LedgerReport r = run_ledger(kLedger);
    CHECK(r.outcomes.size() >= 35);
    for (const AssertionOutcome& o : r.outcomes) {
      INFO(o.id << ": " << o.lhs_value << " " << o.relation << " " << o.rhs_value << " " << o.message);
      CHECK(o.pass);
    }
    for (const char* id : {"claim1-c6610", "claim1-c688", "claim2-29-bound", "tau-19", "tau-16-chain",
                           "cstar-two-apart-contradiction", "cstar-one-exceptional-bound", "tau-15-bound-at-4",
                           "tau-16-at-4"}) {
      INFO(id);
      REQUIRE(find(r, id) != nullptr);
    }
    CHECK(find(r, "tau-19")->method == "identity");
  }

  TEST_CASE("errata fail as recorded") {
    const LedgerReport r = run_ledger(kErrata);
    CHECK(r.passed() == 0);
    const AssertionOutcome* chain = find(r, "tau-15-chain");
    REQUIRE(chain);
    CHECK(chain->difference == "pi/12");
    const AssertionOutcome* share = find(r, "stage2-share-nonpositive-k4");
    REQUIRE(share);
    REQUIRE(share->counterexample.has_value());
    CHECK(*share->counterexample == 4);
  }

  TEST_CASE("tampering any assertion flips it") {
    const std::vector<Assertion> shipped = load_ledger(kLedger);
    for (std::size_t i = 0; i < shipped.size(); ++i) {
      std::vector<Assertion> copy = shipped;
      Assertion& a = copy[i];
      const Expr eps = Expr::pi_rational(Rational(1, 1000));
      a.rhs = a.relation == Relation::Equal ? Expr::add({a.lhs, eps}) : Expr::sub(a.lhs, eps);
      INFO(a.id);
      CHECK_FALSE(check_assertion(a).pass);
      CHECK_FALSE(run_ledger(copy).pass());
    }
  }

  TEST_CASE("decision methods") {
    auto make = [](Expr lhs, Relation rel, Expr rhs, std::optional<SymbolRange> range) {
      return Assertion{"t", std::move(lhs), rel, std::move(rhs), range, ""};
    };
    // 2/k - 1/4 <= 0 fails for k < 8 and holds from 8 on.
    const Expr share = Expr::sub(Expr::scale(2, Expr::symbol_power(-1)), Expr::pi_rational(Rational(1, 4)));
    const AssertionOutcome low = check_assertion(make(share, Relation::LessEqual, Expr::pi_rational(0), SymbolRange{4}));
    CHECK_FALSE(low.pass);
    CHECK(low.method == "root-bound");
    CHECK(*low.counterexample == 4);
    CHECK(check_assertion(make(share, Relation::LessEqual, Expr::pi_rational(0), SymbolRange{8})).pass);
    CHECK_FALSE(check_assertion(make(share, Relation::Less, Expr::pi_rational(0), SymbolRange{8})).pass);
    const AssertionOutcome bounded =
        check_assertion(make(share, Relation::LessEqual, Expr::pi_rational(0), SymbolRange{8, 12, true}));
    CHECK(bounded.pass);
    CHECK(bounded.method == "pointwise");
    // k/6 grows past any constant.
    const Expr grow = Expr::scale_linear(1, 0, Expr::pi_rational(Rational(1, 6)));
    const AssertionOutcome tail = check_assertion(make(grow, Relation::Less, Expr::pi_rational(100), SymbolRange{2}));
    CHECK_FALSE(tail.pass);
    CHECK(*tail.counterexample == 600);
    CHECK(check_assertion(make(Expr::curvature({4L, 6L, 8L}), Relation::Equal, Expr::pi_rational(Rational(1, 12)),
                               std::nullopt))
              .method == "exact");
  }

  TEST_CASE("malformed ledgers name the line") {
    const std::string bad_node = "[\n {\"id\": \"a\", \"expr_lhs\": {\"c\": [4,4,4]}, \"rel\": \"=\", \"expr_rhs\": {\"pi_rat\": [1,2]}},\n"
                                 " {\"id\": \"b\", \"expr_lhs\": {\"cc\": [4]}, \"rel\": \"=\", \"expr_rhs\": {\"pi_rat\": [1,2]}}\n]";
    try {
      parse_ledger(bad_node);
      FAIL("expected an error");
    } catch (const LedgerError& e) {
      REQUIRE(e.line().has_value());
      CHECK(*e.line() == 3);
    }
    CHECK_THROWS_AS(parse_ledger("[\n {\"id\": \"a\",\n  oops }\n]"), LedgerError);
    CHECK_THROWS_AS(parse_ledger(R"([{"id": "s", "expr_lhs": {"var_k_pow": -1}, "rel": "<", "expr_rhs": {"pi_rat": [1,1]}}])"),
                    LedgerError);
    CHECK_THROWS_AS(parse_ledger(R"([{"id": "r", "expr_lhs": {"c": [4,4,4]}, "rel": ">", "expr_rhs": {"pi_rat": [1,1]}}])"),
                    LedgerError);
  }

  TEST_CASE("ledger file is one assertion per line") {
    const std::string text = slurp(kLedger);
    const json doc = json::parse(text);
    CHECK(doc.size() == load_ledger(kLedger).size());
    for (const json& a : doc) CHECK(a.contains("quote"));
  }
}
