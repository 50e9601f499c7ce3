#include "cpg/classify.hpp"

#include <doctest.h>

#include <set>

using namespace cpg;

TEST_SUITE("classify") {
  TEST_CASE("reduction") {
    CHECK(reduce(24, 9, 3) == Reduction{3, 8, 3, 1});
    CHECK(reduce(6, -1, 8) == Reduction{1, 6, 5, 2});
    CHECK(reduce(4, 0, 2) == Reduction{2, 2, 0, 1});
    CHECK_THROWS(reduce(0, 1, 2));
  }

  TEST_CASE("central family") {
    const ClassificationRecord r = classify(18, 1, 8);
    CHECK(r.tag == CaseTag::A);
    CHECK(r.hyperbolicity == Hyperbolicity::NonElementary);
    CHECK(*r.iso_description == "Z_19 * Z * Z");
    CHECK(classify(4, 1, 1).tag == CaseTag::DegenerateCyclic);
    CHECK(*classify(4, 1, 1).iso_description == "Z_15");
    CHECK(classify(12, 1, 5).tag == CaseTag::CII);
    CHECK(*classify(12, 1, 5).iso_description == "Z * Z * Z_5");
    CHECK(classify(6, 1, 2).tag == CaseTag::CI);
    CHECK(classify(6, 1, 2).hyperbolicity == Hyperbolicity::NonElementary);
    CHECK(classify(10, 1, 4).hyperbolicity == Hyperbolicity::NotHyperbolic);
    CHECK(*classify(10, 1, 4).iso_description == "Gamma_10");
  }

  TEST_CASE("T(6) exceptions are not hyperbolic") {
    for (auto [n, k, l] : std::vector<std::array<long, 3>>{{7, 1, 3}, {8, 1, 4}}) {
      const ClassificationRecord r = classify(n, k, l);
      CHECK(r.tag == CaseTag::B);
      CHECK(r.t6);
      CHECK(r.hyperbolicity == Hyperbolicity::NotHyperbolic);
    }
    CHECK(classify(21, 1, 5).tag == CaseTag::BException);
    CHECK(classify(21, 1, 5).hyperbolicity == Hyperbolicity::NotHyperbolic);
    for (long k = 0; k < 24; ++k) {
      for (long l = 0; l < 24; ++l) {
        const ClassificationRecord r = classify(24, k, l);
        if (r.reduced.n != 24 || r.tag != CaseTag::B) continue;
        // Remaining T(6) triples at n = 24 are hyperbolic.
        CHECK(r.hyperbolicity == Hyperbolicity::NonElementary);
      }
    }
    CHECK(classify(24, 1, 5).tag == CaseTag::BException);
    CHECK(classify(9, 1, 3).tag != CaseTag::BException);
  }

  TEST_CASE("free products") {
    const ClassificationRecord r = classify(24, 9, 3);
    CHECK(r.free_product_copies == 3);
    CHECK(r.reduced == Reduction{3, 8, 3, 1});
    CHECK(r.tag == CaseTag::A);
    CHECK(*r.iso_description == "Gamma_8");
    const ClassificationRecord finite = classify(4, 2, 0);
    CHECK(finite.free_product_copies == 2);
    CHECK(finite.hyperbolicity == Hyperbolicity::NonElementary);
  }

  TEST_CASE("other cases") {
    CHECK(classify(9, 1, 2).tag == CaseTag::CI);
    CHECK(*classify(9, 1, 2).iso_description == "Z * Z");
    CHECK(classify(12, 1, 8).tag == CaseTag::CII);
    CHECK(*classify(12, 1, 8).iso_description == "Z * Z * Z_5");
    CHECK(classify(5, 1, 0).tag == CaseTag::DI);
    CHECK(*classify(5, 1, 0).iso_description == "finite metacyclic of order 33");
    CHECK(classify(5, 1, 3).tag == CaseTag::DII);
    CHECK(*classify(5, 1, 3).iso_description == "Z_3");
  }

  TEST_CASE("n' = 2 falls through every case") {
    const ClassificationRecord r = classify(2, 1, 0);
    CHECK(r.conditions.to_string() == "FTTT");
    CHECK(r.fallback);
    CHECK(*r.iso_description == "Z_3");
    CHECK(matching_cases(r.reduced).empty());
  }

  TEST_CASE("scan over n <= 60") {
    const ScanReport s = scan(60, 24);
    CHECK(s.case_a_parity.empty());
    std::set<std::array<long, 3>> expected;
    for (long j = 1; j <= 30; ++j) {
      expected.insert({2 * j, 0, j});
      expected.insert({2 * j, j, 0});
    }
    std::set<std::array<long, 3>> totality, implication;
    for (const ScanIssue& i : s.totality) {
      CHECK(i.kind == "no-case");
      totality.insert({i.n, i.k, i.l});
    }
    for (const ScanIssue& i : s.implication) implication.insert({i.n, i.k, i.l});
    CHECK(totality == expected);
    CHECK(implication == expected);
    for (const ScanIssue& i : s.relabeling) {
      CHECK(i.detail.rfind("(l-k,-k)", 0) == 0);
      CHECK(i.detail.find("degenerate-cyclic") != std::string::npos);
    }
  }

  TEST_CASE("T(6) abelianizations differ from Gamma_n") {
    for (long n : {20, 22, 24}) {
      const CorollaryCReport r = corollary_c_report(n);
      CHECK_FALSE(r.entries.empty());
      CHECK(r.all_differ());
    }
    CHECK(corollary_c_report(24).reference.to_string() == "Z_9 + Z_9 + Z^2");
    CHECK_THROWS(corollary_c_report(21));
  }
}
