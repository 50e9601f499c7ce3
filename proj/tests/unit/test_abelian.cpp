#include "cpg/abelian.hpp"
#include "cpg/coset.hpp"
#include "cpg/classify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace cpg;

namespace {

IntMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<long> entry(-5, 5);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  }
  return m;
}

AbelianInvariants inv(std::vector<long> torsion, long rank) {
  AbelianInvariants a;
  for (long t : torsion) a.torsion.emplace_back(t);
  a.free_rank = rank;
  return a;
}

}  // namespace

TEST_SUITE("abelian") {
  TEST_CASE("central family invariants") {
    CHECK(abelian_invariants(2, 1, 0) == inv({3}, 0));
    CHECK(abelian_invariants(4, 1, 1) == inv({15}, 0));
    CHECK(abelian_invariants(6, 1, 2) == inv({}, 2));
    CHECK(abelian_invariants(12, 1, 5) == inv({5}, 2));
    CHECK(abelian_invariants(18, 1, 8) == inv({19}, 2));
    CHECK(abelian_invariants(12, 1, 5).to_string() == "Z_5 + Z^2");
    CHECK(inv({}, 0).to_string() == "0");
  }

  TEST_CASE("smith form against Bezout elimination") {
    std::mt19937 rng(20260101);
    for (int i = 0; i < 100; ++i) {
      const IntMatrix m = random_matrix(rng);
      const SmithForm s = smith_normal_form(m);
      INFO(m.to_string());
      CHECK(s.invariants == oracle::smith_invariants(m));
      CHECK(s.left * m * s.right == s.diagonal);
      CHECK(abs(determinant(s.left)) == 1);
      CHECK(abs(determinant(s.right)) == 1);
      for (std::size_t j = 1; j < s.factors.size(); ++j) {
        if (s.factors[j] != 0) CHECK(s.factors[j] % s.factors[j - 1] == 0);
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (r != c) CHECK(s.diagonal(r, c) == 0);
        }
      }
    }
  }

  TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
      IntMatrix m = random_matrix(rng);
      if (m.rows() != m.cols()) continue;
      const SmithForm s = smith_normal_form(m);
      Integer product = 1;
      for (std::size_t j = 0; j < m.rows(); ++j) product *= s.diagonal(j, j);
      CHECK(abs(determinant(m)) == abs(product));
    }
  }

  TEST_CASE("circulant determinant matches torsion order") {
    for (long n = 1; n <= 14; ++n) {
      for (long k = 0; k < n; ++k) {
        for (long l = 0; l < n; ++l) {
          const AbelianInvariants a = abelian_invariants(n, k, l);
          const Integer d = abs(determinant(relation_matrix(n, k, l)));
          if (a.finite()) {
            CHECK(d == a.torsion_order());
          } else {
            CHECK(d == 0);
          }
        }
      }
    }
  }

  TEST_CASE("(A,B,C) = (F,F,T): finite quotient, group order by enumeration") {
    std::size_t seen = 0;
    for (long n = 1; n <= 18; ++n) {
      for (long k = 0; k < n; ++k) {
        for (long l = 0; l < n; ++l) {
          if (std::gcd(n, std::gcd(k, l)) != 1 || k == l) continue;
          const ConditionVector c = conditions(n, k, l);
          if (c.A || c.B || !c.C) continue;
          ++seen;
          const AbelianInvariants a = abelian_invariants(n, k, l);
          INFO(n << "," << k << "," << l);
          CHECK(a.free_rank == 0);
          CHECK(cyclic_order(n) % a.torsion_order() == 0);
          if (n <= 8) {
            const EnumerationResult r = todd_coxeter(cyclic_presentation(n, k, l), 10000);
            REQUIRE(r.closed());
            CHECK(Integer(static_cast<unsigned long>(*r.order)) == cyclic_order(n));
          }
          if (k == 1 && l == 0) CHECK(a.torsion_order() == cyclic_order(n));
        }
      }
    }
    CHECK(seen > 0);
  }

  TEST_CASE("cyclic orders") {
    CHECK(cyclic_order(2) == 3);
    CHECK(cyclic_order(4) == 15);
    CHECK(cyclic_order(5) == 33);
    CHECK(cyclic_order(60) == (Integer(1) << 60) - 1);
  }
}
