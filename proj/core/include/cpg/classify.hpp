#pragma once

#include "cpg/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpg {

struct ConditionVector {
  bool A = false;
  bool B = false;
  bool C = false;
  bool D = false;
  friend bool operator==(const ConditionVector&, const ConditionVector&) = default;
  // "FTTT"
  std::string to_string() const;
};

ConditionVector conditions(long n, long k, long l);

struct Reduction {
  long d = 1;
  long n = 1;
  long k = 0;
  long l = 0;
  friend bool operator==(const Reduction&, const Reduction&) = default;
};

Reduction reduce(long n, long k, long l);

enum class CaseTag { A, B, BException, CI, CII, DI, DII, DegenerateCyclic };
enum class Hyperbolicity { Elementary, NonElementary, NotHyperbolic };

std::string case_name(CaseTag tag);
std::string hyperbolicity_name(Hyperbolicity h);

struct ClassificationRecord {
  long n = 0;
  long k = 0;
  long l = 0;
  Reduction reduced;
  bool degenerate = false;
  ConditionVector conditions;
  CaseTag tag = CaseTag::A;
  // Describes the reduced factor; the group is the free product of free_product_copies of it.
  std::optional<std::string> iso_description;
  Hyperbolicity hyperbolicity = Hyperbolicity::NotHyperbolic;
  bool t6 = false;
  long free_product_copies = 1;
  // Set when no case predicate holds and the record falls back to Γ_{n'} (only n' = 2).
  bool fallback = false;
};

ClassificationRecord classify(long n, long k, long l);

// Which case predicates hold for the reduced triple, ignoring the fallback.
std::vector<CaseTag> matching_cases(const Reduction& r);

struct ScanIssue {
  long n = 0;
  long k = 0;
  long l = 0;
  std::string kind;  // "no-case", "multiple-cases", "A-false-BC", "odd-case-a", "relabeling"
  std::string detail;
};

struct ScanReport {
  long n_max = 0;
  std::size_t triples = 0;
  std::vector<ScanIssue> totality;
  std::vector<ScanIssue> implication;
  std::vector<ScanIssue> case_a_parity;
  std::vector<ScanIssue> relabeling;
  std::size_t relabelings_checked = 0;
};

// Dispatch totality and exclusivity, A=F => not (B and C), parity of case a, and
// tag invariance under (l,k), (-k,-l), (l-k,-k) and unit multiples, over all n <= n_max.
ScanReport scan(long n_max, long relabel_n_max);

struct CorollaryCEntry {
  long k = 0;
  long l = 0;
  AbelianInvariants invariants;
  bool differs = false;
};

struct CorollaryCReport {
  long n = 0;
  AbelianInvariants reference;  // Γ_n = G_n(x_0 x_1 x_{n/2-1})
  std::vector<CorollaryCEntry> entries;
  bool all_differ() const;
};

// Every (k, l) with gcd(n, k, l) = 1 and (B, C, D) = (F, F, F). Throws on odd n.
CorollaryCReport corollary_c_report(long n);

}  // namespace cpg
