#include "cpg/classify.hpp"

#include <numeric>
#include <stdexcept>

namespace cpg {

namespace {

long wrap(long v, long n) { return ((v % n) + n) % n; }
bool divides(long n, long v) { return wrap(v, n) == 0; }

}  // namespace

std::string ConditionVector::to_string() const {
  std::string out;
  for (bool b : {A, B, C, D}) out += b ? 'T' : 'F';
  return out;
}

ConditionVector conditions(long n, long k, long l) {
  ConditionVector c;
  c.A = n % 3 == 0 && divides(3, k + l);
  c.B = divides(n, k + l) || divides(n, 2 * l - k) || divides(n, 2 * k - l);
  c.C = divides(n, 3 * l) || divides(n, 3 * k) || divides(n, 3 * (l - k));
  c.D = divides(n, 2 * (k + l)) || divides(n, 2 * (2 * l - k)) || divides(n, 2 * (2 * k - l));
  return c;
}

Reduction reduce(long n, long k, long l) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  long d = std::gcd(n, std::gcd(wrap(k, n), wrap(l, n)));
  return {d, n / d, wrap(k, n) / d, wrap(l, n) / d};
}

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::A: return "a";
    case CaseTag::B: return "b";
    case CaseTag::BException: return "b-exception";
    case CaseTag::CI: return "c-i";
    case CaseTag::CII: return "c-ii";
    case CaseTag::DI: return "d-i";
    case CaseTag::DII: return "d-ii";
    case CaseTag::DegenerateCyclic: return "degenerate-cyclic";
  }
  return "?";
}

std::string hyperbolicity_name(Hyperbolicity h) {
  switch (h) {
    case Hyperbolicity::Elementary: return "elementary";
    case Hyperbolicity::NonElementary: return "non-elementary";
    case Hyperbolicity::NotHyperbolic: return "not-hyperbolic";
  }
  return "?";
}

std::vector<CaseTag> matching_cases(const Reduction& r) {
  const ConditionVector c = conditions(r.n, r.k, r.l);
  std::vector<CaseTag> out;
  if (!c.B && !c.C && c.D) out.push_back(CaseTag::A);
  if (!c.B && !c.C && !c.D) out.push_back(CaseTag::B);
  if (c.A && c.B) out.push_back(CaseTag::CI);
  if (c.A && !c.B && c.C) out.push_back(CaseTag::CII);
  if (!c.A && !c.B && c.C) out.push_back(CaseTag::DI);
  if (!c.A && c.B && !c.C) out.push_back(CaseTag::DII);
  return out;
}

namespace {

bool t6_exception(long n, long k, long l) {
  if (n == 21) return divides(n, l - 5 * k) || divides(n, k - 5 * l);
  if (n == 24) return divides(n, l - 5 * k) || divides(n, k + 4 * l) || divides(n, l + 4 * k);
  return false;
}

void describe_case_a(ClassificationRecord& rec, long n) {
  rec.tag = CaseTag::A;
  switch (n) {
    case 2: rec.iso_description = "Z_3"; rec.hyperbolicity = Hyperbolicity::Elementary; return;
    case 4: rec.iso_description = "Z_15"; rec.hyperbolicity = Hyperbolicity::Elementary; return;
    case 6: rec.iso_description = "Z * Z"; rec.hyperbolicity = Hyperbolicity::NonElementary; return;
    case 12: rec.iso_description = "Z_5 * Z * Z"; rec.hyperbolicity = Hyperbolicity::NonElementary; return;
    case 18: rec.iso_description = "Z_19 * Z * Z"; rec.hyperbolicity = Hyperbolicity::NonElementary; return;
    default:
      rec.iso_description = "Gamma_" + std::to_string(n);
      rec.hyperbolicity = Hyperbolicity::NotHyperbolic;
  }
}

}  // namespace

ClassificationRecord classify(long n, long k, long l) {
  ClassificationRecord rec;
  rec.n = n;
  rec.k = k;
  rec.l = l;
  rec.reduced = reduce(n, k, l);
  const Reduction& r = rec.reduced;
  rec.free_product_copies = r.d;
  rec.conditions = conditions(r.n, r.k, r.l);
  rec.degenerate = r.k == r.l;

  if (rec.degenerate) {
    rec.tag = CaseTag::DegenerateCyclic;
    rec.iso_description = "Z_" + to_string(cyclic_order(r.n));
    rec.hyperbolicity = Hyperbolicity::Elementary;
  } else {
    const ConditionVector& c = rec.conditions;
    if (!c.B && !c.C && c.D) {
      describe_case_a(rec, r.n);
    } else if (!c.B && !c.C && !c.D) {
      rec.t6 = true;
      if (t6_exception(r.n, r.k, r.l)) {
        rec.tag = CaseTag::BException;
        rec.hyperbolicity = Hyperbolicity::NotHyperbolic;
      } else {
        rec.tag = CaseTag::B;
        rec.hyperbolicity = r.n == 7 || r.n == 8 ? Hyperbolicity::NotHyperbolic : Hyperbolicity::NonElementary;
      }
    } else if (c.A && c.B) {
      rec.tag = CaseTag::CI;
      rec.iso_description = "Z * Z";
      rec.hyperbolicity = Hyperbolicity::NonElementary;
    } else if (c.A && c.C) {
      rec.tag = CaseTag::CII;
      Integer cyclic = cyclic_order(r.n / 3) / 3;
      rec.iso_description = cyclic == 1 ? "Z * Z" : "Z * Z * Z_" + to_string(cyclic);
      rec.hyperbolicity = Hyperbolicity::NonElementary;
    } else if (!c.A && !c.B && c.C) {
      rec.tag = CaseTag::DI;
      rec.iso_description = "finite metacyclic of order " + to_string(cyclic_order(r.n));
      rec.hyperbolicity = Hyperbolicity::Elementary;
    } else if (!c.A && c.B && !c.C) {
      rec.tag = CaseTag::DII;
      rec.iso_description = "Z_3";
      rec.hyperbolicity = Hyperbolicity::Elementary;
    } else {
      // Only (F,T,T,T) at n' = 2, where the group is Γ_2.
      rec.fallback = true;
      describe_case_a(rec, r.n);
    }
  }
  if (r.d > 1 && rec.hyperbolicity != Hyperbolicity::NotHyperbolic) {
    rec.hyperbolicity = Hyperbolicity::NonElementary;
  }
  return rec;
}

ScanReport scan(long n_max, long relabel_n_max) {
  ScanReport report;
  report.n_max = n_max;
  for (long n = 1; n <= n_max; ++n) {
    for (long k = 0; k < n; ++k) {
      for (long l = 0; l < n; ++l) {
        const Reduction r = reduce(n, k, l);
        if (r.k == r.l) continue;
        ++report.triples;
        const ConditionVector c = conditions(r.n, r.k, r.l);
        const std::vector<CaseTag> cases = matching_cases(r);
        if (cases.size() != 1) {
          std::string detail = "conditions " + c.to_string() + ", cases:";
          for (CaseTag t : cases) detail += " " + case_name(t);
          report.totality.push_back({n, k, l, cases.empty() ? "no-case" : "multiple-cases", detail});
        }
        if (!c.A && c.B && c.C) {
          report.implication.push_back({n, k, l, "A-false-BC", "conditions " + c.to_string()});
        }
        if (!cases.empty() && cases.front() == CaseTag::A && r.n % 2 != 0) {
          report.case_a_parity.push_back({n, k, l, "odd-case-a", "n' = " + std::to_string(r.n)});
        }
        if (n > relabel_n_max) continue;
        const CaseTag tag = classify(n, k, l).tag;
        auto check = [&](long k2, long l2, const std::string& name) {
          ++report.relabelings_checked;
          const CaseTag other = classify(n, wrap(k2, n), wrap(l2, n)).tag;
          if (other != tag) {
            report.relabeling.push_back({n, k, l, "relabeling",
                                         name + " gives " + case_name(other) + " instead of " + case_name(tag)});
          }
        };
        check(l, k, "(l,k)");
        check(-k, -l, "(-k,-l)");
        check(l - k, -k, "(l-k,-k)");
        for (long u = 2; u < n; ++u) {
          if (std::gcd(u, n) == 1) check(u * k, u * l, "unit " + std::to_string(u));
        }
      }
    }
  }
  return report;
}

bool CorollaryCReport::all_differ() const {
  for (const CorollaryCEntry& e : entries) {
    if (!e.differs) return false;
  }
  return true;
}

CorollaryCReport corollary_c_report(long n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even");
  CorollaryCReport report;
  report.n = n;
  report.reference = abelian_invariants(n, 1, n / 2 - 1);
  for (long k = 0; k < n; ++k) {
    for (long l = 0; l < n; ++l) {
      if (std::gcd(n, std::gcd(k, l)) != 1) continue;
      const ConditionVector c = conditions(n, k, l);
      if (c.B || c.C || c.D) continue;
      CorollaryCEntry e{k, l, abelian_invariants(n, k, l), false};
      e.differs = !(e.invariants == report.reference);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace cpg
