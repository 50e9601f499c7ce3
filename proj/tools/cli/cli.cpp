#include "cli.hpp"

#include "cpg/curvature.hpp"
#include "cpg/data_dir.hpp"
#include "cpg/ledger.hpp"
#include "cpg/rewrite.hpp"
#include "cpg/stargraph.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace cpg::cli {

namespace {

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

Json issues_json(const std::vector<ScanIssue>& issues) {
  Json arr = Json::array();
  for (const ScanIssue& s : issues) {
    arr.push_back({{"n", s.n}, {"k", s.k}, {"l", s.l}, {"kind", s.kind}, {"detail", s.detail}});
  }
  return arr;
}

Json comparison_json(const LabelComparison& c) {
  return {{"part", c.part},
          {"pass", c.pass},
          {"expected", c.expected},
          {"found", c.found},
          {"missing", c.missing},
          {"unexpected", c.unexpected},
          {"restricted_expected", c.restricted_expected},
          {"restricted_found", c.restricted_found}};
}

void comparison_text(const LabelComparison& c, std::vector<std::string>& text) {
  text.push_back(pass_word(c.pass) + " part " + c.part + ": " + std::to_string(c.found.size()) + " labels");
  for (const std::string& w : c.found) text.push_back("  " + w);
  for (const std::string& w : c.missing) text.push_back("  missing " + w);
  for (const std::string& w : c.unexpected) text.push_back("  unexpected " + w);
}

std::string range_text(long lo, long hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

}  // namespace

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_string(v);
}

Json to_json(const AbelianInvariants& inv) {
  Json torsion = Json::array();
  for (const Integer& d : inv.torsion) torsion.push_back(integer_json(d));
  return {{"torsion", torsion}, {"free_rank", inv.free_rank}, {"text", inv.to_string()}};
}

Json to_json(const ClassificationRecord& rec) {
  const Reduction& r = rec.reduced;
  const ConditionVector& c = rec.conditions;
  return {{"n", rec.n},
          {"k", rec.k},
          {"l", rec.l},
          {"reduced", {{"d", r.d}, {"n", r.n}, {"k", r.k}, {"l", r.l}}},
          {"degenerate", rec.degenerate},
          {"conditions", {{"A", c.A}, {"B", c.B}, {"C", c.C}, {"D", c.D}, {"vector", c.to_string()}}},
          {"case", case_name(rec.tag)},
          {"iso_description", rec.iso_description ? Json(*rec.iso_description) : Json(nullptr)},
          {"hyperbolicity", hyperbolicity_name(rec.hyperbolicity)},
          {"t6", rec.t6},
          {"free_product_copies", rec.free_product_copies},
          {"fallback", rec.fallback}};
}

Result classify_command(long n, long k, long l) {
  if (n < 1) throw UsageError("--n must be positive");
  Result res;
  res.report.command = "classify";
  res.report.inputs = {{"n", n}, {"k", k}, {"l", l}};
  const ClassificationRecord rec = classify(n, k, l);
  res.report.outputs = to_json(rec);
  std::ostringstream line;
  line << "G_" << n << "(x_0 x_" << k << " x_" << l << "): case " << case_name(rec.tag) << ", "
       << hyperbolicity_name(rec.hyperbolicity);
  if (rec.iso_description) line << ", " << *rec.iso_description;
  res.text.push_back(line.str());
  std::ostringstream detail;
  detail << "  conditions " << rec.conditions.to_string() << ", d = " << rec.reduced.d << ", reduced ("
         << rec.reduced.n << "," << rec.reduced.k << "," << rec.reduced.l << ")";
  if (rec.reduced.d > 1) detail << ", free product of " << rec.reduced.d << " copies";
  if (rec.fallback) detail << ", no case predicate fires";
  res.text.push_back(detail.str());
  return res;
}

Result scan_command(long n_max, std::optional<long> relabel_n_max) {
  if (n_max < 1) throw UsageError("--n-max must be positive");
  const long relabel = relabel_n_max.value_or(std::min(n_max, 40L));
  Result res;
  Report& rep = res.report;
  rep.command = "scan";
  rep.inputs = {{"n_max", n_max}, {"relabel_n_max", relabel}};
  const ScanReport sr = scan(n_max, relabel);

  std::map<std::string, std::size_t> by_relabeling;
  for (const ScanIssue& s : sr.relabeling) ++by_relabeling[s.detail.substr(0, s.detail.find(' '))];
  Json samples = issues_json(std::vector<ScanIssue>(
      sr.relabeling.begin(), sr.relabeling.begin() + static_cast<long>(std::min<std::size_t>(20, sr.relabeling.size()))));
  rep.outputs = {{"triples", sr.triples},
                 {"totality", issues_json(sr.totality)},
                 {"implication", issues_json(sr.implication)},
                 {"case_a_parity", issues_json(sr.case_a_parity)},
                 {"relabeling",
                  {{"checked", sr.relabelings_checked},
                   {"discrepancies", sr.relabeling.size()},
                   {"by_relabeling", by_relabeling},
                   {"samples", samples}}}};
  rep.check("exactly one case", sr.totality.empty(), std::to_string(sr.totality.size()) + " triples");
  rep.check("A=F implies not (B and C)", sr.implication.empty(), std::to_string(sr.implication.size()) + " triples");
  rep.check("case a has even n'", sr.case_a_parity.empty(), std::to_string(sr.case_a_parity.size()) + " triples");

  res.text.push_back(std::to_string(sr.triples) + " reduced triples with k' != l' for n <= " + std::to_string(n_max));
  for (const Check& c : rep.checks) res.text.push_back(pass_word(c.pass) + " " + c.name + " (" + c.detail + " failing)");
  for (const ScanIssue& s : sr.totality) {
    std::ostringstream line;
    line << "  (" << s.n << "," << s.k << "," << s.l << ") " << s.kind << ": " << s.detail;
    res.text.push_back(line.str());
    if (res.text.size() > 40) {
      res.text.push_back("  ...");
      break;
    }
  }
  res.text.push_back("relabeling: " + std::to_string(sr.relabeling.size()) + " tag changes in " +
                     std::to_string(sr.relabelings_checked) + " checks (n <= " + std::to_string(relabel) + ")");
  for (const auto& [name, count] : by_relabeling) res.text.push_back("  " + name + ": " + std::to_string(count));
  return res;
}

Result abelianize_command(long n, long k, long l) {
  if (n < 1) throw UsageError("--n must be positive");
  Result res;
  Report& rep = res.report;
  rep.command = "abelianize";
  rep.inputs = {{"n", n}, {"k", k}, {"l", l}};
  const IntMatrix m = relation_matrix(n, k, l);
  const SmithForm snf = smith_normal_form(m);
  const Integer det = determinant(m);
  Json factors = Json::array();
  for (const Integer& d : snf.factors) factors.push_back(integer_json(d));
  rep.outputs = {{"invariants", to_json(snf.invariants)}, {"determinant", integer_json(det)}, {"factors", factors}};
  const bool det_ok = snf.invariants.finite() ? Integer(abs(det)) == snf.invariants.torsion_order() : det == 0;
  rep.check("determinant agrees with invariants", det_ok, "det = " + to_string(det));
  const bool unimodular = snf.left * m * snf.right == snf.diagonal;
  rep.check("U M V = D", unimodular);
  res.text.push_back("G_" + std::to_string(n) + "(x_0 x_" + std::to_string(k) + " x_" + std::to_string(l) +
                     ")^ab = " + snf.invariants.to_string());
  for (const Check& c : rep.checks) res.text.push_back(pass_word(c.pass) + " " + c.name);
  return res;
}

Result labels_command(const std::string& part, const std::filesystem::path& data) {
  Result res;
  Report& rep = res.report;
  rep.command = "labels";
  rep.inputs = {{"part", part.empty() ? Json(nullptr) : Json(part)}};
  std::vector<LabelComparison> comparisons;
  if (part.empty()) {
    comparisons = lemma32_report(data).parts;
  } else {
    if (part != "i" && part != "ii" && part != "iii" && part != "iv") throw UsageError("--part must be i, ii, iii or iv");
    comparisons = lemma32_part(part, data);
  }
  Json parts = Json::array();
  for (const LabelComparison& c : comparisons) {
    parts.push_back(comparison_json(c));
    rep.check("part " + c.part, c.pass);
    comparison_text(c, res.text);
  }
  rep.outputs = {{"parts", parts}};
  return res;
}

Result labels_custom_command(const std::filesystem::path& query_file, const std::filesystem::path& data) {
  Result res;
  Report& rep = res.report;
  rep.command = "labels";
  rep.inputs = {{"custom", query_file.string()}};
  const LabelQuery query = parse_label_query(read_file(query_file));
  const std::vector<Label> labels = enumerate_labels(query, data);
  Json arr = Json::array();
  for (const Label& label : labels) {
    arr.push_back({{"word", to_display(label.word.rep())}, {"m", label.m.to_string()}});
    res.text.push_back(to_display(label.word.rep()) + "  m: " + label.m.to_string());
  }
  rep.outputs = {{"variant", variant_name(query.variant)}, {"labels", arr}};
  res.text.insert(res.text.begin(), std::to_string(labels.size()) + " labels on " + variant_name(query.variant));
  return res;
}

Result curvature_command(const std::vector<std::string>& degrees, std::optional<long> triangles) {
  if (degrees.empty() && !triangles) throw UsageError("give --degrees or --triangles");
  Result res;
  Report& rep = res.report;
  rep.command = "curvature";
  rep.inputs = {{"degrees", degrees}, {"triangles", triangles ? Json(*triangles) : Json(nullptr)}};
  if (!degrees.empty()) {
    std::vector<DegreeEntry> entries;
    for (const std::string& d : degrees) {
      long value = 0;
      std::istringstream in(d);
      if (in >> value && in.eof()) {
        entries.emplace_back(value);
      } else if (!d.empty() && std::all_of(d.begin(), d.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; })) {
        entries.emplace_back(d);
      } else {
        throw UsageError("bad degree '" + d + "'");
      }
    }
    const KLaurent value = curvature(entries);
    rep.outputs["value"] = value.to_string();
    rep.outputs["constant"] = value.is_constant();
    if (value.is_constant()) {
      const PiQuantity q = value.as_constant();
      rep.outputs["sign"] = q < PiQuantity() ? -1 : (q == PiQuantity() ? 0 : 1);
    }
    res.text.push_back("c(" + join(degrees, ",") + ") = " + value.to_string());
  }
  if (triangles) {
    Json arr = Json::array();
    const std::vector<DegreeTriple> found = positive_triangles(*triangles);
    for (const DegreeTriple& t : found) {
      arr.push_back({{"degrees", {t.d1, t.d2, t.d3}}, {"value", t.value.to_string()}});
    }
    rep.outputs["positive_triangles"] = arr;
    res.text.push_back(std::to_string(found.size()) + " positive triangles up to degree " + std::to_string(*triangles));
    for (std::size_t i = 0; i < found.size() && i < 8; ++i) {
      const DegreeTriple& t = found[i];
      res.text.push_back("  c(" + std::to_string(t.d1) + "," + std::to_string(t.d2) + "," + std::to_string(t.d3) +
                         ") = " + t.value.to_string());
    }
    if (found.size() > 8) res.text.push_back("  ...");
  }
  return res;
}

Result ledger_command(const std::filesystem::path& file) {
  Result res;
  Report& rep = res.report;
  rep.command = "ledger";
  rep.inputs = {{"file", file.string()}};
  if (!std::filesystem::exists(file)) throw UsageError("no ledger at " + file.string());
  const LedgerReport lr = run_ledger(file);
  Json arr = Json::array();
  for (const AssertionOutcome& o : lr.outcomes) {
    Json j{{"id", o.id},           {"pass", o.pass},         {"relation", o.relation},
           {"lhs", o.lhs_value},   {"rhs", o.rhs_value},     {"difference", o.difference},
           {"method", o.method},   {"quote", o.quote}};
    j["counterexample"] = o.counterexample ? Json(*o.counterexample) : Json(nullptr);
    if (!o.message.empty()) j["message"] = o.message;
    arr.push_back(j);
    rep.check(o.id, o.pass, o.message);
    std::string line = pass_word(o.pass) + " " + o.id + ": " + o.lhs_value + " " + o.relation + " " + o.rhs_value +
                       " [" + o.method + "]";
    if (o.counterexample) line += " fails at " + std::to_string(*o.counterexample);
    res.text.push_back(line);
  }
  rep.outputs = {{"assertions", arr}, {"passed", lr.passed()}, {"total", lr.outcomes.size()}};
  res.text.push_back(std::to_string(lr.passed()) + "/" + std::to_string(lr.outcomes.size()) + " assertions hold");
  return res;
}

Result identities_command(const std::filesystem::path& data, long m_max, bool tampered_torsion) {
  if (m_max < 1) throw UsageError("--m-max must be positive");
  Result res;
  Report& rep = res.report;
  rep.command = "identities";
  rep.inputs = {{"m_max", m_max}, {"tampered_torsion", tampered_torsion}};
  const std::filesystem::path scripts = data / "scripts";
  auto presentation = [&](long m) {
    return tampered_torsion ? RelativePresentation::tampered(m) : RelativePresentation::standard(m);
  };

  std::map<std::string, std::vector<long>> failures;
  std::map<std::string, std::string> labels;
  std::map<std::string, std::string> messages;
  for (long m = 1; m <= m_max; ++m) {
    std::vector<ConsequenceOutcome> outcomes;
    try {
      outcomes = verify_consequences(presentation(m), scripts);
    } catch (const ScriptError& e) {
      failures["scripts"].push_back(m);
      messages["scripts"] = e.what();
      continue;
    }
    for (const ConsequenceOutcome& o : outcomes) {
      labels[o.id] = o.label;
      if (!o.result.ok) {
        failures[o.id].push_back(m);
        messages[o.id] = o.result.message;
      }
    }
  }
  Json consequences = Json::object();
  for (const auto& [id, label] : labels) {
    const std::vector<long>& bad = failures[id];
    consequences[id] = {{"label", label}, {"failing_m", bad}};
    rep.check(id + " for m = " + range_text(1, m_max), bad.empty(), bad.empty() ? "" : messages[id]);
  }
  if (failures.count("scripts")) rep.check("scripts load", false, messages["scripts"]);

  const std::vector<long> chain_m = {5, 7, 8, 10, 11};
  std::vector<long> chain_bad;
  std::string chain_message;
  const IdentityScript chain = load_identity_script(scripts / "lemma21.json");
  for (long m : chain_m) {
    ScriptResult r;
    try {
      r = verify_script(presentation(m), chain.lhs, chain.rhs, chain.script);
    } catch (const ScriptError& e) {
      r.ok = false;
      r.message = e.what();
    }
    if (!r.ok) {
      chain_bad.push_back(m);
      chain_message = r.message;
    }
  }
  rep.check(chain.id + " (" + chain.label + ")", chain_bad.empty(), chain_message);

  const bool tietze = tietze_e24_check();
  rep.check("tietze E_24", tietze);

  std::size_t boundary_checked = 0;
  Json boundary_bad = Json::array();
  for (long m : chain_m) {
    for (long long alpha = -3; alpha <= 3; ++alpha) {
      for (long long beta = 1; beta <= 3; ++beta) {
        ++boundary_checked;
        if (!boundary_matches(alpha, beta, m)) boundary_bad.push_back({{"alpha", alpha}, {"beta", beta}, {"m", m}});
      }
    }
  }
  rep.check("boundary words", boundary_bad.empty(),
            std::to_string(boundary_bad.size()) + " of " + std::to_string(boundary_checked) + " differ");

  rep.outputs = {{"consequences", consequences},
                 {"chain", {{"id", chain.id}, {"label", chain.label}, {"m", chain_m}, {"failing_m", chain_bad}}},
                 {"tietze_e24", tietze},
                 {"boundary", {{"checked", boundary_checked}, {"failing", boundary_bad}}}};
  for (const Check& c : rep.checks) {
    res.text.push_back(pass_word(c.pass) + " " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  return res;
}

Result coset_command(const FinitePresentation& p, std::size_t max_cosets, Strategy strategy,
                     std::optional<AbelianInvariants> abelian) {
  if (max_cosets < 1) throw UsageError("--max-cosets must be positive");
  Result res;
  Report& rep = res.report;
  rep.command = "coset";
  rep.inputs = {{"presentation", p.to_string()},
                {"max_cosets", max_cosets},
                {"strategy", strategy == Strategy::HLT ? "hlt" : "felsch"}};
  const EnumerationResult er = todd_coxeter(p, max_cosets, strategy);
  rep.outputs = {{"order", er.order ? Json(*er.order) : Json(nullptr)},
                 {"cosets_defined", er.cosets_defined},
                 {"collapses", er.collapses},
                 {"lookaheads", er.lookaheads}};
  rep.check("table closed", er.closed(), er.closed() ? "" : "cap of " + std::to_string(max_cosets) + " reached");
  res.text.push_back(p.to_string());
  if (er.order) {
    res.text.push_back("order " + std::to_string(*er.order) + " (" + std::to_string(er.cosets_defined) +
                       " cosets defined)");
  } else {
    res.text.push_back("FAIL no closed table within " + std::to_string(max_cosets) + " cosets");
  }
  if (abelian) {
    rep.outputs["abelianization"] = to_json(*abelian);
    if (er.order) {
      const bool divides = abelian->finite() && Integer(static_cast<unsigned long>(*er.order)) % abelian->torsion_order() == 0;
      rep.check("abelianization order divides group order", divides, abelian->to_string());
      res.text.push_back(pass_word(divides) + " abelianization " + abelian->to_string() + " divides the order");
    }
  }
  return res;
}

Result corollary_c_command(long n) {
  if (n < 2 || n % 2 != 0) throw UsageError("--n must be even and at least 2");
  Result res;
  Report& rep = res.report;
  rep.command = "corollary-c";
  rep.inputs = {{"n", n}};
  const CorollaryCReport cr = corollary_c_report(n);
  Json arr = Json::array();
  std::size_t same = 0;
  for (const CorollaryCEntry& e : cr.entries) {
    arr.push_back({{"k", e.k}, {"l", e.l}, {"invariants", e.invariants.to_string()}, {"differs", e.differs}});
    if (!e.differs) {
      ++same;
      res.text.push_back("  (" + std::to_string(e.k) + "," + std::to_string(e.l) + ") has " + e.invariants.to_string());
    }
  }
  rep.outputs = {{"reference", to_json(cr.reference)}, {"entries", arr}};
  rep.check("every T(6) pair differs from Gamma_" + std::to_string(n), cr.all_differ(),
            std::to_string(same) + " of " + std::to_string(cr.entries.size()) + " match");
  res.text.insert(res.text.begin(), pass_word(cr.all_differ()) + " Gamma_" + std::to_string(n) + "^ab = " +
                                        cr.reference.to_string() + "; " + std::to_string(cr.entries.size()) +
                                        " pairs, " + std::to_string(same) + " with equal invariants");
  return res;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification tool for cyclically presented groups G_n(x_0 x_k x_l)", "cpg-verify"};
  app.require_subcommand(1);
  bool json = false;
  std::function<Result()> action;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "Print the report as JSON");
    return sub;
  };

  long n = 0, k = 0, l = 0;
  auto triple = [&](CLI::App* sub, bool required) {
    auto* on = sub->add_option("--n", n, "Number of generators");
    auto* ok = sub->add_option("--k", k, "Second subscript");
    auto* ol = sub->add_option("--l", l, "Third subscript");
    if (required) {
      on->required();
      ok->required();
      ol->required();
    }
  };

  CLI::App* classify_cmd = add("classify", "Classify G_n(x_0 x_k x_l)");
  triple(classify_cmd, true);
  classify_cmd->callback([&] { action = [&] { return classify_command(n, k, l); }; });

  long n_max = 0;
  std::optional<long> relabel_max;
  CLI::App* scan_cmd = add("scan", "Check the case dispatch over every triple with n <= n-max");
  scan_cmd->add_option("--n-max", n_max, "Largest n")->required();
  scan_cmd->add_option("--relabel-n-max", relabel_max, "Largest n for relabeling checks (default min(n-max, 40))");
  scan_cmd->callback([&] { action = [&] { return scan_command(n_max, relabel_max); }; });

  CLI::App* abel_cmd = add("abelianize", "Abelian invariants via Smith normal form");
  triple(abel_cmd, true);
  abel_cmd->callback([&] { action = [&] { return abelianize_command(n, k, l); }; });

  std::string part;
  std::string custom;
  CLI::App* labels_cmd = add("labels", "Enumerate star graph vertex labels");
  auto* part_opt = labels_cmd->add_option("--part", part, "i, ii, iii or iv")->check(CLI::IsMember({"i", "ii", "iii", "iv"}));
  labels_cmd->add_option("--custom", custom, "Label query JSON file")->excludes(part_opt)->check(CLI::ExistingFile);
  labels_cmd->callback([&] {
    action = [&] { return custom.empty() ? labels_command(part, data_dir()) : labels_custom_command(custom, data_dir()); };
  });

  std::vector<std::string> degrees;
  std::optional<long> triangles;
  CLI::App* curv_cmd = add("curvature", "Exact curvature of a region");
  curv_cmd->add_option("--degrees", degrees, "Vertex degrees, e.g. 4,6,8 or 4,4,k")->delimiter(',');
  curv_cmd->add_option("--triangles", triangles, "List positive triangles up to this even degree");
  curv_cmd->callback([&] { action = [&] { return curvature_command(degrees, triangles); }; });

  std::string ledger_file;
  CLI::App* ledger_cmd = add("ledger", "Replay the inequality ledger");
  ledger_cmd->add_option("--file", ledger_file, "Ledger JSON (default: DATA_DIR/ledger/ledger.json)");
  ledger_cmd->callback([&] {
    action = [&] {
      return ledger_command(ledger_file.empty() ? data_dir() / "ledger" / "ledger.json" : std::filesystem::path(ledger_file));
    };
  });

  long m_max = 50;
  bool tampered = false;
  CLI::App* id_cmd = add("identities", "Replay the relator identity scripts, Tietze check and boundary words");
  id_cmd->add_option("--m-max", m_max, "Replay consequence scripts for m = 1..m-max");
  id_cmd->add_flag("--tampered-torsion", tampered, "Use t^(2m+1) in place of t^(2m)");
  id_cmd->callback([&] { action = [&] { return identities_command(data_dir(), m_max, tampered); }; });

  std::size_t max_cosets = 10000;
  std::string strategy = "hlt";
  std::optional<long> extension;
  CLI::App* coset_cmd = add("coset", "Todd-Coxeter enumeration");
  triple(coset_cmd, false);
  coset_cmd->add_option("--max-cosets", max_cosets, "Coset cap");
  coset_cmd->add_option("--strategy", strategy, "hlt or felsch")->check(CLI::IsMember({"hlt", "felsch"}));
  coset_cmd->add_option("--extension", extension, "Enumerate E_2m for this m instead of a cyclic presentation");
  coset_cmd->callback([&] {
    action = [&] {
      const Strategy s = strategy == "felsch" ? Strategy::Felsch : Strategy::HLT;
      const bool has_triple = coset_cmd->count("--n") && coset_cmd->count("--k") && coset_cmd->count("--l");
      if (extension) {
        if (*extension < 1) throw UsageError("--extension must be positive");
        return coset_command(extension_presentation(*extension), max_cosets, s, std::nullopt);
      }
      if (!has_triple) throw UsageError("coset needs --n, --k and --l, or --extension");
      if (n < 1) throw UsageError("--n must be positive");
      return coset_command(cyclic_presentation(n, k, l), max_cosets, s, abelian_invariants(n, k, l));
    };
  });

  CLI::App* cc_cmd = add("corollary-c", "Compare abelian invariants of T(6) triples with Gamma_n");
  cc_cmd->add_option("--n", n, "Even n")->required();
  cc_cmd->callback([&] { action = [&] { return corollary_c_command(n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  Result result;
  try {
    const auto start = std::chrono::steady_clock::now();
    result = action();
    result.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (json) {
    out << dump(result.report) << "\n";
  } else {
    for (const std::string& line : result.text) out << line << "\n";
  }
  return result.report.pass() ? kPass : kFail;
}

}  // namespace cpg::cli
