#include "cpg/stargraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cpg {

using nlohmann::json;

StarGraph::StarGraph(std::string name, std::vector<std::string> nodes, std::vector<StarEdge> edges)
    : name_(std::move(name)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (const StarEdge& e : edges_) {
    for (const std::string& end : {e.from, e.to}) {
      if (std::find(nodes_.begin(), nodes_.end(), end) == nodes_.end()) {
        throw std::invalid_argument("edge " + std::string(corner_ascii(e.label)) + " uses unknown node " + end);
      }
    }
    if (e.exp != corner_exponent(e.label)) {
      throw std::invalid_argument("edge " + std::string(corner_ascii(e.label)) + " has exponent " +
                                  e.exp.to_string() + ", dictionary says " + corner_exponent(e.label).to_string());
    }
  }
}

bool StarGraph::has_label(Corner c) const {
  return std::any_of(edges_.begin(), edges_.end(), [c](const StarEdge& e) { return e.label == c; });
}

StarGraph StarGraph::restricted(const std::set<Corner>& labels, std::string name) const {
  std::vector<StarEdge> kept;
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept),
               [&labels](const StarEdge& e) { return labels.count(e.label) > 0; });
  return StarGraph(std::move(name), nodes_, std::move(kept));
}

StarGraph StarGraph::parse(const std::string& json_text) {
  json doc = json::parse(json_text);
  std::vector<StarEdge> edges;
  for (const json& e : doc.at("edges")) {
    const std::string label = e.at("label").get<std::string>();
    auto corner = corner_from_name(label);
    if (!corner) throw std::invalid_argument("unknown corner label '" + label + "'");
    edges.push_back(StarEdge{*corner, e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                             TExp(e.at("coeff_m").get<long>(), e.at("const").get<long>()),
                             e.value("directed", false)});
  }
  return StarGraph(doc.value("name", std::string("graph")), doc.at("nodes").get<std::vector<std::string>>(),
                   std::move(edges));
}

StarGraph StarGraph::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open star graph " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string variant_name(GraphVariant variant) {
  switch (variant) {
    case GraphVariant::FigV:
      return "v";
    case GraphVariant::FigVi:
      return "vi";
    case GraphVariant::AlphaOnly:
      return "v-alpha";
    case GraphVariant::BetaOnly:
      return "vi-beta";
  }
  return "";
}

std::optional<GraphVariant> variant_from_name(const std::string& name) {
  for (GraphVariant v : {GraphVariant::FigV, GraphVariant::FigVi, GraphVariant::AlphaOnly, GraphVariant::BetaOnly}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

StarGraph load_variant(GraphVariant variant, const std::filesystem::path& data_dir) {
  const auto dir = data_dir / "stargraph";
  switch (variant) {
    case GraphVariant::FigV:
      return StarGraph::load(dir / "fig_a_v.json");
    case GraphVariant::FigVi:
      return StarGraph::load(dir / "fig_a_vi.json");
    case GraphVariant::AlphaOnly:
      return StarGraph::load(dir / "fig_a_v.json")
          .restricted({Corner::A, Corner::B, Corner::C, Corner::Lambda, Corner::Mu}, "v-alpha");
    case GraphVariant::BetaOnly:
      return StarGraph::load(dir / "fig_a_vi.json")
          .restricted({Corner::A, Corner::B, Corner::D, Corner::E, Corner::Lambda, Corner::Mu}, "vi-beta");
  }
  throw std::invalid_argument("unknown graph variant");
}

bool excluded_m(long m) { return std::find(kExcludedM.begin(), kExcludedM.end(), m) != kExcludedM.end(); }

std::string MSolution::to_string() const {
  if (all_) return "all";
  std::string out = "{";
  for (long v : values_) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

namespace {

std::set<long> divisors(const Integer& n) {
  std::set<long> out;
  Integer a = abs(n);
  if (!a.fits_slong_p()) throw std::overflow_error("constant term too large to enumerate divisors");
  long value = a.get_si();
  for (long d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      out.insert(d);
      out.insert(value / d);
    }
  }
  return out;
}

}  // namespace

MSolution solve_m(const TExp& e) {
  const Integer& p = e.coeff_m();
  const Integer& q = e.constant_term();
  std::set<long> raw;
  if (p % 2 == 0) {
    if (q == 0) return MSolution::all();
    // 2m | q
    if (q % 2 == 0) raw = divisors(q / 2);
  } else if (q != 0) {
    // m | q with q/m odd
    for (long m : divisors(q)) {
      if ((q / m) % 2 != 0) raw.insert(m);
    }
  }
  std::set<long> values;
  std::copy_if(raw.begin(), raw.end(), std::inserter(values, values.end()), [](long m) { return !excluded_m(m); });
  return MSolution::finite(std::move(values), std::move(raw));
}

namespace {

struct Step {
  Letter letter;
  std::size_t from;
  std::size_t to;
  bool boundary;
};

bool contains_pattern(const Word& w, const Word& pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() > w.size()) return false;
  const Word inv = w.inverse();
  for (const Word* v : {&w, &inv}) {
    for (std::size_t start = 0; start < v->size(); ++start) {
      bool match = true;
      for (std::size_t j = 0; j < pattern.size() && match; ++j) match = (*v)[(start + j) % v->size()] == pattern[j];
      if (match) return true;
    }
  }
  return false;
}

class Enumerator {
 public:
  Enumerator(const StarGraph& graph, const LabelQuery& query) : query_(query) {
    const auto& nodes = graph.nodes();
    auto index = [&nodes](const std::string& id) {
      return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), id) - nodes.begin());
    };
    node_count_ = nodes.size();
    for (const StarEdge& e : graph.edges()) {
      bool in_boundary = query.boundary.count(e.label) > 0;
      if (!in_boundary && query.interior.count(e.label) == 0) continue;
      steps_.push_back({corner(e.label, 1), index(e.from), index(e.to), in_boundary});
      if (!e.directed) steps_.push_back({corner(e.label, -1), index(e.to), index(e.from), in_boundary});
    }
    max_length_ = query.exact_degree ? *query.exact_degree : query.max_degree;
  }

  std::vector<Label> run() {
    for (std::size_t start = 0; start < node_count_; ++start) {
      start_ = start;
      extend(start, 0);
    }
    std::vector<Label> labels;
    for (auto& [word, m] : found_) labels.push_back({word, m});
    std::sort(labels.begin(), labels.end(), [](const Label& a, const Label& b) {
      if (a.word.rep().size() != b.word.rep().size()) return a.word.rep().size() < b.word.rep().size();
      return a.word < b.word;
    });
    return labels;
  }

 private:
  void extend(std::size_t node, std::size_t boundary_used) {
    std::size_t length = path_.size();
    if (length > 0 && node == start_ && (!query_.exact_degree || length == *query_.exact_degree)) consider(boundary_used);
    if (length == max_length_) return;
    for (const Step& step : steps_) {
      if (step.from != node) continue;
      if (!path_.empty() && cancels(path_.back(), step.letter)) continue;
      if (step.boundary && boundary_used == query_.boundary_count) continue;
      path_.push_back(step.letter);
      extend(step.to, boundary_used + (step.boundary ? 1 : 0));
      path_.pop_back();
    }
  }

  void consider(std::size_t boundary_used) {
    if (boundary_used != query_.boundary_count) return;
    if (cancels(path_.back(), path_.front())) return;
    Word w(path_);
    if (query_.exclude_repeated_labels && is_power_of_admissible(w)) return;
    if (query_.pattern && !contains_pattern(w, *query_.pattern)) return;
    MSolution m = solve_m(exponent_sum(w));
    if (m.empty()) return;
    found_.emplace(canonical_cyclic(w), std::move(m));
  }

  const LabelQuery& query_;
  std::vector<Step> steps_;
  std::size_t node_count_ = 0;
  std::size_t max_length_ = 0;
  std::size_t start_ = 0;
  std::vector<Letter> path_;
  std::map<CyclicWord, MSolution> found_;
};

}  // namespace

bool is_power_of_admissible(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = w[i] == w[i - period];
    if (periodic && !solve_m(exponent_sum(w.slice(0, period))).empty()) return true;
  }
  return false;
}

std::vector<Label> enumerate_labels(const StarGraph& graph, const LabelQuery& query) {
  if (query.max_degree < 1 && !query.exact_degree) throw std::invalid_argument("max_degree must be positive");
  return Enumerator(graph, query).run();
}

std::vector<Label> enumerate_labels(const LabelQuery& query, const std::filesystem::path& data_dir) {
  return enumerate_labels(load_variant(query.variant, data_dir), query);
}

namespace {

std::set<Corner> corner_set(const json& names) {
  std::set<Corner> out;
  for (const json& n : names) {
    auto c = corner_from_name(n.get<std::string>());
    if (!c) throw std::invalid_argument("unknown corner letter '" + n.get<std::string>() + "'");
    out.insert(*c);
  }
  return out;
}

}  // namespace

LabelQuery parse_label_query(const std::string& json_text) {
  json doc = json::parse(json_text);
  LabelQuery q;
  const std::string graph = doc.value("graph", std::string("v"));
  auto variant = variant_from_name(graph);
  if (!variant) throw std::invalid_argument("unknown graph variant '" + graph + "'");
  q.variant = *variant;
  q.max_degree = doc.value("max_degree", std::size_t{8});
  if (doc.contains("exact_degree")) q.exact_degree = doc.at("exact_degree").get<std::size_t>();
  q.interior = corner_set(doc.value("letters", json::array({"lambda", "mu", "a", "b"})));
  q.boundary = corner_set(doc.value("boundary_letters", json::array()));
  q.boundary_count = doc.value("boundary_count", std::size_t{0});
  if (q.boundary_count > 1) throw std::invalid_argument("boundary_count must be 0 or 1");
  if (doc.contains("pattern")) q.pattern = parse_word(doc.at("pattern").get<std::string>());
  q.exclude_repeated_labels = doc.value("exclude_repeated_labels", true);
  if (q.max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
  return q;
}

bool Lemma32Report::pass() const {
  return std::all_of(parts.begin(), parts.end(), [](const LabelComparison& c) { return c.pass; });
}

namespace {

const std::set<Corner> kInterior = {Corner::Lambda, Corner::Mu, Corner::A, Corner::B};

struct PartSpec {
  std::string part;
  std::vector<LabelQuery> queries;
  std::vector<ExpectedLabel> expected;
};

LabelQuery make_query(GraphVariant v, std::size_t max_degree, std::set<Corner> boundary, std::size_t count) {
  LabelQuery q;
  q.variant = v;
  q.max_degree = max_degree;
  q.interior = kInterior;
  q.boundary = std::move(boundary);
  q.boundary_count = count;
  return q;
}

std::vector<ExpectedLabel> with_prefix(const std::string& prefix, std::vector<ExpectedLabel> tails) {
  for (ExpectedLabel& e : tails) e.text = prefix + " " + e.text;
  return tails;
}

std::vector<PartSpec> part_specs(const std::string& part) {
  const std::set<Corner> cde = {Corner::C, Corner::D, Corner::E};
  std::vector<PartSpec> specs;
  if (part == "i") {
    specs.push_back({"i",
                     {make_query(GraphVariant::FigV, 8, {}, 0)},
                     {{"b mu b mu"}, {"a b^-1 lambda a^-1 b mu"}, {"a b^-1 lambda a^-1 lambda b^-1"}}});
  } else if (part == "ii") {
    specs.push_back({"ii",
                     {make_query(GraphVariant::FigV, 6, cde, 1)},
                     {{"c a^-1 b mu"},
                      {"c a^-1 lambda b^-1"},
                      {"c b^-1 lambda a^-1"},
                      {"c mu b a^-1"},
                      {"e a^-1 b mu"},
                      {"e a^-1 lambda b^-1"},
                      {"e b^-1 lambda a^-1"},
                      {"e mu b a^-1"},
                      {"d b^-1 a b^-1"},
                      {"d mu a mu"},
                      {"d mu a b^-1 lambda b^-1"},
                      {"d mu b mu a b^-1"},
                      {"d b^-1 a mu b mu"},
                      {"d b^-1 lambda b^-1 a mu"}}});
  } else if (part == "iii") {
    specs.push_back({"iii",
                     {make_query(GraphVariant::FigV, 4, {Corner::F}, 1),
                      make_query(GraphVariant::FigVi, 4, {Corner::G, Corner::H}, 1)},
                     {{"f a^-1"}, {"g b^-1 lambda"}, {"g mu b"}, {"h b mu"}, {"h lambda b^-1"}}});
  } else if (part == "iv") {
    struct Family {
      std::string name;
      std::string prefix;
      std::vector<ExpectedLabel> tails;
    };
    // w1 "a mu a d^-1" is the same cyclic word as the restricted "a d^-1 a mu";
    // w4 "lambda d^-1 a b" is not a closed path and is replaced by "b^-1 d a^-1 b".
    const std::vector<Family> families = {
        {"iv-w1",
         "a mu a mu",
         {{"b a^-1 lambda c^-1"}, {"b a^-1 lambda e^-1"}, {"a mu a d^-1", true}, {"b a^-1 d b^-1"},
          {"a d^-1 a mu", true}}},
        {"iv-w2",
         "a^-1 b a^-1 b",
         {{"mu a b^-1 c"}, {"mu a b^-1 e"}, {"a^-1 lambda a^-1 d", true}, {"mu a d^-1 lambda"},
          {"a^-1 d a^-1 lambda", true}}},
        {"iv-w3",
         "b a^-1 b a^-1",
         {{"c b^-1 a mu"}, {"e b^-1 a mu"}, {"d a^-1 lambda a^-1", true}, {"lambda d^-1 a mu"},
          {"lambda a^-1 d a^-1", true}}},
        {"iv-w4",
         "mu a mu a",
         {{"c^-1 lambda a^-1 b"}, {"e^-1 lambda a^-1 b"}, {"d^-1 a mu a", true}, {"b^-1 d a^-1 b"},
          {"mu a d^-1 a", true}}},
    };
    for (const Family& f : families) {
      LabelQuery q = make_query(GraphVariant::FigV, 8, cde, 1);
      q.exact_degree = 8;
      q.pattern = parse_word(f.prefix);
      specs.push_back({f.name, {q}, with_prefix(f.prefix, f.tails)});
    }
  } else {
    throw std::invalid_argument("unknown part '" + part + "' (expected i, ii, iii or iv)");
  }
  return specs;
}

LabelComparison compare_part(const PartSpec& spec, const std::filesystem::path& data_dir) {
  std::map<CyclicWord, MSolution> found;
  for (const LabelQuery& q : spec.queries) {
    for (Label& l : enumerate_labels(q, data_dir)) found.emplace(l.word, l.m);
  }
  std::set<CyclicWord> expected;
  std::set<CyclicWord> restricted_expected;
  for (const ExpectedLabel& e : spec.expected) {
    CyclicWord w = canonical_cyclic(parse_word(e.text));
    expected.insert(w);
    if (e.restricted) restricted_expected.insert(w);
  }
  const MSolution five_fifteen = solve_m(TExp(1, 15));

  LabelComparison out;
  out.part = spec.part;
  std::set<CyclicWord> restricted_found;
  for (const auto& [w, m] : found) {
    out.found.push_back(to_display(w.rep()) + (m.is_all() ? "" : " (m=" + m.to_string() + ")"));
    if (!m.is_all()) restricted_found.insert(w);
    if (!expected.count(w)) out.unexpected.push_back(to_display(w.rep()));
    if (!m.is_all() && m != five_fifteen) out.unexpected.push_back(to_display(w.rep()) + " m=" + m.to_string());
  }
  for (const CyclicWord& w : expected) {
    out.expected.push_back(to_display(w.rep()));
    if (!found.count(w)) out.missing.push_back(to_display(w.rep()));
  }
  for (const CyclicWord& w : restricted_expected) out.restricted_expected.push_back(to_display(w.rep()));
  for (const CyclicWord& w : restricted_found) out.restricted_found.push_back(to_display(w.rep()));
  out.pass = out.missing.empty() && out.unexpected.empty() && restricted_found == restricted_expected;
  return out;
}

}  // namespace

std::vector<LabelComparison> lemma32_part(const std::string& part, const std::filesystem::path& data_dir) {
  std::vector<LabelComparison> out;
  for (const PartSpec& spec : part_specs(part)) out.push_back(compare_part(spec, data_dir));
  return out;
}

Lemma32Report lemma32_report(const std::filesystem::path& data_dir) {
  Lemma32Report report;
  for (const char* part : {"i", "ii", "iii", "iv"}) {
    for (LabelComparison& c : lemma32_part(part, data_dir)) report.parts.push_back(std::move(c));
  }
  return report;
}

}  // namespace cpg
