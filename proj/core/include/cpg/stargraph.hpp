#pragma once

#include "cpg/word.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cpg {

struct StarEdge {
  Corner label = Corner::Lambda;
  std::string from;
  std::string to;
  TExp exp;
  // Directed edges may only be traversed from `from` to `to`.
  bool directed = false;
  bool loop() const { return from == to; }
};

class StarGraph {
 public:
  StarGraph(std::string name, std::vector<std::string> nodes, std::vector<StarEdge> edges);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<StarEdge>& edges() const { return edges_; }
  bool has_label(Corner c) const;

  // Keeps only the edges whose label is in `labels`.
  StarGraph restricted(const std::set<Corner>& labels, std::string name) const;

  static StarGraph load(const std::filesystem::path& file);
  static StarGraph parse(const std::string& json_text);

 private:
  std::string name_;
  std::vector<std::string> nodes_;
  std::vector<StarEdge> edges_;
};

enum class GraphVariant { FigV, FigVi, AlphaOnly, BetaOnly };

// FigV and FigVi come from the data files; AlphaOnly keeps {a,b,c,λ,μ} of FigV and
// BetaOnly keeps {a,b,d,e,λ,μ} of FigVi.
StarGraph load_variant(GraphVariant variant, const std::filesystem::path& data_dir);
std::string variant_name(GraphVariant variant);
std::optional<GraphVariant> variant_from_name(const std::string& name);

class MSolution {
 public:
  static MSolution all() { return MSolution(true, {}, {}); }
  static MSolution finite(std::set<long> values, std::set<long> raw) {
    return MSolution(false, std::move(values), std::move(raw));
  }

  bool is_all() const { return all_; }
  bool empty() const { return !all_ && values_.empty(); }
  // Admissible values; meaningless when is_all().
  const std::set<long>& values() const { return values_; }
  // Every solution before removing the excluded set.
  const std::set<long>& raw() const { return raw_; }
  std::string to_string() const;

  friend bool operator==(const MSolution&, const MSolution&) = default;

 private:
  MSolution(bool all, std::set<long> values, std::set<long> raw)
      : all_(all), values_(std::move(values)), raw_(std::move(raw)) {}
  bool all_ = false;
  std::set<long> values_;
  std::set<long> raw_;
};

// m >= 1 outside {1,2,3,4,6,9,12} with coeff_m * m + const = 0 mod 2m.
MSolution solve_m(const TExp& e);
bool excluded_m(long m);

struct LabelQuery {
  GraphVariant variant = GraphVariant::FigV;
  std::size_t max_degree = 8;
  std::optional<std::size_t> exact_degree;
  // Letters usable anywhere in the label.
  std::set<Corner> interior;
  // Letters counted by boundary_count.
  std::set<Corner> boundary;
  std::size_t boundary_count = 0;
  // Contiguous fragment required in some rotation of the label or of its inverse.
  std::optional<Word> pattern;
  // Drops u^k (k > 1) whenever u itself has a solvable exponent sum.
  bool exclude_repeated_labels = true;
};

struct Label {
  CyclicWord word;
  MSolution m;
};

std::vector<Label> enumerate_labels(const StarGraph& graph, const LabelQuery& query);

// True when w = u^k for some k > 1 and u with nonempty solve_m.
bool is_power_of_admissible(const Word& w);

// Realizes the query against the variant loaded from data_dir.
std::vector<Label> enumerate_labels(const LabelQuery& query, const std::filesystem::path& data_dir);

LabelQuery parse_label_query(const std::string& json_text);

struct ExpectedLabel {
  std::string text;
  bool restricted = false;  // carries MSolution {5,15}
};

struct LabelComparison {
  std::string part;
  bool pass = false;
  std::vector<std::string> expected;
  std::vector<std::string> found;
  std::vector<std::string> missing;
  std::vector<std::string> unexpected;
  std::vector<std::string> restricted_expected;
  std::vector<std::string> restricted_found;
};

struct Lemma32Report {
  std::vector<LabelComparison> parts;
  bool pass() const;
};

Lemma32Report lemma32_report(const std::filesystem::path& data_dir);
// One of "i", "ii", "iii", "iv"; part iv expands to one entry per family.
std::vector<LabelComparison> lemma32_part(const std::string& part, const std::filesystem::path& data_dir);

}  // namespace cpg
