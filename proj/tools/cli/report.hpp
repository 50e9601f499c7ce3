#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace cpg::cli {

using Json = nlohmann::json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  std::size_t failed() const;
  bool pass() const { return failed() == 0; }
  void check(std::string name, bool pass, std::string detail = {});

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(Json& j, const Check& c);
void from_json(const Json& j, Check& c);
void to_json(Json& j, const Report& r);
// Ignores the derived "summary" block.
void from_json(const Json& j, Report& r);

// Keys come out sorted, so equal reports print identically.
std::string dump(const Report& r);
Report parse_report(const std::string& text);

}  // namespace cpg::cli
