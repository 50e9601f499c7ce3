#include "report.hpp"

namespace cpg::cli {

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const Check& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void to_json(Json& j, const Check& c) {
  j = Json{{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

void from_json(const Json& j, Check& c) {
  j.at("name").get_to(c.name);
  j.at("pass").get_to(c.pass);
  c.detail = j.value("detail", std::string());
}

void to_json(Json& j, const Report& r) {
  j = Json{{"command", r.command},
           {"inputs", r.inputs},
           {"outputs", r.outputs},
           {"checks", r.checks},
           {"summary", {{"checks", r.checks.size()}, {"failed", r.failed()}, {"pass", r.pass()}}},
           {"timing", {{"elapsed_ms", r.elapsed_ms}}}};
}

void from_json(const Json& j, Report& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.outputs = j.at("outputs");
  j.at("checks").get_to(r.checks);
  j.at("timing").at("elapsed_ms").get_to(r.elapsed_ms);
}

std::string dump(const Report& r) { return Json(r).dump(2); }

Report parse_report(const std::string& text) { return Json::parse(text).get<Report>(); }

}  // namespace cpg::cli
