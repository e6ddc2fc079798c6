#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lgkit/errors.hpp"
#include "lgkit/verify.hpp"

namespace lgkit {

namespace {

using nlohmann::json;

json payload(const ReportDocument& r) {
  json suites = json::array();
  for (const auto& s : r.suites) {
    json cells = json::array();
    for (const auto& c : s.cells) {
      cells.push_back(json{{"params", c.params}, {"left", c.left}, {"right", c.right}, {"pass", c.pass}, {"note", c.note}});
    }
    suites.push_back(json{{"suite", s.suite},
                          {"passed", s.passed()},
                          {"cells_total", s.cells.size()},
                          {"cells_failed", s.failures()},
                          {"cells", std::move(cells)}});
  }
  return json{{"tool", r.tool}, {"version", r.version}, {"passed", r.passed()}, {"suites", std::move(suites)}};
}

}  // namespace

bool ReportDocument::passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

std::string ReportDocument::to_json(bool include_timing) const {
  json doc = payload(*this);
  if (include_timing) doc["timing"] = json{{"elapsed_seconds", elapsed_seconds}};
  return doc.dump(2) + "\n";
}

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  for (const auto& s : suites) {
    for (const auto& c : s.cells) {
      if (c.pass) continue;
      os << "FAIL " << s.suite;
      for (const auto& [k, v] : c.params) os << ' ' << k << '=' << v;
      os << ": " << c.left << " != " << c.right;
      if (!c.note.empty()) os << " (" << c.note << ")";
      os << '\n';
    }
    os << s.suite << ": " << (s.cells.size() - s.failures()) << "/" << s.cells.size() << " cells pass\n";
  }
  os << (passed() ? "all suites pass" : "verification FAILED") << " (" << std::fixed << std::setprecision(2)
     << elapsed_seconds << " s)\n";
  return os.str();
}

ReportDocument ReportDocument::from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    ReportDocument r;
    r.tool = doc.at("tool").get<std::string>();
    r.version = doc.at("version").get<std::string>();
    for (const auto& s : doc.at("suites")) {
      SuiteResult suite;
      suite.suite = s.at("suite").get<std::string>();
      for (const auto& c : s.at("cells")) {
        VerificationCell cell;
        cell.params = c.at("params").get<std::map<std::string, int>>();
        cell.left = c.at("left").get<std::string>();
        cell.right = c.at("right").get<std::string>();
        cell.pass = c.at("pass").get<bool>();
        cell.note = c.value("note", "");
        suite.cells.push_back(std::move(cell));
      }
      r.suites.push_back(std::move(suite));
    }
    if (doc.contains("timing")) r.elapsed_seconds = doc.at("timing").value("elapsed_seconds", 0.0);
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

bool ReportDocument::same_payload(const ReportDocument& o) const {
  return tool == o.tool && version == o.version && suites == o.suites;
}

}  // namespace lgkit
