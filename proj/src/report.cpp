#include "mforge/report.hpp"

#include <sstream>

namespace mforge {

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cite"] = cite;
  j["samples"] = samples;
  j["seed"] = seed;
  j["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["cite"] = c.cite;
    e["samples"] = c.samples;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "[" << (pass() ? "PASS" : "FAIL") << "] " << suite;
  if (!cite.empty()) os << "  " << cite;
  os << "  (seed " << seed << ")\n";
  for (const auto& c : checks) {
    os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
    if (c.samples) os << "  n=" << c.samples;
    if (!c.cite.empty()) os << "  " << c.cite;
    if (!c.detail.empty()) os << "  : " << c.detail;
    os << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace mforge
