#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace mforge {

struct Check {
  std::string name;
  std::string cite;
  long samples = 0;
  bool pass = true;
  std::string detail;  // counterexample or note
};

struct Report {
  std::string suite;
  std::string cite;
  long samples = 0;
  uint64_t seed = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void add(std::string name, std::string cite, long samples, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), std::move(cite), samples, pass, std::move(detail)});
  }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace mforge
