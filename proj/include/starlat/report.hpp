#pragma once

// Verification reports: a flat list of named checks with pass/fail, the worst
// residual seen, and an optional witness tuple.  JSON output is deterministic
// (fixed field order, cases sorted by check name) so reruns are byte-identical.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace starlat {

inline constexpr const char* kToolVersion = "starlat 0.1.0";

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CheckResult {
  std::string check;
  bool pass = false;
  double max_residual = 0.0;
  std::optional<std::vector<double>> witness;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> cases;

  CheckResult& add(std::string name, bool pass, double residual,
                   std::optional<std::vector<double>> witness = std::nullopt) {
    cases.push_back({std::move(name), pass, residual, std::move(witness)});
    return cases.back();
  }

  bool all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CheckResult& c) { return c.pass; });
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : cases)
      if (c.check == name) return &c;
    return nullptr;
  }

  void merge(const Report& other) {
    for (const auto& c : other.cases) cases.push_back(c);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    std::vector<const CheckResult*> sorted;
    sorted.reserve(cases.size());
    for (const auto& c : cases) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult* a, const CheckResult* b) { return a->check < b->check; });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult* c : sorted) {
      nlohmann::ordered_json e;
      e["check"] = c->check;
      e["pass"] = c->pass;
      e["max_residual"] = c->max_residual;
      if (c->witness) e["witness"] = *c->witness;
      arr.push_back(std::move(e));
    }
    j["cases"] = std::move(arr);
    j["seed"] = seed;
    j["tool_version"] = kToolVersion;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << "  (seed " << seed << ")\n";
    std::vector<const CheckResult*> sorted;
    for (const auto& c : cases) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult* a, const CheckResult* b) { return a->check < b->check; });
    for (const CheckResult* c : sorted) {
      os << (c->pass ? "  pass  " : "  FAIL  ") << c->check << "  residual " << c->max_residual;
      if (c->witness && !c->witness->empty()) {
        os << "  witness [";
        for (size_t i = 0; i < c->witness->size(); ++i) {
          if (i) os << ", ";
          os << (*c->witness)[i];
        }
        os << "]";
      }
      os << "\n";
    }
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
  }
};

}  // namespace starlat
