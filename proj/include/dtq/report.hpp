#pragma once

// Check/report records shared by all verification suites.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dtq {

struct Check {
  std::string name;
  bool passed = true;
  /// Expression (or tensor) exhibiting the failure; empty on success.
  std::string witness;
  std::string detail;
};

struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json extra = nlohmann::json::object();
  double duration_ms = 0.0;

  bool passed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void add(const std::string& name, bool ok, std::string witness = {}, std::string detail = {});
  void merge(const Report& other, const std::string& prefix = {});
  /// First failing check, if any.
  const Check* first_failure() const;
};

nlohmann::json to_json(const Report& r, const nlohmann::json& cleaving_convention);
std::string to_text(const Report& r, const nlohmann::json& cleaving_convention);

/// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace dtq
