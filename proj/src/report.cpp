#include "dtq/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace dtq {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(const std::string& name, bool ok, std::string witness, std::string detail) {
  checks.push_back({name, ok, std::move(witness), std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks.push_back(std::move(c));
  }
  for (auto it = other.extra.begin(); it != other.extra.end(); ++it) extra[prefix.empty() ? it.key() : prefix + "." + it.key()] = it.value();
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

std::vector<Check> sorted_checks(const Report& r) {
  std::vector<Check> checks = r.checks;
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return checks;
}

}  // namespace

nlohmann::json to_json(const Report& r, const nlohmann::json& cleaving_convention) {
  nlohmann::json out;
  out["suite"] = r.suite;
  out["params"] = r.params;
  out["status"] = r.passed() ? "pass" : "fail";
  out["checks"] = nlohmann::json::array();
  for (const auto& c : sorted_checks(r)) {
    nlohmann::json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    out["checks"].push_back(std::move(j));
  }
  if (const Check* f = r.first_failure(); f && !f->witness.empty()) out["witness"] = f->witness;
  if (!r.extra.empty()) out["data"] = r.extra;
  out["cleaving_convention"] = cleaving_convention;
  out["duration_ms"] = r.duration_ms;
  return out;
}

std::string to_text(const Report& r, const nlohmann::json& cleaving_convention) {
  std::ostringstream os;
  os << "suite: " << r.suite << "\n";
  os << "params: " << r.params.dump() << "\n";
  os << "cleaving_convention: " << cleaving_convention.dump() << "\n";
  for (const auto& c : sorted_checks(r)) {
    os << (c.passed ? "  PASS " : "  FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    if (!c.witness.empty()) os << "\n       witness: " << c.witness;
    os << "\n";
  }
  if (!r.extra.empty()) os << "data: " << r.extra.dump() << "\n";
  std::size_t failed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.passed; });
  os << "status: " << (failed ? "fail" : "pass") << " (" << r.checks.size() - failed << "/" << r.checks.size()
     << " checks passed, " << static_cast<long>(r.duration_ms) << " ms)\n";
  return os.str();
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::max(1, jobs);
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dtq
