#include "dtq/suites.hpp"

#include <algorithm>
#include <cctype>

#include "dtq/error.hpp"
#include "dtq/gns.hpp"
#include "dtq/hopf.hpp"

namespace dtq {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf",    "cocycle", "cleaving",   "bicross", "exactseq", "diagram",
                                              "haar",    "characters", "gns",     "fdquot",  "all"};
  return names;
}

AlgebraPtr algebra_by_name(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  if (key == "auq2") return auq2();
  if (key == "adtq") return adtq();
  if (key == "at2") return at2();
  if (key == "az2") return az2();
  if (key == "at2q") return at2q();
  if (key == "bicross") return bicross();
  throw Error(ErrorKind::InvalidParams, "unknown algebra '" + name + "' (auq2, adtq, at2, az2, at2q, bicross)");
}

namespace {

Report hopf_suite(const SuiteParams& p) {
  Stopwatch clock;
  Report r;
  r.suite = "hopf";
  const int degree = p.max_degree.value_or(4);
  std::vector<AlgebraPtr> algebras;
  if (p.algebra) {
    algebras.push_back(algebra_by_name(*p.algebra));
  } else {
    algebras = {auq2(), adtq(), at2(), az2(), bicross()};
  }
  r.params = {{"max_degree", degree}, {"algebras", nlohmann::json::array()}};
  for (const auto& alg : algebras) {
    r.params["algebras"].push_back(alg->name());
    if (auto rewrite = std::dynamic_pointer_cast<const RewriteAlgebra>(alg)) {
      const int bound = std::max(6, degree);
      auto pairs = rewrite->system().check_confluence(bound);
      std::string witness;
      if (!pairs.empty())
        witness = format_word(pairs.front().ambiguity) + ": " + Element(alg, pairs.front().left).to_string() +
                  " vs " + Element(alg, pairs.front().right).to_string();
      r.add(alg->name() + ".confluence", pairs.empty(), witness,
            "critical pairs up to degree " + std::to_string(bound) + ", " + std::to_string(pairs.size()) + " unresolved");
    }
    r.merge(verify_hopf_axioms(alg, degree, p.jobs), alg->name());
  }
  if (!p.algebra || algebras.front()->id().tag == AlgebraTag::AUq2) {
    r.extra["AUq2.z_powers"] = "basis uses D^k z^l with l >= 0 only; z = D^-1 a d has no inverse in the presentation";
    auto solutions = find_antipode_on_generators();
    r.add("AUq2.antipode_ansatz_unique", solutions.size() == 1, {},
          std::to_string(solutions.size()) + " solutions of the antipode ansatz");
  }
  r.duration_ms = clock.elapsed_ms();
  return r;
}

Report exactseq_suite(const SuiteParams& p) {
  Report r = verify_exact_sequence(p.range.value_or(3));
  Report q = verify_quotient_consistency(std::max(6, p.max_degree.value_or(6)));
  r.merge(q, "quotient");
  r.params["quotient_max_degree"] = q.params.value("max_degree", 6);
  r.duration_ms += q.duration_ms;
  return r;
}

Report cleaving_suite(const SuiteParams& p) {
  const int range = p.range.value_or(3);
  Report r = verify_cleaving(range, p.convention);
  Report lambda = verify_coaction(range, p.convention);
  r.merge(lambda, "coaction");
  r.duration_ms += lambda.duration_ms;
  return r;
}

Report fdquot_suite(const SuiteParams& p) {
  Stopwatch clock;
  Report r;
  r.suite = "fdquot";
  std::vector<std::pair<int, int>> cases;
  if (p.quotient_n) {
    cases.emplace_back(*p.quotient_n, p.q_root.value_or(2 * *p.quotient_n));
  } else {
    cases = {{1, 2}, {2, 4}};
  }
  r.params = nlohmann::json::array();
  for (auto [n, m] : cases) {
    r.params.push_back({{"n", n}, {"q_root", m}});
    r.merge(verify_finite_quotient(n, CyclotomicMode{m}), "n=" + std::to_string(n));
  }
  r.duration_ms = clock.elapsed_ms();
  return r;
}

}  // namespace

Report run_suite(const std::string& name, const SuiteParams& p) {
  if (p.jobs < 1) throw Error(ErrorKind::InvalidParams, "--jobs must be positive");
  if (name == "hopf") return hopf_suite(p);
  if (name == "cocycle") return verify_cocycle(p.range.value_or(3), p.convention, p.jobs);
  if (name == "cleaving") return cleaving_suite(p);
  if (name == "bicross") return verify_bicross(p.max_degree.value_or(4), 200, p.seed, p.jobs);
  if (name == "exactseq") return exactseq_suite(p);
  if (name == "diagram") return verify_coaction_diagram(p.range.value_or(4));
  if (name == "haar") {
    const int degree = p.max_degree.value_or(5);
    return verify_haar(degree, std::min(degree, 3), p.theta);
  }
  if (name == "characters") return verify_characters(p.range.value_or(2), p.max_degree.value_or(3));
  if (name == "gns") return verify_gns(p.window.value_or(6), p.theta, p.seed);
  if (name == "fdquot") return fdquot_suite(p);
  if (name == "all") {
    Stopwatch clock;
    Report r;
    r.suite = "all";
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      Report sub = run_suite(s, p);
      r.params[s] = sub.params;
      r.merge(sub, s);
    }
    r.duration_ms = clock.elapsed_ms();
    return r;
  }
  throw Error(ErrorKind::InvalidParams, "unknown suite '" + name + "'");
}

}  // namespace dtq
