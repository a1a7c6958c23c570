#pragma once

// Named verification suites with their default window sizes.

#include <optional>
#include <string>
#include <vector>

#include "dtq/algebras.hpp"
#include "dtq/galois.hpp"
#include "dtq/report.hpp"

namespace dtq {

/// Unset fields fall back to per-suite defaults.
struct SuiteParams {
  std::optional<std::string> algebra;
  std::optional<int> max_degree;
  std::optional<int> range;
  std::optional<int> window;
  double theta = 0.31;
  std::optional<int> q_root;
  /// Exponent of the finite quotient; fdquot runs n=1 and n=2 when unset.
  std::optional<int> quotient_n;
  CleavingConvention convention = CleavingConvention::Corrected;
  int jobs = 1;
  unsigned seed = 20240607;
};

const std::vector<std::string>& suite_names();

/// auq2, adtq, at2, az2, at2q, bicross (case-insensitive); throws InvalidParams.
AlgebraPtr algebra_by_name(const std::string& name);

Report run_suite(const std::string& name, const SuiteParams& params);

}  // namespace dtq
