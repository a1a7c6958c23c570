#pragma once

// Exact linear algebra over the fraction field of Q[q, q^-1].

#include <vector>

#include "dtq/scalar.hpp"

namespace dtq {

using ScalarMatrix = std::vector<std::vector<QScalar>>;

struct Nullspace {
  std::size_t rank = 0;
  /// Each vector solves A x = 0; entries are polynomial (denominators cleared).
  std::vector<std::vector<QScalar>> basis;
};

/// Fraction-free elimination; no division is ever needed, so the computation
/// stays inside Q[q, q^-1] while deciding rank over Q(q).
Nullspace nullspace(const ScalarMatrix& a, std::size_t columns);
std::size_t matrix_rank(const ScalarMatrix& a, std::size_t columns);

}  // namespace dtq
