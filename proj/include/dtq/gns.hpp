#pragma once

// Truncated GNS representation of ADTq on the two-sector lattice e^c_{m,n},
// e^q_{m,n}, |m|, |n| <= N, at q = exp(2 pi i theta).

#include <optional>
#include <vector>

#include "dtq/algebra.hpp"
#include "dtq/report.hpp"

namespace dtq {

struct Site {
  int sector = 0;  // 0 = classical (c), 1 = quantum (q)
  int m = 0;
  int n = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

class LatticeWindow {
 public:
  explicit LatticeWindow(int n);

  int N() const noexcept { return n_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(2 * side_ * side_); }
  std::optional<std::size_t> index(const Site& s) const;
  Site site(std::size_t index) const;
  /// Sites at distance >= margin from the boundary.
  bool interior(const Site& s, int margin = 1) const;

 private:
  int n_;
  int side_;
};

using StateVector = std::vector<NumericScalar>;

/// One entry per column for the weighted shifts; `escapes` marks columns whose
/// image leaves the window.
struct SparseOperator {
  std::vector<std::vector<std::pair<std::size_t, NumericScalar>>> columns;
  std::vector<bool> escapes;
};

class GnsRepresentation {
 public:
  /// `mutate_b` replaces the weight q^{2n-1} of pi(b) by q^{2n}.
  GnsRepresentation(int n, double theta, bool mutate_b = false);

  const LatticeWindow& window() const noexcept { return window_; }
  double theta() const noexcept { return theta_; }
  /// Dinv, D, a, d, b, c.
  const SparseOperator& letter(Gen g) const;

  StateVector basis_vector(const Site& s) const;
  /// Throws WindowOverflow when the result would leave the window, unless
  /// `truncate` is set, in which case escaping amplitude is dropped.
  StateVector apply_word(const Word& w, StateVector v, bool truncate = false) const;
  StateVector apply(const Element& e, const StateVector& v, bool truncate = false) const;

  /// 1/2 <e^c_00, pi(e) e^c_00> + 1/2 <e^q_00, pi(e) e^q_00>.
  NumericScalar expectation(const Element& e) const;
  /// Largest singular value of the truncated matrix, by power iteration on A^* A.
  double operator_norm(const Element& e, double tolerance = 1e-8, int max_iterations = 20000) const;

 private:
  NumericScalar qpow(long k) const;

  LatticeWindow window_;
  double theta_;
  SparseOperator ops_[6];
};

Report verify_gns(int n, double theta, unsigned seed = 1);

}  // namespace dtq
