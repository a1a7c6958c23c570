#pragma once

// Coefficient ring of the engine: Laurent polynomials in q with rational
// coefficients, plus the numeric and root-of-unity specialisations.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dtq {

using Exponent = std::int64_t;
using Rational = mpq_class;
using NumericScalar = std::complex<double>;

/// Finite sum  sum_k c_k q^k  with c_k rational and nonzero.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two equal
/// values always have identical term vectors. Exponent arithmetic is checked
/// and raises ErrorKind::ExponentOverflow instead of wrapping.
class QScalar {
 public:
  using Term = std::pair<Exponent, Rational>;

  QScalar() = default;
  QScalar(long value);  // NOLINT(google-explicit-constructor)
  QScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static QScalar q_power(Exponent k, const Rational& coefficient = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// A single term c q^k; these are exactly the units of Q[q, q^-1].
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::optional<Rational> constant_value() const;
  Rational coefficient(Exponent k) const;
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  /// Inverse in Q[q, q^-1]; only monomials are invertible there.
  std::optional<QScalar> inverse() const;

  QScalar& operator+=(const QScalar& other);
  QScalar& operator-=(const QScalar& other);
  QScalar& operator*=(const QScalar& other);
  friend QScalar operator+(QScalar lhs, const QScalar& rhs) { return lhs += rhs; }
  friend QScalar operator-(QScalar lhs, const QScalar& rhs) { return lhs -= rhs; }
  friend QScalar operator*(const QScalar& lhs, const QScalar& rhs);
  QScalar operator-() const;

  friend bool operator==(const QScalar& lhs, const QScalar& rhs);
  friend bool operator!=(const QScalar& lhs, const QScalar& rhs) { return !(lhs == rhs); }
  /// Arbitrary but total order, used to keep containers of scalars canonical.
  friend bool operator<(const QScalar& lhs, const QScalar& rhs);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  explicit QScalar(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void normalize();

  std::vector<Term> terms_;
};

/// q -> q^-1 with rational coefficients fixed (q lies on the unit circle).
QScalar star_scalar(const QScalar& s);

/// Specialise q = exp(2 pi i theta).
NumericScalar eval_scalar(const QScalar& s, double theta);

/// q^M = 1: exponents reduced into [0, M).
struct CyclotomicMode {
  std::int64_t order = 1;
  friend bool operator==(const CyclotomicMode&, const CyclotomicMode&) = default;
};

/// Image of s in Q[q]/(q^M - 1).
QScalar reduce_cyclotomic(const QScalar& s, CyclotomicMode mode);

/// Coefficients of the M-th cyclotomic polynomial, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(std::int64_t order);

/// The scalar ring an algebra computes in.
///
/// Symbolic: Q[q, q^-1] (generic q on the unit circle).
/// Root of unity of order M: Q(zeta_M) = Q[q]/(Phi_M(q)), q = exp(2 pi i / M).
/// The latter is a field, so every nonzero scalar is invertible there.
class ScalarRing {
 public:
  static ScalarRing symbolic() { return ScalarRing(); }
  static ScalarRing root_of_unity(CyclotomicMode mode);

  bool is_symbolic() const noexcept { return !mode_.has_value(); }
  const std::optional<CyclotomicMode>& mode() const noexcept { return mode_; }

  QScalar reduce(const QScalar& s) const;
  std::optional<QScalar> inverse(const QScalar& s) const;
  std::string describe() const;

  friend bool operator==(const ScalarRing& lhs, const ScalarRing& rhs) {
    return lhs.mode_ == rhs.mode_;
  }

 private:
  std::optional<CyclotomicMode> mode_;
  std::vector<Rational> modulus_;  // Phi_M, monic, lowest degree first
};

}  // namespace dtq
