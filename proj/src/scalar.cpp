#include "dtq/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dtq/error.hpp"

namespace dtq {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::ExponentOverflow, "q-exponent sum overflows 64 bits");
  }
  return out;
}

Exponent floor_mod(Exponent a, Exponent m) {
  Exponent r = a % m;
  return r < 0 ? r + m : r;
}

// Dense polynomial helpers over Q, lowest degree first.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns {quotient, remainder}.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / b.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

Poly to_poly(const QScalar& s) {
  // Only called on scalars whose exponents are already in [0, M).
  Poly p;
  for (const auto& [k, c] : s.terms()) {
    if (static_cast<std::size_t>(k) >= p.size()) p.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    p[static_cast<std::size_t>(k)] += c;
  }
  trim(p);
  return p;
}

QScalar from_poly(const Poly& p) {
  QScalar out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out += QScalar::q_power(static_cast<Exponent>(i), p[i]);
  return out;
}

}  // namespace

QScalar::QScalar(long value) {
  if (value != 0) terms_.emplace_back(0, Rational(value));
}

QScalar::QScalar(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v != 0) terms_.emplace_back(0, std::move(v));
}

QScalar QScalar::q_power(Exponent k, const Rational& coefficient) {
  Rational c = coefficient;
  c.canonicalize();
  if (c == 0) return {};
  return QScalar(std::vector<Term>{{k, std::move(c)}});
}

bool QScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::optional<Rational> QScalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
  return std::nullopt;
}

Rational QScalar::coefficient(Exponent k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Exponent e) { return t.first < e; });
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

Exponent QScalar::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
Exponent QScalar::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

std::optional<QScalar> QScalar::inverse() const {
  if (!is_monomial()) return std::nullopt;
  return q_power(-terms_[0].first, Rational(1) / terms_[0].second);
}

void QScalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.second == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

QScalar& QScalar::operator+=(const QScalar& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& other) { return *this += -other; }

QScalar operator*(const QScalar& lhs, const QScalar& rhs) {
  if (lhs.terms_.empty() || rhs.terms_.empty()) return {};
  std::vector<QScalar::Term> out;
  out.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& [ka, ca] : lhs.terms_)
    for (const auto& [kb, cb] : rhs.terms_) out.emplace_back(checked_add(ka, kb), ca * cb);
  QScalar result(std::move(out));
  if (lhs.terms_.size() > 1 && rhs.terms_.size() > 1) result.normalize();
  return result;
}

QScalar& QScalar::operator*=(const QScalar& other) { return *this = *this * other; }

QScalar QScalar::operator-() const {
  QScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

bool operator==(const QScalar& lhs, const QScalar& rhs) { return lhs.terms_ == rhs.terms_; }

bool operator<(const QScalar& lhs, const QScalar& rhs) { return lhs.terms_ < rhs.terms_; }

std::string QScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::size_t QScalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [k, c] : terms_) {
    h ^= std::hash<Exponent>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.get_str()) + (h << 6) + (h >> 2);
  }
  return h;
}

QScalar star_scalar(const QScalar& s) {
  QScalar out;
  for (const auto& [k, c] : s.terms()) {
    if (k == std::numeric_limits<Exponent>::min()) {
      throw Error(ErrorKind::ExponentOverflow, "cannot negate minimal exponent");
    }
    out += QScalar::q_power(-k, c);
  }
  return out;
}

NumericScalar eval_scalar(const QScalar& s, double theta) {
  NumericScalar total{0.0, 0.0};
  for (const auto& [k, c] : s.terms()) {
    long double turns = std::fmod(static_cast<long double>(k) * theta, 1.0L);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(turns);
    total += c.get_d() * NumericScalar(std::cos(angle), std::sin(angle));
  }
  return total;
}

QScalar reduce_cyclotomic(const QScalar& s, CyclotomicMode mode) {
  if (mode.order < 1) throw Error(ErrorKind::InvalidParams, "cyclotomic order must be positive");
  QScalar out;
  for (const auto& [k, c] : s.terms()) out += QScalar::q_power(floor_mod(k, mode.order), c);
  return out;
}

std::vector<Rational> cyclotomic_polynomial(std::int64_t order) {
  if (order < 1) throw Error(ErrorKind::InvalidParams, "cyclotomic order must be positive");
  // Phi_M = (q^M - 1) / prod_{d | M, d < M} Phi_d
  Poly numerator(static_cast<std::size_t>(order) + 1, Rational(0));
  numerator[0] = -1;
  numerator.back() = 1;
  Poly denominator{Rational(1)};
  for (std::int64_t d = 1; d < order; ++d) {
    if (order % d == 0) denominator = poly_mul(denominator, cyclotomic_polynomial(d));
  }
  auto [quot, rem] = poly_divmod(numerator, denominator);
  return quot;
}

ScalarRing ScalarRing::root_of_unity(CyclotomicMode mode) {
  ScalarRing ring;
  ring.mode_ = mode;
  ring.modulus_ = cyclotomic_polynomial(mode.order);
  return ring;
}

QScalar ScalarRing::reduce(const QScalar& s) const {
  if (!mode_) return s;
  Poly p = to_poly(reduce_cyclotomic(s, *mode_));
  return from_poly(poly_divmod(p, modulus_).second);
}

std::optional<QScalar> ScalarRing::inverse(const QScalar& s) const {
  if (!mode_) return s.inverse();
  Poly a = to_poly(reduce(s));
  if (a.empty()) return std::nullopt;
  // Extended Euclid: find x with a*x = 1 mod modulus.
  Poly r0 = modulus_, r1 = a;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1);
    Poly next_s = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(next_s);
  }
  // r0 is a nonzero constant because the modulus is irreducible.
  if (r0.size() != 1) return std::nullopt;
  Rational scale = Rational(1) / r0[0];
  for (auto& c : s0) c *= scale;
  return reduce(from_poly(s0));
}

std::string ScalarRing::describe() const {
  if (!mode_) return "symbolic";
  return "root_of_unity(order=" + std::to_string(mode_->order) + ")";
}

}  // namespace dtq
