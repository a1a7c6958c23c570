#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dtq/algebras.hpp"
#include "dtq/error.hpp"
#include "dtq/expression.hpp"
#include "dtq/gns.hpp"
#include "dtq/hopf.hpp"

using namespace dtq;

namespace {

constexpr double kTheta = 0.31;

Element P(const char* text) { return parse_element(text, adtq()); }

NumericScalar qpow(double theta, long k) { return std::polar(1.0, 2.0 * std::numbers::pi * theta * k); }

/// Single amplitude of pi(e) e_from at e_to.
NumericScalar entry(const GnsRepresentation& pi, const Element& e, Site from, Site to) {
  return pi.apply(e, pi.basis_vector(from))[*pi.window().index(to)];
}

double norm(const StateVector& v) {
  double s = 0.0;
  for (auto x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

TEST(Lattice, IndexRoundTrip) {
  LatticeWindow w(3);
  EXPECT_EQ(w.size(), 2u * 7 * 7);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(*w.index(w.site(i)), i);
  EXPECT_FALSE(w.index(Site{0, 4, 0}));
  EXPECT_TRUE(w.interior(Site{1, 2, -2}));
  EXPECT_FALSE(w.interior(Site{1, 3, 0}));
}

TEST(Generators, BranchFormulas) {
  GnsRepresentation pi(6, kTheta);
  const auto q = [](long k) { return qpow(kTheta, k); };
  EXPECT_NEAR(std::abs(entry(pi, P("a"), {0, 0, 0}, {0, 0, 1}) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(entry(pi, P("a"), {0, 2, -1}, {0, 3, 0}) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(entry(pi, P("d"), {0, 1, 2}, {0, 2, 1}) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(entry(pi, P("b"), {1, 1, 2}, {1, 2, 1}) + q(3)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(entry(pi, P("b"), {1, 2, 0}, {1, 2, -1}) - q(4)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(entry(pi, P("c"), {1, -2, -1}, {1, -1, 0}) + q(3)), 0.0, 1e-14);
  EXPECT_EQ(norm(pi.apply(P("b"), pi.basis_vector({0, 1, 1}))), 0.0);
  EXPECT_EQ(norm(pi.apply(P("a"), pi.basis_vector({1, 1, 1}))), 0.0);
}

// Hand composition of -q^-1 pi(b) pi(c): n >= 0 gives q^{2n}, n < 0 gives 1.
TEST(Generators, DOnQuantumSector) {
  GnsRepresentation pi(6, kTheta);
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const NumericScalar expected = n >= 0 ? qpow(kTheta, 2L * n) : NumericScalar(1.0);
      EXPECT_NEAR(std::abs(entry(pi, P("D"), {1, m, n}, {1, m + 1, n}) - expected), 0.0, 1e-12) << m << "," << n;
      EXPECT_NEAR(std::abs(entry(pi, P("D"), {0, m, n}, {0, m + 1, n}) - 1.0), 0.0, 1e-12);
    }
}

TEST(Generators, ZIsSectorProjection) {
  GnsRepresentation pi(6, kTheta);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      EXPECT_NEAR(std::abs(entry(pi, P("z"), {0, m, n}, {0, m, n}) - 1.0), 0.0, 1e-12);
      EXPECT_NEAR(norm(pi.apply(P("z"), pi.basis_vector({1, m, n}))), 0.0, 1e-12);
    }
}

TEST(Generators, ClassicalPointWeightsAreSigns) {
  GnsRepresentation pi(4, 0.0);
  for (Gen g : {Gen::b, Gen::c, Gen::D})
    for (const auto& col : pi.letter(g).columns)
      for (const auto& [i, x] : col) {
        EXPECT_NEAR(x.imag(), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(x.real()), 1.0, 1e-14);
      }
}

TEST(Apply, LinearAndMultiplicative) {
  GnsRepresentation pi(6, kTheta);
  StateVector omega = pi.basis_vector({0, 0, 0});
  const auto q00 = pi.basis_vector({1, 0, 0});
  for (std::size_t i = 0; i < omega.size(); ++i) omega[i] = (omega[i] + q00[i]) / std::sqrt(2.0);

  auto same = [](const StateVector& x, const StateVector& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
  };
  EXPECT_LT(same(pi.apply(P("1"), omega), omega), 1e-14);
  EXPECT_LT(same(pi.apply(P("z + (1 - z)"), omega), omega), 1e-14);
  // bc = q^2 cb letter by letter, without the symbolic normal form.
  auto bc = pi.apply_word(Word{Gen::b, Gen::c}, q00);
  auto cb = pi.apply_word(Word{Gen::c, Gen::b}, q00);
  for (auto& x : cb) x *= qpow(kTheta, 2);
  EXPECT_LT(same(bc, cb), 1e-10);
  for (const char* x : {"a", "b + c", "D^-1*d", "z"})
    for (const char* y : {"d", "c", "D*b", "1 - z"}) {
      auto lhs = pi.apply(P(x) * P(y), omega);
      auto rhs = pi.apply(P(x), pi.apply(P(y), omega));
      EXPECT_LT(same(lhs, rhs), 1e-10) << x << " " << y;
    }
}

TEST(Apply, OverflowIsReported) {
  GnsRepresentation pi(3, kTheta);
  try {
    pi.apply(P("a^4"), pi.basis_vector({0, 0, 0}));
    FAIL() << "expected WindowOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowOverflow);
  }
  EXPECT_NO_THROW(pi.apply(P("a^3"), pi.basis_vector({0, 0, 0})));
  EXPECT_NO_THROW(pi.apply(P("a^4"), pi.basis_vector({0, 0, 0}), true));
}

TEST(Expectation, Examples) {
  GnsRepresentation pi(6, kTheta);
  EXPECT_NEAR(std::abs(pi.expectation(P("z")) - 0.5), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pi.expectation(P("D^2*a"))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pi.expectation(P("1")) - 1.0), 0.0, 1e-14);
}

// Independent oracle: haar is coeff(1) + coeff(z)/2 on the normal form.
TEST(Expectation, MatchesHaarOnDegreeFourWindow) {
  GnsRepresentation pi(6, kTheta);
  const auto A = adtq();
  for (const Word& w : A->basis_up_to_degree(4)) {
    const Element e = Element::monomial(A, w);
    const double oracle = w.empty() ? 1.0 : (w == Word{Gen::z} ? 0.5 : 0.0);
    EXPECT_NEAR(std::abs(pi.expectation(e) - oracle), 0.0, 1e-10) << e.to_string();
  }
  for (const char* text : {"(a + d)^2", "b*c", "D^-1*b*c + z", "c^2*b^2"}) {
    const Element e = P(text);
    EXPECT_NEAR(std::abs(pi.expectation(e) - eval_scalar(haar(e), kTheta)), 0.0, 1e-10) << text;
  }
}

TEST(Norm, Examples) {
  GnsRepresentation pi(6, kTheta);
  EXPECT_NEAR(pi.operator_norm(P("a")), 1.0, 1e-8);
  EXPECT_NEAR(pi.operator_norm(P("z")), 1.0, 1e-8);
  EXPECT_NEAR(pi.operator_norm(P("a + b")), 1.0, 1e-8);
  EXPECT_NEAR(pi.operator_norm(P("2*a")), 2.0, 1e-8);
}

TEST(Norm, MonotoneInWindow) {
  const Element e = P("a + d + b");
  double previous = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const double value = GnsRepresentation(n, kTheta).operator_norm(e);
    EXPECT_GE(value, previous - 1e-8) << n;
    previous = value;
  }
}

TEST(Norm, NonConvergenceIsReported) {
  GnsRepresentation pi(4, kTheta);
  try {
    pi.operator_norm(P("a + d + b + c"), 1e-15, 2);
    FAIL() << "expected NonConvergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonConvergence);
  }
}

TEST(Suite, PassesAtAcceptanceSize) {
  for (double theta : {kTheta, 0.0}) {
    const Report r = verify_gns(6, theta);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << theta << " " << c.name << ": " << c.witness;
    EXPECT_TRUE(r.extra.contains("max_relation_defect"));
  }
}

TEST(Suite, MutatedBBreaksARelation) {
  // Both words use the upper branch of pi(b) away from n = 0, so the
  // mutation only shows where the branches meet.
  GnsRepresentation mutant(6, kTheta, true);
  for (int n : {0, 1}) {
    auto bc = mutant.apply_word(Word{Gen::b, Gen::c}, mutant.basis_vector({1, 0, n}));
    auto cb = mutant.apply_word(Word{Gen::c, Gen::b}, mutant.basis_vector({1, 0, n}));
    for (std::size_t i = 0; i < bc.size(); ++i) bc[i] -= qpow(kTheta, 2) * cb[i];
    if (n == 0) EXPECT_GT(norm(bc), 1e-3);
    else EXPECT_LT(norm(bc), 1e-10);
  }
}
