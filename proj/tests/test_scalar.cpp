#include <gtest/gtest.h>

#include <random>

#include "dtq/error.hpp"
#include "dtq/scalar.hpp"

using namespace dtq;

namespace {

QScalar q(Exponent k, long c = 1) { return QScalar::q_power(k, Rational(c)); }

QScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4), exponent(-6, 6), num(-9, 9), den(1, 5);
  QScalar s;
  for (int i = count(rng); i > 0; --i) s += QScalar::q_power(exponent(rng), Rational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST(Scalar, CanonicalFormDropsZeros) {
  QScalar s = q(2) + q(-1) - q(2);
  EXPECT_EQ(s, q(-1));
  EXPECT_EQ(s.terms().size(), 1u);
  EXPECT_TRUE((q(3) - q(3)).is_zero());
}

TEST(Scalar, StarExamples) {
  EXPECT_EQ(star_scalar(q(2)), q(-2));
  EXPECT_EQ(star_scalar(QScalar(1)), QScalar(1));
  EXPECT_EQ(star_scalar(q(-1, -1)), q(1, -1));
}

TEST(Scalar, EvalExamples) {
  auto one = eval_scalar(q(1), 0.0);
  EXPECT_NEAR(one.real(), 1.0, 1e-12);
  EXPECT_NEAR(one.imag(), 0.0, 1e-12);
  auto i = eval_scalar(q(1), 0.25);
  EXPECT_NEAR(i.real(), 0.0, 1e-12);
  EXPECT_NEAR(i.imag(), 1.0, 1e-12);
  auto zero = eval_scalar(q(-1) + q(1), 0.25);
  EXPECT_NEAR(std::abs(zero), 0.0, 1e-12);
}

TEST(Scalar, PurePowersEvaluateOnUnitCircle) {
  for (Exponent k : {-1000000007LL, -5LL, 0LL, 3LL, 123456789LL}) {
    EXPECT_NEAR(std::abs(eval_scalar(q(k), 0.31)), 1.0, 1e-12);
  }
}

TEST(Scalar, ReduceCyclotomicExamples) {
  CyclotomicMode four{4};
  EXPECT_EQ(reduce_cyclotomic(q(5), four), q(1));
  EXPECT_TRUE(reduce_cyclotomic(q(4) - QScalar(1), four).is_zero());
  QScalar s = QScalar(1) + q(1) + q(2) + q(3);
  EXPECT_EQ(reduce_cyclotomic(s, four), s);
}

TEST(Scalar, RandomStarIsInvolutive) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    QScalar s = random_scalar(rng);
    EXPECT_EQ(star_scalar(star_scalar(s)), s);
  }
}

TEST(Scalar, StarMatchesComplexConjugation) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> theta(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    QScalar s = random_scalar(rng);
    double t = theta(rng);
    auto lhs = eval_scalar(star_scalar(s), t);
    auto rhs = std::conj(eval_scalar(s, t));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9);
  }
}

TEST(Scalar, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    QScalar x = random_scalar(rng), y = random_scalar(rng);
    auto lhs = eval_scalar(x * y, 0.31);
    auto rhs = eval_scalar(x, 0.31) * eval_scalar(y, 0.31);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9);
  }
}

TEST(Scalar, ReduceIsRingHomomorphismAndIdempotent) {
  std::mt19937_64 rng(4);
  for (int order : {1, 2, 3, 4, 6}) {
    CyclotomicMode mode{order};
    for (int i = 0; i < 200; ++i) {
      QScalar x = random_scalar(rng), y = random_scalar(rng);
      QScalar rx = reduce_cyclotomic(x, mode), ry = reduce_cyclotomic(y, mode);
      EXPECT_EQ(reduce_cyclotomic(x * y, mode), reduce_cyclotomic(rx * ry, mode));
      EXPECT_EQ(reduce_cyclotomic(x + y, mode), reduce_cyclotomic(rx + ry, mode));
      EXPECT_EQ(reduce_cyclotomic(rx, mode), rx);
    }
  }
}

TEST(Scalar, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    QScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * QScalar(1), x);
  }
}

TEST(Scalar, CyclotomicPolynomials) {
  // Known small cases, lowest degree first.
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Rational>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Rational>{1, -1, 1}));
}

TEST(Scalar, RootOfUnityFieldArithmetic) {
  ScalarRing ring = ScalarRing::root_of_unity({4});
  // q = i: q^2 = -1.
  EXPECT_EQ(ring.reduce(q(2)), QScalar(-1));
  QScalar x = QScalar(1) + q(1);
  auto inv = ring.inverse(x);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(ring.reduce(x * *inv), QScalar(1));
  ScalarRing minus_one = ScalarRing::root_of_unity({2});
  EXPECT_EQ(minus_one.reduce(q(1)), QScalar(-1));
  EXPECT_FALSE(minus_one.inverse(QScalar(1) + q(1)).has_value());
}

TEST(Scalar, SymbolicInverseOnlyForMonomials) {
  EXPECT_EQ(*q(3, 2).inverse(), QScalar::q_power(-3, Rational(1, 2)));
  EXPECT_FALSE((q(1) + QScalar(1)).inverse().has_value());
}

TEST(Scalar, ExponentOverflowIsReported) {
  QScalar big = q(std::numeric_limits<Exponent>::max());
  try {
    (void)(big * q(1));
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExponentOverflow);
  }
}

TEST(Scalar, Printing) {
  EXPECT_EQ((q(1) - q(-1)).to_string(), "q - q^-1");
  EXPECT_EQ(q(-2, -1).to_string(), "-q^-2");
  EXPECT_EQ((QScalar(Rational(1, 2)) + q(3)).to_string(), "q^3 + 1/2");
  EXPECT_EQ(QScalar().to_string(), "0");
}
