#include <gtest/gtest.h>

#include "dtq/algebras.hpp"
#include "dtq/error.hpp"
#include "dtq/expression.hpp"
#include "dtq/galois.hpp"

using namespace dtq;

namespace {

constexpr auto kCorrected = CleavingConvention::Corrected;
constexpr auto kPrinted = CleavingConvention::Printed;

Element P(const char* text, const AlgebraPtr& alg = adtq()) { return parse_element(text, alg); }
Element Z(const char* text) { return parse_element(text, az2()); }
Element B(const char* text) { return parse_element(text, at2()); }

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += c.name + ": " + c.witness + "\n";
  return out;
}

}  // namespace

TEST(Convention, Names) {
  EXPECT_EQ(convention_name(kCorrected), "corrected");
  EXPECT_EQ(convention_from_name("printed"), kPrinted);
  EXPECT_FALSE(convention_from_name("other"));
}

TEST(ExactSequence, Maps) {
  EXPECT_EQ(project_torus(P("a")), B("u"));
  EXPECT_EQ(project_torus(P("d")), B("v"));
  EXPECT_TRUE(project_torus(P("b")).is_zero());
  EXPECT_EQ(project_torus(P("D")), B("u*v"));
  EXPECT_EQ(project_torus(P("z")), B("1"));
  EXPECT_EQ(include_base(delta(0)), P("z"));
  EXPECT_EQ(include_base(delta(1)), P("1 - z"));
  EXPECT_EQ(pull_back_base(P("3 - z")), Z("2*d0 + 3*d1"));
  try {
    pull_back_base(P("a"));
    FAIL() << "expected NotInBaseImage";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInBaseImage);
  }
}

TEST(Torus, ExponentsOfGroupLikes) {
  EXPECT_EQ(torus_exponents(torus_word(-2, 3)), std::make_pair(-2, 3));
  EXPECT_EQ(torus(1, 1), B("u*v"));
  try {
    torus_exponents(Word{Gen::d0});
    FAIL() << "expected NonGrouplikeInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonGrouplikeInput);
  }
}

TEST(Cleaving, Examples) {
  EXPECT_EQ(cleaving_j(B("u"), kCorrected), P("a + c"));
  EXPECT_EQ(cleaving_j(B("v"), kCorrected), P("b + d"));
  EXPECT_EQ(cleaving_j(B("u*v"), kCorrected), P("D*z - D*(1 - z)"));
  EXPECT_EQ(cleaving_j(B("1"), kCorrected), P("1"));
  EXPECT_EQ(cleaving_j(B("u^-1*v^-1"), kCorrected), P("D^-1*z - D^-1*(1 - z)"));
  // Printed diagonal: (-D)^{-k} in the second corner.
  EXPECT_EQ(cleaving_j(B("u*v"), kPrinted), P("D*z - D^-1*(1 - z)"));
  EXPECT_EQ(cleaving_j(B("u^2 + 3*v"), kCorrected), P("(a + c)^2") + P("3*(b + d)"));
}

// Off-diagonal branches against the closed form, read off term by term.
TEST(Cleaving, OffDiagonalBranches) {
  const auto A = adtq();
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l) {
      if (k == l) continue;
      const int m = std::min(k, l), e = std::abs(k - l);
      const long sign = m % 2 == 0 ? 1 : -1;
      const Element Dm = Element::from_word(A, power_word(Gen::D, m));
      Element expected(A);
      if (k > l) {
        expected = Dm * Element::from_word(A, power_word(Gen::a, e)) +
                   QScalar::q_power(static_cast<Exponent>(m) * m, sign) * Dm *
                       Element::from_word(A, power_word(Gen::c, e));
      } else {
        expected = QScalar::q_power(-static_cast<Exponent>(m) * m, sign) * Dm *
                       Element::from_word(A, power_word(Gen::b, e)) +
                   Dm * Element::from_word(A, power_word(Gen::d, e));
      }
      EXPECT_EQ(cleaving_j(k, l, kCorrected), expected) << k << "," << l;
    }
}

TEST(Cleaving, InverseExamples) {
  EXPECT_EQ(cleaving_j_inverse(B("u"), kCorrected), P("D^-1*d - q^-1*D^-1*b"));
  EXPECT_EQ(cleaving_j_inverse(B("1"), kCorrected), P("1"));
  EXPECT_EQ(cleaving_j_inverse(B("u^2*v^2"), kCorrected), P("D^-2*z + D^-2*(1 - z)"));
  EXPECT_EQ(cleaving_j_inverse(B("u*v"), kCorrected), P("D^-1*z - D^-1*(1 - z)"));
}

// Oracle: the product with j itself, computed by the algebra engine.
TEST(Cleaving, InverseIsAlgebraInverse) {
  for (int k = -2; k <= 2; ++k)
    for (int l = -2; l <= 2; ++l) {
      const Element j = cleaving_j(k, l, kCorrected);
      const Element ji = cleaving_j_inverse(torus(k, l), kCorrected);
      EXPECT_EQ(j * ji, P("1")) << k << "," << l;
      EXPECT_EQ(ji * j, P("1")) << k << "," << l;
    }
}

TEST(Cocycle, Examples) {
  for (auto method : {SigmaMethod::Table, SigmaMethod::Convolution}) {
    EXPECT_EQ(cocycle_sigma(1, 0, 0, 1, method, kCorrected), Z("d0 + q^-1*d1"));
    EXPECT_EQ(cocycle_sigma(2, 1, 3, 1, method, kCorrected), Z("d0 + q^-4*d1"));
    EXPECT_EQ(cocycle_sigma(0, 0, 2, -1, method, kCorrected), Z("d0 + d1"));
  }
  EXPECT_EQ(sigma_q_table(1, 0, 0, 1), QScalar::q_power(-1));
  EXPECT_EQ(sigma_q_table(2, 1, 3, 1), QScalar::q_power(-4));
}

// Regression pin for the triple (u, v, uv): both sides of the cocycle identity.
TEST(Cocycle, PinnedTriple) {
  auto s = [](int k, int l, int m, int n) { return cocycle_sigma(k, l, m, n, SigmaMethod::Table, kCorrected); };
  const Element lhs = s(1, 0, 0, 1) * s(1, 1, 1, 1);
  const Element rhs = s(0, 1, 1, 1) * s(1, 0, 1, 2);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs, Z("d0 + q^-1*d1"));
}

TEST(Cocycle, PrintedConventionLeavesTheBase) {
  std::size_t thrown = 0;
  for (int k = -1; k <= 1; ++k)
    for (int l = -1; l <= 1; ++l)
      for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
          try {
            cocycle_sigma(k, l, m, n, SigmaMethod::Convolution, kPrinted);
          } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotInBaseImage);
            EXPECT_TRUE((k == l && k != 0) || (m == n && m != 0) || (k + m == l + n && k + m != 0))
                << k << l << m << n;
            ++thrown;
          }
        }
  EXPECT_EQ(thrown, 28u);
}

TEST(Cocycle, SuiteAtRangeTwo) {
  const Report r = verify_cocycle(2, kCorrected, 2);
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_EQ(r.extra["tuples"], 625);
  const Report printed = verify_cocycle(1, kPrinted);
  EXPECT_FALSE(printed.passed());
  EXPECT_EQ(printed.extra["not_in_base_image"], 28);
  EXPECT_EQ(printed.extra["mismatches"], 0);
  EXPECT_EQ(printed.extra["off_diagonal_failures"], 0);
}

TEST(Cocleaving, Examples) {
  for (auto method : {EllMethod::Table, EllMethod::FromJ}) {
    EXPECT_EQ(cocleaving_l(P("D^3*z"), method, kCorrected), Z("d0")) << static_cast<int>(method);
    EXPECT_EQ(cocleaving_l(P("D^2*b^3"), method, kCorrected), Z("q^4*d1"));
    EXPECT_EQ(cocleaving_l(P("D*(1 - z)"), method, kCorrected), Z("-d1"));
    EXPECT_EQ(cocleaving_l(P("1"), method, kCorrected), Z("1"));
  }
}

TEST(Coaction, Examples) {
  for (auto method : {LambdaMethod::Formula, LambdaMethod::FromL}) {
    EXPECT_EQ(coaction_lambda(2, 3, method, kCorrected),
              Tensor::pure({B("u^2*v^3"), Z("d0")}) + Tensor::pure({B("u^3*v^2"), Z("d1")}));
    EXPECT_EQ(coaction_lambda(0, 0, method, kCorrected), Tensor::pure({B("1"), Z("1")}));
    EXPECT_EQ(coaction_lambda(2, 2, method, kCorrected), Tensor::pure({B("u^2*v^2"), Z("1")}));
  }
}

TEST(Bicross, ProductAndCoproduct) {
  const Element one_u = bicross_monomial(0, 1, 0) + bicross_monomial(1, 1, 0);
  const Element one_v = bicross_monomial(0, 0, 1) + bicross_monomial(1, 0, 1);
  EXPECT_EQ(one_u * one_v, bicross_monomial(0, 1, 1) + QScalar::q_power(-1) * bicross_monomial(1, 1, 1));
  EXPECT_EQ(bicross_monomial(0, 0, 0) * bicross_monomial(0, 0, 0), bicross_monomial(0, 0, 0));
  EXPECT_TRUE((bicross_monomial(0, 0, 0) * bicross_monomial(1, 0, 0)).is_zero());
  // Regression pin.
  EXPECT_EQ(coproduct(bicross_monomial(0, 1, 1)),
            Tensor::pure({bicross_monomial(0, 1, 1), bicross_monomial(0, 1, 1)}) +
                Tensor::pure({bicross_monomial(1, 1, 1), bicross_monomial(1, 1, 1)}));
}

TEST(Bicross, Phi) {
  EXPECT_EQ(bicross_phi(bicross_monomial(0, 0, 0)), P("z"));
  EXPECT_EQ(bicross_phi(bicross_monomial(0, 1, 0) + bicross_monomial(1, 1, 0)), P("a + c"));
  for (int k = -2; k <= 2; ++k) {
    const Element minus_d = Element::from_word(adtq(), power_word(Gen::D, k));
    const Element expected = (k % 2 == 0 ? P("1") : P("-1")) * minus_d * P("1 - z");
    EXPECT_EQ(bicross_phi(bicross_monomial(1, k, k)), expected) << k;
  }
}

TEST(Diagram, RhoGenerators) {
  const auto Q = at2q();
  EXPECT_EQ(rho_q(1, 0, adtq()), Tensor::pure({P("a"), P("x", Q)}) + Tensor::pure({P("b"), P("y", Q)}));
  EXPECT_EQ(rho_q(0, 1, adtq()), Tensor::pure({P("c"), P("x", Q)}) + Tensor::pure({P("d"), P("y", Q)}));
}

TEST(Suites, PassAtSmallSizes) {
  for (const Report& r : {verify_exact_sequence(2), verify_cleaving(2, kCorrected), verify_coaction(2, kCorrected),
                          verify_bicross(3, 40, 11), verify_coaction_diagram(3), verify_quotient_consistency(4)})
    EXPECT_TRUE(r.passed()) << r.suite << "\n" << failures(r);
}

TEST(Suites, PrintedConventionFailsCleaving) {
  const Report r = verify_cleaving(1, kPrinted);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.first_failure(), nullptr);
}

TEST(FiniteQuotient, PinnedDimensions) {
  const Report one = verify_finite_quotient(1, CyclotomicMode{2});
  EXPECT_TRUE(one.passed()) << failures(one);
  EXPECT_EQ(one.extra["dimension"], 2);
  const Report two = verify_finite_quotient(2, CyclotomicMode{4});
  EXPECT_TRUE(two.passed()) << failures(two);
  EXPECT_EQ(two.extra["dimension"], 8);
}

TEST(FiniteQuotient, RootConditionRejected) {
  try {
    verify_finite_quotient(2, CyclotomicMode{3});
    FAIL() << "expected RootConditionViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootConditionViolated);
  }
}
