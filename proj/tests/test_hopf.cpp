#include <gtest/gtest.h>

#include "dtq/algebras.hpp"
#include "dtq/error.hpp"
#include "dtq/expression.hpp"
#include "dtq/hopf.hpp"

using namespace dtq;

namespace {

Element P(const char* text, const AlgebraPtr& alg = adtq()) { return parse_element(text, alg); }

Tensor T(const char* x, const char* y, const AlgebraPtr& alg = adtq()) { return Tensor::pure({P(x, alg), P(y, alg)}); }

std::string describe(const Report& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += c.name + ": " + c.witness + "\n";
  return out;
}

}  // namespace

TEST(Coproduct, Generators) {
  EXPECT_EQ(coproduct(P("a")), T("a", "a") + T("b", "c"));
  EXPECT_EQ(coproduct(P("b")), T("a", "b") + T("b", "d"));
  EXPECT_EQ(coproduct(P("D")), T("D", "D"));
  EXPECT_EQ(coproduct(P("z")), T("z", "z") + T("1 - z", "1 - z"));
}

TEST(Coproduct, IsMultiplicativeOnSamples) {
  for (const char* x : {"a", "b", "c", "d", "D", "z"})
    for (const char* y : {"a", "b", "c", "d", "D^-1", "z"})
      EXPECT_EQ(coproduct(P(x) * P(y)), coproduct(P(x)) * coproduct(P(y))) << x << " " << y;
}

TEST(Antipode, AndStar) {
  EXPECT_EQ(antipode(P("a")), P("D^-1*d"));
  EXPECT_EQ(antipode(P("b")), P("-q^-1*D^-1*b"));
  EXPECT_EQ(antipode(P("b")), P("-q*b*D^-1"));
  EXPECT_EQ(star_element(P("a")), P("D^-1*d"));
  EXPECT_EQ(star_element(P("D")), P("D^-1"));
  EXPECT_EQ(star_element(star_element(P("a"))), P("a"));
  EXPECT_EQ(star_element(P("z")), P("z"));
  EXPECT_EQ(star_element(P("b")), P("-q*D^-1*c"));
  EXPECT_EQ(star_element(P("q*b")), P("-D^-1*c"));
}

TEST(Antipode, AnsatzSearchFindsTheUniqueSolution) {
  auto solutions = find_antipode_on_generators();
  ASSERT_EQ(solutions.size(), 1u);
  const auto& s = solutions.front();
  EXPECT_EQ(s.at(Gen::a), P("d*D^-1", auq2()));
  EXPECT_EQ(s.at(Gen::d), P("a*D^-1", auq2()));
  EXPECT_EQ(s.at(Gen::b), Element(auq2(), auq2()->antipode_word({Gen::b})));
  EXPECT_EQ(s.at(Gen::c), Element(auq2(), auq2()->antipode_word({Gen::c})));
}

TEST(HopfAxioms, HoldForEveryAlgebra) {
  for (const AlgebraPtr& alg : std::vector<AlgebraPtr>{adtq(), auq2(), at2(), az2()}) {
    Report r = verify_hopf_axioms(alg, 3, 4);
    EXPECT_TRUE(r.passed()) << alg->name() << "\n" << describe(r);
  }
}

TEST(HopfAxioms, MutantFailsWithWitness) {
  Report r = verify_hopf_axioms(adtq_mutant_bc(), 3, 4);
  ASSERT_FALSE(r.passed());
  const Check* failure = r.first_failure();
  ASSERT_NE(failure, nullptr);
  EXPECT_FALSE(failure->witness.empty());
}

TEST(HopfAxioms, RejectsNonHopf) {
  EXPECT_THROW(
      {
        try {
          verify_hopf_axioms(at2q(), 2);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::NotAHopfAlgebra);
          throw;
        }
      },
      Error);
}

TEST(Convolution, IdentityStarAntipodeIsUnitCounit) {
  auto alg = adtq();
  auto id = LinearMapTable("id", alg, alg, [alg](const Word& w) { return Element::monomial(alg, w); });
  auto s = LinearMapTable("S", alg, alg, [alg](const Word& w) { return Element(alg, alg->antipode_word(w)); });
  auto e = unit_counit(alg, alg);
  for (const Word& w : alg->basis_up_to_degree(3)) {
    EXPECT_EQ(convolve(id, s).on_basis(w), e.on_basis(w));
    EXPECT_EQ(convolve(s, id).on_basis(w), e.on_basis(w));
  }
}

TEST(Convolution, TableOutsideWindowThrows) {
  auto alg = adtq();
  LinearMapTable f("f", alg, alg);
  f.set({Gen::a}, P("a"));
  EXPECT_EQ(f(P("2*a")), P("2*a"));
  EXPECT_THROW(f.on_basis({Gen::b}), Error);
}

TEST(Haar, WeightOfZIsDerived) {
  EXPECT_EQ(derive_haar_weight_of_z(), Rational(1, 2));
  EXPECT_EQ(haar(P("1")), QScalar(1));
  EXPECT_EQ(haar(P("z")), QScalar(Rational(1, 2)));
  EXPECT_EQ(haar(P("D")), QScalar());
  EXPECT_EQ(haar(P("D^-1*b*c")), QScalar(Rational(-1, 2)) * QScalar::q_power(1));
}

TEST(Haar, Suite) {
  Report r = verify_haar(4, 2, 0.31);
  EXPECT_TRUE(r.passed()) << describe(r);
}

TEST(Corep, Examples) {
  EXPECT_TRUE(verify_corep(corep_w(0, 1), true).ok());
  EXPECT_TRUE(verify_corep(corep_w(-2, 3), true).ok());
  EXPECT_TRUE(verify_corep(corep_chiz(-1), true).ok());
  EXPECT_FALSE(verify_corep(corep_w_transposed(0, 1), false).corep);
  EXPECT_TRUE(verify_corep(corep_tensor(corep_w(0, 1), corep_chi(1)), true).ok());
}

TEST(Corep, DecomposeSquareOfTrace) {
  auto dec = decompose_character(P("(a + d)^2"), irrep_candidates(2, 3));
  std::map<std::string, Rational> expected{{"w(0,2)", 1}, {"chiz(1)", 1}, {"chi(1)", 1}};
  EXPECT_EQ(dec, expected);
}

TEST(Corep, DecomposeOutsideWindowThrows) {
  EXPECT_THROW(decompose_character(P("a^4"), irrep_candidates(2, 3)), Error);
}

TEST(Corep, Intertwiners) {
  auto self = intertwiner_space(corep_w(0, 1), corep_w(0, 1));
  EXPECT_EQ(self.dimension, 1u);
  EXPECT_TRUE(self.proportional_to_identity);
  EXPECT_EQ(intertwiner_space(corep_chi(1), corep_chiz(1)).dimension, 0u);
  auto doubled = corep_direct_sum(corep_chi(1), corep_chi(1));
  EXPECT_EQ(intertwiner_space(doubled, doubled).dimension, 4u);
  EXPECT_EQ(intertwiner_space(corep_w(0, 1), corep_w(1, 1)).dimension, 0u);
}

TEST(Corep, CharacterSuite) {
  Report r = verify_characters(2, 3);
  EXPECT_TRUE(r.passed()) << describe(r);
}

TEST(Corep, PeterWeylCounts) {
  PeterWeyl pw = peter_weyl_coverage(1, 2);
  EXPECT_EQ(pw.window, 30u);
  EXPECT_TRUE(pw.bijective());
}
