#include <gtest/gtest.h>

#include <random>

#include "dtq/algebras.hpp"
#include "dtq/error.hpp"
#include "dtq/expression.hpp"

using namespace dtq;

namespace {

Element P(const char* text, const AlgebraPtr& alg) { return parse_element(text, alg); }

Word random_word(std::mt19937_64& rng, const std::vector<Gen>& letters, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(letters[pick(rng)]);
  return w;
}

const std::vector<Gen> kLetters = {Gen::Dinv, Gen::D, Gen::z, Gen::a, Gen::d, Gen::b, Gen::c};

}  // namespace

TEST(Normalize, SpecExamples) {
  EXPECT_EQ(P("b*a", auq2()).to_string(), "q*a*b");
  EXPECT_TRUE(P("a*b", adtq()).is_zero());
  EXPECT_EQ(P("z*z", adtq()), P("z", adtq()));
  EXPECT_EQ(P("b*c", adtq()).to_string(), "q*D*z - q*D");
  EXPECT_TRUE(P("z*b", adtq()).is_zero());
}

TEST(Normalize, OraclesByHandSubstitution) {
  // bc from D = ad - q^-1 bc with ad = Dz, evaluated through the defining words.
  auto alg = adtq();
  Element D = P("D", alg);
  Element ad = P("a*d", alg);
  Element bc = P("b*c", alg);
  EXPECT_EQ(D, ad - P("q^-1", alg) * bc);
  // z = D^-1 a d, and in the quotient b a = q a b = 0.
  EXPECT_EQ(P("z*b", alg), P("Dinv*a*d*b", alg));
  EXPECT_TRUE(P("Dinv*a*d*b", alg).is_zero());
}

TEST(Normalize, ElementsEqualExamples) {
  EXPECT_EQ(P("a*d", adtq()), P("D*z", adtq()));
  EXPECT_NE(P("z", adtq()), P("1 - z", adtq()));
  EXPECT_EQ(P("b*c", adtq()), P("q^2*c*b", adtq()));
  EXPECT_EQ(P("b*c", auq2()), P("q^2*c*b", auq2()));
}

TEST(Normalize, CrossAlgebraMixRejected) {
  try {
    (void)(P("a", adtq()) == P("a", auq2()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CrossAlgebraMix);
  }
  EXPECT_THROW((void)(P("u", at2()) + P("a", adtq())), Error);
}

TEST(Normalize, UnknownGeneratorRejected) {
  try {
    P("u*a", adtq());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownGenerator);
  }
  try {
    P("a^-1", adtq());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativePower);
  }
}

TEST(Normalize, DCommutationFacts) {
  for (auto alg : {auq2(), adtq()}) {
    EXPECT_EQ(P("D*a", alg), P("a*D", alg));
    EXPECT_EQ(P("D*d", alg), P("d*D", alg));
    EXPECT_EQ(P("D*b", alg), P("q^-2*b*D", alg));
    EXPECT_EQ(P("D*c", alg), P("q^2*c*D", alg));
  }
}

TEST(Normalize, DeterminismUnderRandomRuleOrder) {
  std::mt19937_64 rng(11);
  for (auto alg : {auq2(), adtq()}) {
    for (int i = 0; i < 500; ++i) {
      Word w = random_word(rng, kLetters, 8);
      EXPECT_EQ(alg->system().normalize(w), alg->system().normalize_random(w, rng)) << format_word(w);
    }
  }
}

TEST(Normalize, IdempotentAndAssociative) {
  std::mt19937_64 rng(12);
  for (auto alg : {auq2(), adtq()}) {
    for (int i = 0; i < 200; ++i) {
      Element x = Element::from_word(alg, random_word(rng, kLetters, 4));
      Element y = Element::from_word(alg, random_word(rng, kLetters, 4));
      Element w = Element::from_word(alg, random_word(rng, kLetters, 4));
      EXPECT_EQ(x * (y * w), (x * y) * w);
      for (const auto& [word, c] : x.terms()) EXPECT_TRUE(alg->system().is_irreducible(word));
    }
  }
}

TEST(Normalize, ProductOfNormalFormsMatchesWordConcatenation) {
  std::mt19937_64 rng(13);
  auto alg = adtq();
  for (int i = 0; i < 200; ++i) {
    Word w1 = random_word(rng, kLetters, 4), w2 = random_word(rng, kLetters, 4);
    EXPECT_EQ(Element::from_word(alg, concat(w1, w2)), Element::from_word(alg, w1) * Element::from_word(alg, w2));
  }
}

TEST(Confluence, PresentationsAreConfluent) {
  EXPECT_TRUE(auq2()->system().check_confluence(6).empty());
  EXPECT_TRUE(adtq()->system().check_confluence(6).empty());
  EXPECT_TRUE(free_one_generator()->system().check_confluence(6).empty());
  EXPECT_TRUE(at2()->system().check_confluence(6).empty());
  EXPECT_TRUE(az2()->system().check_confluence(6).empty());
  EXPECT_TRUE(at2q()->system().check_confluence(6).empty());
}

TEST(Confluence, RulesDecreaseTheOrder) {
  for (auto alg : {auq2(), adtq(), at2(), az2(), at2q()}) EXPECT_TRUE(alg->system().order_violations().empty());
}

TEST(Confluence, DetectsAnUnresolvedAmbiguity) {
  // ab -> 0 and ba -> ab without anything else is fine; adding b -> a breaks
  // nothing either. Dropping zb -> 0 from ADTq leaves z b = z q^-1 ... unresolved.
  std::vector<RewriteRule> rules = adtq_rules();
  std::erase_if(rules, [](const RewriteRule& r) { return r.lhs == Word{Gen::z, Gen::b}; });
  RewriteSystem broken({Gen::Dinv, Gen::D, Gen::z, Gen::a, Gen::d, Gen::b, Gen::c}, rules, ScalarRing::symbolic());
  EXPECT_FALSE(broken.check_confluence(6).empty());
}

TEST(Basis, AdtqWindowCount) {
  // D^m, D^m z, D^m g^n for |m| <= 1, 1 <= n <= 2: 6 + 24 by direct enumeration.
  std::set<Word> expected;
  for (int m = -1; m <= 1; ++m) {
    expected.insert(word_of({{Gen::D, m}}));
    expected.insert(word_of({{Gen::D, m}, {Gen::z, 1}}));
    for (Gen g : {Gen::a, Gen::d, Gen::b, Gen::c})
      for (int n = 1; n <= 2; ++n) expected.insert(word_of({{Gen::D, m}, {g, n}}));
  }
  EXPECT_EQ(expected.size(), 30u);
  for (const auto& w : expected) EXPECT_TRUE(adtq()->system().is_irreducible(w)) << format_word(w);
}

TEST(Basis, IrreducibleWordsFollowPrintedPattern) {
  // Every irreducible ADTq word is D^m, D^m z or D^m g^n.
  for (const Word& w : adtq()->basis_up_to_degree(6)) {
    std::size_t i = 0;
    while (i < w.size() && (w[i] == Gen::D || w[i] == Gen::Dinv)) ++i;
    if (i > 0) {
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(w[j], w[0]);
    }
    if (i == w.size()) continue;
    Gen g = w[i];
    for (std::size_t j = i; j < w.size(); ++j) EXPECT_EQ(w[j], g) << format_word(w);
    if (g == Gen::z) EXPECT_EQ(w.size(), i + 1);
  }
}

TEST(Basis, SmallAlgebras) {
  auto z2 = az2()->basis_up_to_degree(4);
  EXPECT_EQ(z2.size(), 2u);
  int count = 0;
  for (const Word& w : at2()->basis_up_to_degree(2)) {
    int k = 0, l = 0;
    for (Gen g : w) {
      if (g == Gen::u) ++k;
      if (g == Gen::uinv) --k;
      if (g == Gen::v) ++l;
      if (g == Gen::vinv) --l;
    }
    if (std::abs(k) <= 1 && std::abs(l) <= 1) ++count;
  }
  EXPECT_EQ(count, 9);
}

TEST(Basis, RandomWordsNormalizeIntoEnumeration) {
  std::mt19937_64 rng(14);
  auto basis = adtq()->basis_up_to_degree(8);
  std::set<Word> known(basis.begin(), basis.end());
  for (int i = 0; i < 1000; ++i) {
    for (const auto& [w, c] : adtq()->normalize(random_word(rng, kLetters, 6))) EXPECT_TRUE(known.count(w));
  }
}

TEST(Quotient, IdealGeneratorsVanishAndEverythingElseSurvives) {
  // Projection AUq2 -> ADTq kills ab, ac, cd, bd and their multiples.
  for (const char* g : {"a*b", "a*c", "c*d", "b*d"}) {
    EXPECT_TRUE(P(g, adtq()).is_zero()) << g;
    EXPECT_FALSE(P(g, auq2()).is_zero()) << g;
  }
  // z^2 - z lies in the ideal: z^2 - z = q^-2 Dinv b (ac) Dinv d computed in AUq2.
  Element lhs = P("z*z - z", auq2());
  Element rhs = P("q^-2*Dinv*b*a*c*Dinv*d", auq2());
  EXPECT_EQ(lhs, rhs);
}

TEST(FiniteQuotient, SmallestCase) {
  auto fq = build_finite_quotient(1, CyclotomicMode{2});
  EXPECT_EQ(fq.dimension, 2u);
  EXPECT_TRUE(fq.algebra->system().check_confluence(8).empty());
}

TEST(FiniteQuotient, RootConditionGate) {
  try {
    build_finite_quotient(2, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootConditionViolated);
  }
  try {
    build_finite_quotient(2, CyclotomicMode{3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootConditionViolated);
  }
  EXPECT_TRUE(root_condition_holds(2, {4}));
  EXPECT_TRUE(root_condition_holds(1, {2}));
  EXPECT_FALSE(root_condition_holds(1, {4}));
}

TEST(FiniteQuotient, OrderFourCase) {
  auto fq = build_finite_quotient(2, CyclotomicMode{4});
  EXPECT_TRUE(fq.algebra->system().check_confluence(8).empty());
  EXPECT_EQ(fq.dimension, 8u);
}
