#pragma once

// Concrete presented algebras and their structure maps on generators.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtq/algebra.hpp"
#include "dtq/rewrite.hpp"

namespace dtq {

/// Structure maps given on letters. Letters listed in `composite` are defined
/// as products of other letters (z = Dinv a d) and get their images from that
/// product, so nothing about them has to be entered by hand.
struct GeneratorData {
  std::map<Gen, std::vector<std::pair<std::pair<Word, Word>, QScalar>>> coproduct;
  std::map<Gen, QScalar> counit;
  std::map<Gen, Combination> antipode;
  std::map<Gen, Combination> star;
  std::map<Gen, Word> composite;
};

class RewriteAlgebra : public Algebra {
 public:
  /// `hopf` switches on coproduct, counit and antipode; `star` the involution.
  RewriteAlgebra(AlgebraId id, RewriteSystem system, GeneratorData data, bool hopf, bool star,
                 std::optional<Combination> unit_expansion = std::nullopt);

  const RewriteSystem& system() const noexcept { return system_; }
  const GeneratorData& generator_data() const noexcept { return data_; }

  Combination normalize(const Word& w) const;
  Combination multiply_words(const Word& lhs, const Word& rhs) const override;
  Combination unit() const override;
  bool has_letter(Gen g) const override;
  Combination letter_element(Gen g) const override;
  std::vector<Word> basis_up_to_degree(int max_degree) const override;

  bool is_hopf() const override { return hopf_; }
  bool has_star() const override { return has_star_; }
  Tensor coproduct_word(const Word& w) const override;
  QScalar counit_word(const Word& w) const override;
  Combination antipode_word(const Word& w) const override;
  Combination star_word(const Word& w) const override;

  /// Product of combinations in this algebra.
  Combination multiply(const Combination& lhs, const Combination& rhs) const;

 private:
  Tensor::Terms coproduct_letter(Gen g) const;
  Combination expand_unit(Combination c) const;

  RewriteSystem system_;
  GeneratorData data_;
  bool hopf_;
  bool has_star_;
  std::optional<Combination> unit_expansion_;
  mutable std::mutex coproduct_mutex_;
  mutable std::unordered_map<Word, Tensor::Terms, WordHash> coproduct_cache_;
};

using RewriteAlgebraPtr = std::shared_ptr<const RewriteAlgebra>;

// Shared instances; construction happens once.
RewriteAlgebraPtr auq2();
RewriteAlgebraPtr adtq();
RewriteAlgebraPtr at2();
RewriteAlgebraPtr az2();
RewriteAlgebraPtr at2q();
/// One generator (a) and no relations.
RewriteAlgebraPtr free_one_generator();

/// Rule sets, exposed for tests and mutation.
std::vector<RewriteRule> auq2_rules();
std::vector<RewriteRule> adtq_rules();
GeneratorData unitary_generator_data();

/// ADTq (or AUq2 when `parent` is true) with rules replaced by left-hand side.
RewriteAlgebraPtr mutated_presentation(const std::string& variant, const std::vector<RewriteRule>& replacements,
                                       bool parent = false);
/// The mutation bc -> Dz - D, which turns bc = q^2 cb into bc = q cb.
RewriteAlgebraPtr adtq_mutant_bc();
RewriteAlgebraPtr auq2_mutant_bc();

struct FiniteQuotient {
  RewriteAlgebraPtr algebra;
  std::vector<Word> basis;
  std::size_t dimension = 0;
  /// Rules produced by completion beyond the ADTq rules and the five relations.
  std::size_t completion_rules = 0;
};

/// True when (-q)^{n^2} = 1 in Q(zeta_M).
bool root_condition_holds(int n, CyclotomicMode mode);
FiniteQuotient build_finite_quotient(int n, std::optional<CyclotomicMode> mode);
/// The five ideal generators a^n - z, b^n - (1-z), c^n - (1-z), d^n - z, D^n - 1.
std::vector<Combination> finite_quotient_relations(int n);

/// Words of the letters of an expression; a^3 -> a a a, D^-2 -> Dinv Dinv.
Word word_of(std::initializer_list<std::pair<Gen, int>> powers);

}  // namespace dtq
