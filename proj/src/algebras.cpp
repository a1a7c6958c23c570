#include "dtq/algebras.hpp"

#include "dtq/error.hpp"

namespace dtq {

namespace {

using G = Gen;

QScalar qp(Exponent k, long c = 1) { return QScalar::q_power(k, Rational(c)); }

RewriteRule rule(Word lhs, std::vector<std::pair<Word, QScalar>> rhs) {
  RewriteRule r{std::move(lhs), {}};
  for (auto& [w, c] : rhs) accumulate(r.rhs, w, c);
  return r;
}

const std::vector<Gen> kUnitaryLetters = {G::Dinv, G::D, G::z, G::a, G::d, G::b, G::c};

}  // namespace

Word word_of(std::initializer_list<std::pair<Gen, int>> powers) {
  Word out;
  for (const auto& [g, k] : powers) {
    Word piece = power_word(g, k);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

std::vector<RewriteRule> auq2_rules() {
  return {
      rule({G::D, G::Dinv}, {{{}, 1}}),
      rule({G::Dinv, G::D}, {{{}, 1}}),
      rule({G::a, G::d}, {{{G::D, G::z}, 1}}),
      rule({G::d, G::a}, {{{G::D, G::z}, 1}}),
      rule({G::b, G::c}, {{{G::D, G::z}, qp(1)}, {{G::D}, qp(1, -1)}}),
      rule({G::c, G::b}, {{{G::D, G::z}, qp(-1)}, {{G::D}, qp(-1, -1)}}),
      rule({G::b, G::a}, {{{G::a, G::b}, qp(1)}}),
      rule({G::c, G::a}, {{{G::a, G::c}, qp(-1)}}),
      rule({G::c, G::d}, {{{G::d, G::c}, qp(-1)}}),
      rule({G::b, G::d}, {{{G::d, G::b}, qp(1)}}),
      rule({G::a, G::D}, {{{G::D, G::a}, 1}}),
      rule({G::d, G::D}, {{{G::D, G::d}, 1}}),
      rule({G::b, G::D}, {{{G::D, G::b}, qp(2)}}),
      rule({G::c, G::D}, {{{G::D, G::c}, qp(-2)}}),
      rule({G::a, G::Dinv}, {{{G::Dinv, G::a}, 1}}),
      rule({G::d, G::Dinv}, {{{G::Dinv, G::d}, 1}}),
      rule({G::b, G::Dinv}, {{{G::Dinv, G::b}, qp(-2)}}),
      rule({G::c, G::Dinv}, {{{G::Dinv, G::c}, qp(2)}}),
      rule({G::z, G::D}, {{{G::D, G::z}, 1}}),
      rule({G::z, G::Dinv}, {{{G::Dinv, G::z}, 1}}),
      rule({G::a, G::z}, {{{G::z, G::a}, 1}}),
      rule({G::d, G::z}, {{{G::z, G::d}, 1}}),
      rule({G::b, G::z}, {{{G::z, G::b}, 1}}),
      rule({G::c, G::z}, {{{G::z, G::c}, 1}}),
  };
}

std::vector<RewriteRule> adtq_rules() {
  std::vector<RewriteRule> rules = auq2_rules();
  std::vector<RewriteRule> extra = {
      rule({G::a, G::b}, {}),
      rule({G::a, G::c}, {}),
      rule({G::d, G::b}, {}),
      rule({G::d, G::c}, {}),
      rule({G::z, G::z}, {{{G::z}, 1}}),
      rule({G::z, G::a}, {{{G::a}, 1}}),
      rule({G::z, G::d}, {{{G::d}, 1}}),
      rule({G::z, G::b}, {}),
      rule({G::z, G::c}, {}),
  };
  rules.insert(rules.end(), extra.begin(), extra.end());
  return rules;
}

GeneratorData unitary_generator_data() {
  GeneratorData data;
  auto pair = [](Gen x, Gen y) { return std::make_pair(Word{x}, Word{y}); };
  data.coproduct[G::a] = {{pair(G::a, G::a), 1}, {pair(G::b, G::c), 1}};
  data.coproduct[G::b] = {{pair(G::a, G::b), 1}, {pair(G::b, G::d), 1}};
  data.coproduct[G::c] = {{pair(G::c, G::a), 1}, {pair(G::d, G::c), 1}};
  data.coproduct[G::d] = {{pair(G::c, G::b), 1}, {pair(G::d, G::d), 1}};
  data.coproduct[G::D] = {{pair(G::D, G::D), 1}};
  data.coproduct[G::Dinv] = {{pair(G::Dinv, G::Dinv), 1}};
  data.counit = {{G::a, 1}, {G::d, 1}, {G::b, 0}, {G::c, 0}, {G::D, 1}, {G::Dinv, 1}};
  // Solutions of the antipode equations within the ansatz +-q^s g' D^-1
  // (see find_antipode_on_generators); frozen here.
  data.antipode[G::a] = {{{G::Dinv, G::d}, 1}};
  data.antipode[G::d] = {{{G::Dinv, G::a}, 1}};
  data.antipode[G::b] = {{{G::Dinv, G::b}, qp(-1, -1)}};
  data.antipode[G::c] = {{{G::Dinv, G::c}, qp(1, -1)}};
  data.antipode[G::D] = {{{G::Dinv}, 1}};
  data.antipode[G::Dinv] = {{{G::D}, 1}};
  // a* = S(a), b* = S(c), c* = S(b), d* = S(d).
  data.star[G::a] = data.antipode[G::a];
  data.star[G::d] = data.antipode[G::d];
  data.star[G::b] = data.antipode[G::c];
  data.star[G::c] = data.antipode[G::b];
  data.star[G::D] = {{{G::Dinv}, 1}};
  data.star[G::Dinv] = {{{G::D}, 1}};
  data.composite[G::z] = {G::Dinv, G::a, G::d};
  return data;
}

RewriteAlgebra::RewriteAlgebra(AlgebraId id, RewriteSystem system, GeneratorData data, bool hopf, bool star,
                               std::optional<Combination> unit_expansion)
    : Algebra(std::move(id), system.ring()), system_(std::move(system)), data_(std::move(data)), hopf_(hopf),
      has_star_(star), unit_expansion_(std::move(unit_expansion)) {}

Combination RewriteAlgebra::expand_unit(Combination c) const {
  if (!unit_expansion_) return c;
  auto it = c.find(Word{});
  if (it == c.end()) return c;
  QScalar coefficient = it->second;
  c.erase(it);
  for (const auto& [w, k] : *unit_expansion_) accumulate(c, w, coefficient * k);
  return c;
}

Combination RewriteAlgebra::normalize(const Word& w) const { return expand_unit(system_.normalize(w)); }

Combination RewriteAlgebra::multiply_words(const Word& lhs, const Word& rhs) const {
  return normalize(concat(lhs, rhs));
}

Combination RewriteAlgebra::multiply(const Combination& lhs, const Combination& rhs) const {
  Combination out;
  for (const auto& [wl, cl] : lhs)
    for (const auto& [wr, cr] : rhs)
      for (const auto& [w, c] : multiply_words(wl, wr)) accumulate(out, w, scalars().reduce(cl * cr * c));
  return out;
}

Combination RewriteAlgebra::unit() const {
  if (unit_expansion_) return *unit_expansion_;
  return Algebra::unit();
}

bool RewriteAlgebra::has_letter(Gen g) const {
  for (Gen x : system_.alphabet())
    if (x == g) return true;
  return false;
}

Combination RewriteAlgebra::letter_element(Gen g) const {
  if (!has_letter(g)) {
    throw Error(ErrorKind::UnknownGenerator, std::string(gen_name(g)) + " is not a generator of " + name());
  }
  return normalize(Word{g});
}

std::vector<Word> RewriteAlgebra::basis_up_to_degree(int max_degree) const {
  std::vector<Word> words = system_.irreducible_words(max_degree);
  if (unit_expansion_) std::erase(words, Word{});
  return words;
}

Tensor::Terms RewriteAlgebra::coproduct_letter(Gen g) const {
  const GeneratorData& data = data_;
  if (auto it = data.composite.find(g); it != data.composite.end()) {
    return coproduct_word(it->second).terms();
  }
  auto it = data.coproduct.find(g);
  if (it == data.coproduct.end()) {
    throw Error(ErrorKind::NotAHopfAlgebra, "no coproduct given for " + std::string(gen_name(g)));
  }
  Tensor::Terms out;
  Tensor t({self(), self()});
  for (const auto& [legs, c] : it->second) {
    Combination left = normalize(legs.first);
    Combination right = normalize(legs.second);
    for (const auto& [wl, cl] : left)
      for (const auto& [wr, cr] : right) t.add_term({wl, wr}, c * cl * cr);
  }
  return t.terms();
}

Tensor RewriteAlgebra::coproduct_word(const Word& w) const {
  if (!hopf_) return Algebra::coproduct_word(w);
  std::vector<AlgebraPtr> legs{self(), self()};
  {
    std::lock_guard lock(coproduct_mutex_);
    auto it = coproduct_cache_.find(w);
    if (it != coproduct_cache_.end()) return Tensor(legs, it->second);
  }
  Tensor result = Tensor::one(legs);
  if (!w.empty()) {
    Word prefix(w.begin(), w.end() - 1);
    result = coproduct_word(prefix) * Tensor(legs, coproduct_letter(w.back()));
  }
  std::lock_guard lock(coproduct_mutex_);
  coproduct_cache_.emplace(w, result.terms());
  return result;
}

QScalar RewriteAlgebra::counit_word(const Word& w) const {
  if (!hopf_) return Algebra::counit_word(w);
  QScalar out(1);
  for (Gen g : w) {
    if (auto it = data_.composite.find(g); it != data_.composite.end()) {
      out *= counit_word(it->second);
      continue;
    }
    auto it = data_.counit.find(g);
    if (it == data_.counit.end()) throw Error(ErrorKind::NotAHopfAlgebra, "no counit for a letter");
    out *= it->second;
  }
  return scalars().reduce(out);
}

Combination RewriteAlgebra::antipode_word(const Word& w) const {
  if (!hopf_) return Algebra::antipode_word(w);
  Combination out = unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Combination image;
    if (auto c = data_.composite.find(*it); c != data_.composite.end()) {
      image = antipode_word(c->second);
    } else {
      auto s = data_.antipode.find(*it);
      if (s == data_.antipode.end()) throw Error(ErrorKind::NotAHopfAlgebra, "no antipode for a letter");
      image = expand_unit(system_.normalize(s->second));
    }
    out = multiply(out, image);
  }
  return out;
}

Combination RewriteAlgebra::star_word(const Word& w) const {
  if (!has_star_) return Algebra::star_word(w);
  Combination out = unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Combination image;
    if (auto c = data_.composite.find(*it); c != data_.composite.end()) {
      image = star_word(c->second);
    } else {
      auto s = data_.star.find(*it);
      if (s == data_.star.end()) throw Error(ErrorKind::NotAHopfAlgebra, "no involution for a letter");
      image = expand_unit(system_.normalize(s->second));
    }
    out = multiply(out, image);
  }
  return out;
}

namespace {

RewriteAlgebraPtr make_unitary(AlgebraId id, std::vector<RewriteRule> rules, ScalarRing ring) {
  RewriteSystem system(kUnitaryLetters, std::move(rules), std::move(ring));
  return std::make_shared<RewriteAlgebra>(std::move(id), std::move(system), unitary_generator_data(), true, true);
}

GeneratorData group_data(const std::vector<std::pair<Gen, Gen>>& inverse_pairs) {
  GeneratorData data;
  for (auto [g, h] : inverse_pairs) {
    for (auto [x, y] : {std::pair{g, h}, std::pair{h, g}}) {
      data.coproduct[x] = {{{Word{x}, Word{x}}, 1}};
      data.counit[x] = 1;
      data.antipode[x] = {{{y}, 1}};
      data.star[x] = {{{y}, 1}};
    }
  }
  return data;
}

}  // namespace

RewriteAlgebraPtr auq2() {
  static const RewriteAlgebraPtr instance = make_unitary({AlgebraTag::AUq2}, auq2_rules(), ScalarRing::symbolic());
  return instance;
}

RewriteAlgebraPtr adtq() {
  static const RewriteAlgebraPtr instance = make_unitary({AlgebraTag::ADTq}, adtq_rules(), ScalarRing::symbolic());
  return instance;
}

RewriteAlgebraPtr at2() {
  static const RewriteAlgebraPtr instance = [] {
    std::vector<RewriteRule> rules = {
        rule({G::u, G::uinv}, {{{}, 1}}),        rule({G::uinv, G::u}, {{{}, 1}}),
        rule({G::v, G::vinv}, {{{}, 1}}),        rule({G::vinv, G::v}, {{{}, 1}}),
        rule({G::v, G::u}, {{{G::u, G::v}, 1}}), rule({G::v, G::uinv}, {{{G::uinv, G::v}, 1}}),
        rule({G::vinv, G::u}, {{{G::u, G::vinv}, 1}}),
        rule({G::vinv, G::uinv}, {{{G::uinv, G::vinv}, 1}}),
    };
    RewriteSystem system({G::uinv, G::u, G::vinv, G::v}, std::move(rules), ScalarRing::symbolic());
    return std::make_shared<RewriteAlgebra>(AlgebraId{AlgebraTag::AT2}, std::move(system),
                                            group_data({{G::u, G::uinv}, {G::v, G::vinv}}), true, true);
  }();
  return instance;
}

RewriteAlgebraPtr az2() {
  static const RewriteAlgebraPtr instance = [] {
    std::vector<RewriteRule> rules = {
        rule({G::d0, G::d0}, {{{G::d0}, 1}}),
        rule({G::d1, G::d1}, {{{G::d1}, 1}}),
        rule({G::d0, G::d1}, {}),
        rule({G::d1, G::d0}, {}),
    };
    RewriteSystem system({G::d0, G::d1}, std::move(rules), ScalarRing::symbolic());
    GeneratorData data;
    data.coproduct[G::d0] = {{{Word{G::d0}, Word{G::d0}}, 1}, {{Word{G::d1}, Word{G::d1}}, 1}};
    data.coproduct[G::d1] = {{{Word{G::d0}, Word{G::d1}}, 1}, {{Word{G::d1}, Word{G::d0}}, 1}};
    data.counit = {{G::d0, 1}, {G::d1, 0}};
    data.antipode[G::d0] = {{{G::d0}, 1}};
    data.antipode[G::d1] = {{{G::d1}, 1}};
    data.star = data.antipode;
    Combination unit{{{G::d0}, 1}, {{G::d1}, 1}};
    return std::make_shared<RewriteAlgebra>(AlgebraId{AlgebraTag::AZ2}, std::move(system), std::move(data), true, true,
                                            std::move(unit));
  }();
  return instance;
}

RewriteAlgebraPtr at2q() {
  static const RewriteAlgebraPtr instance = [] {
    // xy = q yx
    std::vector<RewriteRule> rules = {
        rule({G::x, G::xinv}, {{{}, 1}}),
        rule({G::xinv, G::x}, {{{}, 1}}),
        rule({G::y, G::yinv}, {{{}, 1}}),
        rule({G::yinv, G::y}, {{{}, 1}}),
        rule({G::y, G::x}, {{{G::x, G::y}, qp(-1)}}),
        rule({G::y, G::xinv}, {{{G::xinv, G::y}, qp(1)}}),
        rule({G::yinv, G::x}, {{{G::x, G::yinv}, qp(1)}}),
        rule({G::yinv, G::xinv}, {{{G::xinv, G::yinv}, qp(-1)}}),
    };
    RewriteSystem system({G::xinv, G::x, G::yinv, G::y}, std::move(rules), ScalarRing::symbolic());
    // Only the involution; A(T^2_q) is a comodule algebra, not a Hopf algebra here.
    GeneratorData data;
    data.star[G::x] = {{{G::xinv}, 1}};
    data.star[G::xinv] = {{{G::x}, 1}};
    data.star[G::y] = {{{G::yinv}, 1}};
    data.star[G::yinv] = {{{G::y}, 1}};
    return std::make_shared<RewriteAlgebra>(AlgebraId{AlgebraTag::AT2q}, std::move(system), std::move(data), false,
                                            true);
  }();
  return instance;
}

RewriteAlgebraPtr free_one_generator() {
  static const RewriteAlgebraPtr instance = std::make_shared<RewriteAlgebra>(
      AlgebraId{AlgebraTag::Free}, RewriteSystem({G::a}, {}, ScalarRing::symbolic()), GeneratorData{}, false, false);
  return instance;
}

RewriteAlgebraPtr mutated_presentation(const std::string& variant, const std::vector<RewriteRule>& replacements,
                                       bool parent) {
  std::vector<RewriteRule> rules = parent ? auq2_rules() : adtq_rules();
  for (const auto& r : replacements) {
    bool found = false;
    for (auto& existing : rules) {
      if (existing.lhs == r.lhs) {
        existing = r;
        found = true;
      }
    }
    if (!found) rules.push_back(r);
  }
  AlgebraId id{parent ? AlgebraTag::AUq2 : AlgebraTag::ADTq};
  id.variant = variant;
  return make_unitary(std::move(id), std::move(rules), ScalarRing::symbolic());
}

RewriteAlgebraPtr adtq_mutant_bc() {
  static const RewriteAlgebraPtr instance = mutated_presentation(
      "bc->Dz-D", {rule({G::b, G::c}, {{{G::D, G::z}, 1}, {{G::D}, -1}})});
  return instance;
}

RewriteAlgebraPtr auq2_mutant_bc() {
  static const RewriteAlgebraPtr instance = mutated_presentation(
      "bc->Dz-D", {rule({G::b, G::c}, {{{G::D, G::z}, 1}, {{G::D}, -1}})}, true);
  return instance;
}

bool root_condition_holds(int n, CyclotomicMode mode) {
  ScalarRing ring = ScalarRing::root_of_unity(mode);
  Exponent e = static_cast<Exponent>(n) * n;
  QScalar value = QScalar::q_power(e, Rational(e % 2 == 0 ? 1 : -1));
  return ring.reduce(value) == QScalar(1);
}

std::vector<Combination> finite_quotient_relations(int n) {
  auto power = [n](Gen g) { return Word(static_cast<std::size_t>(n), g); };
  std::vector<Combination> out;
  out.push_back({{power(G::a), 1}, {{G::z}, -1}});
  out.push_back({{power(G::b), 1}, {{}, -1}, {{G::z}, 1}});
  out.push_back({{power(G::c), 1}, {{}, -1}, {{G::z}, 1}});
  out.push_back({{power(G::d), 1}, {{G::z}, -1}});
  out.push_back({{power(G::D), 1}, {{}, -1}});
  return out;
}

FiniteQuotient build_finite_quotient(int n, std::optional<CyclotomicMode> mode) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be positive");
  if (!mode) throw Error(ErrorKind::RootConditionViolated, "(-q)^{n^2} = 1 cannot hold for symbolic q");
  if (!root_condition_holds(n, *mode)) {
    throw Error(ErrorKind::RootConditionViolated,
                "(-q)^" + std::to_string(n * n) + " != 1 at order " + std::to_string(mode->order));
  }
  ScalarRing ring = ScalarRing::root_of_unity(*mode);
  RewriteSystem base(kUnitaryLetters, adtq_rules(), ring);
  RewriteSystem completed = base.complete(finite_quotient_relations(n));
  AlgebraId id{AlgebraTag::FdQuot, n, *mode, ""};
  std::size_t extra = completed.rules().size();
  auto alg = std::make_shared<RewriteAlgebra>(id, std::move(completed), unitary_generator_data(), true, true);
  FiniteQuotient out;
  out.algebra = alg;
  out.completion_rules = extra;
  std::size_t previous = 0;
  for (int len = 0; len <= 64; ++len) {
    auto words = alg->system().irreducible_words(len);
    if (len > 0 && words.size() == previous) {
      out.basis = std::move(words);
      out.dimension = out.basis.size();
      return out;
    }
    previous = words.size();
  }
  throw Error(ErrorKind::CompletionFailed, "quotient does not look finite-dimensional");
}

}  // namespace dtq
