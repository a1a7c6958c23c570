#pragma once

// Value types shared by every module: algebra handles, elements and tensors.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtq/scalar.hpp"
#include "dtq/word.hpp"

namespace dtq {

/// Finite linear combination of normal monomials; the raw payload of Element.
using Combination = std::map<Word, QScalar>;

void accumulate(Combination& into, const Word& w, const QScalar& coefficient);

enum class AlgebraTag { AUq2, ADTq, AT2, AZ2, AT2q, Bicross, FdQuot, Free };

struct AlgebraId {
  AlgebraTag tag = AlgebraTag::Free;
  /// Exponent n of the finite quotient (FdQuot only).
  int n = 0;
  std::optional<CyclotomicMode> mode;
  /// Non-empty for deliberately altered presentations used in mutation tests.
  std::string variant;

  std::string name() const;
};

class Algebra;
class Element;
class Tensor;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A named algebra together with whatever structure maps it carries.
///
/// Monomials are always words: for presented algebras they are the irreducible
/// words of a confluent rewrite system; for the crossed product they are the
/// labels d_i u^k v^l. Multiplication of two monomials is the only primitive;
/// everything else is linear extension.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  Algebra(AlgebraId id, ScalarRing ring) : id_(std::move(id)), ring_(std::move(ring)) {}
  virtual ~Algebra() = default;
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const AlgebraId& id() const noexcept { return id_; }
  std::string name() const { return id_.name(); }
  const ScalarRing& scalars() const noexcept { return ring_; }
  AlgebraPtr self() const { return shared_from_this(); }

  virtual Combination multiply_words(const Word& lhs, const Word& rhs) const = 0;
  virtual Combination unit() const { return Combination{{Word{}, QScalar(1)}}; }
  virtual bool has_letter(Gen g) const = 0;
  /// The element a single letter of the input grammar denotes.
  virtual Combination letter_element(Gen g) const = 0;
  virtual std::vector<Word> basis_up_to_degree(int max_degree) const = 0;
  virtual int degree(const Word& w) const { return static_cast<int>(w.size()); }
  virtual std::string format_monomial(const Word& w) const { return format_word(w); }

  virtual bool is_hopf() const { return false; }
  virtual bool has_star() const { return false; }
  virtual Tensor coproduct_word(const Word& w) const;
  virtual QScalar counit_word(const Word& w) const;
  virtual Combination antipode_word(const Word& w) const;
  virtual Combination star_word(const Word& w) const;

 private:
  AlgebraId id_;
  ScalarRing ring_;
};

/// Element of a specific algebra; arithmetic across algebras is rejected.
class Element {
 public:
  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  Element(AlgebraPtr algebra, Combination terms);

  static Element scalar(AlgebraPtr algebra, const QScalar& s);
  static Element one(AlgebraPtr algebra) { return scalar(std::move(algebra), QScalar(1)); }
  /// Product of letters, evaluated in the algebra.
  static Element from_word(AlgebraPtr algebra, const Word& letters);
  /// A single normal monomial (no normalisation performed).
  static Element monomial(AlgebraPtr algebra, const Word& normal_word, const QScalar& c = QScalar(1));

  const Algebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Combination& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  QScalar coefficient(const Word& w) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(const Element& lhs, const Element& rhs);
  friend Element operator*(const QScalar& s, const Element& e);
  Element operator-() const;
  Element pow(int exponent) const;

  /// Throws CrossAlgebraMix when the algebras differ.
  friend bool operator==(const Element& lhs, const Element& rhs);
  friend bool operator!=(const Element& lhs, const Element& rhs) { return !(lhs == rhs); }

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  Combination terms_;
};

void require_same_algebra(const Algebra& lhs, const Algebra& rhs);

/// Element of A_1 (x) ... (x) A_r, r = 2 or 3 in practice.
class Tensor {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, QScalar>;

  explicit Tensor(std::vector<AlgebraPtr> legs) : legs_(std::move(legs)) {}
  Tensor(std::vector<AlgebraPtr> legs, Terms terms);

  /// e_1 (x) e_2 (x) ...
  static Tensor pure(const std::vector<Element>& factors);
  static Tensor one(std::vector<AlgebraPtr> legs);

  std::size_t rank() const noexcept { return legs_.size(); }
  const std::vector<AlgebraPtr>& legs() const noexcept { return legs_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Key& key, const QScalar& c);
  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
  friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
  friend Tensor operator*(const Tensor& lhs, const Tensor& rhs);
  friend Tensor operator*(const QScalar& s, const Tensor& t);

  friend bool operator==(const Tensor& lhs, const Tensor& rhs);
  friend bool operator!=(const Tensor& lhs, const Tensor& rhs) { return !(lhs == rhs); }

  std::string to_string() const;

 private:
  void check_compatible(const Tensor& other) const;

  std::vector<AlgebraPtr> legs_;
  Terms terms_;
};

// Linear extensions of the structure maps.
Tensor coproduct(const Element& e);
QScalar counit(const Element& e);
Element antipode(const Element& e);
Element star_element(const Element& e);

/// Apply a linear map on one leg of a tensor, producing a tensor whose leg is
/// replaced by the map's target algebra.
Tensor map_leg(const Tensor& t, std::size_t leg, const AlgebraPtr& target,
               const std::function<Element(const Word&)>& f);
/// Contract one leg to scalars with a linear functional.
Tensor contract_leg(const Tensor& t, std::size_t leg, const std::function<QScalar(const Word&)>& f);
/// Multiply all legs together (legs must share the algebra).
Element multiply_legs(const Tensor& t);
/// Replace leg `leg` by its coproduct, raising the rank by one.
Tensor coproduct_on_leg(const Tensor& t, std::size_t leg);
/// * applied on every leg, coefficients conjugated.
Tensor star_tensor(const Tensor& t);
/// Rank-1 tensor to the element it represents.
Element as_element(const Tensor& t);

std::string format_coefficient_term(const QScalar& c, const std::string& monomial);

}  // namespace dtq
