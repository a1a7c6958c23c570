#include "dtq/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "dtq/error.hpp"

namespace dtq {

void accumulate(Combination& into, const Word& w, const QScalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = into.try_emplace(w, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) into.erase(it);
}

namespace {

void accumulate_key(Tensor::Terms& into, const Tensor::Key& key, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

Combination reduced(const Algebra& alg, Combination terms) {
  if (alg.scalars().is_symbolic()) return terms;
  Combination out;
  for (auto& [w, c] : terms) accumulate(out, w, alg.scalars().reduce(c));
  return out;
}

}  // namespace

std::string AlgebraId::name() const {
  std::string base;
  switch (tag) {
    case AlgebraTag::AUq2: base = "AUq2"; break;
    case AlgebraTag::ADTq: base = "ADTq"; break;
    case AlgebraTag::AT2: base = "AT2"; break;
    case AlgebraTag::AZ2: base = "AZ2"; break;
    case AlgebraTag::AT2q: base = "AT2q"; break;
    case AlgebraTag::Bicross: base = "BICROSS"; break;
    case AlgebraTag::Free: base = "FREE"; break;
    case AlgebraTag::FdQuot:
      base = "FDQUOT(n=" + std::to_string(n) + ",order=" + std::to_string(mode ? mode->order : 0) + ")";
      break;
  }
  if (!variant.empty()) base += "[" + variant + "]";
  return base;
}

Tensor Algebra::coproduct_word(const Word&) const {
  throw Error(ErrorKind::NotAHopfAlgebra, name() + " carries no coproduct");
}

QScalar Algebra::counit_word(const Word&) const {
  throw Error(ErrorKind::NotAHopfAlgebra, name() + " carries no counit");
}

Combination Algebra::antipode_word(const Word&) const {
  throw Error(ErrorKind::NotAHopfAlgebra, name() + " carries no antipode");
}

Combination Algebra::star_word(const Word&) const {
  throw Error(ErrorKind::NotAHopfAlgebra, name() + " carries no involution");
}

void require_same_algebra(const Algebra& lhs, const Algebra& rhs) {
  if (&lhs == &rhs) return;
  if (lhs.name() != rhs.name()) {
    throw Error(ErrorKind::CrossAlgebraMix, "cannot combine " + lhs.name() + " with " + rhs.name());
  }
}

Element::Element(AlgebraPtr algebra, Combination terms) : algebra_(std::move(algebra)) {
  for (auto& [w, c] : terms) accumulate(terms_, w, c);
  terms_ = reduced(*algebra_, std::move(terms_));
}

Element Element::scalar(AlgebraPtr algebra, const QScalar& s) {
  Element out(algebra);
  for (auto& [w, c] : algebra->unit()) accumulate(out.terms_, w, c * s);
  out.terms_ = reduced(*algebra, std::move(out.terms_));
  return out;
}

Element Element::from_word(AlgebraPtr algebra, const Word& letters) {
  Element out = one(algebra);
  for (Gen g : letters) {
    if (!algebra->has_letter(g)) {
      throw Error(ErrorKind::UnknownGenerator,
                  std::string(gen_name(g)) + " is not a generator of " + algebra->name());
    }
    out = out * Element(algebra, algebra->letter_element(g));
  }
  return out;
}

Element Element::monomial(AlgebraPtr algebra, const Word& normal_word, const QScalar& c) {
  Element out(std::move(algebra));
  accumulate(out.terms_, normal_word, c);
  out.terms_ = reduced(*out.algebra_, std::move(out.terms_));
  return out;
}

QScalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(*algebra_, *other.algebra_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  terms_ = reduced(*algebra_, std::move(terms_));
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(*algebra_, *other.algebra_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, -c);
  terms_ = reduced(*algebra_, std::move(terms_));
  return *this;
}

Element operator*(const Element& lhs, const Element& rhs) {
  require_same_algebra(*lhs.algebra_, *rhs.algebra_);
  Combination out;
  for (const auto& [wl, cl] : lhs.terms_) {
    for (const auto& [wr, cr] : rhs.terms_) {
      QScalar coefficient = cl * cr;
      for (const auto& [w, c] : lhs.algebra_->multiply_words(wl, wr)) accumulate(out, w, coefficient * c);
    }
  }
  return Element(lhs.algebra_, std::move(out));
}

Element operator*(const QScalar& s, const Element& e) {
  Combination out;
  for (const auto& [w, c] : e.terms_) accumulate(out, w, s * c);
  return Element(e.algebra_, std::move(out));
}

Element Element::operator-() const { return QScalar(-1) * *this; }

Element Element::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorKind::NegativePower, "element powers must be non-negative");
  Element out = one(algebra_);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

bool operator==(const Element& lhs, const Element& rhs) {
  require_same_algebra(*lhs.algebra_, *rhs.algebra_);
  return lhs.terms_ == rhs.terms_;
}

std::string format_coefficient_term(const QScalar& c, const std::string& monomial) {
  bool unit_monomial = monomial == "1";
  if (c.is_one()) return monomial;
  if (c == QScalar(-1)) return "-" + monomial;
  std::string scalar = c.to_string();
  bool compound = c.terms().size() > 1;
  if (compound) scalar = "(" + scalar + ")";
  if (unit_monomial) return scalar;
  return scalar + "*" + monomial;
}

namespace {

// Join signed pieces "x", "-y" into "x - y".
std::string join_terms(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (const auto& piece : pieces) {
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace

std::string Element::to_string() const {
  std::vector<std::pair<Word, QScalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
  std::vector<std::string> pieces;
  for (const auto& [w, c] : sorted) pieces.push_back(format_coefficient_term(c, algebra_->format_monomial(w)));
  return join_terms(pieces);
}

Tensor::Tensor(std::vector<AlgebraPtr> legs, Terms terms) : legs_(std::move(legs)) {
  for (auto& [k, c] : terms) add_term(k, c);
}

Tensor Tensor::pure(const std::vector<Element>& factors) {
  std::vector<AlgebraPtr> legs;
  for (const auto& f : factors) legs.push_back(f.algebra_ptr());
  Tensor out(legs);
  Terms current{{Key{}, QScalar(1)}};
  for (const auto& f : factors) {
    Terms next;
    for (const auto& [key, c] : current) {
      for (const auto& [w, cw] : f.terms()) {
        Key k = key;
        k.push_back(w);
        accumulate_key(next, k, c * cw);
      }
    }
    current = std::move(next);
  }
  for (auto& [k, c] : current) out.add_term(k, c);
  return out;
}

Tensor Tensor::one(std::vector<AlgebraPtr> legs) {
  std::vector<Element> factors;
  for (auto& l : legs) factors.push_back(Element::one(l));
  if (factors.empty()) return Tensor({}, Terms{{Key{}, QScalar(1)}});
  return pure(factors);
}

void Tensor::add_term(const Key& key, const QScalar& c) {
  QScalar value = c;
  // All legs of one tensor share a scalar ring in practice; reduce with the first.
  if (!legs_.empty() && !legs_[0]->scalars().is_symbolic()) value = legs_[0]->scalars().reduce(c);
  accumulate_key(terms_, key, value);
}

void Tensor::check_compatible(const Tensor& other) const {
  if (legs_.size() != other.legs_.size()) {
    throw Error(ErrorKind::CrossAlgebraMix, "tensor ranks differ");
  }
  for (std::size_t i = 0; i < legs_.size(); ++i) require_same_algebra(*legs_[i], *other.legs_[i]);
}

Tensor& Tensor::operator+=(const Tensor& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

Tensor operator*(const Tensor& lhs, const Tensor& rhs) {
  lhs.check_compatible(rhs);
  Tensor out(lhs.legs_);
  for (const auto& [kl, cl] : lhs.terms_) {
    for (const auto& [kr, cr] : rhs.terms_) {
      Tensor::Terms partial{{Tensor::Key{}, cl * cr}};
      for (std::size_t leg = 0; leg < lhs.legs_.size(); ++leg) {
        Combination product = lhs.legs_[leg]->multiply_words(kl[leg], kr[leg]);
        Tensor::Terms next;
        for (const auto& [key, c] : partial) {
          for (const auto& [w, cw] : product) {
            Tensor::Key k = key;
            k.push_back(w);
            accumulate_key(next, k, c * cw);
          }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (const auto& [k, c] : partial) out.add_term(k, c);
    }
  }
  return out;
}

Tensor operator*(const QScalar& s, const Tensor& t) {
  Tensor out(t.legs_);
  for (const auto& [k, c] : t.terms_) out.add_term(k, s * c);
  return out;
}

bool operator==(const Tensor& lhs, const Tensor& rhs) {
  lhs.check_compatible(rhs);
  return lhs.terms_ == rhs.terms_;
}

std::string Tensor::to_string() const {
  std::vector<std::string> pieces;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mon;
    for (std::size_t leg = 0; leg < legs_.size(); ++leg) {
      if (leg) mon += " (x) ";
      mon += legs_[leg]->format_monomial(it->first[leg]);
    }
    if (legs_.empty()) mon = "1";
    pieces.push_back(format_coefficient_term(it->second, mon));
  }
  return join_terms(pieces);
}

Tensor coproduct(const Element& e) {
  const Algebra& alg = e.algebra();
  Tensor out({e.algebra_ptr(), e.algebra_ptr()});
  for (const auto& [w, c] : e.terms()) out += c * alg.coproduct_word(w);
  return out;
}

QScalar counit(const Element& e) {
  QScalar out;
  for (const auto& [w, c] : e.terms()) out += c * e.algebra().counit_word(w);
  return e.algebra().scalars().reduce(out);
}

Element antipode(const Element& e) {
  Combination out;
  for (const auto& [w, c] : e.terms())
    for (const auto& [w2, c2] : e.algebra().antipode_word(w)) accumulate(out, w2, c * c2);
  return Element(e.algebra_ptr(), std::move(out));
}

Element star_element(const Element& e) {
  Combination out;
  for (const auto& [w, c] : e.terms()) {
    QScalar conj = star_scalar(c);
    for (const auto& [w2, c2] : e.algebra().star_word(w)) accumulate(out, w2, conj * c2);
  }
  return Element(e.algebra_ptr(), std::move(out));
}

Tensor map_leg(const Tensor& t, std::size_t leg, const AlgebraPtr& target,
               const std::function<Element(const Word&)>& f) {
  std::vector<AlgebraPtr> legs = t.legs();
  legs.at(leg) = target;
  Tensor out(legs);
  for (const auto& [key, c] : t.terms()) {
    Element image = f(key[leg]);
    require_same_algebra(image.algebra(), *target);
    for (const auto& [w, cw] : image.terms()) {
      Tensor::Key k = key;
      k[leg] = w;
      out.add_term(k, c * cw);
    }
  }
  return out;
}

Tensor contract_leg(const Tensor& t, std::size_t leg, const std::function<QScalar(const Word&)>& f) {
  std::vector<AlgebraPtr> legs = t.legs();
  legs.erase(legs.begin() + static_cast<std::ptrdiff_t>(leg));
  Tensor out(legs);
  for (const auto& [key, c] : t.terms()) {
    QScalar value = f(key[leg]);
    if (value.is_zero()) continue;
    Tensor::Key k = key;
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(leg));
    out.add_term(k, c * value);
  }
  return out;
}

Element multiply_legs(const Tensor& t) {
  if (t.legs().empty()) throw Error(ErrorKind::InvalidParams, "cannot multiply legs of a scalar tensor");
  const AlgebraPtr& alg = t.legs()[0];
  for (const auto& l : t.legs()) require_same_algebra(*l, *alg);
  Element out(alg);
  for (const auto& [key, c] : t.terms()) {
    Element product = Element::monomial(alg, key[0], c);
    for (std::size_t i = 1; i < key.size(); ++i) product = product * Element::monomial(alg, key[i]);
    out += product;
  }
  return out;
}

Element as_element(const Tensor& t) {
  if (t.rank() != 1) throw Error(ErrorKind::InvalidParams, "tensor is not rank one");
  Combination terms;
  for (const auto& [key, c] : t.terms()) accumulate(terms, key[0], c);
  return Element(t.legs()[0], std::move(terms));
}

Tensor coproduct_on_leg(const Tensor& t, std::size_t leg) {
  std::vector<AlgebraPtr> legs = t.legs();
  legs.insert(legs.begin() + static_cast<std::ptrdiff_t>(leg), legs[leg]);
  Tensor out(legs);
  for (const auto& [key, c] : t.terms()) {
    Tensor delta = t.legs()[leg]->coproduct_word(key[leg]);
    for (const auto& [dk, dc] : delta.terms()) {
      Tensor::Key k = key;
      k[leg] = dk[1];
      k.insert(k.begin() + static_cast<std::ptrdiff_t>(leg), dk[0]);
      out.add_term(k, c * dc);
    }
  }
  return out;
}

Tensor star_tensor(const Tensor& t) {
  Tensor out(t.legs());
  for (const auto& [key, c] : t.terms()) {
    Tensor::Terms partial{{Tensor::Key{}, star_scalar(c)}};
    for (std::size_t leg = 0; leg < key.size(); ++leg) {
      Tensor::Terms next;
      for (const auto& [pk, pc] : partial) {
        for (const auto& [w, wc] : t.legs()[leg]->star_word(key[leg])) {
          Tensor::Key k = pk;
          k.push_back(w);
          next[k] += pc * wc;
        }
      }
      partial = std::move(next);
    }
    for (const auto& [k, v] : partial) out.add_term(k, v);
  }
  return out;
}

}  // namespace dtq
