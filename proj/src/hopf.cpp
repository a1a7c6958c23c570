#include "dtq/hopf.hpp"

#include <Eigen/Eigenvalues>
#include <mutex>

#include "dtq/error.hpp"
#include "dtq/expression.hpp"
#include <set>

namespace dtq {

LinearMapTable::LinearMapTable(std::string name, AlgebraPtr source, AlgebraPtr target, Rule fallback)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), fallback_(std::move(fallback)) {}

void LinearMapTable::set(const Word& w, Element image) {
  require_same_algebra(image.algebra(), *target_);
  table_.insert_or_assign(w, std::move(image));
}

Element LinearMapTable::on_basis(const Word& w) const {
  if (auto it = table_.find(w); it != table_.end()) return it->second;
  if (fallback_) return fallback_(w);
  throw Error(ErrorKind::WindowExceeded, name_ + " is not tabulated on " + source_->format_monomial(w));
}

Element LinearMapTable::operator()(const Element& e) const {
  require_same_algebra(e.algebra(), *source_);
  Element out(target_);
  for (const auto& [w, c] : e.terms()) out += c * on_basis(w);
  return out;
}

LinearMapTable convolve(const LinearMapTable& f, const LinearMapTable& g) {
  require_same_algebra(*f.source(), *g.source());
  require_same_algebra(*f.target(), *g.target());
  auto rule = [f, g](const Word& w) {
    Tensor delta = f.source()->coproduct_word(w);
    Element out(f.target());
    for (const auto& [key, c] : delta.terms()) out += c * (f.on_basis(key[0]) * g.on_basis(key[1]));
    return out;
  };
  return LinearMapTable("(" + f.name() + "*" + g.name() + ")", f.source(), f.target(), rule);
}

LinearMapTable unit_counit(const AlgebraPtr& source, const AlgebraPtr& target) {
  auto rule = [source, target](const Word& w) { return Element::scalar(target, source->counit_word(w)); };
  return LinearMapTable("1.eps", source, target, rule);
}

namespace {

struct AxiomTally {
  std::mutex mutex;
  std::map<std::string, std::pair<std::size_t, std::string>> failures;  // name -> (count, first witness)
  std::vector<std::string> names;

  void fail(const std::string& name, const std::string& witness) {
    std::lock_guard lock(mutex);
    auto& slot = failures[name];
    if (slot.first++ == 0) slot.second = witness;
  }
};

std::string witness_of(const std::string& label, const std::string& lhs, const std::string& rhs) {
  return label + ": " + lhs + " != " + rhs;
}

}  // namespace

Report verify_hopf_axioms(const AlgebraPtr& algebra, int max_degree, int jobs) {
  Stopwatch clock;
  Report report;
  report.suite = "hopf";
  report.params = {{"algebra", algebra->name()}, {"max_deg", max_degree}};
  if (!algebra->is_hopf()) throw Error(ErrorKind::NotAHopfAlgebra, algebra->name() + " is not a Hopf algebra");
  std::vector<Word> basis = algebra->basis_up_to_degree(max_degree);
  AxiomTally tally;
  const bool involutive = algebra->has_star();
  const AlgebraTag tag = algebra->id().tag;
  const bool commutative_case = tag == AlgebraTag::AT2 || tag == AlgebraTag::AZ2;

  parallel_for(basis.size(), jobs, [&](std::size_t index) {
    const Word& w = basis[index];
    std::string label = algebra->format_monomial(w);
    Element x = Element::monomial(algebra, w);
    Tensor delta = algebra->coproduct_word(w);

    Tensor left = coproduct_on_leg(delta, 0), right = coproduct_on_leg(delta, 1);
    if (left != right) tally.fail("coassociativity", witness_of(label, left.to_string(), right.to_string()));

    auto eps = [&](const Word& v) { return algebra->counit_word(v); };
    Element counit_left = as_element(contract_leg(delta, 0, eps));
    Element counit_right = as_element(contract_leg(delta, 1, eps));
    if (counit_left != x) tally.fail("counit_left", witness_of(label, counit_left.to_string(), x.to_string()));
    if (counit_right != x) tally.fail("counit_right", witness_of(label, counit_right.to_string(), x.to_string()));

    Element expected = Element::scalar(algebra, algebra->counit_word(w));
    auto s = [&](const Word& v) { return Element(algebra, algebra->antipode_word(v)); };
    Element anti_left = multiply_legs(map_leg(delta, 0, algebra, s));
    Element anti_right = multiply_legs(map_leg(delta, 1, algebra, s));
    if (anti_left != expected) tally.fail("antipode_left", witness_of(label, anti_left.to_string(), expected.to_string()));
    if (anti_right != expected) {
      tally.fail("antipode_right", witness_of(label, anti_right.to_string(), expected.to_string()));
    }

    if (involutive) {
      Element xs = star_element(x);
      Tensor delta_star = coproduct(xs);
      Tensor star_delta = star_tensor(delta);
      if (delta_star != star_delta) {
        tally.fail("coproduct_star", witness_of(label, delta_star.to_string(), star_delta.to_string()));
      }
      Element xss = star_element(xs);
      if (xss != x) tally.fail("star_involutive", witness_of(label, xss.to_string(), x.to_string()));
      Element sss = star_element(antipode(star_element(antipode(x))));
      if (sss != x) tally.fail("antipode_star_antipode_star", witness_of(label, sss.to_string(), x.to_string()));
    }
    if (commutative_case) {
      Element s2 = antipode(antipode(x));
      if (s2 != x) tally.fail("antipode_squared", witness_of(label, s2.to_string(), x.to_string()));
    }
  });

  std::vector<std::string> names = {"coassociativity", "counit_left", "counit_right", "antipode_left", "antipode_right"};
  if (involutive) {
    names.insert(names.end(), {"coproduct_star", "star_involutive", "antipode_star_antipode_star"});
  }
  if (commutative_case) names.push_back("antipode_squared");

  // Structure maps are entered on letters; they must respect every relation.
  if (auto rewrite = std::dynamic_pointer_cast<const RewriteAlgebra>(algebra)) {
    names.insert(names.end(), {"relations_coproduct", "relations_counit", "relations_antipode"});
    if (involutive) names.push_back("relations_star");
    for (const RewriteRule& r : rewrite->system().rules()) {
      std::string label = format_rule(r);
      Tensor dl = algebra->coproduct_word(r.lhs);
      Tensor dr({algebra, algebra});
      QScalar el = algebra->counit_word(r.lhs), er;
      Element sl(algebra, algebra->antipode_word(r.lhs)), sr(algebra);
      for (const auto& [w, c] : r.rhs) {
        dr += c * algebra->coproduct_word(w);
        er += c * algebra->counit_word(w);
        sr += c * Element(algebra, algebra->antipode_word(w));
      }
      er = algebra->scalars().reduce(er);
      if (dl != dr) tally.fail("relations_coproduct", witness_of(label, dl.to_string(), dr.to_string()));
      if (el != er) tally.fail("relations_counit", witness_of(label, el.to_string(), er.to_string()));
      if (sl != sr) tally.fail("relations_antipode", witness_of(label, sl.to_string(), sr.to_string()));
      if (involutive) {
        Element tl(algebra, algebra->star_word(r.lhs)), tr(algebra);
        for (const auto& [w, c] : r.rhs) tr += star_scalar(c) * Element(algebra, algebra->star_word(w));
        if (tl != tr) tally.fail("relations_star", witness_of(label, tl.to_string(), tr.to_string()));
      }
    }
  }

  for (const auto& name : names) {
    auto it = tally.failures.find(name);
    if (it == tally.failures.end()) {
      report.add(name, true, {}, std::to_string(basis.size()) + " monomials");
    } else {
      report.add(name, false, it->second.second, std::to_string(it->second.first) + " failures");
    }
  }
  report.extra["window_size"] = basis.size();
  report.duration_ms = clock.elapsed_ms();
  return report;
}

std::vector<std::map<Gen, Element>> find_antipode_on_generators() {
  AlgebraPtr alg = auq2();
  const Gen letters[2][2] = {{Gen::a, Gen::b}, {Gen::c, Gen::d}};
  std::vector<Element> candidates;
  for (Gen g : {Gen::a, Gen::b, Gen::c, Gen::d})
    for (int s = -3; s <= 3; ++s)
      for (int sign : {1, -1})
        candidates.push_back(QScalar::q_power(s, sign) * Element::from_word(alg, {g, Gen::Dinv}));
  auto u = [&](int i, int j) { return Element::from_word(alg, {letters[i][j]}); };
  Element one = Element::one(alg), zero(alg);

  // Left equations decouple by row: sum_k S(u_ik) u_kj = delta_ij.
  std::vector<std::pair<Element, Element>> rows[2];
  for (int i = 0; i < 2; ++i) {
    for (const Element& s0 : candidates) {
      for (const Element& s1 : candidates) {
        bool ok = true;
        for (int j = 0; j < 2 && ok; ++j) ok = s0 * u(0, j) + s1 * u(1, j) == (i == j ? one : zero);
        if (ok) rows[i].emplace_back(s0, s1);
      }
    }
  }
  std::vector<std::map<Gen, Element>> out;
  for (const auto& r0 : rows[0]) {
    for (const auto& r1 : rows[1]) {
      Element S[2][2] = {{r0.first, r0.second}, {r1.first, r1.second}};
      bool ok = true;
      for (int i = 0; i < 2 && ok; ++i)
        for (int j = 0; j < 2 && ok; ++j) ok = u(i, 0) * S[0][j] + u(i, 1) * S[1][j] == (i == j ? one : zero);
      if (ok) out.push_back({{Gen::a, S[0][0]}, {Gen::b, S[0][1]}, {Gen::c, S[1][0]}, {Gen::d, S[1][1]}});
    }
  }
  return out;
}

QScalar haar(const Element& e) {
  if (e.algebra().id().tag != AlgebraTag::ADTq) {
    throw Error(ErrorKind::InvalidParams, "the Haar state is implemented on ADTq only");
  }
  return e.coefficient(Word{}) + QScalar(Rational(1, 2)) * e.coefficient(Word{Gen::z});
}

Rational derive_haar_weight_of_z() {
  AlgebraPtr alg = adtq();
  Tensor delta = alg->coproduct_word({Gen::z});
  auto defect = [&](const Rational& t) {
    auto h = [&](const Word& w) -> QScalar {
      if (w.empty()) return QScalar(1);
      if (w == Word{Gen::z}) return QScalar(t);
      return QScalar();
    };
    return as_element(contract_leg(delta, 1, h)) - Element::scalar(alg, QScalar(t));
  };
  Element e0 = defect(0), e1 = defect(1);
  std::optional<Rational> solution;
  std::set<Word> support;
  for (const auto& [w, c] : e0.terms()) support.insert(w);
  for (const auto& [w, c] : e1.terms()) support.insert(w);
  for (const Word& w : support) {
    auto a = e0.coefficient(w).constant_value();
    auto b1 = e1.coefficient(w).constant_value();
    if (!a || !b1) throw Error(ErrorKind::InvalidParams, "Haar equation is not rational");
    Rational b = *b1 - *a;
    if (b == 0) {
      if (*a != 0) throw Error(ErrorKind::InvalidParams, "Haar equation is inconsistent");
      continue;
    }
    Rational t = -*a / b;
    if (solution && *solution != t) throw Error(ErrorKind::InvalidParams, "Haar equation is inconsistent");
    solution = t;
  }
  if (!solution) throw Error(ErrorKind::InvalidParams, "Haar weight of z is undetermined");
  return *solution;
}

Report verify_haar(int invariance_degree, int gram_degree, double theta) {
  Stopwatch clock;
  Report report;
  report.suite = "haar";
  report.params = {{"algebra", "ADTq"}, {"max_deg", invariance_degree}, {"gram_deg", gram_degree}, {"q_theta", theta}};
  AlgebraPtr alg = adtq();
  Element one = Element::one(alg), z = Element::monomial(alg, {Gen::z});
  report.add("h(1)=1", haar(one) == QScalar(1));
  report.add("h(z)=1/2", haar(z) == QScalar(Rational(1, 2)), {}, "hard-coded weight");
  Rational derived = derive_haar_weight_of_z();
  report.add("h(z)_derived_from_invariance", derived == Rational(1, 2), {}, "t = " + derived.get_str());

  std::string left_witness, right_witness;
  std::size_t left_fail = 0, right_fail = 0;
  auto basis = alg->basis_up_to_degree(invariance_degree);
  auto h = [](const Word& w) { return haar(Element::monomial(adtq(), w)); };
  for (const Word& w : basis) {
    Tensor delta = alg->coproduct_word(w);
    Element expected = Element::scalar(alg, h(w));
    Element l = as_element(contract_leg(delta, 1, h));
    Element r = as_element(contract_leg(delta, 0, h));
    if (l != expected && left_fail++ == 0) left_witness = witness_of(alg->format_monomial(w), l.to_string(), expected.to_string());
    if (r != expected && right_fail++ == 0) right_witness = witness_of(alg->format_monomial(w), r.to_string(), expected.to_string());
  }
  report.add("left_invariance", left_fail == 0, left_witness, std::to_string(basis.size()) + " monomials");
  report.add("right_invariance", right_fail == 0, right_witness, std::to_string(basis.size()) + " monomials");

  auto gram_basis = alg->basis_up_to_degree(gram_degree);
  const auto n = static_cast<Eigen::Index>(gram_basis.size());
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Element pi_star = star_element(Element::monomial(alg, gram_basis[static_cast<std::size_t>(i)]));
    for (Eigen::Index j = 0; j < n; ++j) {
      gram(i, j) = eval_scalar(haar(pi_star * Element::monomial(alg, gram_basis[static_cast<std::size_t>(j)])), theta);
    }
  }
  double hermitian_defect = (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  double min_eigen = solver.eigenvalues().minCoeff();
  report.add("gram_hermitian", hermitian_defect <= 1e-12, {}, "max |G - G^*| = " + std::to_string(hermitian_defect));
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "n = %ld, min eigenvalue = %.3e", static_cast<long>(n), min_eigen);
  report.add("gram_positive_semidefinite", min_eigen >= -1e-9, {}, buffer);
  report.extra["gram_min_eigenvalue"] = min_eigen;
  report.extra["gram_size"] = n;
  report.duration_ms = clock.elapsed_ms();
  return report;
}

namespace {

Element adtq_word(const Word& w) { return Element::from_word(adtq(), w); }

}  // namespace

CorepMatrix corep_chi(int m) { return {"chi(" + std::to_string(m) + ")", {{adtq_word(word_of({{Gen::D, m}}))}}}; }

CorepMatrix corep_chiz(int m) {
  Element dm = adtq_word(word_of({{Gen::D, m}}));
  Element two_z_minus_one = QScalar(2) * adtq_word({Gen::z}) - Element::one(adtq());
  return {"chiz(" + std::to_string(m) + ")", {{dm * two_z_minus_one}}};
}

CorepMatrix corep_w(int m, int n) {
  auto e = [&](Gen g) { return adtq_word(word_of({{Gen::D, m}, {g, n}})); };
  return {"w(" + std::to_string(m) + "," + std::to_string(n) + ")", {{e(Gen::a), e(Gen::b)}, {e(Gen::c), e(Gen::d)}}};
}

CorepMatrix corep_w_transposed(int m, int n) {
  CorepMatrix w = corep_w(m, n);
  std::swap(w.entries[0][1], w.entries[1][0]);
  w.label += "^T";
  return w;
}

CorepMatrix corep_tensor(const CorepMatrix& v, const CorepMatrix& w) {
  CorepMatrix out{v.label + "(x)" + w.label, {}};
  std::size_t dv = v.dim(), dw = w.dim();
  out.entries.assign(dv * dw, std::vector<Element>(dv * dw, Element(adtq())));
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t k = 0; k < dw; ++k)
      for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t l = 0; l < dw; ++l) out.entries[i * dw + k][j * dw + l] = v.entries[i][j] * w.entries[k][l];
  return out;
}

CorepMatrix corep_direct_sum(const CorepMatrix& v, const CorepMatrix& w) {
  CorepMatrix out{v.label + "(+)" + w.label, {}};
  std::size_t n = v.dim() + w.dim();
  out.entries.assign(n, std::vector<Element>(n, Element(adtq())));
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out.entries[i][j] = v.entries[i][j];
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) out.entries[v.dim() + i][v.dim() + j] = w.entries[i][j];
  return out;
}

CorepVerdict verify_corep(const CorepMatrix& w, bool check_unitary) {
  CorepVerdict verdict;
  std::size_t n = w.dim();
  AlgebraPtr alg = w.entries[0][0].algebra_ptr();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Tensor expected({alg, alg});
      for (std::size_t k = 0; k < n; ++k) expected += Tensor::pure({w.entries[i][k], w.entries[k][j]});
      Tensor actual = coproduct(w.entries[i][j]);
      if (actual != expected && verdict.corep) {
        verdict.corep = false;
        verdict.witness = "Delta(" + w.entries[i][j].to_string() + ") = " + actual.to_string() + " but sum_k w_ik (x) w_kj = " + expected.to_string();
      }
      QScalar e = counit(w.entries[i][j]);
      if (e != QScalar(i == j ? 1 : 0) && verdict.counit) {
        verdict.counit = false;
        if (verdict.witness.empty()) verdict.witness = "eps(" + w.entries[i][j].to_string() + ") = " + e.to_string();
      }
    }
  }
  if (check_unitary) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Element row(alg), column(alg);
        for (std::size_t k = 0; k < n; ++k) {
          row += w.entries[i][k] * star_element(w.entries[j][k]);
          column += star_element(w.entries[k][i]) * w.entries[k][j];
        }
        Element expected = i == j ? Element::one(alg) : Element(alg);
        if ((row != expected || column != expected) && verdict.unitary) {
          verdict.unitary = false;
          if (verdict.witness.empty()) {
            verdict.witness = "(w w^*)_" + std::to_string(i) + std::to_string(j) + " = " + row.to_string() +
                              ", (w^* w)_" + std::to_string(i) + std::to_string(j) + " = " + column.to_string();
          }
        }
      }
    }
  }
  return verdict;
}

Element character_of(const CorepMatrix& w) {
  Element out(w.entries[0][0].algebra_ptr());
  for (std::size_t i = 0; i < w.dim(); ++i) out += w.entries[i][i];
  return out;
}

std::vector<CorepMatrix> irrep_candidates(int m_range, int n_max) {
  std::vector<CorepMatrix> out;
  for (int m = -m_range; m <= m_range; ++m) {
    out.push_back(corep_chi(m));
    out.push_back(corep_chiz(m));
  }
  for (int m = -m_range; m <= m_range; ++m)
    for (int n = 1; n <= n_max; ++n) out.push_back(corep_w(m, n));
  return out;
}

std::map<std::string, Rational> decompose_character(const Element& chi, const std::vector<CorepMatrix>& candidates) {
  std::map<std::string, Rational> out;
  Element rebuilt(chi.algebra_ptr());
  for (const auto& lambda : candidates) {
    Element chi_lambda = character_of(lambda);
    QScalar mult = haar(star_element(chi_lambda) * chi);
    auto value = mult.constant_value();
    if (!value) throw Error(ErrorKind::IncompleteWindow, "multiplicity of " + lambda.label + " is " + mult.to_string());
    if (*value == 0) continue;
    out[lambda.label] = *value;
    rebuilt += QScalar(*value) * chi_lambda;
  }
  if (rebuilt != chi) {
    throw Error(ErrorKind::IncompleteWindow,
                "multiplicities rebuild " + rebuilt.to_string() + " instead of " + chi.to_string());
  }
  return out;
}

Intertwiners intertwiner_space(const CorepMatrix& v, const CorepMatrix& w) {
  const AlgebraPtr& alg = v.entries[0][0].algebra_ptr();
  if (!alg->scalars().is_symbolic()) {
    throw Error(ErrorKind::CyclotomicModeUnsupported, "intertwiners need generic q");
  }
  std::size_t dv = v.dim(), dw = w.dim();
  std::size_t unknowns = dw * dv;  // T is dw x dv, index k * dv + j
  ScalarMatrix rows;
  for (std::size_t i = 0; i < dw; ++i) {
    for (std::size_t j = 0; j < dv; ++j) {
      // (w T)_ij - (T v)_ij, as a combination per unknown.
      std::vector<Element> coeffs(unknowns, Element(alg));
      for (std::size_t k = 0; k < dw; ++k) coeffs[k * dv + j] += w.entries[i][k];
      for (std::size_t k = 0; k < dv; ++k) coeffs[i * dv + k] -= v.entries[k][j];
      std::set<Word> monomials;
      for (const auto& e : coeffs)
        for (const auto& [m, c] : e.terms()) monomials.insert(m);
      for (const Word& m : monomials) {
        std::vector<QScalar> row(unknowns);
        for (std::size_t u = 0; u < unknowns; ++u) row[u] = coeffs[u].coefficient(m);
        rows.push_back(std::move(row));
      }
    }
  }
  Nullspace ns = nullspace(rows, unknowns);
  Intertwiners out;
  out.dimension = ns.basis.size();
  for (const auto& vec : ns.basis) {
    std::vector<std::vector<QScalar>> t(dw, std::vector<QScalar>(dv));
    for (std::size_t k = 0; k < dw; ++k)
      for (std::size_t j = 0; j < dv; ++j) t[k][j] = vec[k * dv + j];
    out.basis.push_back(std::move(t));
  }
  if (out.dimension == 1 && dv == dw) {
    const auto& t = out.basis[0];
    bool ok = !t[0][0].is_zero();
    for (std::size_t k = 0; k < dw && ok; ++k)
      for (std::size_t j = 0; j < dv && ok; ++j) ok = k == j ? t[k][j] == t[0][0] : t[k][j].is_zero();
    out.proportional_to_identity = ok;
  }
  return out;
}

std::vector<std::vector<QScalar>> character_gram(const std::vector<CorepMatrix>& irreps) {
  std::vector<Element> chars;
  for (const auto& r : irreps) chars.push_back(character_of(r));
  std::vector<std::vector<QScalar>> gram(chars.size(), std::vector<QScalar>(chars.size()));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    Element ci = star_element(chars[i]);
    for (std::size_t j = 0; j < chars.size(); ++j) gram[i][j] = haar(ci * chars[j]);
  }
  return gram;
}

PeterWeyl peter_weyl_coverage(int m_range, int n_max) {
  std::vector<Element> coefficients;
  for (const auto& r : irrep_candidates(m_range, n_max))
    for (const auto& row : r.entries)
      for (const auto& e : row) coefficients.push_back(e);
  std::set<Word> monomials;
  for (const auto& e : coefficients)
    for (const auto& [w, c] : e.terms()) monomials.insert(w);
  std::vector<Word> columns(monomials.begin(), monomials.end());
  ScalarMatrix rows;
  for (const auto& e : coefficients) {
    std::vector<QScalar> row;
    for (const Word& w : columns) row.push_back(e.coefficient(w));
    rows.push_back(std::move(row));
  }
  PeterWeyl out;
  out.coefficients = coefficients.size();
  out.rank = matrix_rank(rows, columns.size());
  // Basis window: D^m a^n, D^m d^n, D^m b^n, D^m c^n, D^m z, D^m (1 - z).
  std::size_t ms = static_cast<std::size_t>(2 * m_range + 1);
  out.window = ms * (4 * static_cast<std::size_t>(n_max) + 2);
  // Every coefficient must also live inside the span of that window.
  for (const Word& w : columns) {
    std::size_t i = 0;
    while (i < w.size() && (w[i] == Gen::D || w[i] == Gen::Dinv)) ++i;
    if (static_cast<int>(i) > m_range || static_cast<int>(w.size() - i) > n_max) out.rank = 0;
  }
  return out;
}

Report verify_characters(int m_range, int n_max) {
  Stopwatch clock;
  Report report;
  report.suite = "characters";
  report.params = {{"algebra", "ADTq"}, {"range", m_range}, {"n_max", n_max}};
  AlgebraPtr alg = adtq();
  auto candidates = irrep_candidates(m_range, n_max);

  std::string failing;
  for (const auto& r : candidates) {
    CorepVerdict v = verify_corep(r, true);
    if (!v.ok() && failing.empty()) failing = r.label + ": " + v.witness;
  }
  report.add("irreps_are_unitary_coreps", failing.empty(), failing, std::to_string(candidates.size()) + " irreps");

  CorepVerdict printed = verify_corep(corep_w(1, 2), true);
  CorepVerdict transposed = verify_corep(corep_w_transposed(1, 2), false);
  report.add("printed_w_layout_is_corep", printed.ok(), printed.witness);
  report.add("transposed_w_layout_rejected", !transposed.corep, {}, "transpose fails the corepresentation law");
  CorepMatrix perturbed = corep_w(0, 1);
  perturbed.entries[1][1] += perturbed.entries[0][1];
  perturbed.label = "perturbed";
  CorepVerdict pv = verify_corep(perturbed, false);
  report.add("perturbed_matrix_rejected", !pv.corep, {}, pv.witness);

  auto gram = character_gram(candidates);
  std::string gram_witness;
  for (std::size_t i = 0; i < gram.size() && gram_witness.empty(); ++i)
    for (std::size_t j = 0; j < gram.size() && gram_witness.empty(); ++j)
      if (gram[i][j] != QScalar(i == j ? 1 : 0)) {
        gram_witness = "h(chi_" + candidates[i].label + "^* chi_" + candidates[j].label + ") = " + gram[i][j].to_string();
      }
  report.add("character_gram_identity", gram_witness.empty(), gram_witness,
             std::to_string(gram.size()) + "x" + std::to_string(gram.size()));

  Intertwiners self = intertwiner_space(corep_w(0, 1), corep_w(0, 1));
  report.add("intertwiners_w01_w01_dim1", self.dimension == 1 && self.proportional_to_identity, {},
             "dimension " + std::to_string(self.dimension));
  Intertwiners mixed = intertwiner_space(corep_chi(1), corep_chiz(1));
  report.add("intertwiners_chi1_chiz1_dim0", mixed.dimension == 0, {}, "dimension " + std::to_string(mixed.dimension));
  CorepMatrix doubled = corep_direct_sum(corep_chi(1), corep_chi(1));
  Intertwiners block = intertwiner_space(doubled, doubled);
  report.add("intertwiners_chi1_sum_dim4", block.dimension == 4, {}, "dimension " + std::to_string(block.dimension));

  auto describe = [](const std::map<std::string, Rational>& m) {
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : ", ") + k + (v == 1 ? "" : " x" + v.get_str());
    return "{" + s + "}";
  };
  Element a_plus_d = parse_element("(a + d)^2", alg);
  auto dec = decompose_character(a_plus_d, candidates);
  std::map<std::string, Rational> expected{{"w(0,2)", 1}, {"chiz(1)", 1}, {"chi(1)", 1}};
  report.add("decompose_(a+d)^2", dec == expected, dec == expected ? "" : describe(dec), describe(dec));
  auto dec2 = decompose_character(character_of(corep_chi(1)) * character_of(corep_chi(2)), irrep_candidates(3, 1));
  report.add("decompose_chi1_chi2", dec2 == std::map<std::string, Rational>{{"chi(3)", 1}}, {}, describe(dec2));
  auto dec3 = decompose_character(character_of(corep_w(0, 1)), candidates);
  report.add("decompose_w01", dec3 == std::map<std::string, Rational>{{"w(0,1)", 1}}, {}, describe(dec3));

  CorepMatrix square = corep_tensor(corep_w(0, 1), corep_w(1, 1));
  CorepVerdict sq = verify_corep(square, true);
  report.add("tensor_product_is_unitary_corep", sq.ok(), sq.witness);
  report.add("character_of_tensor_is_product",
             character_of(square) == character_of(corep_w(0, 1)) * character_of(corep_w(1, 1)));

  bool spans = true;
  for (int m = -m_range; m <= m_range; ++m) {
    Element chi = character_of(corep_chi(m)), chiz = character_of(corep_chiz(m));
    Element dm = adtq_word(word_of({{Gen::D, m}}));
    Element z = adtq_word({Gen::z});
    QScalar half(Rational(1, 2));
    spans = spans && dm * z == half * (chi + chiz) && dm * (Element::one(alg) - z) == half * (chi - chiz);
  }
  report.add("group_like_span_identities", spans);
  for (auto [mr, nm] : {std::pair{1, 2}, std::pair{m_range, n_max}}) {
    PeterWeyl pw = peter_weyl_coverage(mr, nm);
    report.add("peter_weyl_coverage_m" + std::to_string(mr) + "_n" + std::to_string(nm), pw.bijective(), {},
               std::to_string(pw.coefficients) + " coefficients, rank " + std::to_string(pw.rank) + ", window " +
                   std::to_string(pw.window));
  }
  report.duration_ms = clock.elapsed_ms();
  return report;
}

}  // namespace dtq
