#pragma once

// Hopf-algebra verification, convolution, Haar state and corepresentations.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtq/algebras.hpp"
#include "dtq/linalg.hpp"
#include "dtq/report.hpp"

namespace dtq {

/// Linear map given on basis monomials: a finite table plus an optional rule
/// for everything else. Queries outside both raise WindowExceeded.
class LinearMapTable {
 public:
  using Rule = std::function<Element(const Word&)>;

  LinearMapTable(std::string name, AlgebraPtr source, AlgebraPtr target, Rule fallback = nullptr);

  const std::string& name() const noexcept { return name_; }
  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }

  void set(const Word& w, Element image);
  Element on_basis(const Word& w) const;
  Element operator()(const Element& e) const;

 private:
  std::string name_;
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::map<Word, Element> table_;
  Rule fallback_;
};

/// (f * g)(h) = f(h_(1)) g(h_(2)).
LinearMapTable convolve(const LinearMapTable& f, const LinearMapTable& g);
/// h |-> eps(h) 1.
LinearMapTable unit_counit(const AlgebraPtr& source, const AlgebraPtr& target);

/// Per-monomial axiom checks plus compatibility of the generator data with the
/// defining relations.
Report verify_hopf_axioms(const AlgebraPtr& algebra, int max_degree, int jobs = 1);

/// Searches S(g) in {+-q^s g' D^-1 : |s| <= 3} for g in {a, b, c, d} solving
/// both antipode equations of the 2x2 matrix corepresentation in AUq2.
/// Returns every solution found (one map per solution).
std::vector<std::map<Gen, Element>> find_antipode_on_generators();

// Haar state on ADTq: h(1) = 1, h(z) = 1/2, zero on every other basis monomial.
QScalar haar(const Element& e);
/// Solves (id (x) h) Delta(z) = h(z) 1 for the weight t = h(z), with h(1) = 1
/// and h vanishing on the remaining basis monomials.
Rational derive_haar_weight_of_z();
Report verify_haar(int invariance_degree, int gram_degree, double theta);

struct CorepMatrix {
  std::string label;
  std::vector<std::vector<Element>> entries;
  std::size_t dim() const { return entries.size(); }
};

CorepMatrix corep_chi(int m);
CorepMatrix corep_chiz(int m);
CorepMatrix corep_w(int m, int n);
/// The transposed layout of corep_w, kept for the convention check.
CorepMatrix corep_w_transposed(int m, int n);
CorepMatrix corep_tensor(const CorepMatrix& v, const CorepMatrix& w);
CorepMatrix corep_direct_sum(const CorepMatrix& v, const CorepMatrix& w);

struct CorepVerdict {
  bool corep = true;
  bool counit = true;
  bool unitary = true;
  std::string witness;
  bool ok() const { return corep && counit && unitary; }
};
CorepVerdict verify_corep(const CorepMatrix& w, bool check_unitary);
Element character_of(const CorepMatrix& w);

/// The three irrep families restricted to |m| <= m_range, 1 <= n <= n_max.
std::vector<CorepMatrix> irrep_candidates(int m_range, int n_max);
/// mult(lambda) = h(chi_lambda^* chi); throws IncompleteWindow if the
/// multiplicities do not rebuild chi exactly.
std::map<std::string, Rational> decompose_character(const Element& chi, const std::vector<CorepMatrix>& candidates);

struct Intertwiners {
  std::size_t dimension = 0;
  /// Each basis element is a dim(w) x dim(v) scalar matrix T with w T = T v.
  std::vector<std::vector<std::vector<QScalar>>> basis;
  bool proportional_to_identity = false;
};
Intertwiners intertwiner_space(const CorepMatrix& v, const CorepMatrix& w);

/// Character Gram matrix [h(chi_i^* chi_j)] over the candidate list.
std::vector<std::vector<QScalar>> character_gram(const std::vector<CorepMatrix>& irreps);

/// Matrix coefficients of all candidates (with D^m, D^m(2z-1) for the
/// group-likes) against the basis window; returns {count, rank, window size}.
struct PeterWeyl {
  std::size_t coefficients = 0;
  std::size_t rank = 0;
  std::size_t window = 0;
  bool bijective() const { return coefficients == window && rank == window; }
};
PeterWeyl peter_weyl_coverage(int m_range, int n_max);

Report verify_characters(int m_range, int n_max);

}  // namespace dtq
