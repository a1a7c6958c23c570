#pragma once

// Exact sequence A(Z2) -> ADTq -> A(T2), cleaving map, cocycle, cocleaving,
// coaction and the bicross product built from them.

#include <optional>
#include <utility>

#include <json.hpp>

#include "dtq/algebras.hpp"
#include "dtq/report.hpp"

namespace dtq {

/// Sign exponent of the diagonal branch j(u^k v^k) = D^k z + (-D)^{+-k} (1-z).
enum class CleavingConvention { Corrected, Printed };

std::string convention_name(CleavingConvention c);
std::optional<CleavingConvention> convention_from_name(std::string_view name);

/// The report section naming the active convention. Outcomes are filled in
/// when the corresponding checks have been run.
struct ConventionOutcomes {
  std::optional<bool> sigma;
  std::optional<bool> ell;
  std::optional<bool> colinearity;
};
nlohmann::json convention_json(CleavingConvention c, const ConventionOutcomes& outcomes = {});
/// Runs the three consistency checks on a small window and reports them.
nlohmann::json convention_json_evaluated(CleavingConvention c);

// A(T2) monomials u^k v^l.
Word torus_word(int k, int l);
/// Exponents of a normal A(T2) word; throws NonGrouplikeInput otherwise.
std::pair<int, int> torus_exponents(const Word& w);
Element torus(int k, int l);

// A(Z2) elements.
Element delta(int i);

/// i: A(Z2) -> ADTq, delta_0 -> z, delta_1 -> 1 - z.
Element include_base(const Element& x);
/// prj: ADTq -> A(T2), a -> u, d -> v, b, c -> 0, D -> uv, z -> 1.
Element project_torus(const Element& p);
/// Inverse of include_base on its image; throws NotInBaseImage.
Element pull_back_base(const Element& p);

Element cleaving_j(const Element& h, CleavingConvention conv);
Element cleaving_j(int k, int l, CleavingConvention conv);
/// Algebra inverse of j(g) on every group-like g, computed corner by corner.
Element cleaving_j_inverse(const Element& h, CleavingConvention conv);

enum class SigmaMethod { Table, Convolution };
/// sigma_q(u^k v^l (x) u^m v^n) from the 13-branch table.
QScalar sigma_q_table(int k, int l, int m, int n);
Element cocycle_sigma(int k, int l, int m, int n, SigmaMethod method, CleavingConvention conv);

enum class EllMethod { Table, FromJ };
/// l on a normal ADTq word.
Element cocleaving_l(const Word& p, EllMethod method, CleavingConvention conv);
Element cocleaving_l(const Element& p, EllMethod method, CleavingConvention conv);

enum class LambdaMethod { Formula, FromL };
/// lambda(u^m v^n) in A(T2) (x) A(Z2).
Tensor coaction_lambda(int m, int n, LambdaMethod method, CleavingConvention conv);
Tensor coaction_lambda(const Element& h, LambdaMethod method, CleavingConvention conv);

/// A(Z2) (x) A(T2) with the cocycle-twisted product and the coaction-twisted
/// coproduct. Monomials are words d_i u^k v^l.
AlgebraPtr bicross();
Element bicross_monomial(int i, int k, int l);
/// Phi(x (x) h) = i(x) j(h), corrected convention.
Element bicross_phi(const Element& x);

/// The coaction rho_q: A(T2_q) -> ADTq (x) A(T2_q) on x^i y^j, with the left
/// leg taken in `left` (ADTq or a mutant of it).
Tensor rho_q(int i, int j, const AlgebraPtr& left);

Report verify_exact_sequence(int range);
Report verify_cocycle(int range, CleavingConvention conv, int jobs = 1);
Report verify_cleaving(int range, CleavingConvention conv);
Report verify_coaction(int range, CleavingConvention conv);
Report verify_bicross(int max_degree, int samples, unsigned seed, int jobs = 1);
Report verify_coaction_diagram(int range);
/// Completing AUq2 by the ideal {ab, ac, cd, bd} reproduces ADTq on the window.
Report verify_quotient_consistency(int max_degree);
Report verify_finite_quotient(int n, CyclotomicMode mode);

}  // namespace dtq
