#include "dtq/gns.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dtq/algebras.hpp"
#include "dtq/error.hpp"
#include "dtq/hopf.hpp"

namespace dtq {

LatticeWindow::LatticeWindow(int n) : n_(n), side_(2 * n + 1) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "window N must be positive");
}

std::optional<std::size_t> LatticeWindow::index(const Site& s) const {
  if (s.sector < 0 || s.sector > 1 || std::abs(s.m) > n_ || std::abs(s.n) > n_) return std::nullopt;
  return static_cast<std::size_t>((s.sector * side_ + (s.m + n_)) * side_ + (s.n + n_));
}

Site LatticeWindow::site(std::size_t index) const {
  const int i = static_cast<int>(index);
  return Site{i / (side_ * side_), (i / side_) % side_ - n_, i % side_ - n_};
}

bool LatticeWindow::interior(const Site& s, int margin) const {
  return std::abs(s.m) <= n_ - margin && std::abs(s.n) <= n_ - margin;
}

namespace {

std::size_t slot(Gen g) {
  switch (g) {
    case Gen::Dinv: return 0;
    case Gen::D: return 1;
    case Gen::a: return 2;
    case Gen::d: return 3;
    case Gen::b: return 4;
    case Gen::c: return 5;
    default: throw Error(ErrorKind::UnknownGenerator, std::string(gen_name(g)) + " has no GNS operator");
  }
}

std::string site_name(const Site& s) {
  std::ostringstream out;
  out << "e^" << (s.sector == 0 ? 'c' : 'q') << "_{" << s.m << "," << s.n << "}";
  return out.str();
}

/// Applies one operator; escaping amplitude throws or is dropped.
StateVector apply_operator(const SparseOperator& op, const StateVector& v, bool truncate, const LatticeWindow& w) {
  StateVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == NumericScalar{}) continue;
    if (op.escapes[j] && !truncate)
      throw Error(ErrorKind::WindowOverflow, "image of " + site_name(w.site(j)) + " leaves the window");
    for (const auto& [i, x] : op.columns[j]) out[i] += x * v[j];
  }
  return out;
}

double distance(const StateVector& x, const StateVector& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

double norm2(const StateVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

NumericScalar GnsRepresentation::qpow(long k) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * theta_ * static_cast<double>(k));
}

namespace {

using ShiftRule = std::function<std::optional<std::pair<Site, NumericScalar>>(const Site&)>;

SparseOperator shift(const LatticeWindow& window, const ShiftRule& rule) {
  SparseOperator op;
  op.columns.resize(window.size());
  op.escapes.assign(window.size(), false);
  for (std::size_t j = 0; j < window.size(); ++j) {
    auto image = rule(window.site(j));
    if (!image) continue;
    if (auto i = window.index(image->first)) {
      op.columns[j].emplace_back(*i, image->second);
    } else {
      op.escapes[j] = true;
    }
  }
  return op;
}

/// pi(a), pi(d), pi(b), pi(c) on `window`.
std::array<SparseOperator, 4> generator_shifts(const LatticeWindow& window, double theta, bool mutate_b) {
  using Image = std::optional<std::pair<Site, NumericScalar>>;
  const NumericScalar one{1.0, 0.0};
  auto qpow = [theta](long k) { return std::polar(1.0, 2.0 * std::numbers::pi * theta * static_cast<double>(k)); };
  return {
      shift(window, [&](const Site& s) -> Image {
        if (s.sector != 0) return std::nullopt;
        if (s.n >= 0) return std::pair{Site{0, s.m, s.n + 1}, one};
        return std::pair{Site{0, s.m + 1, s.n + 1}, one};
      }),
      shift(window, [&](const Site& s) -> Image {
        if (s.sector != 0) return std::nullopt;
        if (s.n > 0) return std::pair{Site{0, s.m + 1, s.n - 1}, one};
        return std::pair{Site{0, s.m, s.n - 1}, one};
      }),
      shift(window, [&](const Site& s) -> Image {
        if (s.sector != 1) return std::nullopt;
        if (s.n > 0) return std::pair{Site{1, s.m + 1, s.n - 1}, -qpow(2L * s.n - (mutate_b ? 0 : 1))};
        return std::pair{Site{1, s.m, s.n - 1}, qpow(2L * s.m)};
      }),
      shift(window, [&](const Site& s) -> Image {
        if (s.sector != 1) return std::nullopt;
        if (s.n >= 0) return std::pair{Site{1, s.m, s.n + 1}, one};
        return std::pair{Site{1, s.m + 1, s.n + 1}, -qpow(-2L * s.m - 1)};
      }),
  };
}

}  // namespace

GnsRepresentation::GnsRepresentation(int n, double theta, bool mutate_b) : window_(n), theta_(theta) {
  auto gens = generator_shifts(window_, theta, mutate_b);
  ops_[slot(Gen::a)] = std::move(gens[0]);
  ops_[slot(Gen::d)] = std::move(gens[1]);
  ops_[slot(Gen::b)] = std::move(gens[2]);
  ops_[slot(Gen::c)] = std::move(gens[3]);

  // pi(D) = pi(a) pi(d) - q^-1 pi(b) pi(c), composed on a window one site
  // larger so that intermediate steps across the boundary are not lost.
  const LatticeWindow padded(n + 1);
  const auto big = generator_shifts(padded, theta, mutate_b);
  SparseOperator dop;
  dop.columns.resize(window_.size());
  dop.escapes.assign(window_.size(), false);
  for (std::size_t j = 0; j < window_.size(); ++j) {
    StateVector e(padded.size());
    e[*padded.index(window_.site(j))] = 1.0;
    auto ad = apply_operator(big[0], apply_operator(big[1], e, false, padded), false, padded);
    auto bc = apply_operator(big[2], apply_operator(big[3], e, false, padded), false, padded);
    const NumericScalar qinv = qpow(-1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const NumericScalar x = ad[i] - qinv * bc[i];
      if (std::abs(x) == 0.0) continue;
      if (auto target = window_.index(padded.site(i))) {
        dop.columns[j].emplace_back(*target, x);
      } else {
        dop.escapes[j] = true;
      }
    }
  }
  // pi(D^-1) = pi(D)^*: column j collects row j of pi(D). A column whose
  // preimage lies outside the window (or behind an escaping column) escapes.
  SparseOperator dinv;
  dinv.columns.resize(window_.size());
  dinv.escapes.assign(window_.size(), true);
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (dop.escapes[k]) continue;
    for (const auto& [i, x] : dop.columns[k]) {
      dinv.columns[i].emplace_back(k, std::conj(x));
      dinv.escapes[i] = false;
    }
  }
  ops_[slot(Gen::D)] = std::move(dop);
  ops_[slot(Gen::Dinv)] = std::move(dinv);
}

const SparseOperator& GnsRepresentation::letter(Gen g) const { return ops_[slot(g)]; }

StateVector GnsRepresentation::basis_vector(const Site& s) const {
  auto i = window_.index(s);
  if (!i) throw Error(ErrorKind::WindowOverflow, site_name(s) + " is outside the window");
  StateVector v(window_.size());
  v[*i] = 1.0;
  return v;
}

StateVector GnsRepresentation::apply_word(const Word& w, StateVector v, bool truncate) const {
  static const Word z_letters = adtq()->generator_data().composite.at(Gen::z);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == Gen::z) {
      v = apply_word(z_letters, std::move(v), truncate);
    } else {
      v = apply_operator(ops_[slot(*it)], v, truncate, window_);
    }
  }
  return v;
}

StateVector GnsRepresentation::apply(const Element& e, const StateVector& v, bool truncate) const {
  if (e.algebra().id().tag != AlgebraTag::ADTq)
    throw Error(ErrorKind::CrossAlgebraMix, "the GNS representation acts by ADTq elements");
  StateVector out(v.size());
  for (const auto& [w, c] : e.terms()) {
    const NumericScalar x = eval_scalar(c, theta_);
    auto image = apply_word(w, v, truncate);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += x * image[i];
  }
  return out;
}

NumericScalar GnsRepresentation::expectation(const Element& e) const {
  NumericScalar total{};
  for (int sector : {0, 1}) {
    const Site origin{sector, 0, 0};
    total += 0.5 * apply(e, basis_vector(origin))[*window_.index(origin)];
  }
  return total;
}

double GnsRepresentation::operator_norm(const Element& e, double tolerance, int max_iterations) const {
  // Truncated matrix A = P pi(e) P, stored by columns.
  const std::size_t dim = window_.size();
  std::vector<StateVector> columns(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector ej(dim);
    ej[j] = 1.0;
    columns[j] = apply(e, ej, true);
  }
  auto times = [&](const StateVector& v) {
    StateVector out(dim);
    for (std::size_t j = 0; j < dim; ++j)
      if (v[j] != NumericScalar{})
        for (std::size_t i = 0; i < dim; ++i) out[i] += columns[j][i] * v[j];
    return out;
  };
  auto adjoint_times = [&](const StateVector& v) {
    StateVector out(dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) out[j] += std::conj(columns[j][i]) * v[i];
    return out;
  };

  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  StateVector v(dim);
  for (auto& x : v) x = {normal(rng), normal(rng)};
  double nv = norm2(v);
  for (auto& x : v) x /= nv;

  double previous = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    StateVector w = adjoint_times(times(v));
    const double nw = norm2(w);
    if (nw == 0.0) return 0.0;
    const double estimate = std::sqrt(nw);
    for (auto& x : w) x /= nw;
    v = std::move(w);
    if (previous >= 0.0 && std::abs(estimate - previous) <= tolerance * std::max(1.0, estimate)) return estimate;
    previous = estimate;
  }
  throw Error(ErrorKind::NonConvergence,
              "power iteration did not settle within " + std::to_string(max_iterations) + " iterations");
}

Report verify_gns(int n, double theta, unsigned seed) {
  Stopwatch clock;
  Report r;
  r.suite = "gns";
  r.params = {{"window", n}, {"theta", theta}, {"seed", seed}};
  if (n < 3) throw Error(ErrorKind::InvalidParams, "GNS checks need N >= 3");
  constexpr double tol = 1e-10;
  const auto A = adtq();
  const GnsRepresentation pi(n, theta);
  const auto& W = pi.window();

  std::vector<std::size_t> interior;
  for (std::size_t j = 0; j < W.size(); ++j)
    if (W.interior(W.site(j))) interior.push_back(j);

  // (i) relations lhs = rhs as operators on interior basis vectors.
  auto relation_defects = [&](const GnsRepresentation& rep, nlohmann::json& per_relation, std::string& witness,
                              std::size_t& checked, std::size_t& deep_skipped) {
    double worst = 0.0;
    for (const auto& rule : A->system().rules()) {
      const Element lhs = Element::monomial(A, rule.lhs);
      const Element rhs(A, rule.rhs);
      double defect = 0.0;
      for (std::size_t j : interior) {
        StateVector e(W.size());
        e[j] = 1.0;
        double here = 0.0;
        try {
          here = distance(rep.apply(lhs, e), rep.apply(rhs, e));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::WindowOverflow) throw;
          if (W.interior(W.site(j), 4)) ++deep_skipped;
          continue;
        }
        ++checked;
        if (here > defect) {
          defect = here;
          if (defect > tol && witness.empty())
            witness = lhs.to_string() + " - (" + rhs.to_string() + ") on " + site_name(W.site(j)) +
                      ": defect " + std::to_string(defect);
        }
      }
      per_relation[format_word(rule.lhs)] = defect;
      worst = std::max(worst, defect);
    }
    return worst;
  };

  nlohmann::json per_relation = nlohmann::json::object();
  std::string witness;
  std::size_t checked = 0, deep_skipped = 0;
  const double worst = relation_defects(pi, per_relation, witness, checked, deep_skipped);
  r.extra["max_relation_defect"] = per_relation;
  r.extra["relation_site_checks"] = checked;
  r.add("relations_on_interior", worst <= tol && deep_skipped == 0, witness,
        "max defect " + std::to_string(worst) + " over " + std::to_string(checked) + " (relation, site) pairs");

  // Random interior vectors, deep enough that no word leaves the window.
  {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<std::size_t> deep;
    for (std::size_t j : interior)
      if (W.interior(W.site(j), 4)) deep.push_back(j);
    double worst_random = 0.0;
    std::string random_witness;
    for (int sample = 0; sample < 50; ++sample) {
      StateVector v(W.size());
      for (std::size_t j : deep) v[j] = {normal(rng), normal(rng)};
      const double nv = norm2(v);
      for (auto& x : v) x /= nv;
      for (const auto& rule : A->system().rules()) {
        const Element rel = Element::monomial(A, rule.lhs) - Element(A, rule.rhs);
        const double defect = norm2(pi.apply(rel, v));
        if (defect > worst_random) {
          worst_random = defect;
          if (defect > tol && random_witness.empty())
            random_witness = rel.to_string() + " on random vector #" + std::to_string(sample);
        }
      }
    }
    r.add("relations_on_random_vectors", worst_random <= tol, random_witness,
          "50 vectors, max norm defect " + std::to_string(worst_random));
  }

  // Sector preservation: a, d kill sector q; b, c kill sector c.
  {
    bool ok = true;
    std::string w;
    for (std::size_t j = 0; j < W.size(); ++j) {
      const Site s = W.site(j);
      for (Gen g : {Gen::a, Gen::d, Gen::b, Gen::c}) {
        const bool acts = g == Gen::a || g == Gen::d ? s.sector == 0 : s.sector == 1;
        if (!acts && !pi.letter(g).columns[j].empty()) {
          ok = false;
          if (w.empty()) w = "pi(" + std::string(gen_name(g)) + ") " + site_name(s) + " != 0";
        }
      }
    }
    r.add("sector_preservation", ok, w);
  }

  // (ii) <pi(x*) xi, eta> = <xi, pi(x) eta> on interior basis vectors.
  {
    double worst_adj = 0.0;
    std::string w;
    for (Gen g : {Gen::a, Gen::b, Gen::c, Gen::d, Gen::D, Gen::Dinv, Gen::z}) {
      const Element x = Element::from_word(A, Word{g});
      const Element xs = star_element(x);
      std::vector<StateVector> img(W.size()), img_star(W.size());
      for (std::size_t j : interior) {
        img[j] = pi.apply(x, pi.basis_vector(W.site(j)));
        img_star[j] = pi.apply(xs, pi.basis_vector(W.site(j)));
      }
      for (std::size_t xi : interior)
        for (std::size_t eta : interior) {
          const double defect = std::abs(std::conj(img_star[xi][eta]) - img[eta][xi]);
          if (defect > worst_adj) {
            worst_adj = defect;
            if (defect > tol && w.empty())
              w = std::string(gen_name(g)) + " with xi=" + site_name(W.site(xi)) + ", eta=" + site_name(W.site(eta));
          }
        }
    }
    r.add("adjoint_consistency", worst_adj <= tol, w, "max defect " + std::to_string(worst_adj));
  }

  // (iii) pi(D) has unit weights and pi(D)^* pi(D) = 1 on the interior.
  {
    bool ok = true;
    std::string w;
    const auto& D = pi.letter(Gen::D);
    for (std::size_t j : interior) {
      const auto& col = D.columns[j];
      if (D.escapes[j] || col.size() != 1 || std::abs(std::abs(col[0].second) - 1.0) > tol) {
        ok = false;
        if (w.empty()) w = "pi(D) " + site_name(W.site(j));
        continue;
      }
      auto back = pi.apply_word(Word{Gen::Dinv, Gen::D}, pi.basis_vector(W.site(j)));
      if (distance(back, pi.basis_vector(W.site(j))) > tol) {
        ok = false;
        if (w.empty()) w = "pi(D)^* pi(D) " + site_name(W.site(j));
      }
    }
    r.add("D_isometric_on_interior", ok, w);
  }

  // theta-continuity of the generator entries.
  {
    const GnsRepresentation nearby(n, theta + 1e-6);
    double worst_jump = 0.0;
    for (Gen g : {Gen::a, Gen::b, Gen::c, Gen::d, Gen::D, Gen::Dinv}) {
      const auto& x = pi.letter(g);
      const auto& y = nearby.letter(g);
      for (std::size_t j = 0; j < W.size(); ++j) {
        if (x.columns[j].size() != y.columns[j].size()) {
          worst_jump = 1.0;
          continue;
        }
        for (std::size_t k = 0; k < x.columns[j].size(); ++k) {
          if (x.columns[j][k].first != y.columns[j][k].first) worst_jump = 1.0;
          worst_jump = std::max(worst_jump, std::abs(x.columns[j][k].second - y.columns[j][k].second));
        }
      }
    }
    r.add("theta_continuity", worst_jump <= 1e-4, {}, "max entry change " + std::to_string(worst_jump));
  }

  // Vector state versus the Haar functional on the degree <= 4 basis.
  {
    double worst_state = 0.0;
    std::string w;
    for (const Word& word : A->basis_up_to_degree(4)) {
      const Element e = Element::monomial(A, word);
      const double defect = std::abs(pi.expectation(e) - eval_scalar(haar(e), theta));
      if (defect > worst_state) {
        worst_state = defect;
        if (defect > tol && w.empty()) w = e.to_string();
      }
    }
    r.add("expectation=haar", worst_state <= tol, w, "max defect " + std::to_string(worst_state));
  }

  // The mutated pi(b) must break a relation.
  {
    // The mutation rescales a weight by q, so it is invisible at q = 1; the
    // probe then runs at a generic angle instead.
    const bool degenerate = std::abs(std::polar(1.0, 2.0 * std::numbers::pi * theta) - 1.0) < 1e-6;
    const double probe = degenerate ? 0.31 : theta;
    const GnsRepresentation mutant(n, probe, true);
    const GnsRepresentation reference(n, probe);
    nlohmann::json ignored = nlohmann::json::object();
    std::string mutant_witness, reference_witness;
    std::size_t c = 0, s = 0;
    const double defect = relation_defects(mutant, ignored, mutant_witness, c, s);
    const double baseline = relation_defects(reference, ignored, reference_witness, c, s);
    r.add("mutant_b_exponent_detected", defect > tol && baseline <= tol, {},
          (degenerate ? "probe at theta=0.31; " : "") + mutant_witness);
  }

  r.duration_ms = clock.elapsed_ms();
  return r;
}

}  // namespace dtq
