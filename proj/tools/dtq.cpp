// Command-line front end: algebra computations and verification suites.
//
// Exit codes: 0 pass, 1 check failure (or engine error), 2 usage error.

#include <cmath>
#include <iostream>
#include <numbers>
#include <regex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtq/error.hpp"
#include "dtq/expression.hpp"
#include "dtq/gns.hpp"
#include "dtq/hopf.hpp"
#include "dtq/suites.hpp"

using namespace dtq;
using nlohmann::json;

namespace {

struct Options {
  std::string algebra = "adtq";
  bool algebra_set = false;
  std::optional<int> max_degree, range, window, q_root;
  double theta = 0.31;
  std::string convention = "corrected";
  std::string report = "text";
  int jobs = std::max(1u, std::thread::hardware_concurrency());
};

bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::InvalidParams:
    case ErrorKind::NegativePower:
    case ErrorKind::CrossAlgebraMix:
      return true;
    default:
      return false;
  }
}

class Output {
 public:
  Output(const Options& o, CleavingConvention conv) : json_(o.report == "json"), conv_(conv) {}

  /// Single-value commands.
  int value(const std::string& command, const std::string& input, const json& result, const std::string& text) {
    if (json_) {
      json out{{"command", command}, {"input", input}, {"result", result}, {"cleaving_convention", convention()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
    return 0;
  }

  int report(const Report& r) {
    if (json_) {
      std::cout << dtq::to_json(r, convention()).dump(2) << "\n";
    } else {
      std::cout << to_text(r, convention());
    }
    return r.passed() ? 0 : 1;
  }

 private:
  json convention() {
    if (!cached_) cached_ = convention_json_evaluated(conv_);
    return *cached_;
  }

  bool json_;
  CleavingConvention conv_;
  std::optional<json> cached_;
};

CorepMatrix corep_from_label(const std::string& label) {
  static const std::regex pattern(R"(\s*(chiz|chi|w)\s*\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)\s*)");
  std::smatch m;
  if (!std::regex_match(label, m, pattern))
    throw Error(ErrorKind::InvalidParams, "expected chi(m), chiz(m) or w(m,n), got '" + label + "'");
  const int first = std::stoi(m[2]);
  const std::string kind = m[1];
  if (kind == "w") {
    if (!m[3].matched) throw Error(ErrorKind::InvalidParams, "w needs two indices");
    const int n = std::stoi(m[3]);
    if (n < 1) throw Error(ErrorKind::InvalidParams, "w(m,n) needs n >= 1");
    return corep_w(first, n);
  }
  if (m[3].matched) throw Error(ErrorKind::InvalidParams, kind + " takes one index");
  return kind == "chi" ? corep_chi(first) : corep_chiz(first);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine and verification suites for A(DT^2_q) and A(U_{q^-1,q}(2))"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--algebra", o.algebra, "auq2, adtq, at2, az2, at2q or bicross")->each([&](const std::string&) {
    o.algebra_set = true;
  });
  app.add_option("--max-deg", o.max_degree, "degree bound of the basis window")->check(CLI::PositiveNumber);
  app.add_option("--range", o.range, "exponent range |k| <= R")->check(CLI::NonNegativeNumber);
  app.add_option("--window", o.window, "GNS lattice half-width N")->check(CLI::Range(3, 64));
  app.add_option("--q-theta", o.theta, "q = exp(2 pi i theta) for numeric checks")->check(CLI::Range(0.0, 1.0));
  app.add_option("--q-root", o.q_root, "q = exp(2 pi i / M)")->check(CLI::PositiveNumber);
  app.add_option("--convention", o.convention, "cleaving-map diagonal convention")
      ->check(CLI::IsMember({"corrected", "printed"}));
  app.add_option("--report", o.report, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string expr, suite, label;
  int quotient_n = 1;
  auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
  auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of an expression");
  auto* antipode_cmd = app.add_subcommand("antipode", "antipode of an expression");
  auto* star_cmd = app.add_subcommand("star", "involution of an expression");
  auto* haar_cmd = app.add_subcommand("haar", "Haar functional of an ADTq expression");
  auto* decompose_cmd = app.add_subcommand("decompose", "split an ADTq character into irreducible characters");
  for (auto* cmd : {normalize, coproduct_cmd, antipode_cmd, star_cmd, haar_cmd, decompose_cmd})
    cmd->add_option("expression", expr)->required();
  auto* character_cmd = app.add_subcommand("character", "character of chi(m), chiz(m) or w(m,n)");
  character_cmd->add_option("label", label)->required();
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  auto* gns_cmd = app.add_subcommand("gns", "GNS suite, or expectation and norm of an expression");
  gns_cmd->add_option("expression", expr);
  auto* fdquot_cmd = app.add_subcommand("fdquot", "finite-dimensional quotient at a root of unity");
  fdquot_cmd->add_option("n", quotient_n)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const CleavingConvention conv = *convention_from_name(o.convention);
  Output out(o, conv);
  SuiteParams params;
  if (o.algebra_set) params.algebra = o.algebra;
  params.max_degree = o.max_degree;
  params.range = o.range;
  params.window = o.window;
  params.theta = o.q_root ? 1.0 / *o.q_root : o.theta;
  params.q_root = o.q_root;
  params.convention = conv;
  params.jobs = o.jobs;

  try {
    if (*verify_cmd) return out.report(run_suite(suite, params));
    if (*fdquot_cmd) {
      params.quotient_n = quotient_n;
      return out.report(run_suite("fdquot", params));
    }
    if (*gns_cmd) {
      if (expr.empty()) return out.report(run_suite("gns", params));
      const Element e = parse_element(expr, adtq());
      const GnsRepresentation pi(params.window.value_or(6), params.theta);
      const NumericScalar state = pi.expectation(e);
      const NumericScalar h = eval_scalar(haar(e), params.theta);
      const double norm = pi.operator_norm(e);
      json result{{"expectation", {state.real(), state.imag()}}, {"haar", {h.real(), h.imag()}}, {"norm", norm}};
      std::ostringstream text;
      text << "expectation " << state << "\nhaar        " << h << "\nnorm        " << norm;
      return out.value("gns", expr, result, text.str());
    }
    if (*character_cmd) {
      const CorepMatrix w = corep_from_label(label);
      const CorepVerdict v = verify_corep(w, true);
      const std::string chi = character_of(w).to_string();
      json result{{"label", w.label}, {"character", chi}, {"corepresentation", v.corep && v.counit},
                  {"unitary", v.unitary}};
      if (!v.witness.empty()) result["witness"] = v.witness;
      out.value("character", label, result, w.label + ": " + chi + (v.ok() ? "" : "\n  not unitary: " + v.witness));
      return v.ok() ? 0 : 1;
    }

    const AlgebraPtr alg = (*haar_cmd || *decompose_cmd) ? adtq() : algebra_by_name(o.algebra);
    const Element e = parse_element(expr, alg);
    if (*normalize) return out.value("normalize", expr, e.to_string(), e.to_string());
    if (*coproduct_cmd) {
      const std::string s = coproduct(e).to_string();
      return out.value("coproduct", expr, s, s);
    }
    if (*antipode_cmd) {
      const std::string s = antipode(e).to_string();
      return out.value("antipode", expr, s, s);
    }
    if (*star_cmd) {
      const std::string s = star_element(e).to_string();
      return out.value("star", expr, s, s);
    }
    if (*haar_cmd) {
      const QScalar h = haar(e);
      const NumericScalar x = eval_scalar(h, params.theta);
      std::ostringstream text;
      text << h.to_string() << "  (" << x << " at theta=" << params.theta << ")";
      return out.value("haar", expr, {{"symbolic", h.to_string()}, {"numeric", {x.real(), x.imag()}}}, text.str());
    }
    if (*decompose_cmd) {
      const auto mult = decompose_character(e, irrep_candidates(o.range.value_or(2), o.max_degree.value_or(3)));
      json result = json::object();
      std::string text;
      for (const auto& [name, m] : mult) {
        result[name] = m.get_str();
        text += (text.empty() ? "" : " + ") + (m == 1 ? std::string() : m.get_str() + "*") + name;
      }
      return out.value("decompose", expr, result, text.empty() ? "0" : text);
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return is_usage_error(err.kind()) ? 2 : 1;
  }
  return 2;
}
