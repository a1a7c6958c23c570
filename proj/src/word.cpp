#include "dtq/word.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "dtq/error.hpp"

namespace dtq {

namespace {

constexpr std::array<std::string_view, 17> kNames = {
    "Dinv", "D", "z", "a", "d", "b", "c", "uinv", "u", "vinv", "v", "xinv", "x", "yinv", "y", "d0", "d1",
};

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::CrossAlgebraMix: return "CrossAlgebraMix";
    case ErrorKind::NegativePower: return "NegativePower";
    case ErrorKind::RootConditionViolated: return "RootConditionViolated";
    case ErrorKind::NotAHopfAlgebra: return "NotAHopfAlgebra";
    case ErrorKind::WindowExceeded: return "WindowExceeded";
    case ErrorKind::CyclotomicModeUnsupported: return "CyclotomicModeUnsupported";
    case ErrorKind::NotInBaseImage: return "NotInBaseImage";
    case ErrorKind::NonGrouplikeInput: return "NonGrouplikeInput";
    case ErrorKind::IncompleteWindow: return "IncompleteWindow";
    case ErrorKind::WindowOverflow: return "WindowOverflow";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::CompletionFailed: return "CompletionFailed";
  }
  return "Unknown";
}

std::string_view gen_name(Gen g) { return kNames[static_cast<std::size_t>(g)]; }

std::optional<Gen> gen_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Gen>(i);
  return std::nullopt;
}

std::optional<Gen> inverse_letter(Gen g) {
  switch (g) {
    case Gen::D: return Gen::Dinv;
    case Gen::Dinv: return Gen::D;
    case Gen::u: return Gen::uinv;
    case Gen::uinv: return Gen::u;
    case Gen::v: return Gen::vinv;
    case Gen::vinv: return Gen::v;
    case Gen::x: return Gen::xinv;
    case Gen::xinv: return Gen::x;
    case Gen::y: return Gen::yinv;
    case Gen::yinv: return Gen::y;
    default: return std::nullopt;
  }
}

std::pair<Gen, int> letter_base(Gen g) {
  switch (g) {
    case Gen::Dinv: return {Gen::D, -1};
    case Gen::uinv: return {Gen::u, -1};
    case Gen::vinv: return {Gen::v, -1};
    case Gen::xinv: return {Gen::x, -1};
    case Gen::yinv: return {Gen::y, -1};
    default: return {g, 1};
  }
}

bool grlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    Gen letter = w[i];
    auto [base, sign] = letter_base(letter);
    std::int64_t exponent = 0;
    while (i < w.size() && w[i] == letter) {
      exponent += sign;
      ++i;
    }
    if (!out.empty()) out += "*";
    out += gen_name(base);
    if (exponent != 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

Word concat(const Word& lhs, const Word& rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

Word power_word(Gen g, std::int64_t exponent) {
  if (exponent < 0) {
    auto inv = inverse_letter(g);
    if (!inv) throw Error(ErrorKind::NegativePower, std::string(gen_name(g)) + " has no inverse letter");
    g = *inv;
    exponent = -exponent;
  }
  return Word(static_cast<std::size_t>(exponent), g);
}

}  // namespace dtq
