#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtq {

/// Letters of every presentation handled by the engine.
///
/// The enumerator order is the letter order of the graded lexicographic
/// monomial order; only the relative order of letters belonging to the same
/// algebra matters. Inverse letters sort directly below their generator.
enum class Gen : std::uint8_t {
  Dinv,
  D,
  z,
  a,
  d,
  b,
  c,
  uinv,
  u,
  vinv,
  v,
  xinv,
  x,
  yinv,
  y,
  d0,
  d1,
};

using Word = std::vector<Gen>;

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);
/// Inverse letter for the invertible generators (D, u, v, x, y and their inverses).
std::optional<Gen> inverse_letter(Gen g);
/// The generator a letter is a power of, with exponent sign (Dinv -> {D, -1}).
std::pair<Gen, int> letter_base(Gen g);

/// Graded lexicographic order: shorter words first, then letterwise.
bool grlex_less(const Word& lhs, const Word& rhs);

/// Run-length rendering, e.g. D^-2*z*a^3; the empty word is "1".
std::string format_word(const Word& w);

Word concat(const Word& lhs, const Word& rhs);
Word power_word(Gen g, std::int64_t exponent);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (Gen g : w) h = h * 31 + static_cast<std::size_t>(g) + 1;
    return h;
  }
};

}  // namespace dtq
