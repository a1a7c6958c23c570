#include "dtq/linalg.hpp"

#include <optional>

namespace dtq {

namespace {

struct Echelon {
  ScalarMatrix rows;                 // echelon rows, one per pivot
  std::vector<std::size_t> pivots;   // pivot column per row
};

Echelon eliminate(ScalarMatrix a, std::size_t columns) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    // Prefer a unit (monomial) pivot to keep coefficients small.
    std::optional<std::size_t> choice;
    for (std::size_t r = row; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      if (!choice || (a[r][col].is_monomial() && !a[*choice][col].is_monomial())) choice = r;
    }
    if (!choice) continue;
    std::swap(a[row], a[*choice]);
    const QScalar pivot = a[row][col];
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      QScalar factor = a[r][col];
      for (std::size_t c = col; c < columns; ++c) a[r][c] = pivot * a[r][c] - factor * a[row][c];
    }
    out.rows.push_back(a[row]);
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace

Nullspace nullspace(const ScalarMatrix& a, std::size_t columns) {
  Echelon e = eliminate(a, columns);
  Nullspace out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QScalar> x(columns);
    x[free] = QScalar(1);
    // Back substitution with the scale carried along instead of dividing.
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
      std::size_t p = e.pivots[i];
      const QScalar& lead = e.rows[i][p];
      QScalar rest;
      for (std::size_t c = p + 1; c < columns; ++c)
        if (!x[c].is_zero() && !e.rows[i][c].is_zero()) rest += e.rows[i][c] * x[c];
      if (rest.is_zero()) continue;
      if (auto inv = lead.inverse()) {
        x[p] = -(*inv) * rest;
      } else {
        for (auto& v : x) v = lead * v;
        x[p] = -rest;
      }
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

std::size_t matrix_rank(const ScalarMatrix& a, std::size_t columns) { return eliminate(a, columns).pivots.size(); }

}  // namespace dtq
