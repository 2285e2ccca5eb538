#pragma once

#include <utility>

#include "motocell/cells.hpp"
#include "motocell/error.hpp"
#include "motocell/tate_polynomial.hpp"

namespace motocell {

// Homotopy purity for a closed immersion D -> Xbar of codimension c with
// open complement X, at current suspension level k: returns the cells of
// Sigma^{k+1}(X_+), assembled as
//
//   suspend(tate_twist(closed, c), k)  |_|  suspend(ambient, k+1)
//
// (the cofiber X -> Xbar -> Th(N) rotated once).  Attaching maps are not
// tracked, so the inventory may be redundant; the signed polynomial
// identity chi(result) = (-1)^{k+1} (chi(ambient) - x^c chi(closed)) is
// asserted on every call.
inline CellInventory purity_extend(const CellInventory& ambient,
                                   const CellInventory& closed, int codim,
                                   int k) {
  require(ambient.pointing() == Pointing::plus &&
              closed.pointing() == Pointing::plus,
          Errc::pointing_mismatch, "purity expects plus inventories");
  require(codim >= 1, Errc::invalid_input, "codimension must be at least 1");
  require(k >= 0, Errc::invalid_input, "suspension level must be nonnegative");

  CellInventory out = unite(suspend(tate_twist(closed, codim), k),
                            suspend(ambient, k + 1), Pointing::reduced);

  SignedTatePolynomial expected =
      signed_poly(ambient) - signed_poly(closed).shifted(codim);
  if ((k + 1) % 2 != 0) expected = -expected;
  require(signed_poly(out) == expected, Errc::internal_check,
          "purity output failed the signed-polynomial identity");
  return out;
}

// Suspended variant used by the arrangement recursion.  Inputs are the
// cells of Sigma^a(U_+) for the ambient complement U and Sigma^b(Z_+) for
// the closed piece Z of codimension c.  The Thom side is S^{2c,c} smash
// Z_+, and c of those smash factors are simplicial suspensions already,
// so the common level is m = max(a, b - c) and the output presents
// Sigma^{m+1}(X_+):
//
//   suspend(gm_smash(closed, c), m - b + c)  |_|  suspend(ambient, m+1-a)
inline std::pair<CellInventory, int> purity_assemble(
    const CellInventory& ambient_cells, int ambient_level,
    const CellInventory& closed_cells, int closed_level, int codim) {
  require(codim >= 1, Errc::invalid_input, "codimension must be at least 1");
  require(ambient_level >= 0 && closed_level >= 0, Errc::invalid_input,
          "suspension levels must be nonnegative");

  const int m = std::max(ambient_level, closed_level - codim);
  CellInventory out =
      unite(suspend(gm_smash(closed_cells, codim), m - closed_level + codim),
            suspend(ambient_cells, m + 1 - ambient_level), Pointing::reduced);

  // Tautological consistency of the assembly, kept as a guard: with
  // chi(U_+) = (-1)^a chi(ambient_cells) and chi(Z_+) = (-1)^b
  // chi(closed_cells), the output must be (-1)^{m+1}(chi(U_+) - x^c chi(Z_+)).
  SignedTatePolynomial chi_open = signed_poly(ambient_cells);
  if (ambient_level % 2 != 0) chi_open = -chi_open;
  SignedTatePolynomial chi_closed = signed_poly(closed_cells);
  if (closed_level % 2 != 0) chi_closed = -chi_closed;
  SignedTatePolynomial expected = chi_open - chi_closed.shifted(codim);
  if ((m + 1) % 2 != 0) expected = -expected;
  require(signed_poly(out) == expected, Errc::internal_check,
          "suspended purity assembly failed the signed-polynomial identity");
  return {out, m + 1};
}

// Splitting inverse of the purity relation at the even-pure level: both
// inputs must have every cell of shape (2w, w).  Returns the even-pure
// lift of chi(total) - chi(thom) when that difference is coefficientwise
// nonnegative; this is the minimal stable inventory of the open
// complement under the splitting assumption.
inline CellInventory stable_solve(const CellInventory& total,
                                  const CellInventory& thom) {
  auto even_pure = [](const CellInventory& inv) {
    for (const auto& [d, m] : inv.cells())
      if (d.p != 2 * d.w) return false;
    return true;
  };
  require(even_pure(total) && even_pure(thom), Errc::not_even_pure,
          "stable_solve requires even-pure inventories");

  SignedTatePolynomial diff = signed_poly(total) - signed_poly(thom);
  require(diff.nonnegative(), Errc::non_split,
          "difference has a negative coefficient; no split lift exists");

  CellInventory out(Pointing::plus);
  for (const auto& [w, c] : diff.coeffs()) out.add({2 * w, w}, c);
  return out;
}

}  // namespace motocell
