#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "motocell/cartan.hpp"
#include "motocell/cells.hpp"
#include "motocell/certificate.hpp"
#include "motocell/error.hpp"
#include "motocell/purity.hpp"
#include "motocell/tate_polynomial.hpp"
#include "motocell/weyl.hpp"

namespace motocell {

// A generalized flag variety G/P given by its root datum and the Bourbaki
// labels of the parabolic's nodes.
struct FlagSpec {
  CartanDatum datum;
  std::set<int> parabolic_nodes;
};

inline std::set<int> omit_nodes(int rank, const std::set<int>& omitted) {
  std::set<int> nodes;
  for (int i = 1; i <= rank; ++i)
    if (!omitted.count(i)) nodes.insert(i);
  return nodes;
}

// A two-orbit wonderful completion X -> Xbar <- D: the ambient Xbar and
// the boundary divisor D are both flag varieties, codimension fixed to 1.
struct TwoOrbitRecord {
  std::string name;
  int dim_x = 0;
  FlagSpec ambient;
  FlagSpec boundary;
  int codim = 1;
  std::optional<CellInventory> expected_stable_cells;
};

// A homogeneous space that is itself a motivic sphere; its inventory is
// {(0,0), (p,w)}.
struct SphereRecord {
  std::string name;
  int dim = 0;
  CellInventory inventory;
};

using RegistryRecord = std::variant<TwoOrbitRecord, SphereRecord>;

// Known two-orbit completions and affine quadric spheres.
//   HPn(n):     quaternionic projective space, ambient Gr(2, 2n+2),
//               boundary the symplectic Grassmannian SpGr(2, 2n+2).
//   OP2:        octonionic projective plane, ambient E6/P1 (the complex
//               Cayley plane), boundary F4/P4.
//   AQ_odd(n):  odd affine quadric, the sphere S^{2n-1,n}.
//   AQ_even(n): even affine quadric; ambient the projective quadric of
//               dimension 2n, boundary the one of dimension 2n-1.
inline RegistryRecord registry(const std::string& name,
                               std::optional<int> n = std::nullopt) {
  auto need_n = [&]() {
    require(n.has_value() && *n >= 1, Errc::invalid_param,
            name + " requires a parameter n >= 1");
    return *n;
  };

  if (name == "HPn") {
    const int k = need_n();
    TwoOrbitRecord rec;
    rec.name = "HP" + std::to_string(k);
    rec.dim_x = 4 * k;
    rec.ambient = {build_cartan(Family::A, 2 * k + 1),
                   omit_nodes(2 * k + 1, {2})};
    rec.boundary = {build_cartan(Family::C, k + 1), omit_nodes(k + 1, {2})};
    CellInventory expected(Pointing::plus);
    for (int i = 0; i <= k; ++i) expected.add({4 * i, 2 * i});
    rec.expected_stable_cells = std::move(expected);
    return rec;
  }
  if (name == "OP2") {
    TwoOrbitRecord rec;
    rec.name = "OP2";
    rec.dim_x = 16;
    rec.ambient = {build_cartan(Family::E, 6), omit_nodes(6, {1})};
    rec.boundary = {build_cartan(Family::F, 4), omit_nodes(4, {4})};
    CellInventory expected(Pointing::plus);
    expected.add({0, 0});
    expected.add({8, 4});
    expected.add({16, 8});
    rec.expected_stable_cells = std::move(expected);
    return rec;
  }
  if (name == "AQ_odd") {
    const int k = need_n();
    SphereRecord rec;
    rec.name = "AQ_" + std::to_string(2 * k - 1);
    rec.dim = 2 * k - 1;
    rec.inventory = CellInventory(Pointing::plus);
    rec.inventory.add({0, 0});
    rec.inventory.add({2 * k - 1, k});
    return rec;
  }
  if (name == "AQ_even") {
    const int k = need_n();
    TwoOrbitRecord rec;
    rec.name = "AQ_" + std::to_string(2 * k);
    rec.dim_x = 2 * k;
    // Projective quadrics: Q_{2k} is SO_{2k+2}/P_1 and Q_{2k-1} is
    // SO_{2k+1}/P_1.  At k = 1 both degenerate: Q_2 = P^1 x P^1 is the
    // full flag variety of D2 = A1 x A1, and Q_1 = P^1 that of A1.
    if (k == 1) {
      rec.ambient = {build_cartan(Family::D, 2), {}};
      rec.boundary = {build_cartan(Family::A, 1), {}};
    } else {
      rec.ambient = {build_cartan(Family::D, k + 1), omit_nodes(k + 1, {1})};
      rec.boundary = {build_cartan(Family::B, k), omit_nodes(k, {1})};
    }
    CellInventory expected(Pointing::plus);
    expected.add({0, 0});
    expected.add({2 * k, k});
    rec.expected_stable_cells = std::move(expected);
    return rec;
  }
  fail(Errc::unknown_name, "no registry entry named '" + name + "'");
}

inline CellInventory flag_cells(const FlagSpec& spec,
                                std::int64_t budget = kDefaultWeylBudget) {
  return flag_cell_inventory(
      parabolic_quotient(spec.datum, spec.parabolic_nodes, budget));
}

// Minimal stable inventory of the open orbit X: invert the purity
// relation chi(Xbar) = chi(X) + x chi(D) at the even-pure level.
inline CellInventory minimal_stable_cells(const TwoOrbitRecord& rec) {
  CellInventory ambient = flag_cells(rec.ambient);
  CellInventory boundary = flag_cells(rec.boundary);
  CellInventory out = stable_solve(ambient, tate_twist(boundary, rec.codim));
  if (rec.expected_stable_cells)
    require(out == *rec.expected_stable_cells, Errc::internal_check,
            rec.name + ": solved stable cells differ from the registry data");
  return out;
}

// Constructive cells of Sigma X from the Bruhat cells of the completion
// and its boundary: both are flag varieties, the boundary's cells are
// affine spaces (hence atacc), and one purity step yields the level-1
// certificate.
inline std::pair<CellInventory, CellCertificate> suspended_unstable_cells(
    const TwoOrbitRecord& rec) {
  CellInventory ambient = flag_cells(rec.ambient);
  CellInventory boundary = flag_cells(rec.boundary);
  CellInventory cells = purity_extend(ambient, boundary, rec.codim, 0);
  std::vector<TraceStep> trace{
      {Rule::bruhat, "Bruhat cells of the completion " + rec.name,
       CertLevel::suspended(0)},
      {Rule::bruhat, "Bruhat cells of the boundary divisor",
       CertLevel::suspended(0)},
      {Rule::atacc, "boundary Bruhat cells are affine spaces",
       CertLevel::suspended(0)},
      {Rule::purity, "codimension-1 purity cofiber, suspended once",
       CertLevel::suspended(1)},
  };
  return {std::move(cells),
          CellCertificate(CertLevel::suspended(1), std::move(trace))};
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Consistency checks for registry data: dimension identities (flag
// dimension = maximal coset length), the signed-polynomial identity
// chi(ambient) = chi(X) + x chi(boundary), and the cell-count identity it
// implies at x = 1.
inline VerifyReport verify_record(const TwoOrbitRecord& rec) {
  VerifyReport report;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({name, ok, detail});
  };

  ParabolicQuotient amb = parabolic_quotient(rec.ambient.datum,
                                             rec.ambient.parabolic_nodes);
  ParabolicQuotient bnd = parabolic_quotient(rec.boundary.datum,
                                             rec.boundary.parabolic_nodes);
  add("codim", rec.codim == 1, "boundary divisor has codimension 1");
  add("ambient-dimension", amb.max_length == rec.dim_x,
      "dim completion = " + std::to_string(amb.max_length) + ", expected " +
          std::to_string(rec.dim_x));
  add("boundary-dimension", bnd.max_length == rec.dim_x - 1,
      "dim boundary = " + std::to_string(bnd.max_length) + ", expected " +
          std::to_string(rec.dim_x - 1));

  if (rec.expected_stable_cells) {
    SignedTatePolynomial lhs = signed_poly(flag_cell_inventory(amb));
    SignedTatePolynomial rhs =
        signed_poly(*rec.expected_stable_cells) +
        signed_poly(flag_cell_inventory(bnd)).shifted(rec.codim);
    add("chi-identity", lhs == rhs,
        "chi(completion) = " + lhs.to_string() + ", chi(X) + x*chi(boundary) = " +
            rhs.to_string());
    const std::int64_t ambient_cells =
        static_cast<std::int64_t>(amb.representatives.size());
    const std::int64_t split_cells =
        rec.expected_stable_cells->total_cells() +
        static_cast<std::int64_t>(bnd.representatives.size());
    add("cell-count", ambient_cells == split_cells,
        std::to_string(ambient_cells) + " = " +
            std::to_string(rec.expected_stable_cells->total_cells()) + " + " +
            std::to_string(bnd.representatives.size()));
  }
  return report;
}

// For sphere entries: shape of the inventory and the point-count identity
// #AQ_{2n-1}(F_q) = q^{n-1}(q^n - 1) at small q.
inline VerifyReport verify_record(const SphereRecord& rec) {
  VerifyReport report;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({name, ok, detail});
  };

  const auto& cells = rec.inventory.cells();
  bool shape = cells.size() == 2 && rec.inventory.total_cells() == 2 &&
               rec.inventory.multiplicity({0, 0}) == 1;
  add("sphere-shape", shape, "inventory is {(0,0)} plus a single sphere cell");
  if (!shape) return report;

  Bidegree top{0, 0};
  for (const auto& [d, m] : cells)
    if (!(d == Bidegree{0, 0})) top = d;
  add("dimension", top.p == rec.dim,
      "top cell degree " + std::to_string(top.p) + " matches dim " +
          std::to_string(rec.dim));

  const int n = top.w;
  bool counts_ok = true;
  for (int q : {2, 3, 5}) {
    BigInt lhs = point_count_eval(rec.inventory, rec.dim, q);
    BigInt rhs = big_pow(q, static_cast<unsigned>(n - 1)) *
                 (big_pow(q, static_cast<unsigned>(n)) - 1);
    if (lhs != rhs) counts_ok = false;
  }
  add("point-count", counts_ok, "matches q^(n-1)(q^n - 1) at q = 2, 3, 5");
  return report;
}

inline VerifyReport verify_record(const RegistryRecord& rec) {
  return std::visit([](const auto& r) { return verify_record(r); }, rec);
}

}  // namespace motocell
