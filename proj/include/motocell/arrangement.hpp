#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motocell/cells.hpp"
#include "motocell/certificate.hpp"
#include "motocell/error.hpp"
#include "motocell/numeric.hpp"
#include "motocell/purity.hpp"
#include "motocell/subspace.hpp"
#include "motocell/tate_polynomial.hpp"

namespace motocell {

// A finite list of affine subspaces of a common A^n.
struct Arrangement {
  int ambient_dim = 0;
  std::vector<Subspace> subspaces;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

// Canonical form: duplicates removed, members contained in another single
// member removed (the union is unchanged), sorted by dimension then by
// canonical coordinates.  Idempotent.
inline Arrangement normalize(const Arrangement& arr) {
  for (const Subspace& s : arr.subspaces)
    require(s.ambient_dim() == arr.ambient_dim, Errc::ambient_mismatch,
            "member does not live in the declared ambient space");
  std::vector<Subspace> distinct = arr.subspaces;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Subspace> kept;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool swallowed = false;
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (i != j && distinct[j].contains(distinct[i])) {
        swallowed = true;
        break;
      }
    if (!swallowed) kept.push_back(distinct[i]);
  }
  return Arrangement{arr.ambient_dim, std::move(kept)};
}

inline bool is_normalized(const Arrangement& arr) {
  return normalize(arr) == arr;
}

// All distinct nonempty intersections of subsets of the arrangement,
// ordered by inclusion with the ambient space as top element, with the
// Mobius function of every interval.
struct IntersectionLattice {
  std::vector<Subspace> elements;  // elements[top] is the ambient space
  int top = 0;
  std::vector<std::vector<bool>> leq;           // leq[i][j]: i contained in j
  std::vector<std::vector<std::int64_t>> mobius;  // mobius[i][j] for i <= j

  std::int64_t mobius_to_top(int i) const { return mobius[i][top]; }
};

inline IntersectionLattice intersection_lattice(const Arrangement& arr) {
  std::vector<Subspace> elements{Subspace::full(arr.ambient_dim)};
  // Closure under intersection with the members; new elements strictly
  // drop dimension, so this terminates.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Subspace& member : arr.subspaces) {
      std::optional<Subspace> meet = intersect(elements[head], member);
      if (!meet) continue;
      if (std::find(elements.begin(), elements.end(), *meet) == elements.end())
        elements.push_back(std::move(*meet));
    }
  }
  // Sort by increasing dimension so Mobius recursion can run in order.
  std::sort(elements.begin(), elements.end());

  const int n = static_cast<int>(elements.size());
  IntersectionLattice lat;
  lat.elements = std::move(elements);
  lat.top = n - 1;  // ambient has maximal dimension, hence sorts last
  lat.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lat.leq[i][j] = lat.elements[j].contains(lat.elements[i]);

  // mu(x, x) = 1 and sum over x <= z <= y of mu(x, z) vanishes for x < y.
  lat.mobius.assign(n, std::vector<std::int64_t>(n, 0));
  for (int x = 0; x < n; ++x) {
    lat.mobius[x][x] = 1;
    for (int y = x + 1; y < n; ++y) {
      if (!lat.leq[x][y]) continue;
      std::int64_t acc = 0;
      for (int z = x; z < y; ++z)
        if (lat.leq[x][z] && lat.leq[z][y]) acc += lat.mobius[x][z];
      lat.mobius[x][y] = -acc;
    }
  }
  return lat;
}

// Exact number of F_q points of A^n minus the union, via the lattice:
// sum over lattice elements z of mu(z, top) q^{dim z}.
inline BigInt point_count_inclusion_exclusion(const Arrangement& arr,
                                              const BigInt& q) {
  for (const Subspace& s : arr.subspaces)
    if (s.dim() == arr.ambient_dim) return 0;  // a member covers everything
  IntersectionLattice lat = intersection_lattice(arr);
  BigInt total = 0;
  for (int i = 0; i < static_cast<int>(lat.elements.size()); ++i)
    total += BigInt(lat.mobius_to_top(i)) *
             big_pow(q, static_cast<unsigned>(lat.elements[i].dim()));
  return total;
}

// The signed polynomial of the complement read off the same lattice sum:
// the q^{n-w} coefficient of the count is the weight-w coefficient.
inline SignedTatePolynomial complement_chi_oracle(const Arrangement& arr) {
  IntersectionLattice lat = intersection_lattice(arr);
  SignedTatePolynomial chi;
  for (int i = 0; i < static_cast<int>(lat.elements.size()); ++i)
    chi.add(arr.ambient_dim - lat.elements[i].dim(), lat.mobius_to_top(i));
  return chi;
}

// Shape of the recursion that produced a complement inventory.
struct RecursionTrace {
  std::string description;
  int members = 0;
  int level = 0;
  std::vector<RecursionTrace> children;
};

struct ComplementCells {
  CellInventory cells;  // cells of Sigma^level (X_+)
  CellCertificate certificate;
  RecursionTrace trace;
  int level = 0;        // achieved suspension level
  int level_bound = 0;  // members - 1, the a-priori bound
};

namespace detail {

struct ComplementResult {
  CellInventory cells;
  int level = 0;
  RecursionTrace trace;
  std::vector<TraceStep> steps;
};

inline ComplementResult complement_base(const Arrangement& arr) {
  const Subspace& member = arr.subspaces.front();
  const int n = arr.ambient_dim;
  const int k = member.dim();
  CellInventory inv(Pointing::plus);
  inv.add({0, 0});
  inv.add({2 * (n - k) - 1, n - k});
  std::string what = "A^" + std::to_string(n) + " minus one dim-" +
                     std::to_string(k) + " subspace";
  ComplementResult out{std::move(inv), 0, {what, 1, 0, {}}, {}};
  out.steps.push_back({Rule::arrangement, what, CertLevel::suspended(0)});
  return out;
}

inline ComplementResult complement_recurse(const Arrangement& arr,
                                           int pivot_offset) {
  const int members = static_cast<int>(arr.subspaces.size());
  if (members == 1) return complement_base(arr);

  const int pivot = pivot_offset % members;
  const Subspace& chosen = arr.subspaces[pivot];
  Arrangement rest{arr.ambient_dim, {}};
  for (int i = 0; i < members; ++i)
    if (i != pivot) rest.subspaces.push_back(arr.subspaces[i]);

  ComplementResult ambient = complement_recurse(rest, pivot_offset);

  // The closed piece is chosen minus the induced arrangement inside it,
  // expressed in the chart A^{dim chosen}.
  Arrangement induced{chosen.dim(), {}};
  for (const Subspace& other : rest.subspaces) {
    std::optional<Subspace> tr = restrict_to_chart(chosen, other);
    if (tr) induced.subspaces.push_back(std::move(*tr));
  }
  induced = normalize(induced);

  ComplementResult closed;
  if (induced.subspaces.empty()) {
    // chosen meets no other member: the closed piece is all of it,
    // a contractible affine space.
    CellInventory inv(Pointing::plus);
    inv.add({0, 0});
    closed = {std::move(inv),
              0,
              {"A^" + std::to_string(chosen.dim()) + " (no induced members)",
               0, 0, {}},
              {}};
    closed.steps.push_back({Rule::arrangement,
                            "closed piece is a full affine space",
                            CertLevel::suspended(0)});
  } else {
    closed = complement_recurse(induced, pivot_offset);
  }

  const int codim = arr.ambient_dim - chosen.dim();
  auto [cells, level] = purity_assemble(ambient.cells, ambient.level,
                                        closed.cells, closed.level, codim);

  ComplementResult out;
  out.cells = std::move(cells);
  out.level = level;
  out.trace.description = "purity split at member " + std::to_string(pivot) +
                          " (codim " + std::to_string(codim) + ")";
  out.trace.members = members;
  out.trace.level = level;
  out.trace.children.push_back(std::move(ambient.trace));
  out.trace.children.push_back(std::move(closed.trace));
  out.steps = std::move(ambient.steps);
  out.steps.insert(out.steps.end(), closed.steps.begin(), closed.steps.end());
  out.steps.push_back({Rule::purity, out.trace.description,
                       CertLevel::suspended(level)});

  // Oracle check at every recursion level: the inventory of
  // Sigma^level (X_+) must match the lattice point-count polynomial.
  SignedTatePolynomial expected = complement_chi_oracle(arr);
  if (level % 2 != 0) expected = -expected;
  require(signed_poly(out.cells) == expected, Errc::internal_check,
          "complement cells disagree with the inclusion-exclusion oracle");
  return out;
}

}  // namespace detail

// Cells of Sigma^level (X_+) for X = A^n minus the union of the
// arrangement, by induction over the members: remove a pivot, recurse on
// the rest and on the induced arrangement inside the pivot, and glue with
// homotopy purity.  The achieved level is certified and bounded by
// members - 1.  pivot_offset varies which member is removed first;
// different choices may produce different redundant inventories with the
// same signed polynomial.
inline ComplementCells complement_cells(const Arrangement& arr,
                                        int pivot_offset = 0) {
  require(!arr.subspaces.empty(), Errc::empty_arrangement,
          "arrangement has no members");
  require(arr.ambient_dim >= 1, Errc::invalid_input,
          "ambient dimension must be at least 1");
  require(is_normalized(arr), Errc::non_normalized,
          "arrangement must be normalized first");
  require(pivot_offset >= 0, Errc::invalid_param,
          "pivot offset must be nonnegative");
  for (const Subspace& s : arr.subspaces)
    require(s.dim() < arr.ambient_dim, Errc::invalid_input,
            "a member equals the ambient space; the complement is empty");

  detail::ComplementResult r = detail::complement_recurse(arr, pivot_offset);
  const int bound = static_cast<int>(arr.subspaces.size()) - 1;
  CellCertificate cert(CertLevel::suspended(r.level), std::move(r.steps));
  return ComplementCells{std::move(r.cells), std::move(cert),
                         std::move(r.trace), r.level, bound};
}

// Linearity degrees of (union of r hyperplanes, its complement) = (r-1, r)
// after normalization.
inline std::pair<int, int> linearity_degree(const Arrangement& arr) {
  for (const Subspace& s : arr.subspaces)
    require(s.dim() == arr.ambient_dim - 1, Errc::not_hyperplanes,
            "linearity degrees are defined for hyperplane arrangements");
  const int r = static_cast<int>(normalize(arr).subspaces.size());
  require(r >= 1, Errc::empty_arrangement, "arrangement has no members");
  return {r - 1, r};
}

}  // namespace motocell
