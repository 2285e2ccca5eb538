#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motocell/cells.hpp"
#include "motocell/certificate.hpp"
#include "motocell/error.hpp"
#include "motocell/numeric.hpp"

namespace motocell {

// One piece of a closure filtration: a locally closed stratum isomorphic
// to A^affine_rank x Gm^torus_rank, sitting in the total variety with the
// given codimension.  `atacc` is an input assumption (whether the stratum
// admits a totally affinely contractible cover), never verified here.
struct Stratum {
  std::string label;
  int affine_rank = 0;
  int torus_rank = 0;
  int codim = 0;
  bool atacc = true;
};

// Closure filtration, strata listed in filtration order.  Plain data:
// files are ingested into this shape first and validated separately, so
// inconsistent inputs are representable and then rejected.
struct Stratification {
  int total_dim = 0;
  std::vector<Stratum> strata;
};

// True iff every stratum is in consistent Rosenlicht form: nonnegative
// ranks, affine_rank + torus_rank + codim = total_dim, exactly one open
// stratum, unique labels.
inline bool very_linear_validate(const Stratification& f) {
  if (f.total_dim < 0 || f.strata.empty()) return false;
  int open_count = 0;
  std::set<std::string> labels;
  for (const Stratum& s : f.strata) {
    if (s.affine_rank < 0 || s.torus_rank < 0 || s.codim < 0) return false;
    if (s.affine_rank + s.torus_rank + s.codim != f.total_dim) return false;
    if (s.codim == 0) ++open_count;
    if (!labels.insert(s.label).second) return false;
  }
  return open_count == 1;
}

inline void require_valid(const Stratification& f) {
  require(very_linear_validate(f), Errc::inconsistent_dimensions,
          "stratification fails the Rosenlicht-form dimension checks");
}

// Plus inventory of A^n x Gm^r.  The affine factor is contractible and
// contributes nothing; the torus contributes binomially: {(i,i) : C(r,i)}.
inline CellInventory stratum_cells(const Stratum& s) {
  CellInventory gm(Pointing::plus);
  gm.add({0, 0});
  if (s.torus_rank >= 1) gm.add({1, 1});
  if (s.torus_rank <= 1) return gm;
  CellInventory out = gm;
  for (int i = 1; i < s.torus_rank; ++i) out = product_inventory(out, gm);
  return out;
}

// Iterated purity at the stable level: each stratum contributes its cells
// twisted by its codimension.  The inventory is generally non-minimal
// (attaching maps are untracked, so no cancellation is attempted).
inline std::pair<CellInventory, CellCertificate> stable_cells_from_filtration(
    const Stratification& f) {
  require_valid(f);
  CellInventory inv(Pointing::plus);
  std::vector<TraceStep> trace;
  for (const Stratum& s : f.strata) {
    inv = unite(inv, tate_twist(stratum_cells(s), s.codim), Pointing::plus);
    trace.push_back({Rule::purity,
                     "stratum '" + s.label + "' twisted by codim " +
                         std::to_string(s.codim),
                     CertLevel::stable()});
  }
  return {inv, CellCertificate(CertLevel::stable(), std::move(trace))};
}

// Unstable cells for a filtration of the iterated-Thom-space shape:
// stages M_0 = point c M_1 c ... c M_k, where the closed piece of M_i is
// the total space of a rank bundle_ranks[i] bundle over M_{i-1} and the
// open complement (the stratum) is contractible.  Stage i then satisfies
// M_i ~ Th(N_i), so its plus cells are {(0,0)} u twist(cells(M_{i-1}), c_i)
// with c_i the codimension of the closed piece inside M_i.
//
// Strata are matched to stages by decreasing codimension; bundle_ranks is
// indexed like f.strata.
inline std::pair<CellInventory, CellCertificate> tower_cells_unstable(
    const Stratification& f, const std::vector<int>& bundle_ranks) {
  require_valid(f);
  require(bundle_ranks.size() == f.strata.size(), Errc::shape_mismatch,
          "need one bundle rank per stratum");
  for (const Stratum& s : f.strata)
    require(s.atacc, Errc::not_atacc,
            "stratum '" + s.label + "' is not flagged atacc");

  std::vector<std::pair<Stratum, int>> stages;
  for (std::size_t i = 0; i < f.strata.size(); ++i) {
    require(bundle_ranks[i] >= 0, Errc::shape_mismatch,
            "bundle ranks must be nonnegative");
    stages.emplace_back(f.strata[i], bundle_ranks[i]);
  }
  std::stable_sort(stages.begin(), stages.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.codim > b.first.codim;
                   });

  const Stratum& base = stages.front().first;
  require(base.affine_rank == 0 && base.torus_rank == 0, Errc::shape_mismatch,
          "deepest stratum must be a point (the tower starts at M_0 = *)");
  require(stages.front().second == 0, Errc::shape_mismatch,
          "the base point carries no bundle");

  std::vector<TraceStep> trace;
  trace.push_back({Rule::completion, "M_0 = point", CertLevel::suspended(0)});
  CellInventory inv = CellInventory::point();
  int prev_dim = 0;
  for (std::size_t i = 1; i < stages.size(); ++i) {
    const Stratum& s = stages[i].first;
    const int rank = stages[i].second;
    require(s.torus_rank == 0, Errc::shape_mismatch,
            "stratum '" + s.label +
                "' has a torus factor; tower complements must be contractible");
    const int stage_dim = f.total_dim - s.codim;
    const int codim_in_stage = stage_dim - prev_dim - rank;
    require(codim_in_stage >= 1, Errc::shape_mismatch,
            "stage '" + s.label + "' leaves codimension " +
                std::to_string(codim_in_stage) + " for the closed piece");
    inv = unite(CellInventory::point(), tate_twist(inv, codim_in_stage),
                Pointing::plus);
    trace.push_back({Rule::purity,
                     "stage '" + s.label + "': closed piece is a rank-" +
                         std::to_string(rank) + " bundle, Thom twist by " +
                         std::to_string(codim_in_stage) +
                         " (strata assumed atacc)",
                     CertLevel::suspended(0)});
    prev_dim = stage_dim;
  }
  require(prev_dim == f.total_dim, Errc::shape_mismatch,
          "top stage does not reach the total dimension");
  return {inv, CellCertificate(CertLevel::suspended(0), std::move(trace))};
}

// Oracle: #X(F_q) = sum over strata of q^affine (q-1)^torus.
inline BigInt point_count_stratified(const Stratification& f, const BigInt& q) {
  require_valid(f);
  BigInt total = 0;
  for (const Stratum& s : f.strata)
    total += big_pow(q, static_cast<unsigned>(s.affine_rank)) *
             big_pow(q - 1, static_cast<unsigned>(s.torus_rank));
  return total;
}

}  // namespace motocell
