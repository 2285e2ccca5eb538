#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>

#include "motocell/error.hpp"

namespace motocell {

// Bidegree (p, w) of a motivic sphere S^{p,w}: p the total degree, w the
// weight.  Everything this library produces satisfies 0 <= w <= p.
struct Bidegree {
  int p = 0;
  int w = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  // Canonical order is by (w, p); it drives every serialization.
  friend std::strong_ordering operator<=>(const Bidegree& a, const Bidegree& b) {
    return std::tie(a.w, a.p) <=> std::tie(b.w, b.p);
  }
};

// `plus` inventories describe X_+ (a disjoint basepoint was adjoined, one
// (0,0) cell per connected component); `reduced` inventories describe a
// space pointed at one of its own rational points.
enum class Pointing { plus, reduced };

constexpr std::string_view pointing_name(Pointing p) {
  return p == Pointing::plus ? "plus" : "reduced";
}

// A finite multiset of sphere bidegrees.  Attaching maps are deliberately
// not represented, so two spaces with equal inventories need not be
// equivalent; the inventory is exactly what the constructive towers track.
class CellInventory {
 public:
  using Cells = std::map<Bidegree, std::int64_t>;

  explicit CellInventory(Pointing pointing = Pointing::plus)
      : pointing_(pointing) {}

  // Inventory of the one-point variety, plus-pointed.
  static CellInventory point() {
    CellInventory inv(Pointing::plus);
    inv.add({0, 0});
    return inv;
  }

  void add(Bidegree d, std::int64_t multiplicity = 1) {
    require(multiplicity > 0, Errc::invalid_input, "multiplicity must be positive");
    require(0 <= d.w && d.w <= d.p, Errc::invalid_input,
            "bidegree (" + std::to_string(d.p) + "," + std::to_string(d.w) +
                ") violates 0 <= w <= p");
    cells_[d] += multiplicity;
  }

  const Cells& cells() const { return cells_; }
  Pointing pointing() const { return pointing_; }
  void set_pointing(Pointing p) { pointing_ = p; }

  // Set by the stable Kunneth product: a cartesian product of unstably
  // cellular spaces need not be unstably cellular, so inventories built
  // that way are only valid stably.
  bool stable_only() const { return stable_only_; }
  void mark_stable_only() { stable_only_ = true; }

  bool empty() const { return cells_.empty(); }

  std::int64_t total_cells() const {
    std::int64_t n = 0;
    for (const auto& [d, m] : cells_) n += m;
    return n;
  }

  std::int64_t multiplicity(Bidegree d) const {
    auto it = cells_.find(d);
    return it == cells_.end() ? 0 : it->second;
  }

  int max_weight() const {
    int w = 0;
    for (const auto& [d, m] : cells_) w = std::max(w, d.w);
    return w;
  }

  // Equality is on the mathematical content (cells and pointing); the
  // stable-only provenance marker is advisory and excluded.
  friend bool operator==(const CellInventory& a, const CellInventory& b) {
    return a.pointing_ == b.pointing_ && a.cells_ == b.cells_;
  }

 private:
  Cells cells_;
  Pointing pointing_;
  bool stable_only_ = false;
};

// Multiset union.  The pointing of a union is context dependent (cofiber
// assemblies produce reduced spaces, filtrations produce plus ones), so
// the caller states it.
inline CellInventory unite(const CellInventory& a, const CellInventory& b,
                           Pointing pointing) {
  CellInventory out(pointing);
  for (const auto& [d, m] : a.cells()) out.add(d, m);
  for (const auto& [d, m] : b.cells()) out.add(d, m);
  if (a.stable_only() || b.stable_only()) out.mark_stable_only();
  return out;
}

// k-fold simplicial suspension: (p, w) -> (p+k, w).  The result of a
// genuine suspension is a reduced space.
inline CellInventory suspend(const CellInventory& inv, int k) {
  require(k >= 0, Errc::invalid_input, "suspension count must be nonnegative");
  if (k == 0) return inv;
  CellInventory out(Pointing::reduced);
  for (const auto& [d, m] : inv.cells()) out.add({d.p + k, d.w}, m);
  if (inv.stable_only()) out.mark_stable_only();
  return out;
}

// Thom twist for a trivialized rank-c bundle: smash with S^{2c,c},
// (p, w) -> (p+2c, w+c).  Thom spaces are pointed, hence reduced output.
inline CellInventory tate_twist(const CellInventory& inv, int c) {
  require(c >= 0, Errc::invalid_input, "twist amount must be nonnegative");
  if (c == 0) return inv;
  CellInventory out(Pointing::reduced);
  for (const auto& [d, m] : inv.cells()) out.add({d.p + 2 * c, d.w + c}, m);
  if (inv.stable_only()) out.mark_stable_only();
  return out;
}

// Smash with Gm^{smash c}: (p, w) -> (p+c, w+c).  Together with suspend
// this factors tate_twist: twist by c = suspend^c after gm_smash by c.
inline CellInventory gm_smash(const CellInventory& inv, int c) {
  require(c >= 0, Errc::invalid_input, "smash count must be nonnegative");
  if (c == 0) return inv;
  CellInventory out(Pointing::reduced);
  for (const auto& [d, m] : inv.cells()) out.add({d.p + c, d.w + c}, m);
  if (inv.stable_only()) out.mark_stable_only();
  return out;
}

// Stable Kunneth convolution of two plus inventories.  Valid stably only;
// the result carries the stable-only marker.
inline CellInventory product_inventory(const CellInventory& a,
                                       const CellInventory& b) {
  require(a.pointing() == Pointing::plus && b.pointing() == Pointing::plus,
          Errc::pointing_mismatch, "product requires plus-pointed inventories");
  CellInventory out(Pointing::plus);
  for (const auto& [da, ma] : a.cells())
    for (const auto& [db, mb] : b.cells())
      out.add({da.p + db.p, da.w + db.w}, ma * mb);
  out.mark_stable_only();
  return out;
}

}  // namespace motocell
