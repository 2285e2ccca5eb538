#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "motocell/cartan.hpp"
#include "motocell/cells.hpp"
#include "motocell/error.hpp"

namespace motocell {

inline constexpr std::int64_t kDefaultWeylBudget = 1'000'000;

namespace detail {

// s_i acting on a vector in simple-root coordinates.
inline void reflect_root(const IntMatrix& cartan, int i, std::vector<int>& v) {
  int pairing = 0;
  for (std::size_t k = 0; k < v.size(); ++k) pairing += cartan[i][k] * v[k];
  v[i] -= pairing;
}

// s_i acting on a vector in fundamental-weight coordinates.
inline void reflect_weight(const IntMatrix& cartan, int i, std::vector<int>& v) {
  const int vi = v[i];
  if (vi == 0) return;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= vi * cartan[j][i];
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// All roots of the system, generated from the simple roots by reflection
// closure; returns the positive ones (every root has coordinates of one
// sign, so the sign of any nonzero coordinate decides).
inline std::vector<std::vector<int>> positive_roots(const IntMatrix& cartan) {
  const int rank = static_cast<int>(cartan.size());
  std::set<std::vector<int>> all;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    std::vector<int> v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      std::vector<int> w = v;
      detail::reflect_root(cartan, i, w);
      if (all.insert(w).second) queue.push_back(std::move(w));
    }
  }
  std::vector<std::vector<int>> positives;
  for (const auto& v : all) {
    for (int x : v) {
      if (x > 0) {
        positives.push_back(v);
        break;
      }
      if (x < 0) break;
    }
  }
  return positives;
}

// A Weyl group element in canonical form: the tuple of images of the
// simple roots under its action on the root lattice, plus its length.
// Equality is equality of the tuples.
struct WeylElement {
  std::vector<std::vector<int>> images;  // images[j] = w(alpha_j)
  int length = 0;

  static WeylElement identity(int rank) {
    WeylElement w;
    w.images.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) w.images[i][i] = 1;
    w.length = 0;
    return w;
  }

  // w(v) for v in simple-root coordinates.
  std::vector<int> apply(const std::vector<int>& v) const {
    std::vector<int> out(images.empty() ? 0 : images[0].size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += v[j] * images[j][k];
    }
    return out;
  }

  bool maps_to_positive(const std::vector<int>& root) const {
    for (int x : apply(root)) {
      if (x > 0) return true;
      if (x < 0) return false;
    }
    return false;
  }

  std::vector<int> flattened() const {
    std::vector<int> flat;
    for (const auto& col : images) flat.insert(flat.end(), col.begin(), col.end());
    return flat;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.images == b.images;
  }
};

// Number of positive roots sent to negative roots; the definition of
// length, used to cross-check BFS depths.
inline int length_by_root_count(const WeylElement& w,
                                const std::vector<std::vector<int>>& positives) {
  int count = 0;
  for (const auto& root : positives)
    if (!w.maps_to_positive(root)) ++count;
  return count;
}

// |W| by breadth-first generation of the action on the root lattice.
// Refuses with ResourceLimit once more than `budget` distinct elements
// have been seen (E7/E8 exceed the default on purpose).
inline std::int64_t weyl_order_bfs(const IntMatrix& cartan,
                                   std::int64_t budget = kDefaultWeylBudget) {
  const int rank = static_cast<int>(cartan.size());
  if (rank == 0) return 1;
  std::unordered_set<std::vector<int>, detail::VecHash> seen;
  std::deque<std::vector<std::vector<int>>> queue;

  WeylElement id = WeylElement::identity(rank);
  seen.insert(id.flattened());
  queue.push_back(id.images);

  while (!queue.empty()) {
    auto images = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      auto next = images;
      for (auto& col : next) detail::reflect_root(cartan, i, col);
      std::vector<int> flat;
      for (const auto& col : next) flat.insert(flat.end(), col.begin(), col.end());
      if (seen.insert(std::move(flat)).second) {
        require(static_cast<std::int64_t>(seen.size()) <= budget,
                Errc::resource_limit,
                "Weyl group enumeration exceeded budget of " +
                    std::to_string(budget) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

inline std::int64_t weyl_order(const CartanDatum& datum,
                               std::int64_t budget = kDefaultWeylBudget) {
  return weyl_order_bfs(datum.cartan, budget);
}

// |W| by the product of the invariant degrees.  Agrees with the BFS
// wherever the BFS is feasible and covers E7/E8 without enumeration.
inline std::int64_t weyl_order_by_degrees(const CartanDatum& datum) {
  const int n = datum.rank;
  auto factorial = [](int m) {
    std::int64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (datum.family) {
    case Family::A:
      return factorial(n + 1);
    case Family::B:
    case Family::C:
      return (std::int64_t{1} << n) * factorial(n);
    case Family::D:
      return (std::int64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  fail(Errc::invalid_type, "unhandled family");
}

// Minimal-length coset representatives of W / W_P with their lengths.
// parabolic_nodes are the Bourbaki labels (1-based) of the nodes IN the
// parabolic.
struct ParabolicQuotient {
  CartanDatum datum;
  std::set<int> parabolic_nodes;
  std::vector<WeylElement> representatives;  // sorted by (length, images)
  int max_length = 0;
};

// Enumerates W^P by breadth-first search on the orbit of a weight that is
// strictly dominant exactly on the nodes outside the parabolic; the BFS
// depth of an orbit point is the length of its minimal representative.
// Only the orbit is materialized, never all of W.
inline ParabolicQuotient parabolic_quotient(
    const CartanDatum& datum, const std::set<int>& parabolic_nodes,
    std::int64_t budget = kDefaultWeylBudget) {
  const int rank = datum.rank;
  for (int node : parabolic_nodes)
    require(node >= 1 && node <= rank, Errc::invalid_param,
            "parabolic node " + std::to_string(node) + " outside 1.." +
                std::to_string(rank));
  const IntMatrix& cartan = datum.cartan;

  std::vector<int> start(rank, 0);
  for (int i = 0; i < rank; ++i)
    if (!parabolic_nodes.count(i + 1)) start[i] = 1;

  struct Node {
    std::vector<int> weight;
    int depth;
    int parent;
    int generator;
  };
  std::vector<Node> nodes;
  std::map<std::vector<int>, int> index;
  nodes.push_back({start, 0, -1, -1});
  index.emplace(start, 0);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (int i = 0; i < rank; ++i) {
      std::vector<int> next = nodes[head].weight;
      detail::reflect_weight(cartan, i, next);
      if (next == nodes[head].weight) continue;
      auto [it, inserted] = index.emplace(next, static_cast<int>(nodes.size()));
      if (inserted) {
        require(static_cast<std::int64_t>(nodes.size()) < budget,
                Errc::resource_limit,
                "weight orbit exceeded budget of " + std::to_string(budget));
        nodes.push_back({std::move(next), nodes[head].depth + 1,
                         static_cast<int>(head), i});
      }
    }
  }

  // Rebuild each representative by composing generators down the BFS tree:
  // child weight = s_i(parent weight) means child element = s_i * parent.
  std::vector<WeylElement> reps(nodes.size());
  reps[0] = WeylElement::identity(rank);
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    reps[k] = reps[nodes[k].parent];
    for (auto& col : reps[k].images)
      detail::reflect_root(cartan, nodes[k].generator, col);
    reps[k].length = nodes[k].depth;
  }

  const auto positives = positive_roots(cartan);
  for (const auto& rep : reps)
    require(length_by_root_count(rep, positives) == rep.length,
            Errc::internal_check,
            "BFS depth disagrees with the root-counting length");

  std::sort(reps.begin(), reps.end(),
            [](const WeylElement& a, const WeylElement& b) {
              if (a.length != b.length) return a.length < b.length;
              return a.flattened() < b.flattened();
            });

  ParabolicQuotient q{datum, parabolic_nodes, std::move(reps), 0};
  for (const auto& rep : q.representatives)
    q.max_length = std::max(q.max_length, rep.length);

  // Poincare duality of G/P: the length generating function is symmetric.
  std::vector<std::int64_t> hist(q.max_length + 1, 0);
  for (const auto& rep : q.representatives) ++hist[rep.length];
  for (std::size_t i = 0; i < hist.size(); ++i)
    require(hist[i] == hist[hist.size() - 1 - i], Errc::internal_check,
            "length generating function is not palindromic");
  require(hist[0] == 1, Errc::internal_check,
          "expected exactly one representative of length 0");

  return q;
}

// Bruhat cells of the plus-pointed flag variety G/P: one (2l, l) cell per
// minimal representative of length l.
inline CellInventory flag_cell_inventory(const ParabolicQuotient& quotient) {
  CellInventory inv(Pointing::plus);
  for (const auto& rep : quotient.representatives)
    inv.add({2 * rep.length, rep.length});
  return inv;
}

}  // namespace motocell
