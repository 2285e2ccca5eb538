#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motocell/error.hpp"
#include "motocell/numeric.hpp"

namespace motocell {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

inline std::optional<Family> parse_family(const std::string& s) {
  if (s.size() != 1) return std::nullopt;
  char c = s[0];
  if (c >= 'A' && c <= 'G') return static_cast<Family>(c);
  return std::nullopt;
}

using IntMatrix = std::vector<std::vector<int>>;

// A finite root system in Bourbaki numbering.  The matrix convention is
// cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
// so the simple reflection s_i acts on root coordinates v by
// v_i -= sum_k cartan[i][k] v_k, and on fundamental-weight coordinates by
// subtracting lambda_i times column i.
struct CartanDatum {
  Family family;
  int rank;
  IntMatrix cartan;  // rank x rank, 0-based; node labels are 1..rank
};

namespace detail {

// Symmetrize d_i * c[i][j] and test positive definiteness of the result
// by exact leading principal minors.
inline bool finite_type(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n) return false;
    if (c[i][i] != 2) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && c[i][j] > 0) return false;
      if (i != j && ((c[i][j] == 0) != (c[j][i] == 0))) return false;
    }
  }

  // Propagate the symmetrizer over each connected component of the diagram.
  std::vector<Rational> d(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        Rational expected = d[i] * Rational(c[i][j]) / Rational(c[j][i]);
        if (d[j] == 0) {
          d[j] = expected;
          stack.push_back(j);
        } else if (d[j] != expected) {
          return false;  // no consistent symmetrizer
        }
      }
    }
  }

  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = d[i] * Rational(c[i][j]);

  // Leading principal minors via fraction-free forward elimination.
  for (int k = 0; k < n; ++k) {
    if (s[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = s[i][k] / s[k][k];
      for (int j = k; j < n; ++j) s[i][j] -= f * s[k][j];
    }
  }
  return true;
}

}  // namespace detail

// Bourbaki Cartan matrix for a valid finite-type (family, rank) pair.
// D is accepted for rank >= 2 (D2 = A1 x A1 and D3 = A3 are the usual
// degenerate aliases; the construction below yields them automatically).
inline CartanDatum build_cartan(Family family, int rank) {
  auto reject = [&](const std::string& why) {
    fail(Errc::invalid_type,
         std::string(1, static_cast<char>(family)) + std::to_string(rank) +
             " is not a finite type: " + why);
  };
  if (rank < 1) reject("rank must be positive");

  IntMatrix c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };

  switch (family) {
    case Family::A:
      chain(rank);
      break;
    case Family::B:
      if (rank < 2) reject("B requires rank >= 2");
      chain(rank);
      c[rank - 1][rank - 2] = -2;  // alpha_rank is the short root
      break;
    case Family::C:
      if (rank < 2) reject("C requires rank >= 2");
      chain(rank);
      c[rank - 2][rank - 1] = -2;  // alpha_rank is the long root
      break;
    case Family::D:
      if (rank < 2) reject("D requires rank >= 2");
      chain(rank - 1);
      if (rank >= 3) c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
      break;
    case Family::E: {
      if (rank < 6 || rank > 8) reject("E requires rank in {6,7,8}");
      auto edge = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      edge(1, 3);
      edge(3, 4);
      edge(4, 5);
      edge(5, 6);
      if (rank >= 7) edge(6, 7);
      if (rank >= 8) edge(7, 8);
      edge(2, 4);
      break;
    }
    case Family::F:
      if (rank != 4) reject("F requires rank 4");
      chain(4);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      if (rank != 2) reject("G requires rank 2");
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
  }

  CartanDatum datum{family, rank, std::move(c)};
  require(detail::finite_type(datum.cartan), Errc::internal_check,
          "constructed Cartan matrix is not of finite type");
  return datum;
}

}  // namespace motocell
