#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motocell/error.hpp"
#include "motocell/linear_algebra.hpp"

namespace motocell {

// An affine subspace of A^n over Q, stored canonically: the basis (as
// rows) in reduced row echelon form, the offset reduced modulo the row
// space (its pivot coordinates are zero).  Equality of subspaces is then
// field-by-field comparison.
class Subspace {
 public:
  // Builds from an offset point and a generating set of direction
  // vectors.  With strict = true a linearly dependent generating set is
  // rejected; otherwise it is reduced.
  Subspace(int ambient_dim, RatVec offset, RatMatrix generators,
           bool strict = false)
      : ambient_dim_(ambient_dim),
        offset_(std::move(offset)),
        basis_(std::move(generators)) {
    require(ambient_dim_ >= 0, Errc::invalid_input,
            "ambient dimension must be nonnegative");
    require(static_cast<int>(offset_.size()) == ambient_dim_,
            Errc::invalid_input, "offset length differs from ambient dimension");
    for (const RatVec& v : basis_)
      require(static_cast<int>(v.size()) == ambient_dim_, Errc::invalid_input,
              "basis vector length differs from ambient dimension");
    const std::size_t given = basis_.size();
    std::vector<int> pivots = rref(basis_);
    require(!strict || basis_.size() == given, Errc::invalid_input,
            "basis vectors are linearly dependent");
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rational f = offset_[pivots[i]];
      if (f == 0) continue;
      for (int c = 0; c < ambient_dim_; ++c) offset_[c] -= f * basis_[i][c];
    }
  }

  static Subspace full(int ambient_dim) {
    RatMatrix id(ambient_dim, RatVec(ambient_dim, 0));
    for (int i = 0; i < ambient_dim; ++i) id[i][i] = 1;
    return Subspace(ambient_dim, RatVec(ambient_dim, 0), std::move(id));
  }

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const RatVec& offset() const { return offset_; }
  const RatMatrix& basis() const { return basis_; }

  // Point of the subspace at parameter values t.
  RatVec point_at(const RatVec& t) const {
    RatVec x = offset_;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (int c = 0; c < ambient_dim_; ++c) x[c] += t[i] * basis_[i][c];
    return x;
  }

  bool contains_point(const RatVec& x) const {
    RatVec residual(ambient_dim_);
    for (int c = 0; c < ambient_dim_; ++c) residual[c] = x[c] - offset_[c];
    reduce_against_basis(residual);
    for (const Rational& r : residual)
      if (r != 0) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    if (!contains_point(other.offset_)) return false;
    for (const RatVec& v : other.basis_) {
      RatVec residual = v;
      reduce_against_basis(residual);
      for (const Rational& r : residual)
        if (r != 0) return false;
    }
    return true;
  }

  RatVec flattened() const {
    RatVec flat = offset_;
    for (const RatVec& row : basis_) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.offset_ == b.offset_ &&
           a.basis_ == b.basis_;
  }

  // Canonical order: dimension first, then the canonical form.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.flattened() < b.flattened();
  }

 private:
  void reduce_against_basis(RatVec& v) const {
    for (const RatVec& row : basis_) {
      int pivot = 0;
      while (pivot < ambient_dim_ && row[pivot] == 0) ++pivot;
      if (pivot == ambient_dim_) continue;
      const Rational f = v[pivot];  // row[pivot] == 1 in RREF
      if (f == 0) continue;
      for (int c = 0; c < ambient_dim_; ++c) v[c] -= f * row[c];
    }
  }

  int ambient_dim_;
  RatVec offset_;
  RatMatrix basis_;
};

// Exact intersection; nullopt when the affine systems are inconsistent.
inline std::optional<Subspace> intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), Errc::ambient_mismatch,
          "subspaces live in different ambient spaces");
  const int n = a.ambient_dim();
  const int ka = a.dim();
  const int kb = b.dim();

  // Unknowns (s, t): a.offset + s*a.basis = b.offset + t*b.basis.
  RatMatrix sys(n, RatVec(ka + kb, 0));
  RatVec rhs(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < ka; ++i) sys[c][i] = a.basis()[i][c];
    for (int j = 0; j < kb; ++j) sys[c][ka + j] = -b.basis()[j][c];
    rhs[c] = b.offset()[c] - a.offset()[c];
  }
  std::optional<AffineSolution> sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;

  RatVec s0(sol->particular.begin(), sol->particular.begin() + ka);
  RatMatrix directions;
  for (const RatVec& v : sol->null_basis) {
    RatVec s(v.begin(), v.begin() + ka);
    directions.push_back(a.point_at(s));
    for (int c = 0; c < n; ++c) directions.back()[c] -= a.offset()[c];
  }
  return Subspace(n, a.point_at(s0), std::move(directions));
}

// The trace of `other` in the parameter chart of `frame`: the affine
// subspace {t in A^dim(frame) : frame.point_at(t) in other}.  The chart
// map is an affine isomorphism A^dim(frame) -> frame, so this is how an
// induced arrangement is pulled inside a member.
inline std::optional<Subspace> restrict_to_chart(const Subspace& frame,
                                                 const Subspace& other) {
  require(frame.ambient_dim() == other.ambient_dim(), Errc::ambient_mismatch,
          "subspaces live in different ambient spaces");
  const int n = frame.ambient_dim();
  const int kf = frame.dim();
  const int ko = other.dim();

  RatMatrix sys(n, RatVec(kf + ko, 0));
  RatVec rhs(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < kf; ++i) sys[c][i] = frame.basis()[i][c];
    for (int j = 0; j < ko; ++j) sys[c][kf + j] = -other.basis()[j][c];
    rhs[c] = other.offset()[c] - frame.offset()[c];
  }
  std::optional<AffineSolution> sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;

  RatVec t0(sol->particular.begin(), sol->particular.begin() + kf);
  RatMatrix directions;
  for (const RatVec& v : sol->null_basis)
    directions.emplace_back(v.begin(), v.begin() + kf);
  return Subspace(kf, std::move(t0), std::move(directions));
}

}  // namespace motocell
