#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "motocell/cells.hpp"
#include "motocell/error.hpp"
#include "motocell/numeric.hpp"

namespace motocell {

// chi(I) = sum over cells of (-1)^p x^w.  This is the Euler form of the
// mixed-Tate decomposition an inventory describes; it is blind to the
// simplicial degree beyond its parity, which is exactly why it serves as
// the cross-check currency between independently computed inventories.
class SignedTatePolynomial {
 public:
  using Coeffs = std::map<int, std::int64_t>;

  SignedTatePolynomial() = default;

  static SignedTatePolynomial one() {
    SignedTatePolynomial p;
    p.set(0, 1);
    return p;
  }

  void set(int w, std::int64_t c) {
    if (c == 0)
      coeffs_.erase(w);
    else
      coeffs_[w] = c;
  }

  void add(int w, std::int64_t c) {
    auto it = coeffs_.find(w);
    std::int64_t v = (it == coeffs_.end() ? 0 : it->second) + c;
    set(w, v);
  }

  const Coeffs& coeffs() const { return coeffs_; }
  std::int64_t coeff(int w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? 0 : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  int max_weight() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
  }

  bool nonnegative() const {
    for (const auto& [w, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  SignedTatePolynomial operator-() const {
    SignedTatePolynomial out;
    for (const auto& [w, c] : coeffs_) out.set(w, -c);
    return out;
  }

  friend SignedTatePolynomial operator+(const SignedTatePolynomial& a,
                                        const SignedTatePolynomial& b) {
    SignedTatePolynomial out = a;
    for (const auto& [w, c] : b.coeffs_) out.add(w, c);
    return out;
  }

  friend SignedTatePolynomial operator-(const SignedTatePolynomial& a,
                                        const SignedTatePolynomial& b) {
    SignedTatePolynomial out = a;
    for (const auto& [w, c] : b.coeffs_) out.add(w, -c);
    return out;
  }

  friend SignedTatePolynomial operator*(const SignedTatePolynomial& a,
                                        const SignedTatePolynomial& b) {
    SignedTatePolynomial out;
    for (const auto& [wa, ca] : a.coeffs_)
      for (const auto& [wb, cb] : b.coeffs_) out.add(wa + wb, ca * cb);
    return out;
  }

  friend bool operator==(const SignedTatePolynomial&,
                         const SignedTatePolynomial&) = default;

  // Multiplication by x^c.
  SignedTatePolynomial shifted(int c) const {
    SignedTatePolynomial out;
    for (const auto& [w, k] : coeffs_) out.set(w + c, k);
    return out;
  }

  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : coeffs_) s += c;
    return s;
  }

  // sum_w coeff(w) * q^(d-w), the F_q point count of a dimension-d variety
  // with this signed polynomial.
  BigInt point_count(int dim, const BigInt& q) const {
    require(dim >= max_weight(), Errc::dimension_too_small,
            "dimension " + std::to_string(dim) + " below top weight " +
                std::to_string(max_weight()));
    BigInt total = 0;
    for (const auto& [w, c] : coeffs_)
      total += BigInt(c) * big_pow(q, static_cast<unsigned>(dim - w));
    return total;
  }

  // Rendering like "1 - 2*x + x^2"; weights ascending, zero prints as "0".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
      std::int64_t a = c;
      if (first) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        a = a < 0 ? -a : a;
      }
      first = false;
      if (w == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a) + "*";
        out += w == 1 ? "x" : "x^" + std::to_string(w);
      }
    }
    return out;
  }

 private:
  Coeffs coeffs_;
};

inline SignedTatePolynomial signed_poly(const CellInventory& inv) {
  SignedTatePolynomial out;
  for (const auto& [d, m] : inv.cells())
    out.add(d.w, (d.p % 2 == 0 ? m : -m));
  return out;
}

// Signed point count of a plus inventory over F_q: each (p, w) cell of a
// dimension-d variety contributes (-1)^p q^(d-w).  This is an oracle for
// the mixed-Tate varieties this library produces, never a definition.
inline BigInt point_count_eval(const CellInventory& inv, int dim,
                               const BigInt& q) {
  require(inv.pointing() == Pointing::plus, Errc::pointing_mismatch,
          "point counts are defined for plus inventories");
  return signed_poly(inv).point_count(dim, q);
}

}  // namespace motocell
