#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "grmir/scalars.hpp"
#include "grmir/zseries.hpp"

namespace grmir {

// Truncated series with coefficients in Z/p^s, kept as canonical
// representatives in [0, p^s).
class ModSeries {
 public:
  ModSeries(Int p, int s, int cutoff)
      : p_(std::move(p)), s_(s), modulus_(pow_checked(p_, s)), c_(cutoff + 1, 0) {
    if (cutoff < 0) throw std::invalid_argument("negative series cutoff");
  }

  static ModSeries from_dense(const std::vector<Int>& poly, const Int& p,
                              int s, int cutoff) {
    ModSeries r(p, s, cutoff);
    for (int d = 0; d <= cutoff && d < static_cast<int>(poly.size()); ++d)
      r.c_[d] = floor_mod(poly[d], r.modulus_);
    return r;
  }

  int cutoff() const { return static_cast<int>(c_.size()) - 1; }
  const Int& modulus() const { return modulus_; }
  const Int& prime() const { return p_; }
  int exponent() const { return s_; }
  const Int& operator[](int d) const { return c_.at(d); }

  void set(int d, const Int& v) { c_.at(d) = floor_mod(v, modulus_); }

  // z -> z^e
  ModSeries substitute_power(int e) const {
    if (e < 1) throw std::invalid_argument("substitution power must be >= 1");
    ModSeries r(p_, s_, cutoff());
    for (int d = 0; d * e <= cutoff(); ++d) r.c_[d * e] = c_[d];
    return r;
  }

  friend ModSeries operator*(const ModSeries& a, const ModSeries& b) {
    a.require_compatible(b);
    ModSeries r(a.p_, a.s_, a.cutoff());
    for (int i = 0; i <= a.cutoff(); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= a.cutoff(); ++j)
        r.c_[i + j] = floor_mod(r.c_[i + j] + a.c_[i] * b.c_[j], a.modulus_);
    }
    return r;
  }

  friend ModSeries operator-(const ModSeries& a, const ModSeries& b) {
    a.require_compatible(b);
    ModSeries r(a.p_, a.s_, a.cutoff());
    for (int d = 0; d <= a.cutoff(); ++d)
      r.c_[d] = floor_mod(a.c_[d] - b.c_[d], a.modulus_);
    return r;
  }

  friend bool operator==(const ModSeries& a, const ModSeries& b) {
    return a.modulus_ == b.modulus_ && a.c_ == b.c_;
  }

  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t d = 1; d < c_.size(); ++d)
      if (c_[d] != 0) return false;
    return true;
  }

  // Smallest degree where the two differ.
  static std::optional<int> first_diff(const ModSeries& a, const ModSeries& b) {
    a.require_compatible(b);
    for (int d = 0; d <= a.cutoff(); ++d)
      if (a.c_[d] != b.c_[d]) return d;
    return std::nullopt;
  }

 private:
  static Int pow_checked(const Int& p, int s) {
    if (p < 2) throw std::invalid_argument("modulus base must be >= 2");
    if (s < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    return ipow(p, static_cast<unsigned long>(s));
  }

  void require_compatible(const ModSeries& o) const {
    if (modulus_ != o.modulus_ || c_.size() != o.c_.size())
      throw std::invalid_argument("modular series modulus/cutoff mismatch");
  }

  Int p_;
  int s_;
  Int modulus_;
  std::vector<Int> c_;

  friend ModSeries zs_inverse(const ModSeries& f);
};

// Multiplicative inverse up to the cutoff; the constant term must be a unit.
inline ModSeries zs_inverse(const ModSeries& f) {
  Egcd e = egcd(f.c_[0], f.modulus_);
  if (e.g != 1)
    throw std::domain_error("series constant term " + f.c_[0].str() +
                            " is not a unit mod " + f.modulus_.str());
  ModSeries r(f.p_, f.s_, f.cutoff());
  Int b0 = floor_mod(e.x, f.modulus_);
  r.c_[0] = b0;
  for (int j = 1; j <= f.cutoff(); ++j) {
    Int acc = 0;
    for (int i = 1; i <= j; ++i) acc += f.c_[i] * r.c_[j - i];
    r.c_[j] = floor_mod(-b0 * acc, f.modulus_);
  }
  return r;
}

}  // namespace grmir
