#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grmir/scalars.hpp"

namespace grmir {

// Dense univariate polynomial over C. coeffs()[i] multiplies x^i; no stored
// trailing zeros, so the zero polynomial has an empty coefficient vector and
// degree -1.
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(C c0) {
    c_.push_back(std::move(c0));
    normalize();
  }
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static UniPoly monomial(C coeff, int deg) {
    std::vector<C> v(deg + 1, C(0));
    v[deg] = std::move(coeff);
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }

  const C& coeff(int i) const {
    static const C kZero{0};
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
  }

  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of 0");
    return c_.back();
  }

  C eval(const C& x) const {
    C r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<C> v(a.c_);
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }

  UniPoly scaled(const C& s) const {
    std::vector<C> v(c_);
    for (auto& x : v) x = x * s;
    return UniPoly(std::move(v));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }
  std::vector<C> c_;
};

using RatPoly = UniPoly<Rat>;

// Quotient and remainder over a coefficient field.
template <class C>
std::pair<UniPoly<C>, UniPoly<C>> divmod(const UniPoly<C>& a,
                                         const UniPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<C> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {UniPoly<C>(), a};
  std::vector<C> quot(a.degree() - db + 1, C(0));
  const C& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    C c = rem[i];
    if (c == C(0)) continue;
    C q = c / lead;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  return {UniPoly<C>(std::move(quot)), UniPoly<C>(std::move(rem))};
}

template <class C>
UniPoly<C> make_monic(const UniPoly<C>& a) {
  if (a.is_zero()) return a;
  if (a.leading() == C(1)) return a;
  return a.scaled(C(1) / a.leading());
}

// Euclid with monic remainders; returns the monic gcd (0 for gcd(0,0)).
template <class C>
UniPoly<C> gcd_monic(UniPoly<C> a, UniPoly<C> b) {
  a = make_monic(a);
  b = make_monic(b);
  while (!b.is_zero()) {
    UniPoly<C> r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return a;
}

// Synthetic division by (x + c); remainder must vanish.
template <class C>
UniPoly<C> divide_by_linear(const UniPoly<C>& a, const C& c) {
  if (a.is_zero()) throw std::domain_error("dividing 0 by a linear factor");
  const auto& v = a.coeffs();
  std::vector<C> q(v.size() - 1, C(0));
  C carry(0);
  for (int i = a.degree(); i >= 1; --i) {
    C cur = v[i] + carry;
    q[i - 1] = cur;
    carry = -cur * c;  // root is -c
  }
  if (v[0] + carry != C(0))
    throw std::domain_error("linear factor does not divide polynomial");
  return UniPoly<C>(std::move(q));
}

// Ratio of polynomials over Rat. Invariant after construction: denominator
// monic and coprime to the numerator; zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(RatPoly(Rat(1))) {}
  explicit RationalFunction(RatPoly p) : num_(std::move(p)), den_(RatPoly(Rat(1))) {}
  RationalFunction(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.num_.is_zero())
      throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rat eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole at sample point");
    return num_.eval(x) / d;
  }

  // Value at 0 of the reduced form; a vanishing denominator here is a
  // genuine pole.
  Rat at_zero() const {
    Rat d = den_.coeff(0);
    if (d == 0) throw std::domain_error("genuine pole at 0");
    return num_.coeff(0) / d;
  }

 private:
  void reduce() {
    if (den_.is_zero())
      throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = RatPoly(Rat(1));
      return;
    }
    RatPoly g = gcd_monic(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
      den_ = den_.scaled(Rat(1) / lead);
      num_ = num_.scaled(Rat(1) / lead);
    }
  }

  RatPoly num_, den_;
};

inline RationalFunction rf_reduce(const RationalFunction& f) {
  return RationalFunction(f.num(), f.den());
}

inline Rat rf_eval_at_zero(const RationalFunction& f) { return f.at_zero(); }

}  // namespace grmir
