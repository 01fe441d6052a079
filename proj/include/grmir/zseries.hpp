#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "grmir/scalars.hpp"

namespace grmir {

// Truncated power series in one variable over R, carrying coefficients for
// degrees 0..cutoff. Operations never change the cutoff silently; mixing
// cutoffs is an error and shortening is an explicit call.
template <class R>
struct ZSeries {
  int cutoff = 0;
  std::vector<R> c;  // size cutoff+1

  ZSeries() : c(1, R(0)) {}
  explicit ZSeries(int cut) : cutoff(cut), c(cut + 1, R(0)) {
    if (cut < 0) throw std::invalid_argument("negative series cutoff");
  }
  ZSeries(int cut, std::vector<R> coeffs) : cutoff(cut), c(std::move(coeffs)) {
    if (cut < 0) throw std::invalid_argument("negative series cutoff");
    c.resize(cut + 1, R(0));
  }

  static ZSeries one(int cut) {
    ZSeries s(cut);
    s.c[0] = R(1);
    return s;
  }

  const R& operator[](int d) const { return c.at(d); }
  R& operator[](int d) { return c.at(d); }

  ZSeries truncated(int new_cutoff) const {
    if (new_cutoff > cutoff)
      throw std::invalid_argument("series truncation cannot extend");
    return ZSeries(new_cutoff, std::vector<R>(c.begin(), c.begin() + new_cutoff + 1));
  }

  // z -> z^e
  ZSeries substitute_power(int e) const {
    if (e < 1) throw std::invalid_argument("substitution power must be >= 1");
    ZSeries r(cutoff);
    for (int d = 0; d * e <= cutoff; ++d) r.c[d * e] = c[d];
    return r;
  }

  friend bool operator==(const ZSeries& a, const ZSeries& b) {
    return a.cutoff == b.cutoff && a.c == b.c;
  }
};

template <class R>
void require_same_cutoff(const ZSeries<R>& a, const ZSeries<R>& b) {
  if (a.cutoff != b.cutoff)
    throw std::invalid_argument("series cutoff mismatch");
}

template <class R>
ZSeries<R> operator+(const ZSeries<R>& a, const ZSeries<R>& b) {
  require_same_cutoff(a, b);
  ZSeries<R> r(a.cutoff);
  for (int d = 0; d <= a.cutoff; ++d) r.c[d] = a.c[d] + b.c[d];
  return r;
}

template <class R>
ZSeries<R> operator-(const ZSeries<R>& a, const ZSeries<R>& b) {
  require_same_cutoff(a, b);
  ZSeries<R> r(a.cutoff);
  for (int d = 0; d <= a.cutoff; ++d) r.c[d] = a.c[d] - b.c[d];
  return r;
}

template <class R>
ZSeries<R> operator*(const ZSeries<R>& a, const ZSeries<R>& b) {
  require_same_cutoff(a, b);
  ZSeries<R> r(a.cutoff);
  for (int i = 0; i <= a.cutoff; ++i) {
    if (a.c[i] == R(0)) continue;
    for (int j = 0; i + j <= a.cutoff; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

}  // namespace grmir
