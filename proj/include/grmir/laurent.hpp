#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "grmir/expvec.hpp"
#include "grmir/scalars.hpp"
#include "grmir/unipoly.hpp"

namespace grmir {

inline bool is_zero_coeff(const Int& c) { return c == 0; }
inline bool is_zero_coeff(const Rat& c) { return c == 0; }
template <class C>
bool is_zero_coeff(const UniPoly<C>& p) {
  return p.is_zero();
}

// Sparse Laurent polynomial in `arity` variables over C. No zero
// coefficients are stored; the term map is canonically ordered.
template <class C>
struct LaurentPoly {
  int arity = 0;
  std::map<ExpVec, C, ExpVecLess> terms;

  LaurentPoly() = default;
  explicit LaurentPoly(int a) : arity(a) {}

  static LaurentPoly constant(int arity, C c) {
    LaurentPoly p(arity);
    p.add_term(zero_exp(arity), std::move(c));
    return p;
  }

  void add_term(const ExpVec& e, C c) {
    if (e.size() != arity)
      throw std::invalid_argument("laurent term arity mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, fresh] = terms.try_emplace(e, std::move(c));
    if (!fresh) {
      it->second += c;  // try_emplace left c intact
      if (is_zero_coeff(it->second)) terms.erase(it);
    }
  }

  // Zero when the monomial is absent.
  C coeff(const ExpVec& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? C(0) : it->second;
  }

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity == b.arity && a.terms == b.terms;
  }
};

template <class C>
LaurentPoly<C> operator+(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  if (a.arity != b.arity)
    throw std::invalid_argument("laurent arity mismatch in +");
  LaurentPoly<C> r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

// Exact product, dropping any result term whose exponent vector fails
// `keep`. Callers must only prune exponents that cannot contribute to the
// quantity they later extract.
template <class C, class Keep>
LaurentPoly<C> lp_mul(const LaurentPoly<C>& a, const LaurentPoly<C>& b,
                      Keep keep) {
  if (a.arity != b.arity)
    throw std::invalid_argument("laurent arity mismatch in mul");
  LaurentPoly<C> r(a.arity);
  ExpVec e(a.arity);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      e = ea + eb;
      if (!keep(e)) continue;
      C prod = ca * cb;
      if (is_zero_coeff(prod)) continue;
      auto [it, fresh] = r.terms.try_emplace(e, std::move(prod));
      if (!fresh) {
        it->second += prod;
        if (is_zero_coeff(it->second)) r.terms.erase(it);
      }
    }
  }
  return r;
}

template <class C>
LaurentPoly<C> lp_mul(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  return lp_mul(a, b, [](const ExpVec&) { return true; });
}

template <class C>
LaurentPoly<C> operator*(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  return lp_mul(a, b);
}

}  // namespace grmir
