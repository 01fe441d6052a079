#include "grmir/vertex.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "grmir/unipoly.hpp"

namespace grmir {

Rat pochhammer(const Rat& x, long d) {
  Rat r(1);
  if (d >= 0) {
    for (long s = 0; s < d; ++s) r *= x + s;
    return r;
  }
  for (long s = 1; s <= -d; ++s) {
    Rat f = x - s;
    if (f == 0)
      throw std::domain_error("pochhammer (" + to_decimal(x) + ")_{" +
                              std::to_string(d) + "}: factor " + to_decimal(x) +
                              "-" + std::to_string(s) + " is not invertible");
    r /= f;
  }
  return r;
}

Rat hypergeometric_coeff(const Rat& a, const Rat& b, const Rat& c, long d) {
  if (d < 0) throw std::invalid_argument("hypergeometric degree must be >= 0");
  Rat den = pochhammer(c, d) * Rat(factorial(d));
  if (den == 0)
    throw std::domain_error("hypergeometric coefficient: (c)_d vanishes at c=" +
                            to_decimal(c));
  return pochhammer(a, d) * pochhammer(b, d) / den;
}

std::vector<std::vector<int>> compositions(int d, int k) {
  if (d < 0 || k < 1) throw std::invalid_argument("bad composition request");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  // lexicographic: leftmost part varies slowest
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      cur[pos] = take;
      self(self, pos + 1, left - take);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

void check_budget(const Shape& shape, int d, const VertexBudget& b) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (shape.k() > b.max_k || shape.n() > b.max_n || d > b.max_d)
    throw BudgetError("vertex budget exceeded: need k<=" +
                      std::to_string(b.max_k) + ", n<=" + std::to_string(b.max_n) +
                      ", d<=" + std::to_string(b.max_d));
}

std::string factor_name(const Rat& base, const Rat& shift, long d) {
  std::string s = "(" + to_decimal(base);
  if (shift != 0) s += (shift > 0 ? "+" : "") + to_decimal(shift);
  return s + ")_{" + std::to_string(d) + "}";
}

}  // namespace

Rat vertex_coeff_generic(const Shape& shape, int d, const VertexParams& params,
                         VertexBudget budget) {
  check_budget(shape, d, budget);
  const int k = shape.k(), n = shape.n();
  if (static_cast<int>(params.u.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " equivariant parameters");
  const auto& u = params.u;
  const Rat& w = params.omega;

  Rat total(0);
  for (const auto& comp : compositions(d, k)) {
    Rat term(1);
    auto apply = [&](const Rat& base, long dd, bool numerator,
                     const Rat& shift_for_msg) {
      Rat v = pochhammer(base, dd);
      if (numerator) {
        term *= v;
        return;
      }
      if (v == 0)
        throw std::domain_error("singular vertex parameters: factor " +
                                factor_name(base - shift_for_msg, shift_for_msg,
                                            dd) +
                                " vanishes");
      term /= v;
    };
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        long dd = comp[i - 1] - comp[j - 1];
        Rat delta = u[j - 1] - u[i - 1];
        apply(Rat(1) + delta, dd, true, delta);
        apply(w + delta, dd, false, delta);
      }
    }
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= k; ++i) {
        long dd = comp[i - 1];
        Rat delta = u[j - 1] - u[i - 1];
        apply(w + delta, dd, true, delta);
        apply(Rat(1) + delta, dd, false, delta);
      }
    }
    total += term;
  }
  return total;
}

namespace {

// One summand of the t-deformed sum: scalar * prod (t+c)^{e_c} with e_c of
// either sign. Every Pochhammer factor is linear in t, so exact cancellation
// is multiset bookkeeping, never a polynomial gcd.
struct FactoredTerm {
  Rat scalar{1};
  std::map<Rat, int> roots;  // exponent of the monic linear (t + c)
  bool zero = false;

  // (c0 + a t), to the given side: +1 numerator, -1 denominator.
  void push(const Rat& c0, const Rat& a, int side) {
    if (zero) return;
    if (a == 0) {
      if (c0 == 0) {
        if (side < 0)
          throw std::domain_error(
              "vertex deformation produced a vanishing denominator factor");
        zero = true;
        return;
      }
      if (side > 0)
        scalar *= c0;
      else
        scalar /= c0;
      return;
    }
    if (side > 0)
      scalar *= a;
    else
      scalar /= a;
    Rat c = c0 / a;
    auto it = roots.emplace(c, 0).first;
    it->second += side;
    if (it->second == 0) roots.erase(it);
  }

  // Pochhammer of (c0 + a t) with step 1; negative d flips the side.
  void push_pochhammer(const Rat& c0, const Rat& a, long d, int side) {
    if (d >= 0) {
      for (long s = 0; s < d; ++s) push(c0 + s, a, side);
    } else {
      for (long s = 1; s <= -d; ++s) push(c0 - s, a, -side);
    }
  }
};

// Sum of FactoredTerms over a common denominator held in factored form.
struct FactoredSum {
  RatPoly num;             // numerator over the common denominator
  std::map<Rat, int> den;  // monic linear factors, exponents > 0

  void add(const FactoredTerm& t) {
    if (t.zero) return;
    std::map<Rat, int> new_den = den;
    for (const auto& [c, e] : t.roots)
      if (e < 0) {
        int& cur = new_den[c];
        if (-e > cur) cur = -e;
      }
    // rescale the running numerator by the denominator growth
    RatPoly scaled = num;
    for (const auto& [c, e] : new_den) {
      auto it = den.find(c);
      int have = it == den.end() ? 0 : it->second;
      for (int q = have; q < e; ++q)
        scaled = scaled * RatPoly(std::vector<Rat>{c, Rat(1)});
    }
    // term numerator times the missing part of the common denominator
    RatPoly tnum(std::vector<Rat>{t.scalar});
    for (const auto& [c, e] : t.roots)
      if (e > 0)
        for (int q = 0; q < e; ++q) tnum = tnum * RatPoly(std::vector<Rat>{c, Rat(1)});
    for (const auto& [c, e] : new_den) {
      auto it = t.roots.find(c);
      int used = (it != t.roots.end() && it->second < 0) ? -it->second : 0;
      for (int q = used; q < e; ++q) tnum = tnum * RatPoly(std::vector<Rat>{c, Rat(1)});
    }
    num = scaled + tnum;
    den = std::move(new_den);
  }

  // Cancel linear denominator factors that divide the numerator.
  void reduce() {
    for (auto it = den.begin(); it != den.end();) {
      while (it->second > 0 && !num.is_zero() && num.eval(-it->first) == 0) {
        num = divide_by_linear(num, it->first);
        --it->second;
      }
      it = it->second == 0 ? den.erase(it) : std::next(it);
    }
  }

  Rat value_at_zero() const {
    Rat d(1);
    for (const auto& [c, e] : den) {
      if (c == 0)
        throw std::domain_error("genuine pole at 0");
      for (int q = 0; q < e; ++q) d *= c;
    }
    return num.coeff(0) / d;
  }
};

}  // namespace

Rat vertex_coeff_u0_direction(const Shape& shape, int d, const Rat& omega,
                              const std::vector<long>& dirs,
                              VertexBudget budget) {
  check_budget(shape, d, budget);
  const int k = shape.k(), n = shape.n();
  if (static_cast<int>(dirs.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " direction entries");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dirs[i] == dirs[j])
        throw std::invalid_argument("deformation direction must be distinct");

  FactoredSum sum;
  for (const auto& comp : compositions(d, k)) {
    FactoredTerm term;
    for (int i = 1; i <= k && !term.zero; ++i) {
      for (int j = 1; j <= k && !term.zero; ++j) {
        long dd = comp[i - 1] - comp[j - 1];
        Rat a(dirs[j - 1] - dirs[i - 1]);
        term.push_pochhammer(Rat(1), a, dd, +1);
        term.push_pochhammer(omega, a, dd, -1);
      }
    }
    for (int j = 1; j <= n && !term.zero; ++j) {
      for (int i = 1; i <= k && !term.zero; ++i) {
        long dd = comp[i - 1];
        Rat a(dirs[j - 1] - dirs[i - 1]);
        term.push_pochhammer(omega, a, dd, +1);
        term.push_pochhammer(Rat(1), a, dd, -1);
      }
    }
    sum.add(term);
  }
  sum.reduce();
  return sum.value_at_zero();
}

Rat vertex_coeff_u0(const Shape& shape, int d, const Rat& omega,
                    VertexBudget budget) {
  std::vector<long> dirs(shape.n());
  for (int i = 0; i < shape.n(); ++i) dirs[i] = i + 1;
  std::string first_error;
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      return vertex_coeff_u0_direction(shape, d, omega, dirs, budget);
    } catch (const std::domain_error& e) {
      if (first_error.empty()) first_error = e.what();
    }
    std::mt19937 rng(0xC0FFEEu + attempt);
    std::uniform_int_distribution<long> pick(1, 97);
    bool distinct = false;
    while (!distinct) {
      for (auto& v : dirs) v = pick(rng);
      distinct = true;
      for (std::size_t i = 0; i < dirs.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
          if (dirs[i] == dirs[j]) {
            distinct = false;
            break;
          }
    }
  }
  throw std::domain_error("u->0 limit: pole at t=0 along every sampled "
                          "direction (first error: " +
                          first_error + ")");
}

}  // namespace grmir
