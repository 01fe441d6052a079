#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grmir {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a computation exceeds a configured size limit.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// cpp_rational's two-argument constructor rejects negative denominators
// outright, so construction goes through division, which normalizes.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  return Rat(num) / Rat(den);
}

inline Rat checked_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("rational division by zero");
  return a / b;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string to_decimal(const Int& v) { return v.str(); }

// "p" when the denominator is 1, else "p/q".
inline std::string to_decimal(const Rat& r) {
  Int d = rat_den(r);
  if (d == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + d.str();
}

// Accepts an optional sign, digits, and an optional "/digits" tail.
inline Rat parse_rat(const std::string& s) {
  auto bad = [&]() -> Rat {
    throw std::invalid_argument("not a rational: '" + s + "'");
  };
  std::size_t slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(ns) || !digits_ok(ds)) return bad();
  if (ns[0] == '+') ns.erase(0, 1);  // cpp_int rejects an explicit plus
  if (ds[0] == '+') ds.erase(0, 1);
  Int num(ns), den(ds);
  if (den == 0) return bad();
  return make_rat(num, den);
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// 0 outside the Pascal triangle.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is binomial(n, i+1) times earlier factors
  }
  return r;
}

// (sum parts)! / prod(part!) built from binomials, no large factorials.
inline Int multinomial(const std::vector<int>& parts) {
  long run = 0;
  Int r = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    run += p;
    r *= binomial(run, p);
  }
  return r;
}

inline Int ipow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

struct Egcd {
  Int g, x, y;  // g = a*x + b*y, g >= 0
};

inline Egcd egcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Egcd e = egcd(floor_mod(a, m), m);
  if (e.g != 1)
    throw std::domain_error("not a unit mod " + m.str() + ": " + a.str());
  return floor_mod(e.x, m);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace grmir
