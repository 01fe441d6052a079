#include <doctest.h>

#include <random>

#include "grmir/laurent.hpp"
#include "grmir/modseries.hpp"
#include "grmir/scalars.hpp"
#include "grmir/unipoly.hpp"
#include "grmir/zseries.hpp"

using namespace grmir;

namespace {

RatPoly rp(std::vector<Rat> cs) { return RatPoly(std::move(cs)); }

RatPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<Rat> cs(deg(rng) + 1);
  for (auto& c : cs) c = Rat(coef(rng));
  return RatPoly(std::move(cs));
}

LaurentPoly<Int> random_laurent(std::mt19937& rng, int arity) {
  std::uniform_int_distribution<int> nterms(1, 5);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<long> coef(-4, 4);
  LaurentPoly<Int> p(arity);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    ExpVec e(arity);
    for (int v = 0; v < arity; ++v) e[v] = expo(rng);
    p.add_term(e, Int(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational construction normalizes signs and rejects zero dens") {
  CHECK(make_rat(1, -2) == make_rat(-1, 2));
  CHECK(to_decimal(make_rat(2, -4)) == "-1/2");
  CHECK_THROWS_AS(make_rat(7, 0), std::domain_error);
  CHECK(rat_is_integer(make_rat(-9, 3)));
  CHECK(rat_num(make_rat(-9, 3)) == -3);
}

TEST_CASE("parse_rat accepts sign/digits/slash and nothing else") {
  CHECK(parse_rat("5/15") == make_rat(1, 3));
  CHECK(parse_rat("-22/7") == make_rat(-22, 7));
  CHECK(parse_rat("+3") == 3);
  CHECK(parse_rat("0") == 0);
  CHECK_THROWS_AS(parse_rat("7/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK(to_decimal(parse_rat("-22/7")) == "-22/7");
}

TEST_CASE("factorial, binomial, multinomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  Int total = 0;
  for (long k = 0; k <= 12; ++k) total += binomial(12, k);
  CHECK(total == 4096);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(multinomial({}) == 1);
  CHECK(multinomial({4}) == 1);
  CHECK(multinomial({3, 3}) == binomial(6, 3));
  CHECK_THROWS_AS(multinomial({1, -2}), std::invalid_argument);
}

TEST_CASE("egcd, floor_mod, mod_inverse") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int i = 0; i < 50; ++i) {
    Int a = dist(rng), b = dist(rng);
    Egcd e = egcd(a, b);
    CHECK(e.g == a * e.x + b * e.y);
    CHECK(e.g >= 0);
    if (e.g != 0) {
      CHECK(a % e.g == 0);
      CHECK(b % e.g == 0);
    }
  }
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(7, 3) == 1);
  CHECK(mod_inverse(3, 10) == 7);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
}

TEST_CASE("fnv1a64 matches the reference constants") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("unipoly normalization and arithmetic") {
  RatPoly zero;
  CHECK(zero.degree() == -1);
  CHECK(rp({Rat(1), Rat(0), Rat(0)}).degree() == 0);
  RatPoly p = rp({Rat(1), Rat(2)});   // 1 + 2x
  RatPoly q = rp({Rat(-1), Rat(1)});  // -1 + x
  CHECK((p * q) == rp({Rat(-1), Rat(-1), Rat(2)}));
  CHECK((p + q) == rp({Rat(0), Rat(3)}));
  CHECK((p - p).is_zero());
  CHECK(p.eval(Rat(3)) == 7);
  CHECK(RatPoly::monomial(Rat(5), 3) == rp({Rat(0), Rat(0), Rat(0), Rat(5)}));
  CHECK_THROWS_AS(zero.leading(), std::domain_error);
}

TEST_CASE("divmod satisfies a = q*b + r with deg r < deg b") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    RatPoly a = random_poly(rng, 6);
    RatPoly b = random_poly(rng, 3);
    if (b.is_zero()) {
      CHECK_THROWS_AS(divmod(a, b), std::domain_error);
      continue;
    }
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd_monic and divide_by_linear") {
  RatPoly x1 = rp({Rat(1), Rat(1)});  // x + 1
  RatPoly x2 = rp({Rat(2), Rat(1)});
  RatPoly x3 = rp({Rat(3), Rat(1)});
  CHECK(gcd_monic(x1 * x2, x2 * x3) == x2);
  CHECK(gcd_monic(RatPoly(), RatPoly()).is_zero());
  CHECK(divide_by_linear(x1 * x2, Rat(1)) == x2);
  CHECK_THROWS_AS(divide_by_linear(x1 * x2, Rat(5)), std::domain_error);
}

TEST_CASE("rational function reduction examples") {
  RatPoly t = RatPoly::monomial(Rat(1), 1);
  RationalFunction a(t * t - t, t);  // (t^2 - t)/t
  CHECK(a.num() == t - RatPoly(Rat(1)));
  CHECK(a.den() == RatPoly(Rat(1)));

  RationalFunction b(t - RatPoly(Rat(1)), t - RatPoly(Rat(1)));
  CHECK(b.num() == RatPoly(Rat(1)));
  CHECK(b.den() == RatPoly(Rat(1)));

  RatPoly x1 = rp({Rat(1), Rat(1)});
  RatPoly x2 = rp({Rat(2), Rat(1)});
  RatPoly x3 = rp({Rat(3), Rat(1)});
  RationalFunction c(x1 * x2, x2 * x3);
  CHECK(c.num() == x1);
  CHECK(c.den() == x3);

  CHECK_THROWS_AS(RationalFunction(t, RatPoly()), std::domain_error);
}

TEST_CASE("rational function reduction is idempotent and value-preserving") {
  std::mt19937 rng(13);
  int sampled = 0;
  while (sampled < 100) {
    RatPoly num = random_poly(rng, 5);
    RatPoly den = random_poly(rng, 4);
    if (den.is_zero()) continue;
    RationalFunction f(num, den);
    RationalFunction g = rf_reduce(f);
    CHECK(g == f);
    Rat x(sampled % 19 - 9);
    if (den.eval(x) == 0) {
      ++sampled;
      continue;
    }
    CHECK(f.eval(x) == num.eval(x) / den.eval(x));
    ++sampled;
  }
}

TEST_CASE("rf_eval_at_zero distinguishes genuine poles") {
  RatPoly t = RatPoly::monomial(Rat(1), 1);
  CHECK(rf_eval_at_zero(RationalFunction(t * t - t, t)) == -1);
  CHECK(rf_eval_at_zero(RationalFunction(rp({Rat(1), Rat(1)}),
                                         rp({Rat(2), Rat(1)}))) ==
        make_rat(1, 2));
  CHECK_THROWS_WITH_AS(rf_eval_at_zero(RationalFunction(RatPoly(Rat(1)), t)),
                       "genuine pole at 0", std::domain_error);
}

TEST_CASE("laurent squares, annihilation, and inverse monomials") {
  LaurentPoly<Int> p(1);
  ExpVec plus(1), minus(1);
  plus << 1;
  minus << -1;
  p.add_term(plus, Int(1));
  p.add_term(minus, Int(1));  // x + 1/x
  LaurentPoly<Int> sq = p * p;
  CHECK(sq.terms.size() == 3);
  CHECK(sq.coeff(2 * plus) == 1);
  CHECK(sq.coeff(zero_exp(1)) == 2);
  CHECK(sq.coeff(2 * minus) == 1);

  LaurentPoly<Int> zero(1);
  CHECK((p * zero).is_zero());

  LaurentPoly<Int> x(1), xinv(1);
  x.add_term(plus, Int(1));
  xinv.add_term(minus, Int(1));
  CHECK(x * xinv == LaurentPoly<Int>::constant(1, Int(1)));
}

TEST_CASE("laurent multiplication is associative and commutative") {
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly<Int> a = random_laurent(rng, 2);
    LaurentPoly<Int> b = random_laurent(rng, 2);
    LaurentPoly<Int> c = random_laurent(rng, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("laurent arity discipline and pruning") {
  LaurentPoly<Int> a(1), b(2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  ExpVec e(1);
  e << 2;
  CHECK_THROWS_AS(b.add_term(e, Int(1)), std::invalid_argument);

  LaurentPoly<Int> p(1);
  ExpVec plus(1), minus(1);
  plus << 1;
  minus << -1;
  p.add_term(plus, Int(1));
  p.add_term(minus, Int(1));
  LaurentPoly<Int> kept =
      lp_mul(p, p, [](const ExpVec& v) { return v[0] >= 0; });
  CHECK(kept.coeff(2 * minus) == 0);
  CHECK(kept.coeff(zero_exp(1)) == 2);
}

TEST_CASE("zseries cutoff discipline") {
  ZSeries<Int> a(3), b(2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(b.truncated(3), std::invalid_argument);
  CHECK(a.truncated(1).cutoff == 1);

  ZSeries<Int> u(2, {Int(1), Int(1)});
  ZSeries<Int> prod = u * u;
  CHECK(prod[0] == 1);
  CHECK(prod[1] == 2);
  CHECK(prod[2] == 1);

  ZSeries<Int> sub = u.substitute_power(2);
  CHECK(sub[0] == 1);
  CHECK(sub[1] == 0);
  CHECK(sub[2] == 1);
  CHECK_THROWS_AS(u.substitute_power(0), std::invalid_argument);
}

TEST_CASE("modular series inversion") {
  ModSeries f = ModSeries::from_dense({Int(1), Int(2)}, 3, 1, 3);
  ModSeries inv = zs_inverse(f);
  for (int d = 0; d <= 3; ++d) CHECK(inv[d] == 1);
  CHECK((f * inv).is_one());

  ModSeries one = ModSeries::from_dense({Int(1)}, 5, 2, 4);
  CHECK(zs_inverse(one).is_one());

  ModSeries bad = ModSeries::from_dense({Int(3), Int(1)}, 3, 1, 2);
  CHECK_THROWS_AS(zs_inverse(bad), std::domain_error);
}

TEST_CASE("modular series inverse property and first_diff") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> coef(0, 8);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> cs(5);
    for (auto& c : cs) c = coef(rng);
    if (cs[0] % 3 == 0) cs[0] += 1;
    ModSeries f = ModSeries::from_dense(cs, 3, 2, 4);
    CHECK((f * zs_inverse(f)).is_one());
  }

  ModSeries a = ModSeries::from_dense({Int(1), Int(4)}, 2, 3, 3);
  ModSeries b = ModSeries::from_dense({Int(1), Int(4), Int(7)}, 2, 3, 3);
  CHECK(ModSeries::first_diff(a, a) == std::nullopt);
  CHECK(ModSeries::first_diff(a, b) == 2);
}

TEST_CASE("modular series validation") {
  CHECK_THROWS_AS(ModSeries(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ModSeries(3, 0, 2), std::invalid_argument);
  ModSeries a(3, 1, 2), b(3, 1, 3), c(9, 1, 2);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a - c, std::invalid_argument);
  ModSeries d(3, 2, 4);
  d.set(1, Int(11));
  CHECK(d[1] == 2);
}
