#include "grmir/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "grmir/dwork.hpp"
#include "grmir/master.hpp"
#include "grmir/polytope.hpp"
#include "grmir/scalars.hpp"
#include "grmir/superpotential.hpp"
#include "grmir/vertex.hpp"

namespace grmir {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

CriterionResult run_one(int id, std::string name, double ceiling_seconds,
                        const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  if (ceiling_seconds > 0 && r.seconds >= ceiling_seconds) {
    std::ostringstream os;
    os << r.detail << " [exceeded " << ceiling_seconds << " s ceiling]";
    r.detail = os.str();
    r.pass = false;
  }
  return r;
}

Int closed_gr24(int m) {
  Int f = factorial(m);
  Rat v = make_rat(factorial(2 * m) * factorial(4 * m), f * f * f * f * f * f);
  if (!rat_is_integer(v)) throw std::logic_error("closed form not integral");
  return rat_num(v);
}

Int closed_proj(int n, int m) {
  Rat v = make_rat(factorial(static_cast<long>(n) * m), ipow(factorial(m), n));
  if (!rat_is_integer(v)) throw std::logic_error("closed form not integral");
  return rat_num(v);
}

// (x)(x+1)...(x+d-1) as a polynomial in x.
OmegaPoly rising_poly(int d) {
  OmegaPoly p = OmegaPoly::monomial(Rat(1), 0);
  for (int j = 0; j < d; ++j)
    p = p * OmegaPoly(std::vector<Rat>{Rat(j), Rat(1)});
  return p;
}

// A positive non-integer rational with the given prime denominator.
Rat random_nonint(std::mt19937& rng, long den) {
  std::uniform_int_distribution<long> dist(1, 6 * den);
  long num = dist(rng);
  while (num % den == 0) num = dist(rng);
  return make_rat(num, den);
}

const std::vector<std::pair<int, int>> kSmallShapes = {
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}};

Outcome criterion_gr24_a_series() {
  Shape shape(2, 4);
  auto rows = a_series(shape, 5);
  Superpotential sp = build_superpotential(shape);
  for (int m = 0; m <= 5; ++m) {
    Int want = closed_gr24(m);
    if (rows[m].a_m != want)
      return {false, "flow engine disagrees with closed form at m=" +
                         std::to_string(m)};
    ConstantTerm ct = constant_term_pow_direct(sp, 4 * m, 24);
    if (ct.z_degree != m || ct.coeff != want)
      return {false, "direct powering disagrees with closed form at m=" +
                         std::to_string(m)};
  }
  return {true,
          "a_m = (2m)!(4m)!/(m!)^6 for m <= 5 via flows and direct powering"};
}

Outcome criterion_proj_a_series() {
  for (int n = 2; n <= 5; ++n) {
    Shape shape(1, n);
    auto rows = a_series(shape, 4);
    for (int m = 0; m <= 4; ++m) {
      if (rows[m].a_m != closed_proj(n, m))
        return {false, "mismatch at n=" + std::to_string(n) +
                           ", m=" + std::to_string(m)};
    }
  }
  return {true, "a_m = (nm)!/(m!)^n for n = 2..5, m <= 4"};
}

Outcome criterion_vanishing() {
  int checked = 0;
  for (auto [k, n] : kSmallShapes) {
    Shape shape(k, n);
    Superpotential sp = build_superpotential(shape);
    for (int d = 1; d <= 12; ++d) {
      if (d % n == 0) continue;
      ConstantTerm flows = constant_term_pow_flows(sp, d);
      ConstantTerm direct = constant_term_pow_direct(sp, d);
      if (flows.z_degree != -1 || flows.coeff != 0 || direct.z_degree != -1 ||
          direct.coeff != 0)
        return {false, "nonzero constant term at (k,n,d)=(" +
                           std::to_string(k) + "," + std::to_string(n) + "," +
                           std::to_string(d) + ")"};
      ++checked;
    }
  }
  return {true, "[S^d]_0 = 0 for all " + std::to_string(checked) +
                    " tested (shape, d) with n not dividing d"};
}

Outcome criterion_engine_equivalence() {
  int checked = 0;
  for (auto [k, n] : kSmallShapes) {
    Shape shape(k, n);
    Superpotential sp = build_superpotential(shape);
    for (int d = 0; d <= 12; ++d) {
      ConstantTerm flows = constant_term_pow_flows(sp, d);
      ConstantTerm direct = constant_term_pow_direct(sp, d);
      if (!(flows == direct))
        return {false, "engines disagree at (k,n,d)=(" + std::to_string(k) +
                           "," + std::to_string(n) + "," + std::to_string(d) +
                           ")"};
      ++checked;
    }
  }
  return {true, "flow enumeration = pruned powering on all " +
                    std::to_string(checked) + " (shape, d) pairs"};
}

Outcome criterion_p1_vertex_u0() {
  Shape shape(1, 2);
  auto series = phi_series(shape, 4);
  for (int d = 0; d <= 4; ++d) {
    OmegaPoly r = rising_poly(d);
    OmegaPoly expected = (r * r).scaled(make_rat(1, factorial(d) * factorial(d)));
    if (!(series[d] == expected))
      return {false, "series coefficient differs from ((w)_d/d!)^2 at d=" +
                         std::to_string(d)};
  }
  std::mt19937 rng(911);
  for (int trial = 0; trial < 3; ++trial) {
    Rat omega = random_nonint(rng, 13);
    for (int d = 0; d <= 4; ++d) {
      Rat p = pochhammer(omega, d);
      Rat expected = p * p / Rat(factorial(d) * factorial(d));
      if (vertex_coeff_u0(shape, d, omega) != expected)
        return {false, "t-limit differs from ((w)_d/d!)^2 at d=" +
                           std::to_string(d) +
                           ", omega=" + to_decimal(omega)};
    }
  }
  return {true,
          "((w)_d/d!)^2 matches the series coefficients symbolically and the "
          "t-limit at 3 sampled omega, d <= 4"};
}

Outcome criterion_series_vs_u0() {
  std::mt19937 rng(1203);
  const std::vector<std::pair<std::pair<int, int>, int>> cells = {
      {{1, 3}, 3}, {{2, 4}, 2}};
  for (const auto& [kn, max_d] : cells) {
    Shape shape(kn.first, kn.second);
    auto series = phi_series(shape, max_d);
    for (int trial = 0; trial < 3; ++trial) {
      Rat omega = random_nonint(rng, trial == 0 ? 7 : (trial == 1 ? 11 : 13));
      for (int d = 0; d <= max_d; ++d) {
        if (series[d].eval(omega) != vertex_coeff_u0(shape, d, omega))
          return {false, "series(omega) != u->0 vertex coefficient at (k,n,d)=(" +
                             std::to_string(kn.first) + "," +
                             std::to_string(kn.second) + "," +
                             std::to_string(d) +
                             "), omega=" + to_decimal(omega)};
      }
    }
  }
  return {true,
          "series coefficients evaluate to the u->0 vertex coefficients on "
          "(1,3) d <= 3 and (2,4) d <= 2, 3 sampled omega each"};
}

Outcome criterion_limit_identity() {
  const std::vector<std::pair<std::pair<int, int>, int>> cells = {
      {{1, 2}, 4}, {{1, 3}, 3}, {{1, 4}, 2}, {{2, 4}, 2}};
  for (const auto& [kn, max_d] : cells) {
    Shape shape(kn.first, kn.second);
    for (int d = 0; d <= max_d; ++d) {
      LimitReport rep = hbar_limit_check(shape, d);
      if (!rep.pass())
        return {false, "limit identity fails at (k,n,d)=(" +
                           std::to_string(kn.first) + "," +
                           std::to_string(kn.second) + "," +
                           std::to_string(d) + "): degree " +
                           std::to_string(rep.degree) + " vs " +
                           std::to_string(rep.expected_degree) +
                           ", leading " + to_decimal(rep.leading) + " vs " +
                           to_decimal(rep.expected)};
    }
  }
  return {true,
          "deg_w c_d = n*d and (nd)! * leadcoeff = a_d on (1,2) d<=4, (1,3) "
          "d<=3, (1,4) d<=2, (2,4) d<=2"};
}

Outcome criterion_dwork_matrix() {
  const std::vector<std::pair<int, int>> shapes = {{1, 2}, {1, 3}, {2, 4}};
  int cells = 0;
  for (auto [k, n] : shapes) {
    Shape shape(k, n);
    for (Int p : {2, 3, 5}) {
      for (int s : {1, 2}) {
        int cutoff = static_cast<int>(
            std::min<Int>(ipow(p, s), Int(8)).convert_to<long>());
        DworkReport base = dwork_ratio_check(shape, p, s, cutoff);
        if (!base.pass)
          return {false, "ratio congruence fails at (k,n)=(" +
                             std::to_string(k) + "," + std::to_string(n) +
                             "), p=" + to_decimal(p) +
                             ", s=" + std::to_string(s)};
        DworkReport mutated = dwork_ratio_check_mutated(shape, p, s, cutoff);
        if (mutated.pass)
          return {false, "mutation failed to flip the verdict at (k,n)=(" +
                             std::to_string(k) + "," + std::to_string(n) +
                             "), p=" + to_decimal(p) +
                             ", s=" + std::to_string(s)};
        ++cells;
      }
    }
  }
  return {true, "ratio congruences hold and the mutation flips the verdict "
                "in all " +
                    std::to_string(cells) + " cells"};
}

Outcome criterion_factorization() {
  for (int n : {2, 3}) {
    Shape shape(1, n);
    for (int levels = 0; levels <= 2; ++levels) {
      FactorizationReport rep = factorization_check(shape, 3, 1, levels, 6);
      if (!rep.pass)
        return {false, "factorization fails for n=" + std::to_string(n) +
                           ", levels=" + std::to_string(levels)};
    }
  }
  return {true, "truncation products match the long truncation for (1,2) and "
                "(1,3), p=3, s=1, levels <= 2"};
}

Outcome criterion_polytope() {
  for (auto [k, n] : {std::pair<int, int>{1, 2}, {1, 3}, {1, 4}, {2, 4}}) {
    Shape shape(k, n);
    const int w = n - k;
    const int dim = k * w;
    auto unit = [&](int i, int j) {
      IVec v = IVec::Zero(dim);
      v[(i - 1) * w + (j - 1)] = 1;
      return v;
    };
    std::vector<IVec> ref;
    ref.push_back(unit(1, 1));
    for (int i = 2; i <= k; ++i)
      for (int j = 0; j <= w - 1; ++j)
        ref.push_back(unit(i, j + 1) - unit(i - 1, j + 1));
    ref.push_back(-unit(k, w));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= w - 1; ++j)
        ref.push_back(unit(i, j + 1) - unit(i, j));

    std::vector<IVec> pts = exponent_points(shape);
    auto lex = [](const IVec& a, const IVec& b) {
      for (Eigen::Index t = 0; t < a.size(); ++t)
        if (a[t] != b[t]) return a[t] < b[t];
      return false;
    };
    std::sort(ref.begin(), ref.end(), lex);
    std::sort(pts.begin(), pts.end(), lex);
    std::string where =
        " at (k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")";
    if (ref.size() != pts.size() ||
        !std::equal(ref.begin(), ref.end(), pts.begin(),
                    [](const IVec& a, const IVec& b) { return a == b; }))
      return {false, "exponent points differ from the generator list" + where};

    LatticePolytope poly = convex_hull(exponent_points(shape));
    ReflexivityReport rep = reflexivity_check(poly);
    if (!rep.reflexive || !rep.origin_interior)
      return {false, "polytope is not reflexive" + where};
    std::vector<IVec> interior = interior_lattice_points(poly);
    if (interior.size() != 1 || !interior[0].isZero())
      return {false, "interior lattice points != {origin}" + where};
  }
  return {true, "generator list, reflexivity, and interior point verified on "
                "(1,2), (1,3), (1,4), (2,4)"};
}

Outcome criterion_generic_hypergeometric() {
  Shape shape(1, 2);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 3; ++trial) {
    Rat u1 = random_nonint(rng, 7);
    Rat u2 = random_nonint(rng, 11);
    Rat omega = random_nonint(rng, 13);
    VertexParams params{{u1, u2}, omega};
    Rat delta = u2 - u1;
    for (int d = 0; d <= 5; ++d) {
      Rat lhs = vertex_coeff_generic(shape, d, params);
      Rat rhs = hypergeometric_coeff(omega, omega + delta, Rat(1) + delta, d);
      if (lhs != rhs)
        return {false, "generic coefficient is not hypergeometric at d=" +
                           std::to_string(d) + ", u=(" + to_decimal(u1) +
                           "," + to_decimal(u2) +
                           "), omega=" + to_decimal(omega)};
    }
  }
  return {true, "c_d(u, w) = (w)_d (w+u2-u1)_d / ((1+u2-u1)_d d!) at 3 "
                "sampled generic parameter sets, d <= 5"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "Gr(2,4) A-series closed form, both engines", 10,
                        criterion_gr24_a_series));
  out.push_back(run_one(2, "projective-space A-series closed form", 10,
                        criterion_proj_a_series));
  out.push_back(run_one(3, "constant term vanishes off multiples of n", 0,
                        criterion_vanishing));
  out.push_back(run_one(4, "flow enumeration matches direct powering", 0,
                        criterion_engine_equivalence));
  out.push_back(run_one(5, "T*P^1 vertex coefficients at u=0", 0,
                        criterion_p1_vertex_u0));
  out.push_back(run_one(6, "series coefficients match u->0 vertex limits", 300,
                        criterion_series_vs_u0));
  out.push_back(run_one(7, "large-parameter limit identity", 300,
                        criterion_limit_identity));
  out.push_back(run_one(8, "Dwork ratio congruences with mutation control", 60,
                        criterion_dwork_matrix));
  out.push_back(run_one(9, "truncation factorization identity", 0,
                        criterion_factorization));
  out.push_back(run_one(10, "Newton polytope generators and reflexivity", 30,
                        criterion_polytope));
  out.push_back(run_one(11, "generic vertex coefficients are hypergeometric",
                        0, criterion_generic_hypergeometric));
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace grmir
