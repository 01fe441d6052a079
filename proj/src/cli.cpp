#include "grmir/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "grmir/acceptance.hpp"
#include "grmir/cache.hpp"
#include "grmir/dwork.hpp"
#include "grmir/jsonio.hpp"
#include "grmir/master.hpp"
#include "grmir/polytope.hpp"
#include "grmir/scalars.hpp"
#include "grmir/superpotential.hpp"
#include "grmir/version.hpp"
#include "grmir/vertex.hpp"

namespace grmir {

namespace {

enum class Format { Json, Csv, Pretty };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Pretty;
}

void emit_json(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

[[noreturn]] void reject_csv(const std::string& command) {
  throw std::invalid_argument("csv format is not available for " + command +
                              "; it emits one row per series coefficient");
}

Int parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument(what + " must be a nonnegative integer, got '" +
                                s + "'");
  return Int(s);
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(parse_rat(item));
  if (!s.empty() && s.back() == ',') out.push_back(parse_rat(""));
  return out;
}

// w^4 - (3/2)w^2 + 1, highest power first.
std::string omega_pretty(const OmegaPoly& p) {
  if (p.degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mag = to_decimal(c);
    if (!rat_is_integer(c)) mag = "(" + mag + ")";
    if (i == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

struct CacheOpts {
  std::string dir_flag;
  bool disabled = false;
  bool verify = false;
};

void add_cache_flags(CLI::App* sub, CacheOpts& opts) {
  sub->add_option("--cache-dir", opts.dir_flag,
                  "cache directory (overrides GRMIR_CACHE_DIR)");
  sub->add_flag("--no-cache", opts.disabled, "disable the result cache");
  sub->add_flag("--verify-cache", opts.verify,
                "recompute and compare against the cached entry");
}

// Returns the payload, consulting and feeding the cache. If a cached entry
// disagrees with a fresh computation, reports the mismatch and fails.
Json cached_payload(const CacheOpts& opts, const std::string& key,
                    const std::function<Json()>& compute, std::ostream& err,
                    bool& mismatch) {
  mismatch = false;
  DiskCache cache(resolve_cache_dir(opts.dir_flag, opts.disabled));
  std::optional<Json> hit = cache.load(key);
  if (hit && !opts.verify) return *hit;
  Json fresh = compute();
  if (hit && opts.verify && *hit != fresh) {
    err << "cache mismatch for key '" << key << "' in " << cache.dir()
        << "\n";
    mismatch = true;
    return fresh;
  }
  if (!hit) cache.store(key, fresh);
  return fresh;
}

struct ASeriesCmd {
  int k = 0, n = 0, max_m = 0;
  int budget_m = kDefaultASeriesBudget;
  std::string format = "json";
  CacheOpts cache;

  int run(std::ostream& out, std::ostream& err) const {
    Shape shape(k, n);
    std::ostringstream key;
    key << "a-series|v=" << kVersion << "|k=" << k << "|n=" << n
        << "|max_m=" << max_m;
    bool mismatch = false;
    Json rows = cached_payload(
        cache, key.str(),
        [&] {
          Json payload = Json::array();
          for (const ASeriesRow& row : a_series(shape, max_m, budget_m)) {
            Json jr;
            jr["m"] = row.m;
            jr["a_m"] = to_decimal(row.a_m);
            payload.push_back(std::move(jr));
          }
          return payload;
        },
        err, mismatch);
    if (mismatch) return 1;

    switch (parse_format(format)) {
      case Format::Json: {
        Json doc;
        doc["command"] = "a-series";
        doc["k"] = k;
        doc["n"] = n;
        doc["max_m"] = max_m;
        doc["rows"] = rows;
        emit_json(doc, out);
        break;
      }
      case Format::Csv:
        out << "m,a_m\n";
        for (const Json& row : rows)
          out << row["m"] << "," << row["a_m"].get<std::string>() << "\n";
        break;
      case Format::Pretty:
        for (const Json& row : rows)
          out << "a_" << row["m"] << " = " << row["a_m"].get<std::string>()
              << "\n";
        break;
    }
    return 0;
  }
};

struct ConstantTermCmd {
  int k = 0, n = 0, d = 0;
  std::string engine = "both";
  int power_budget = kDefaultPowerBudget;
  std::string format = "json";

  int run(std::ostream& out, std::ostream& err) const {
    Shape shape(k, n);
    Superpotential sp = build_superpotential(shape);
    std::optional<ConstantTerm> flows, direct;
    if (engine == "flows" || engine == "both")
      flows = constant_term_pow_flows(sp, d);
    if (engine == "direct" || engine == "both")
      direct = constant_term_pow_direct(sp, d, power_budget);
    bool agree = !(flows && direct) || *flows == *direct;

    Json doc;
    doc["command"] = "constant-term";
    doc["k"] = k;
    doc["n"] = n;
    doc["d"] = d;
    doc["engine"] = engine;
    if (flows && direct) {
      doc["flows"] = constant_term_json(*flows);
      doc["direct"] = constant_term_json(*direct);
      doc["engines_agree"] = agree;
    } else {
      doc["result"] = constant_term_json(flows ? *flows : *direct);
    }
    doc["graph"] = graph_json(sp.graph);

    switch (parse_format(format)) {
      case Format::Json:
        emit_json(doc, out);
        break;
      case Format::Csv:
        reject_csv("constant-term");
      case Format::Pretty: {
        const ConstantTerm& ct = flows ? *flows : *direct;
        if (ct.z_degree < 0) {
          out << "[S^" << d << "]_0 = 0\n";
        } else {
          out << "[S^" << d << "]_0 = " << to_decimal(ct.coeff) << " z1^"
              << ct.z_degree << " z2^-" << ct.z_degree << "\n";
        }
        if (flows && direct)
          out << "engines agree: " << (agree ? "yes" : "no") << "\n";
        out << "graph: " << sp.graph.vertices.size() << " vertices, "
            << sp.graph.edges.size() << " edges\n";
        break;
      }
    }
    if (!agree) {
      err << "constant-term engines disagree at d=" << d << "\n";
      return 1;
    }
    return 0;
  }
};

struct VertexCmd {
  int k = 0, n = 0, d = 0;
  std::string omega;
  std::string u;
  VertexBudget budget;
  std::string format = "json";

  int run(std::ostream& out, std::ostream&) const {
    Shape shape(k, n);
    Rat w = parse_rat(omega);
    Rat value;
    std::vector<Rat> us;
    if (!u.empty()) {
      us = parse_rat_list(u);
      if (static_cast<int>(us.size()) != n)
        throw std::invalid_argument("--u needs exactly " + std::to_string(n) +
                                    " comma-separated rationals");
      value = vertex_coeff_generic(shape, d, {us, w}, budget);
    } else {
      value = vertex_coeff_u0(shape, d, w, budget);
    }

    switch (parse_format(format)) {
      case Format::Json: {
        Json doc;
        doc["command"] = "vertex";
        doc["k"] = k;
        doc["n"] = n;
        doc["d"] = d;
        doc["omega"] = to_decimal(w);
        doc["mode"] = u.empty() ? "u0" : "generic";
        if (!u.empty()) {
          Json ju = Json::array();
          for (const Rat& ui : us) ju.push_back(to_decimal(ui));
          doc["u"] = std::move(ju);
        }
        doc["value"] = to_decimal(value);
        emit_json(doc, out);
        break;
      }
      case Format::Csv:
        reject_csv("vertex");
      case Format::Pretty:
        out << "c_" << d << " = " << to_decimal(value) << "\n";
        break;
    }
    return 0;
  }
};

struct PhiSeriesCmd {
  int k = 0, n = 0, max_d = 0;
  MasterBudget budget;
  std::string format = "json";
  CacheOpts cache;

  int run(std::ostream& out, std::ostream& err) const {
    Shape shape(k, n);
    std::ostringstream key;
    key << "phi-series|v=" << kVersion << "|k=" << k << "|n=" << n
        << "|max_d=" << max_d;
    bool mismatch = false;
    Json series = cached_payload(
        cache, key.str(),
        [&] {
          Json payload = Json::array();
          std::vector<OmegaPoly> cs = phi_series(shape, max_d, budget);
          for (int d = 0; d <= max_d; ++d) {
            Json jd;
            jd["d"] = d;
            jd["coeffs"] = omega_poly_json(cs[d]);
            payload.push_back(std::move(jd));
          }
          return payload;
        },
        err, mismatch);
    if (mismatch) return 1;

    switch (parse_format(format)) {
      case Format::Json: {
        Json doc;
        doc["command"] = "phi-series";
        doc["k"] = k;
        doc["n"] = n;
        doc["max_d"] = max_d;
        doc["series"] = series;
        emit_json(doc, out);
        break;
      }
      case Format::Csv:
        out << "d,omega_power,coeff\n";
        for (const Json& jd : series) {
          const Json& coeffs = jd["coeffs"];
          for (size_t i = 0; i < coeffs.size(); ++i)
            out << jd["d"] << "," << i << ","
                << coeffs[i].get<std::string>() << "\n";
        }
        break;
      case Format::Pretty:
        for (const Json& jd : series) {
          std::vector<Rat> cs;
          for (const Json& c : jd["coeffs"])
            cs.push_back(parse_rat(c.get<std::string>()));
          out << "c_" << jd["d"] << "(w) = " << omega_pretty(OmegaPoly(cs))
              << "\n";
        }
        break;
    }
    return 0;
  }
};

struct LimitCheckCmd {
  int k = 0, n = 0, d = 0;
  MasterBudget budget;
  std::string format = "json";

  int run(std::ostream& out, std::ostream&) const {
    Shape shape(k, n);
    LimitReport rep = hbar_limit_check(shape, d, budget);

    switch (parse_format(format)) {
      case Format::Json: {
        Json doc;
        doc["command"] = "limit-check";
        doc["k"] = k;
        doc["n"] = n;
        doc["d"] = d;
        doc["degree"] = rep.degree;
        doc["expected_degree"] = rep.expected_degree;
        doc["degree_ok"] = rep.degree_ok;
        doc["leading"] = to_decimal(rep.leading);
        doc["expected"] = to_decimal(rep.expected);
        doc["leading_ok"] = rep.leading_ok;
        doc["pass"] = rep.pass();
        emit_json(doc, out);
        break;
      }
      case Format::Csv:
        reject_csv("limit-check");
      case Format::Pretty:
        out << "degree " << rep.degree << " (expected " << rep.expected_degree
            << "): " << (rep.degree_ok ? "ok" : "MISMATCH") << "\n"
            << "leading " << to_decimal(rep.leading) << " (expected "
            << to_decimal(rep.expected)
            << "): " << (rep.leading_ok ? "ok" : "MISMATCH") << "\n"
            << pass_word(rep.pass()) << "\n";
        break;
    }
    return rep.pass() ? 0 : 1;
  }
};

struct DworkCheckCmd {
  int k = 0, n = 0;
  std::string p = "3";
  int s = 1;
  int cutoff = 8;
  int levels = -1;  // < 0 means ratio mode
  bool mutate = false;
  int budget_m = kDefaultASeriesBudget;
  std::string format = "json";

  int run(std::ostream& out, std::ostream&) const {
    Shape shape(k, n);
    Int prime = parse_uint(p, "--p");
    bool pass = false;
    std::optional<int> first_failure;

    Json doc;
    doc["command"] = "dwork-check";
    doc["k"] = k;
    doc["n"] = n;
    doc["p"] = to_decimal(prime);
    doc["s"] = s;
    doc["cutoff"] = cutoff;
    if (levels >= 0) {
      FactorizationReport rep =
          factorization_check(shape, prime, s, levels, cutoff, budget_m);
      pass = rep.pass;
      first_failure = rep.first_failure_degree;
      doc["mode"] = "factorization";
      doc["levels"] = levels;
    } else {
      DworkReport rep =
          mutate ? dwork_ratio_check_mutated(shape, prime, s, cutoff, budget_m)
                 : dwork_ratio_check(shape, prime, s, cutoff, budget_m);
      pass = rep.pass;
      first_failure = rep.first_failure_degree;
      doc["mode"] = "ratio";
      doc["mutated"] = mutate;
    }
    doc["pass"] = pass;
    if (first_failure) {
      doc["first_failure_degree"] = *first_failure;
    } else {
      doc["first_failure_degree"] = nullptr;
    }

    switch (parse_format(format)) {
      case Format::Json:
        emit_json(doc, out);
        break;
      case Format::Csv:
        reject_csv("dwork-check");
      case Format::Pretty:
        out << doc["mode"].get<std::string>() << " check, p=" << p
            << " s=" << s << " cutoff=" << cutoff << ": " << pass_word(pass);
        if (first_failure) out << " (first failure at degree " << *first_failure << ")";
        out << "\n";
        break;
    }
    return pass ? 0 : 1;
  }
};

struct PolytopeCheckCmd {
  int k = 0, n = 0;
  int area_budget = kDefaultPolytopeArea;
  std::string format = "json";

  int run(std::ostream& out, std::ostream&) const {
    Shape shape(k, n);
    std::vector<IVec> points = exponent_points(shape, area_budget);
    LatticePolytope poly = convex_hull(points);
    ReflexivityReport rep = reflexivity_check(poly);
    std::vector<IVec> interior = interior_lattice_points(poly);
    bool interior_is_origin = interior.size() == 1 && interior[0].isZero();
    bool pass = rep.reflexive && rep.origin_interior && interior_is_origin;

    switch (parse_format(format)) {
      case Format::Json: {
        Json doc;
        doc["command"] = "polytope-check";
        doc["k"] = k;
        doc["n"] = n;
        doc["dim"] = poly.dim;
        Json jp = Json::array();
        for (const IVec& v : poly.points) jp.push_back(ivec_json(v));
        doc["points"] = std::move(jp);
        Json jf = Json::array();
        for (const Facet& f : poly.facets) jf.push_back(facet_json(f));
        doc["facets"] = std::move(jf);
        doc["reflexive"] = rep.reflexive;
        doc["origin_interior"] = rep.origin_interior;
        Json ji = Json::array();
        for (const IVec& v : interior) ji.push_back(ivec_json(v));
        doc["interior_points"] = std::move(ji);
        doc["pass"] = pass;
        emit_json(doc, out);
        break;
      }
      case Format::Csv:
        reject_csv("polytope-check");
      case Format::Pretty:
        out << "dim " << poly.dim << ", " << poly.points.size() << " points, "
            << poly.facets.size() << " facets\n"
            << "reflexive: " << (rep.reflexive ? "yes" : "no")
            << ", origin interior: " << (rep.origin_interior ? "yes" : "no")
            << ", interior lattice points: " << interior.size() << "\n"
            << pass_word(pass) << "\n";
        break;
    }
    return pass ? 0 : 1;
  }
};

struct VerifyAllCmd {
  std::string format = "json";

  int run(std::ostream& out, std::ostream&) const {
    std::vector<CriterionResult> results = run_acceptance();
    bool pass = all_pass(results);

    switch (parse_format(format)) {
      case Format::Json: {
        Json doc;
        doc["command"] = "verify-all";
        Json jc = Json::array();
        for (const CriterionResult& r : results) {
          Json jr;
          jr["id"] = r.id;
          jr["name"] = r.name;
          jr["pass"] = r.pass;
          jr["seconds"] = r.seconds;
          jr["detail"] = r.detail;
          jc.push_back(std::move(jr));
        }
        doc["criteria"] = std::move(jc);
        doc["pass"] = pass;
        emit_json(doc, out);
        break;
      }
      case Format::Csv:
        reject_csv("verify-all");
      case Format::Pretty: {
        int passed = 0;
        for (const CriterionResult& r : results) {
          passed += r.pass ? 1 : 0;
          out << "[" << std::setw(2) << r.id << "] " << pass_word(r.pass)
              << "  " << std::fixed << std::setprecision(2) << std::setw(7)
              << r.seconds << "s  " << r.name << "\n";
          if (!r.pass) out << "      " << r.detail << "\n";
        }
        out << passed << "/" << results.size() << " criteria passed\n";
        break;
      }
    }
    return pass ? 0 : 1;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact series and congruence checks for cotangent bundles of "
               "Grassmannians"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_format = [](CLI::App* sub, std::string& fmt) {
    sub->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto add_shape = [](CLI::App* sub, int& k, int& n) {
    sub->add_option("--k", k, "columns of the diagram")->required();
    sub->add_option("--n", n, "ambient dimension n (needs n >= 2k)")
        ->required();
  };

  int rc = 0;

  ASeriesCmd a_cmd;
  CLI::App* a_sub = app.add_subcommand(
      "a-series", "coefficients a_m of the constant-term series");
  add_shape(a_sub, a_cmd.k, a_cmd.n);
  a_sub->add_option("--max-m", a_cmd.max_m, "largest m to emit")->required();
  a_sub->add_option("--budget-m", a_cmd.budget_m, "a-series budget");
  add_format(a_sub, a_cmd.format);
  add_cache_flags(a_sub, a_cmd.cache);
  a_sub->callback([&] { rc = a_cmd.run(out, err); });

  ConstantTermCmd ct_cmd;
  CLI::App* ct_sub = app.add_subcommand(
      "constant-term", "constant term of S^d with the flow graph");
  add_shape(ct_sub, ct_cmd.k, ct_cmd.n);
  ct_sub->add_option("--d", ct_cmd.d, "power of the superpotential")
      ->required();
  ct_sub->add_option("--engine", ct_cmd.engine, "evaluation engine")
      ->check(CLI::IsMember({"flows", "direct", "both"}));
  ct_sub->add_option("--power-budget", ct_cmd.power_budget,
                     "largest d the direct engine accepts");
  add_format(ct_sub, ct_cmd.format);
  ct_sub->callback([&] { rc = ct_cmd.run(out, err); });

  VertexCmd v_cmd;
  CLI::App* v_sub = app.add_subcommand(
      "vertex", "vertex coefficient c_d, generic or at u=0");
  add_shape(v_sub, v_cmd.k, v_cmd.n);
  v_sub->add_option("--d", v_cmd.d, "quasimap degree")->required();
  v_sub->add_option("--omega", v_cmd.omega, "omega as a rational, e.g. 5/2")
      ->required();
  v_sub->add_option("--u", v_cmd.u,
                    "comma-separated u_1..u_n; omitted means the u->0 limit");
  v_sub->add_option("--budget-k", v_cmd.budget.max_k, "largest k accepted");
  v_sub->add_option("--budget-n", v_cmd.budget.max_n, "largest n accepted");
  v_sub->add_option("--budget-d", v_cmd.budget.max_d, "largest d accepted");
  add_format(v_sub, v_cmd.format);
  v_sub->callback([&] { rc = v_cmd.run(out, err); });

  PhiSeriesCmd phi_cmd;
  CLI::App* phi_sub = app.add_subcommand(
      "phi-series", "omega-polynomial coefficients c_d of the master series");
  add_shape(phi_sub, phi_cmd.k, phi_cmd.n);
  phi_sub->add_option("--max-d", phi_cmd.max_d, "largest d to emit")
      ->required();
  phi_sub->add_option("--depth-budget", phi_cmd.budget.max_depth,
                      "largest depth n*max_d accepted");
  phi_sub->add_option("--area-budget", phi_cmd.budget.max_area,
                      "largest k(n-k) accepted");
  add_format(phi_sub, phi_cmd.format);
  add_cache_flags(phi_sub, phi_cmd.cache);
  phi_sub->callback([&] { rc = phi_cmd.run(out, err); });

  LimitCheckCmd lim_cmd;
  CLI::App* lim_sub = app.add_subcommand(
      "limit-check", "degree and leading coefficient of c_d vs the A-series");
  add_shape(lim_sub, lim_cmd.k, lim_cmd.n);
  lim_sub->add_option("--d", lim_cmd.d, "series degree to check")->required();
  lim_sub->add_option("--depth-budget", lim_cmd.budget.max_depth,
                      "largest depth n*d accepted");
  lim_sub->add_option("--area-budget", lim_cmd.budget.max_area,
                      "largest k(n-k) accepted");
  add_format(lim_sub, lim_cmd.format);
  lim_sub->callback([&] { rc = lim_cmd.run(out, err); });

  DworkCheckCmd dw_cmd;
  CLI::App* dw_sub = app.add_subcommand(
      "dwork-check", "Dwork ratio congruence or truncation factorization");
  add_shape(dw_sub, dw_cmd.k, dw_cmd.n);
  dw_sub->add_option("--p", dw_cmd.p, "prime")->required();
  dw_sub->add_option("--s", dw_cmd.s, "congruence level");
  dw_sub->add_option("--cutoff", dw_cmd.cutoff, "z-degree cutoff");
  CLI::Option* levels_opt = dw_sub->add_option(
      "--levels", dw_cmd.levels, "check the factorization up to this level");
  dw_sub->add_flag("--mutate", dw_cmd.mutate,
                   "perturb F_s by p^{s-1} at z^1 first")
      ->excludes(levels_opt);
  dw_sub->add_option("--budget-m", dw_cmd.budget_m, "a-series budget");
  add_format(dw_sub, dw_cmd.format);
  dw_sub->callback([&] { rc = dw_cmd.run(out, err); });

  PolytopeCheckCmd poly_cmd;
  CLI::App* poly_sub = app.add_subcommand(
      "polytope-check", "Newton polytope facets, reflexivity, interior");
  add_shape(poly_sub, poly_cmd.k, poly_cmd.n);
  poly_sub->add_option("--area-budget", poly_cmd.area_budget,
                       "largest k(n-k) accepted");
  add_format(poly_sub, poly_cmd.format);
  poly_sub->callback([&] { rc = poly_cmd.run(out, err); });

  VerifyAllCmd all_cmd;
  CLI::App* all_sub =
      app.add_subcommand("verify-all", "run the full acceptance battery");
  add_format(all_sub, all_cmd.format);
  all_sub->callback([&] { rc = all_cmd.run(out, err); });

  // CLI11's vector parse consumes tokens from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace grmir
