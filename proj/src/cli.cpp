#include "cartierlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cartierlab/json_io.hpp"
#include "cartierlab/verify.hpp"

namespace cartierlab {

namespace {

constexpr const char* kConfigEnv = "CARTIER_LAB_CONFIG";

struct Defaults {
  std::string ring = "Z";
  int trunc = 8;
  int k = 4;
  uint64_t seed = 0;
  int universal_ceiling = 8;
};

// Flag > config file named by CARTIER_LAB_CONFIG > built-in.
Defaults load_defaults() {
  Defaults d;
  const char* path = std::getenv(kConfigEnv);
  if (!path || !*path) return d;
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::UsageError, std::string("cannot read config file ") + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("config file: ") + e.what());
  }
  if (j.contains("ring")) d.ring = j.at("ring").get<std::string>();
  if (j.contains("trunc")) d.trunc = j.at("trunc").get<int>();
  if (j.contains("k")) d.k = j.at("k").get<int>();
  if (j.contains("seed")) d.seed = j.at("seed").get<uint64_t>();
  if (j.contains("universal_ceiling")) d.universal_ceiling = j.at("universal_ceiling").get<int>();
  return d;
}

json parse_inline_or_file(const std::string& text) {
  std::string payload = text;
  if (!text.empty() && text[0] != '{' && text[0] != '[') {
    std::ifstream in(text);
    if (!in) throw Error(ErrorKind::UsageError, "cannot read input file " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    payload = ss.str();
  }
  try {
    return json::parse(payload);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("input JSON: ") + e.what());
  }
}

void emit(std::ostream& out, const json& j, bool as_json, const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

std::string series_text(const TruncatedSeries& s) { return s.to_string(); }

WittVector read_witt(const std::string& in, const std::string& ring, int k) {
  json j = parse_inline_or_file(in);
  if (j.contains("ring")) return witt_from_json(j);
  return witt_from_json(j, RingSpec::parse(ring), k);
}

FormalGroupLaw law_by_name(const std::string& name, const RingSpec& spec, int trunc) {
  if (name == "additive") return fgl_additive(spec, 1, trunc);
  if (name == "multiplicative") return fgl_multiplicative(spec, trunc);
  if (name == "legendre") {
    if (spec != RingSpec::polynomial(RingSpec::rationals(), "l"))
      throw Error(ErrorKind::UsageError, "the legendre law lives over Q[l]");
    return legendre_fgl(trunc);
  }
  throw Error(ErrorKind::UsageError, "unknown law '" + name + "'");
}

std::map<std::string, RingValue> parse_assignments(const std::vector<std::string>& sets,
                                                   const RingSpec& target) {
  std::map<std::string, RingValue> assign;
  for (const std::string& s : sets) {
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::UsageError, "--set expects var=value, got '" + s + "'");
    assign.emplace(s.substr(0, eq), parse_ring_value(target, s.substr(eq + 1)));
  }
  return assign;
}

struct CliState {
  Defaults defaults;
  std::string ring;
  int trunc = 0;
  int k = 0;
  long index_n = 0;  // positional n for ver/frob
  long opt_n = 0;    // --n flags
  uint64_t seed = 0;
  bool as_json = false;
  std::string in_payload, rhs_payload, law, expr, target, suite, op_name, teich_c;
  std::vector<std::string> sets;
  int vbound = 4;
  int k_out = 0;
};

void add_common(CLI::App* cmd, CliState& st, bool with_ring = true) {
  if (with_ring) cmd->add_option("--ring", st.ring, "coefficient ring, e.g. Z, Q, Z/9, Q[l]");
  cmd->add_flag("--json", st.as_json, "emit canonical JSON");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliState st;
  st.defaults = load_defaults();
  st.ring = st.defaults.ring;
  st.trunc = st.defaults.trunc;
  st.k = st.defaults.k;
  st.seed = st.defaults.seed;
  set_universal_ceiling(st.defaults.universal_ceiling);

  CLI::App app{"exact formal groups, big Witt vectors, Cartier operators, and the "
               "Legendre congruence checks"};
  app.require_subcommand(1);

  // ---- fgl ------------------------------------------------------------
  CLI::App* fgl = app.add_subcommand("fgl", "formal group laws");
  fgl->require_subcommand(1);
  auto add_law_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--law", st.law, "additive | multiplicative | legendre");
    cmd->add_option("--in", st.in_payload, "formal group law JSON (inline or path)");
    cmd->add_option("--trunc", st.trunc, "series truncation");
    add_common(cmd, st);
  };
  auto get_law = [&]() -> FormalGroupLaw {
    if (!st.in_payload.empty()) return fgl_from_json(parse_inline_or_file(st.in_payload));
    if (st.law.empty()) throw Error(ErrorKind::UsageError, "need --law or --in");
    return law_by_name(st.law, RingSpec::parse(st.ring), st.trunc);
  };
  for (const char* verb : {"validate", "log", "from-log", "invariant-form", "base-change"})
    add_law_inputs(fgl->add_subcommand(verb));
  fgl->get_subcommand("from-log")->add_option("--log", st.expr, "logarithm series JSON");
  fgl->get_subcommand("base-change")->add_option("--target", st.target, "target ring spec");
  fgl->get_subcommand("base-change")
      ->add_option("--set", st.sets, "variable assignment var=value (in the target ring)");

  // ---- witt -----------------------------------------------------------
  CLI::App* witt = app.add_subcommand("witt", "big Witt vectors");
  witt->require_subcommand(1);
  auto add_witt_inputs = [&](CLI::App* cmd, bool rhs = false) {
    cmd->add_option("--in", st.in_payload, "witt vector JSON {\"b\": [...]}");
    if (rhs) cmd->add_option("--rhs", st.rhs_payload, "second operand JSON");
    cmd->add_option("--k", st.k, "truncation length");
    add_common(cmd, st);
  };
  add_witt_inputs(witt->add_subcommand("add"), true);
  add_witt_inputs(witt->add_subcommand("mul"), true);
  add_witt_inputs(witt->add_subcommand("neg"));
  add_witt_inputs(witt->add_subcommand("ghost"));
  {
    CLI::App* fg = witt->add_subcommand("from-ghost");
    fg->add_option("--in", st.in_payload, "ghost components {\"w\": [...]} or [...]");
    fg->add_option("--k", st.k, "truncation length");
    add_common(fg, st);
  }
  {
    CLI::App* te = witt->add_subcommand("teich");
    te->add_option("--c", st.teich_c, "ring element")->required();
    te->add_option("--k", st.k, "truncation length");
    add_common(te, st);
  }
  {
    CLI::App* ver = witt->add_subcommand("ver");
    ver->add_option("n", st.index_n, "V index")->required();
    ver->add_option("--k-out", st.k_out, "output truncation (default n*k)");
    add_witt_inputs(ver);
  }
  {
    CLI::App* frob = witt->add_subcommand("frob");
    frob->add_option("n", st.index_n, "F index")->required();
    add_witt_inputs(frob);
  }
  {
    CLI::App* uni = witt->add_subcommand("universal");
    uni->add_option("--op", st.op_name, "add | mul | frob")->required();
    uni->add_option("--n", st.opt_n, "frobenius index");
    uni->add_option("--k", st.k, "input truncation length");
    add_common(uni, st, false);
  }

  // ---- cartier ----------------------------------------------------------
  CLI::App* cartier = app.add_subcommand("cartier", "Cartier ring elements");
  cartier->require_subcommand(1);
  {
    CLI::App* norm = cartier->add_subcommand("normalize");
    norm->add_option("--expr", st.expr, "word in V<n>, F<n>, [c], +, *")->required();
    norm->add_option("--vbound", st.vbound, "V-filtration cutoff");
    add_common(norm, st);
  }
  {
    CLI::App* ap = cartier->add_subcommand("apply");
    ap->add_option("--expr", st.expr, "word in V<n>, F<n>, [c], +, *")->required();
    ap->add_option("--vbound", st.vbound, "V-filtration cutoff");
    ap->add_option("--in", st.in_payload, "witt vector JSON")->required();
    ap->add_option("--k", st.k, "truncation length");
    add_common(ap, st);
  }

  // ---- lambda -----------------------------------------------------------
  CLI::App* lambda = app.add_subcommand("lambda", "the functor Lambda on nilpotent algebras");
  lambda->require_subcommand(1);
  auto add_lambda_inputs = [&](CLI::App* cmd, bool rhs) {
    cmd->add_option("--algebra", st.target, "nilpotent algebra JSON")->required();
    cmd->add_option("--in", st.in_payload, "lambda element JSON {\"coeffs\": [...]}")->required();
    if (rhs) cmd->add_option("--rhs", st.rhs_payload, "second operand")->required();
    add_common(cmd, st, false);
  };
  add_lambda_inputs(lambda->add_subcommand("mul"), true);
  add_lambda_inputs(lambda->add_subcommand("inv"), false);

  // ---- legendre -----------------------------------------------------------
  CLI::App* legendre = app.add_subcommand("legendre", "Legendre family congruences");
  legendre->require_subcommand(1);
  {
    CLI::App* om = legendre->add_subcommand("omega");
    om->add_option("--n", st.opt_n, "even index")->required();
    add_common(om, st, false);
  }
  {
    CLI::App* lg = legendre->add_subcommand("log");
    lg->add_option("--trunc", st.trunc, "truncation");
    add_common(lg, st, false);
  }
  {
    CLI::App* sw = legendre->add_subcommand("sweep");
    sw->add_option("--max-n", st.opt_n, "largest even index")->required();
    add_common(sw, st, false);
  }
  {
    CLI::App* hy = legendre->add_subcommand("hypergeom");
    hy->add_option("--trunc", st.trunc, "truncation");
    add_common(hy, st, false);
  }
  {
    CLI::App* bi = legendre->add_subcommand("binom");
    bi->add_option("--n", st.opt_n, "even index")->required();
    add_common(bi, st, false);
  }

  // ---- verify ---------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", st.suite, "restrict to one suite");
  verify->add_option("--seed", st.seed, "seed for the randomized cases");
  add_common(verify, st, false);

  try {
    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with exit 0.
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    RingSpec spec = RingSpec::parse(st.ring);

    if (fgl->parsed()) {
      if (fgl->get_subcommand("validate")->parsed()) {
        FormalGroupLaw F = get_law();
        FglReport rep = fgl_validate(F);
        json j{{"unit_ok", rep.unit_ok},
               {"comm_ok", rep.comm_ok},
               {"assoc_ok", rep.assoc_ok},
               {"max_degree_checked", rep.max_degree_checked}};
        std::ostringstream text;
        text << "unit_ok=" << rep.unit_ok << " comm_ok=" << rep.comm_ok
             << " assoc_ok=" << rep.assoc_ok << " max_degree_checked=" << rep.max_degree_checked;
        emit(out, j, st.as_json, text.str());
        return rep.ok() ? 0 : 1;
      }
      if (fgl->get_subcommand("log")->parsed()) {
        auto logs = fgl_log(get_law());
        if (logs.size() == 1)
          emit(out, series_to_json(logs[0]), st.as_json, series_text(logs[0]));
        else {
          json arr = json::array();
          std::ostringstream text;
          for (const auto& s : logs) {
            arr.push_back(series_to_json(s));
            text << series_text(s) << "\n";
          }
          emit(out, arr, st.as_json, text.str());
        }
        return 0;
      }
      if (fgl->get_subcommand("from-log")->parsed()) {
        if (st.expr.empty()) throw Error(ErrorKind::UsageError, "need --log");
        json j = parse_inline_or_file(st.expr);
        std::vector<TruncatedSeries> logs;
        if (j.is_array())
          for (const json& s : j) logs.push_back(series_from_json(s));
        else
          logs.push_back(series_from_json(j));
        FormalGroupLaw F = fgl_from_log(logs);
        emit(out, fgl_to_json(F), st.as_json, series_text(F.components[0]));
        return 0;
      }
      if (fgl->get_subcommand("invariant-form")->parsed()) {
        InvariantForm w = invariant_differential(get_law());
        emit(out, form_to_json(w), st.as_json, series_text(w.coeffs[0][0]));
        return 0;
      }
      if (fgl->get_subcommand("base-change")->parsed()) {
        if (st.target.empty()) throw Error(ErrorKind::UsageError, "need --target");
        RingSpec target = RingSpec::parse(st.target);
        FormalGroupLaw F = get_law();
        FormalGroupLaw G = fgl_base_change(F, target, parse_assignments(st.sets, target));
        emit(out, fgl_to_json(G), st.as_json, series_text(G.components[0]));
        return 0;
      }
    }

    if (witt->parsed()) {
      auto emit_witt = [&](const WittVector& w) {
        std::ostringstream text;
        text << w.series().to_string();
        emit(out, witt_to_json(w), st.as_json, text.str());
      };
      if (witt->get_subcommand("add")->parsed() || witt->get_subcommand("mul")->parsed()) {
        bool is_add = witt->get_subcommand("add")->parsed();
        if (st.in_payload.empty() || st.rhs_payload.empty())
          throw Error(ErrorKind::UsageError, "need --in and --rhs");
        WittVector a = read_witt(st.in_payload, st.ring, st.k);
        WittVector b = read_witt(st.rhs_payload, st.ring, st.k);
        emit_witt(is_add ? witt_add(a, b) : witt_mul(a, b));
        return 0;
      }
      if (witt->get_subcommand("neg")->parsed()) {
        emit_witt(witt_neg(read_witt(st.in_payload, st.ring, st.k)));
        return 0;
      }
      if (witt->get_subcommand("ghost")->parsed()) {
        auto w = ghost(read_witt(st.in_payload, st.ring, st.k));
        json arr = json::array();
        std::ostringstream text;
        for (size_t i = 0; i < w.size(); ++i) {
          arr.push_back(value_to_json(w[i]));
          text << (i ? ", " : "(") << w[i].to_string();
        }
        text << ")";
        emit(out, json{{"w", arr}}, st.as_json, text.str());
        return 0;
      }
      if (witt->get_subcommand("from-ghost")->parsed()) {
        json j = parse_inline_or_file(st.in_payload);
        json arr = j.is_array() ? j : j.at("w");
        std::vector<RingValue> w;
        for (const json& c : arr) w.push_back(value_from_json(spec, c));
        emit_witt(from_ghost(w, spec));
        return 0;
      }
      if (witt->get_subcommand("teich")->parsed()) {
        emit_witt(teichmuller(parse_ring_value(spec, st.teich_c), st.k));
        return 0;
      }
      if (witt->get_subcommand("ver")->parsed()) {
        WittVector a = read_witt(st.in_payload, st.ring, st.k);
        emit_witt(verschiebung(st.index_n, a,
                               st.k_out > 0 ? std::optional<int>(st.k_out) : std::nullopt));
        return 0;
      }
      if (witt->get_subcommand("frob")->parsed()) {
        emit_witt(frobenius(st.index_n, read_witt(st.in_payload, st.ring, st.k)));
        return 0;
      }
      if (witt->get_subcommand("universal")->parsed()) {
        UniversalOp op;
        if (st.op_name == "add") op = UniversalOp::Add;
        else if (st.op_name == "mul") op = UniversalOp::Mul;
        else if (st.op_name == "frob") op = UniversalOp::Frobenius;
        else throw Error(ErrorKind::UsageError, "--op must be add, mul, or frob");
        if (op == UniversalOp::Frobenius && st.opt_n < 1)
          throw Error(ErrorKind::UsageError, "frob needs --n");
        const auto& polys = universal_polynomials(op, st.opt_n, st.k);
        json arr = json::array();
        std::ostringstream text;
        for (size_t i = 0; i < polys.size(); ++i) {
          arr.push_back(series_to_json(polys[i]));
          text << "b" << (i + 1) << " = " << polys[i].to_string() << "\n";
        }
        emit(out, arr, st.as_json, text.str());
        return 0;
      }
    }

    if (cartier->parsed()) {
      CartierExpr e = parse_cartier_expr(st.expr, spec);
      CartierElement xi = cartier_normalize(e, spec, st.vbound);
      if (cartier->get_subcommand("normalize")->parsed()) {
        std::ostringstream text;
        bool first = true;
        for (const auto& [nm, a] : xi.terms) {
          if (!first) text << " + ";
          first = false;
          text << "V" << nm.first << "[" << a.to_string() << "]F" << nm.second;
        }
        if (first) text << "0";
        emit(out, cartier_to_json(xi), st.as_json, text.str());
        return 0;
      }
      WittVector a = read_witt(st.in_payload, st.ring, st.k);
      WittVector r = cartier_apply(xi, a);
      emit(out, witt_to_json(r), st.as_json, r.series().to_string());
      return 0;
    }

    if (lambda->parsed()) {
      auto alg = std::make_shared<const NilpotentAlgebra>(
          algebra_from_json(parse_inline_or_file(st.target)));
      LambdaElement u = lambda_from_json(parse_inline_or_file(st.in_payload), alg);
      LambdaElement r = lambda->get_subcommand("mul")->parsed()
                            ? lambda_mul(u, lambda_from_json(
                                                parse_inline_or_file(st.rhs_payload), alg))
                            : lambda_inv(u);
      std::ostringstream text;
      text << "1";
      for (size_t i = 0; i < r.coeffs.size(); ++i) {
        text << " + (";
        for (size_t j = 0; j < r.coeffs[i].size(); ++j)
          text << (j ? ", " : "") << r.coeffs[i][j].to_string();
        text << ")t^" << (i + 1);
      }
      emit(out, lambda_to_json(r), st.as_json, text.str());
      return 0;
    }

    if (legendre->parsed()) {
      if (legendre->get_subcommand("omega")->parsed()) {
        RingValue p = legendre_omega_coeff(st.opt_n);
        emit(out, value_to_json(p), st.as_json, p.to_string());
        return 0;
      }
      if (legendre->get_subcommand("log")->parsed()) {
        TruncatedSeries lg = legendre_log(st.trunc);
        emit(out, series_to_json(lg), st.as_json, lg.to_string());
        return 0;
      }
      if (legendre->get_subcommand("sweep")->parsed()) {
        SweepReport rep = stienstra_sweep(st.opt_n);
        std::ostringstream text;
        for (const CongruenceReport& r : rep.checks)
          text << "n=" << r.n << " mod " << r.modulus.get_str() << ": "
               << (r.ok ? "ok" : "FAIL") << "\n";
        text << (rep.ok ? "all ok" : "FAILURES") << " (" << rep.checks.size() << " checks, "
             << static_cast<long>(rep.wall_ms) << " ms)";
        emit(out, sweep_report_to_json(rep), st.as_json, text.str());
        return rep.ok ? 0 : 1;
      }
      if (legendre->get_subcommand("hypergeom")->parsed()) {
        TruncatedSeries f = hypergeom_half(st.trunc);
        emit(out, series_to_json(f), st.as_json, f.to_string());
        return 0;
      }
      if (legendre->get_subcommand("binom")->parsed()) {
        CentralBinomReport rep = central_binom_congruence(st.opt_n);
        std::ostringstream text;
        text << "binom(" << rep.n << ", " << rep.n / 2 << ") mod " << rep.modulus.get_str()
             << " = " << rep.value_mod.get_str() << (rep.is_pm_one ? " (+-1)" : " (not +-1)")
             << (rep.modulus_prime ? ", prime modulus" : ", composite modulus");
        emit(out, central_binom_report_to_json(rep), st.as_json, text.str());
        return 0;
      }
    }

    if (verify->parsed()) {
      VerificationReport rep = verify_all(st.seed, st.suite);
      json suites = json::array();
      std::ostringstream text;
      for (const SuiteReport& s : rep.suites) {
        json fails = json::array();
        for (const CaseFailure& f : s.failures)
          fails.push_back(json{{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
        suites.push_back(json{{"suite", s.suite}, {"cases", s.cases}, {"failures", fails}});
        text << s.suite << ": " << s.cases << " cases, " << s.failures.size() << " failures ("
             << static_cast<long>(s.wall_ms) << " ms)\n";
        for (const CaseFailure& f : s.failures)
          text << "  FAIL " << f.case_id << ": expected " << f.expected << ", got " << f.actual
               << "\n";
      }
      text << (rep.ok() ? "all ok" : "FAILURES");
      emit(out, json{{"ok", rep.ok()}, {"seed", st.seed}, {"suites", suites}}, st.as_json,
           text.str());
      return rep.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace cartierlab
