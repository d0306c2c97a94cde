#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cartierlab/cli.hpp"
#include "cartierlab/json_io.hpp"
#include "cartierlab/legendre.hpp"
#include "cartierlab/rng.hpp"
#include "cartierlab/verify.hpp"

using namespace cartierlab;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_SUITE_BEGIN("interfaces");

TEST_CASE("value JSON round trip") {
  ValueGen gen(41);
  std::vector<RingSpec> specs = {
      RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(360),
      RingSpec::polynomial(RingSpec::rationals(), "l"),
      RingSpec::polynomial(RingSpec::polynomial(RingSpec::integers(), "c1"), "c2")};
  for (const RingSpec& spec : specs)
    for (int t = 0; t < 20; ++t) {
      RingValue v = gen.value(spec, 99);
      json j = value_to_json(v);
      CHECK(ring_eq(value_from_json(spec, j), v));
      CHECK(value_to_json(value_from_json(spec, j)) == j);
    }
}

TEST_CASE("series JSON round trip is bit exact") {
  ValueGen gen(43);
  RingSpec ql = RingSpec::polynomial(RingSpec::rationals(), "l");
  for (int t = 0; t < 10; ++t) {
    TruncatedSeries s = gen.pointed_series(ql, {"x", "y"}, 7);
    json j = series_to_json(s);
    TruncatedSeries back = series_from_json(j);
    CHECK(series_eq(back, s));
    CHECK(series_to_json(back).dump() == j.dump());
  }
  // Graded-lex order of emitted terms.
  TruncatedSeries s(RingSpec::integers(), {"x", "y"}, 3);
  s.set_coeff({0, 2}, RingValue::one(RingSpec::integers()));
  s.set_coeff({1, 0}, RingValue::one(RingSpec::integers()));
  s.set_coeff({2, 0}, RingValue::one(RingSpec::integers()));
  json j = series_to_json(s);
  CHECK(j["terms"][0]["exp"] == json::array({1, 0}));
  CHECK(j["terms"][1]["exp"] == json::array({2, 0}));
  CHECK(j["terms"][2]["exp"] == json::array({0, 2}));
  // Bad payloads are rejected.
  json bad = j;
  bad["terms"][0]["coeff"] = "0";
  CHECK_THROWS_AS(series_from_json(bad), Error);
}

TEST_CASE("witt and fgl JSON round trips") {
  ValueGen gen(47);
  for (int t = 0; t < 10; ++t) {
    WittVector w = gen.witt(RingSpec::integers_mod(360), 6);
    json j = witt_to_json(w);
    CHECK(witt_eq(witt_from_json(j), w));
    CHECK(witt_to_json(witt_from_json(j)).dump() == j.dump());
  }
  FormalGroupLaw F = legendre_fgl(5);
  json j = fgl_to_json(F);
  FormalGroupLaw back = fgl_from_json(j);
  CHECK(back.dim == F.dim);
  CHECK(series_eq(back.components[0], F.components[0]));
  CHECK(fgl_to_json(back).dump() == j.dump());
}

TEST_CASE("form and cartier JSON round trips") {
  InvariantForm w = invariant_differential(legendre_fgl(6));
  json j = form_to_json(w);
  InvariantForm back = form_from_json(j);
  CHECK(back.dim == w.dim);
  CHECK(series_eq(back.coeffs[0][0], w.coeffs[0][0]));
  CHECK(form_to_json(back).dump() == j.dump());

  RingSpec z = RingSpec::integers();
  CartierElement e = cartier_normalize(parse_cartier_expr("[3]+[4]", z), z, 5);
  json cj = cartier_to_json(e);
  CHECK(cartier_eq(cartier_from_json(cj), e));
  CHECK(cartier_to_json(cartier_from_json(cj)).dump() == cj.dump());
}

TEST_CASE("config file supplies defaults, flags win") {
  std::string path = "/tmp/cartier_lab_config_test.json";
  {
    std::ofstream f(path);
    f << R"({"ring": "Z/7", "k": 3})";
  }
  setenv("CARTIER_LAB_CONFIG", path.c_str(), 1);
  std::string out;
  // Ring and k come from the config file.
  int code = run({"witt", "teich", "--c", "5", "--json"}, &out);
  CHECK(code == 0);
  json j = json::parse(out);
  CHECK(j["ring"] == "Z/7");
  CHECK(j["b"] == json::array({"2", "0", "0"}));
  // A flag overrides the config.
  code = run({"witt", "teich", "--c", "5", "--ring", "Z", "--k", "1", "--json"}, &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["b"] == json::array({"-5"}));
  unsetenv("CARTIER_LAB_CONFIG");
  code = run({"witt", "teich", "--c", "5", "--json"}, &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["ring"] == "Z");  // built-in default again
}

TEST_CASE("cli witt verbs") {
  std::string out;
  int code = run({"witt", "frob", "2", "--ring", "Z", "--k", "4", "--in",
                  R"({"b":["-3","0","0","0"]})", "--json"},
                 &out);
  CHECK(code == 0);
  json j = json::parse(out);
  CHECK(j["b"] == json::array({"-9", "0"}));

  code = run({"witt", "add", "--ring", "Z", "--k", "2", "--in", R"({"b":["-2","0"]})",
              "--rhs", R"({"b":["-3","0"]})", "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["b"] == json::array({"-5", "6"}));

  code = run({"witt", "ghost", "--ring", "Z", "--k", "2", "--in", R"({"b":["-1","-1"]})",
              "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["w"] == json::array({"1", "3"}));

  code = run({"witt", "teich", "--c", "5", "--ring", "Z/7", "--k", "2", "--json"}, &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["b"] == json::array({"2", "0"}));
}

TEST_CASE("cli fgl verbs") {
  std::string out;
  int code = run({"fgl", "log", "--ring", "Q", "--trunc", "6", "--law", "multiplicative",
                  "--json"},
                 &out);
  CHECK(code == 0);
  json j = json::parse(out);
  CHECK(j["terms"].size() == 6);
  CHECK(j["terms"][3]["coeff"] == "1/4");

  code = run({"fgl", "validate", "--ring", "Q[l]", "--trunc", "5", "--law", "legendre",
              "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["assoc_ok"] == true);

  // from-log of the harmonic series gives the multiplicative law.
  code = run({"fgl", "log", "--ring", "Q", "--trunc", "6", "--law", "multiplicative",
              "--json"},
             &out);
  CHECK(code == 0);
  std::string log_json = out;
  code = run({"fgl", "from-log", "--log", log_json, "--json"}, &out);
  CHECK(code == 0);
  j = json::parse(out);
  CHECK(j["components"][0]["terms"].size() == 3);

  code = run({"fgl", "base-change", "--ring", "Z", "--trunc", "4", "--law", "multiplicative",
              "--target", "Z/7", "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["ring"] == "Z/7");
}

TEST_CASE("cli cartier and lambda verbs") {
  std::string out;
  int code = run({"cartier", "normalize", "--ring", "Z", "--vbound", "4", "--expr", "F2V3",
                  "--json"},
                 &out);
  CHECK(code == 0);
  json j = json::parse(out);
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["n"] == 3);
  CHECK(j["terms"][0]["m"] == 2);

  code = run({"cartier", "apply", "--ring", "Z", "--vbound", "4", "--expr", "V2", "--k", "2",
              "--in", R"({"b":["-3","0"]})", "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["b"] == json::array({"0", "-3", "0", "0"}));

  std::string algebra = R"({"ring":"Z","rank":1,"exponent":2,"tensor":[[["0"]]]})";
  code = run({"lambda", "mul", "--algebra", algebra, "--in", R"({"coeffs":[["5"]]})",
              "--rhs", R"({"coeffs":[["-5"]]})", "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["coeffs"].empty());
  code = run({"lambda", "inv", "--algebra", algebra, "--in", R"({"coeffs":[["7"]]})",
              "--json"},
             &out);
  CHECK(code == 0);
  CHECK(json::parse(out)["coeffs"] == json::array({json::array({"-7"})}));
}

TEST_CASE("cli legendre verbs and exit codes") {
  std::string out;
  CHECK(run({"legendre", "sweep", "--max-n", "10", "--json"}, &out) == 0);
  json j = json::parse(out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == 5);
  CHECK(j["checks"][3]["n"] == 8);
  CHECK(j["checks"][3]["modulus"] == 9);
  for (const auto& r : j["checks"][3]["reduced"]) CHECK(r == "0");

  CHECK(run({"legendre", "binom", "--n", "8", "--json"}, &out) == 0);
  j = json::parse(out);
  CHECK(j["value_mod"] == "7");
  CHECK(j["is_pm_one"] == false);
  CHECK(j["modulus_prime"] == false);

  CHECK(run({"legendre", "omega", "--n", "4", "--json"}, &out) == 0);
  CHECK(json::parse(out) == json::array({"6", "24", "6"}));

  CHECK(run({"legendre", "hypergeom", "--trunc", "2", "--json"}, &out) == 0);
  j = json::parse(out);
  CHECK(j["terms"][2]["coeff"] == "9/64");

  // Usage errors exit 2.
  CHECK(run({"legendre", "omega", "--n", "3"}) == 2);
  CHECK(run({"witt", "frob", "2", "--ring", "Z", "--k", "1", "--in", R"({"b":["1"]})"}) == 2);
  CHECK(run({"witt", "neg", "--ring", "Z", "--k", "2", "--in", "{not json"}) == 2);
  CHECK(run({"witt", "neg", "--ring", "Z/x", "--k", "2", "--in", R"({"b":["1","1"]})"}) == 2);
  CHECK(run({"nope"}) == 2);
}

TEST_CASE("cli output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"legendre", "sweep", "--max-n", "12", "--json"},
        {"verify", "--suite", "witt", "--seed", "99", "--json"},
        {"witt", "universal", "--op", "mul", "--k", "3", "--json"}}) {
    std::string a, b;
    CHECK(run(args, &a) == run(args, &b));
    CHECK(a == b);
    CHECK(!a.empty());
  }
}

TEST_CASE("verify plumbing") {
  VerificationReport rep = verify_all(7, "witt");
  CHECK(rep.suites.size() == 1);
  CHECK(rep.ok());
  CHECK(rep.total_cases() > 100);
  CHECK_THROWS_AS(verify_all(7, "bogus"), Error);
}

TEST_SUITE_END();
