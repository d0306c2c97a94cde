#include "cartierlab/json_io.hpp"

namespace cartierlab {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

json require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  json v = require(j, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::string require_str(const json& j, const char* key) {
  json v = require(j, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

json value_to_json(const RingValue& v) {
  switch (v.spec().kind()) {
    case RingSpec::Kind::Integers:
    case RingSpec::Kind::IntegersMod:
      return v.as_mpz().get_str();
    case RingSpec::Kind::Rationals:
      return v.as_mpq().get_str();
    case RingSpec::Kind::Polynomial: {
      json arr = json::array();
      for (const RingValue& c : v.poly_coeffs()) arr.push_back(value_to_json(c));
      return arr;
    }
  }
  bad("bad value");
}

RingValue value_from_json(const RingSpec& spec, const json& j) {
  if (j.is_string()) return parse_ring_value(spec, j.get<std::string>());
  if (j.is_number_integer()) return RingValue::from_int(spec, mpz_class(j.get<long>()));
  if (j.is_array()) {
    if (spec.kind() != RingSpec::Kind::Polynomial)
      bad("array value for non-polynomial ring " + spec.to_string());
    RingValue::PolyCoeffs coeffs;
    for (const json& c : j) coeffs.push_back(value_from_json(spec.base(), c));
    return RingValue::from_poly(spec, std::move(coeffs));
  }
  bad("value must be a string, integer, or coefficient array");
}

json series_to_json(const TruncatedSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) {
    json t;
    t["exp"] = e;
    t["coeff"] = value_to_json(c);
    terms.push_back(std::move(t));
  }
  json j;
  j["ring"] = s.spec().to_string();
  j["vars"] = s.vars();
  j["trunc"] = s.trunc();
  j["terms"] = std::move(terms);
  return j;
}

TruncatedSeries series_from_json(const json& j) {
  RingSpec spec = RingSpec::parse(require_str(j, "ring"));
  json jv = require(j, "vars");
  if (!jv.is_array() || jv.empty()) bad("'vars' must be a nonempty array");
  std::vector<std::string> vars;
  for (const json& v : jv) vars.push_back(v.get<std::string>());
  TruncatedSeries s(spec, vars, require_int(j, "trunc"));
  for (const json& t : require(j, "terms")) {
    json je = require(t, "exp");
    Exponents e;
    for (const json& x : je) {
      if (!x.is_number_integer() || x.get<int>() < 0) bad("exponents must be nonnegative");
      e.push_back(x.get<int>());
    }
    if (e.size() != vars.size()) bad("exponent arity mismatch");
    if (total_degree(e) > s.trunc()) bad("term exceeds the truncation bound");
    if (s.terms().count(e)) bad("duplicate exponent in term list");
    RingValue c = value_from_json(spec, require(t, "coeff"));
    if (ring_is_zero(c)) bad("stored coefficients must be nonzero");
    s.set_coeff(e, std::move(c));
  }
  return s;
}

json witt_to_json(const WittVector& w) {
  json b = json::array();
  for (const RingValue& c : w.b) b.push_back(value_to_json(c));
  json j;
  j["ring"] = w.spec.to_string();
  j["k"] = w.k;
  j["b"] = std::move(b);
  return j;
}

WittVector witt_from_json(const json& j) {
  RingSpec spec = RingSpec::parse(require_str(j, "ring"));
  return witt_from_json(j, spec, require_int(j, "k"));
}

WittVector witt_from_json(const json& j, const RingSpec& spec, int k) {
  json jb = require(j, "b");
  if (!jb.is_array()) bad("'b' must be an array");
  std::vector<RingValue> b;
  for (const json& c : jb) b.push_back(value_from_json(spec, c));
  if (static_cast<int>(b.size()) > k) bad("more coefficients than the stated length k");
  while (static_cast<int>(b.size()) < k) b.push_back(RingValue::zero(spec));
  return WittVector::from_coeffs(spec, std::move(b));
}

json fgl_to_json(const FormalGroupLaw& F) {
  json comps = json::array();
  for (const TruncatedSeries& c : F.components) comps.push_back(series_to_json(c));
  json j;
  j["ring"] = F.spec.to_string();
  j["dim"] = F.dim;
  j["trunc"] = F.trunc;
  j["components"] = std::move(comps);
  return j;
}

FormalGroupLaw fgl_from_json(const json& j) {
  FormalGroupLaw F;
  F.spec = RingSpec::parse(require_str(j, "ring"));
  F.dim = require_int(j, "dim");
  F.trunc = require_int(j, "trunc");
  json comps = require(j, "components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != F.dim)
    bad("'components' must list one series per dimension");
  for (const json& c : comps) {
    TruncatedSeries s = series_from_json(c);
    if (s.spec() != F.spec || s.trunc() != F.trunc ||
        s.nvars() != static_cast<size_t>(2 * F.dim))
      bad("component series must match the law's ring, truncation, and 2*dim variables");
    F.components.push_back(std::move(s));
  }
  return F;
}

json form_to_json(const InvariantForm& w) {
  json rows = json::array();
  for (const auto& row : w.coeffs) {
    json r = json::array();
    for (const TruncatedSeries& s : row) r.push_back(series_to_json(s));
    rows.push_back(std::move(r));
  }
  json j;
  j["ring"] = w.spec.to_string();
  j["dim"] = w.dim;
  j["trunc"] = w.trunc;
  j["coeffs"] = std::move(rows);
  return j;
}

InvariantForm form_from_json(const json& j) {
  InvariantForm w;
  w.spec = RingSpec::parse(require_str(j, "ring"));
  w.dim = require_int(j, "dim");
  w.trunc = require_int(j, "trunc");
  json rows = require(j, "coeffs");
  if (!rows.is_array() || static_cast<int>(rows.size()) != w.dim) bad("'coeffs' shape");
  for (const json& r : rows) {
    if (!r.is_array() || static_cast<int>(r.size()) != w.dim) bad("'coeffs' shape");
    std::vector<TruncatedSeries> row;
    for (const json& s : r) row.push_back(series_from_json(s));
    w.coeffs.push_back(std::move(row));
  }
  return w;
}

json cartier_to_json(const CartierElement& e) {
  json terms = json::array();
  for (const auto& [nm, a] : e.terms) {
    json t;
    t["n"] = nm.first;
    t["m"] = nm.second;
    t["a"] = value_to_json(a);
    terms.push_back(std::move(t));
  }
  json j;
  j["ring"] = e.spec.to_string();
  j["vbound"] = e.vbound;
  j["terms"] = std::move(terms);
  return j;
}

CartierElement cartier_from_json(const json& j) {
  CartierElement e;
  e.spec = RingSpec::parse(require_str(j, "ring"));
  e.vbound = require_int(j, "vbound");
  if (e.vbound < 2) bad("vbound must be >= 2");
  for (const json& t : require(j, "terms")) {
    long n = require_int(t, "n");
    long m = require_int(t, "m");
    if (n < 1 || n >= e.vbound || m < 1) bad("term indices out of range");
    RingValue a = value_from_json(e.spec, require(t, "a"));
    if (ring_is_zero(a)) bad("stored coefficients must be nonzero");
    e.terms[{n, m}] = std::move(a);
  }
  return e;
}

json algebra_to_json(const NilpotentAlgebra& a) {
  json tensor = json::array();
  for (const auto& row : a.tensor) {
    json r = json::array();
    for (const auto& cell : row) {
      json c = json::array();
      for (const RingValue& v : cell) c.push_back(value_to_json(v));
      r.push_back(std::move(c));
    }
    tensor.push_back(std::move(r));
  }
  json j;
  j["ring"] = a.spec.to_string();
  j["rank"] = a.rank;
  j["exponent"] = a.exponent;
  j["tensor"] = std::move(tensor);
  return j;
}

NilpotentAlgebra algebra_from_json(const json& j) {
  NilpotentAlgebra a;
  a.spec = RingSpec::parse(require_str(j, "ring"));
  a.rank = require_int(j, "rank");
  a.exponent = require_int(j, "exponent");
  for (const json& r : require(j, "tensor")) {
    std::vector<std::vector<RingValue>> row;
    for (const json& c : r) {
      std::vector<RingValue> cell;
      for (const json& v : c) cell.push_back(value_from_json(a.spec, v));
      row.push_back(std::move(cell));
    }
    a.tensor.push_back(std::move(row));
  }
  a.validate();
  return a;
}

json lambda_to_json(const LambdaElement& u) {
  json coeffs = json::array();
  for (const AlgebraElement& c : u.coeffs) {
    json e = json::array();
    for (const RingValue& v : c) e.push_back(value_to_json(v));
    coeffs.push_back(std::move(e));
  }
  json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

LambdaElement lambda_from_json(const json& j,
                               std::shared_ptr<const NilpotentAlgebra> algebra) {
  std::vector<AlgebraElement> coeffs;
  for (const json& c : require(j, "coeffs")) {
    AlgebraElement e;
    for (const json& v : c) e.push_back(value_from_json(algebra->spec, v));
    if (e.size() != static_cast<size_t>(algebra->rank)) bad("algebra element arity");
    coeffs.push_back(std::move(e));
  }
  return LambdaElement::make(std::move(algebra), std::move(coeffs));
}

json congruence_report_to_json(const CongruenceReport& r) {
  json reduced = json::array();
  for (const mpz_class& c : r.reduced) reduced.push_back(c.get_str());
  json j;
  j["n"] = r.n;
  j["modulus"] = r.modulus.get_si();
  j["ok"] = r.ok;
  j["reduced"] = std::move(reduced);
  return j;
}

json central_binom_report_to_json(const CentralBinomReport& r) {
  json j;
  j["n"] = r.n;
  j["modulus"] = r.modulus.get_si();
  j["value_mod"] = r.value_mod.get_str();
  j["is_pm_one"] = r.is_pm_one;
  j["modulus_prime"] = r.modulus_prime;
  return j;
}

json sweep_report_to_json(const SweepReport& r) {
  json checks = json::array();
  for (const CongruenceReport& c : r.checks) checks.push_back(congruence_report_to_json(c));
  json j;
  j["max_n"] = r.max_n;
  j["ok"] = r.ok;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace cartierlab
