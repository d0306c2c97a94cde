#include "cartierlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cartierlab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::NonInvertibleIndex: return "NonInvertibleIndex";
    case ErrorKind::NotTorsionFree: return "NotTorsionFree";
    case ErrorKind::TruncationTooShort: return "TruncationTooShort";
    case ErrorKind::IntegralityFailure: return "IntegralityFailure";
    case ErrorKind::VBoundTooSmall: return "VBoundTooSmall";
    case ErrorKind::OddIndex: return "OddIndex";
    case ErrorKind::DenominatorNotInvertible: return "DenominatorNotInvertible";
    case ErrorKind::NonInvertibleJacobian: return "NonInvertibleJacobian";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::CeilingExceeded: return "CeilingExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::integers() { return RingSpec(Kind::Integers); }
RingSpec RingSpec::rationals() { return RingSpec(Kind::Rationals); }

RingSpec RingSpec::integers_mod(mpz_class m) {
  if (m < 2) throw Error(ErrorKind::UsageError, "modulus must be >= 2");
  RingSpec s(Kind::IntegersMod);
  s.modulus_ = std::move(m);
  return s;
}

RingSpec RingSpec::polynomial(RingSpec base, std::string var) {
  if (base.poly_depth() >= 2)
    throw Error(ErrorKind::UsageError, "polynomial nesting depth is capped at 2");
  if (var.empty() || (!std::isalpha(static_cast<unsigned char>(var[0])) && var[0] != '_'))
    throw Error(ErrorKind::UsageError, "bad variable identifier '" + var + "'");
  if (base.poly_depth() == 1 && base.var() == var)
    throw Error(ErrorKind::UsageError, "repeated variable '" + var + "' in polynomial tower");
  RingSpec s(Kind::Polynomial);
  s.base_ = std::make_shared<RingSpec>(std::move(base));
  s.var_ = std::move(var);
  return s;
}

RingSpec RingSpec::parse(const std::string& text) {
  size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::ParseError, "ring spec '" + text + "': " + why);
  };
  if (pos >= text.size()) throw fail("empty");
  RingSpec spec = RingSpec::integers();
  if (text[pos] == 'Z') {
    ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw fail("expected modulus after 'Z/'");
      spec = RingSpec::integers_mod(mpz_class(text.substr(start, pos - start)));
    }
  } else if (text[pos] == 'Q') {
    ++pos;
    spec = RingSpec::rationals();
  } else {
    throw fail("expected 'Z' or 'Q'");
  }
  while (pos < text.size()) {
    if (text[pos] != '[') throw fail("unexpected character");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && text[pos] != ']') ++pos;
    if (pos >= text.size()) throw fail("missing ']'");
    spec = RingSpec::polynomial(spec, text.substr(start, pos - start));
    ++pos;
  }
  return spec;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersMod: return "Z/" + modulus_.get_str();
    case Kind::Polynomial: return base_->to_string() + "[" + var_ + "]";
  }
  return "?";
}

bool RingSpec::torsion_free() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals: return true;
    case Kind::IntegersMod: return false;
    case Kind::Polynomial: return base_->torsion_free();
  }
  return false;
}

bool RingSpec::contains_rationals() const {
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Polynomial: return base_->contains_rationals();
    default: return false;
  }
}

int RingSpec::poly_depth() const {
  return kind_ == Kind::Polynomial ? 1 + base_->poly_depth() : 0;
}

bool RingSpec::operator==(const RingSpec& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::IntegersMod: return modulus_ == o.modulus_;
    case Kind::Polynomial: return var_ == o.var_ && *base_ == *o.base_;
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// RingValue construction / canonicalization

RingValue RingValue::make_canonical(const RingSpec& spec,
                                    std::variant<mpz_class, mpq_class, PolyCoeffs> payload) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(spec, std::get<mpz_class>(payload));
    case RingSpec::Kind::Rationals: {
      mpq_class q = std::get<mpq_class>(std::move(payload));
      q.canonicalize();
      return RingValue(spec, std::move(q));
    }
    case RingSpec::Kind::IntegersMod: {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), std::get<mpz_class>(payload).get_mpz_t(),
              spec.modulus().get_mpz_t());
      return RingValue(spec, std::move(r));
    }
    case RingSpec::Kind::Polynomial: {
      PolyCoeffs c = std::get<PolyCoeffs>(std::move(payload));
      while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
      return RingValue(spec, std::move(c));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

RingValue RingValue::zero(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingSpec::Kind::Rationals: return RingValue(spec, mpq_class(0));
    case RingSpec::Kind::Polynomial: return RingValue(spec, PolyCoeffs{});
    default: return RingValue(spec, mpz_class(0));
  }
}

RingValue RingValue::one(const RingSpec& spec) { return from_int(spec, 1); }

RingValue RingValue::from_int(const RingSpec& spec, const mpz_class& z) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers: return RingValue(spec, z);
    case RingSpec::Kind::Rationals: return RingValue(spec, mpq_class(z));
    case RingSpec::Kind::IntegersMod: return make_canonical(spec, z);
    case RingSpec::Kind::Polynomial: {
      RingValue c = from_int(spec.base(), z);
      if (ring_is_zero(c)) return zero(spec);
      return RingValue(spec, PolyCoeffs{std::move(c)});
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

RingValue RingValue::from_rational(const RingSpec& spec, const mpq_class& q) {
  if (q.get_den() == 1) return from_int(spec, q.get_num());
  if (spec.kind() == RingSpec::Kind::Rationals) return make_canonical(spec, q);
  if (spec.kind() == RingSpec::Kind::Polynomial) {
    RingValue c = from_rational(spec.base(), q);
    if (ring_is_zero(c)) return zero(spec);
    return RingValue(spec, PolyCoeffs{std::move(c)});
  }
  // a/b with b a unit; otherwise reject.
  RingValue num = from_int(spec, q.get_num());
  RingValue den = from_int(spec, q.get_den());
  if (!ring_is_unit(den))
    throw Error(ErrorKind::DenominatorNotInvertible,
                q.get_str() + " in " + spec.to_string());
  return ring_mul(num, ring_inv(den));
}

RingValue RingValue::generator(const RingSpec& spec, const std::string& var) {
  if (spec.kind() != RingSpec::Kind::Polynomial)
    throw Error(ErrorKind::SpecMismatch, "no variable '" + var + "' in " + spec.to_string());
  if (spec.var() == var) {
    PolyCoeffs c;
    c.push_back(zero(spec.base()));
    c.push_back(one(spec.base()));
    return RingValue(spec, std::move(c));
  }
  RingValue inner = generator(spec.base(), var);
  return RingValue(spec, PolyCoeffs{std::move(inner)});
}

RingValue RingValue::from_poly(const RingSpec& spec, PolyCoeffs coeffs) {
  if (spec.kind() != RingSpec::Kind::Polynomial)
    throw Error(ErrorKind::SpecMismatch, "from_poly on " + spec.to_string());
  for (const RingValue& c : coeffs)
    if (c.spec() != spec.base())
      throw Error(ErrorKind::SpecMismatch, "coefficient spec != " + spec.base().to_string());
  return make_canonical(spec, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void require_same_spec(const RingValue& a, const RingValue& b) {
  if (a.spec() != b.spec())
    throw Error(ErrorKind::SpecMismatch,
                a.spec().to_string() + " vs " + b.spec().to_string());
}

}  // namespace

RingValue ring_add(const RingValue& a, const RingValue& b) {
  require_same_spec(a, b);
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(spec, mpz_class(a.as_mpz() + b.as_mpz()));
    case RingSpec::Kind::Rationals:
      return RingValue(spec, mpq_class(a.as_mpq() + b.as_mpq()));
    case RingSpec::Kind::IntegersMod:
      return RingValue::make_canonical(spec, mpz_class(a.as_mpz() + b.as_mpz()));
    case RingSpec::Kind::Polynomial: {
      const auto& pa = a.poly_coeffs();
      const auto& pb = b.poly_coeffs();
      RingValue::PolyCoeffs out;
      size_t n = std::max(pa.size(), pb.size());
      out.reserve(n);
      for (size_t i = 0; i < n; ++i) {
        if (i < pa.size() && i < pb.size()) out.push_back(ring_add(pa[i], pb[i]));
        else if (i < pa.size()) out.push_back(pa[i]);
        else out.push_back(pb[i]);
      }
      return RingValue::make_canonical(spec, std::move(out));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

RingValue ring_neg(const RingValue& a) {
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingSpec::Kind::Integers: return RingValue(spec, mpz_class(-a.as_mpz()));
    case RingSpec::Kind::Rationals: return RingValue(spec, mpq_class(-a.as_mpq()));
    case RingSpec::Kind::IntegersMod:
      return RingValue::make_canonical(spec, mpz_class(-a.as_mpz()));
    case RingSpec::Kind::Polynomial: {
      RingValue::PolyCoeffs out;
      out.reserve(a.poly_coeffs().size());
      for (const RingValue& c : a.poly_coeffs()) out.push_back(ring_neg(c));
      return RingValue(spec, std::move(out));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

RingValue ring_sub(const RingValue& a, const RingValue& b) { return ring_add(a, ring_neg(b)); }

RingValue ring_mul(const RingValue& a, const RingValue& b) {
  require_same_spec(a, b);
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(spec, mpz_class(a.as_mpz() * b.as_mpz()));
    case RingSpec::Kind::Rationals:
      return RingValue(spec, mpq_class(a.as_mpq() * b.as_mpq()));
    case RingSpec::Kind::IntegersMod:
      return RingValue::make_canonical(spec, mpz_class(a.as_mpz() * b.as_mpz()));
    case RingSpec::Kind::Polynomial: {
      const auto& pa = a.poly_coeffs();
      const auto& pb = b.poly_coeffs();
      if (pa.empty() || pb.empty()) return RingValue::zero(spec);
      RingValue::PolyCoeffs out(pa.size() + pb.size() - 1, RingValue::zero(spec.base()));
      for (size_t i = 0; i < pa.size(); ++i)
        for (size_t j = 0; j < pb.size(); ++j)
          out[i + j] = ring_add(out[i + j], ring_mul(pa[i], pb[j]));
      return RingValue::make_canonical(spec, std::move(out));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

bool ring_eq(const RingValue& a, const RingValue& b) {
  require_same_spec(a, b);
  switch (a.spec().kind()) {
    case RingSpec::Kind::Integers:
    case RingSpec::Kind::IntegersMod: return a.as_mpz() == b.as_mpz();
    case RingSpec::Kind::Rationals: return a.as_mpq() == b.as_mpq();
    case RingSpec::Kind::Polynomial: {
      const auto& pa = a.poly_coeffs();
      const auto& pb = b.poly_coeffs();
      if (pa.size() != pb.size()) return false;
      for (size_t i = 0; i < pa.size(); ++i)
        if (!ring_eq(pa[i], pb[i])) return false;
      return true;
    }
  }
  return false;
}

bool ring_is_zero(const RingValue& a) {
  switch (a.spec().kind()) {
    case RingSpec::Kind::Integers:
    case RingSpec::Kind::IntegersMod: return a.as_mpz() == 0;
    case RingSpec::Kind::Rationals: return a.as_mpq() == 0;
    case RingSpec::Kind::Polynomial: return a.poly_coeffs().empty();
  }
  return false;
}

bool ring_is_unit(const RingValue& a) {
  switch (a.spec().kind()) {
    case RingSpec::Kind::Integers: return a.as_mpz() == 1 || a.as_mpz() == -1;
    case RingSpec::Kind::Rationals: return a.as_mpq() != 0;
    case RingSpec::Kind::IntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.as_mpz().get_mpz_t(), a.spec().modulus().get_mpz_t());
      return g == 1;
    }
    case RingSpec::Kind::Polynomial:
      // Constant units only; enough for the integral domains in play.
      return a.poly_coeffs().size() == 1 && ring_is_unit(a.poly_coeffs()[0]);
  }
  return false;
}

RingValue ring_inv(const RingValue& a) {
  if (!ring_is_unit(a))
    throw Error(ErrorKind::NotAUnit, a.to_string() + " in " + a.spec().to_string());
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingSpec::Kind::Integers: return a;  // 1 or -1
    case RingSpec::Kind::Rationals: {
      mpq_class q(1);
      q /= a.as_mpq();
      return RingValue::make_canonical(spec, std::move(q));
    }
    case RingSpec::Kind::IntegersMod: {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), a.as_mpz().get_mpz_t(), spec.modulus().get_mpz_t());
      return RingValue::make_canonical(spec, std::move(r));
    }
    case RingSpec::Kind::Polynomial: {
      RingValue c = ring_inv(a.poly_coeffs()[0]);
      return RingValue::from_poly(spec, {std::move(c)});
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

RingValue ring_pow(const RingValue& a, unsigned long e) {
  RingValue acc = RingValue::one(a.spec());
  RingValue base = a;
  while (e > 0) {
    if (e & 1) acc = ring_mul(acc, base);
    e >>= 1;
    if (e) base = ring_mul(base, base);
  }
  return acc;
}

RingValue ring_div_int(const RingValue& a, const mpz_class& n) {
  if (n == 0) throw Error(ErrorKind::NonInvertibleIndex, "division by 0");
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingSpec::Kind::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.as_mpz().get_mpz_t(), n.get_mpz_t());
      if (r != 0)
        throw Error(ErrorKind::NonInvertibleIndex,
                    n.get_str() + " does not divide " + a.to_string() + " in Z");
      return RingValue::from_int(spec, q);
    }
    case RingSpec::Kind::Rationals: {
      mpq_class q = a.as_mpq() / mpq_class(n);
      return RingValue::make_canonical(spec, std::move(q));
    }
    case RingSpec::Kind::IntegersMod: {
      RingValue nv = RingValue::from_int(spec, n);
      if (ring_is_unit(nv)) return ring_mul(a, ring_inv(nv));
      if (ring_is_zero(a)) return a;
      throw Error(ErrorKind::NonInvertibleIndex,
                  n.get_str() + " not invertible in " + spec.to_string());
    }
    case RingSpec::Kind::Polynomial: {
      RingValue::PolyCoeffs out;
      out.reserve(a.poly_coeffs().size());
      for (const RingValue& c : a.poly_coeffs()) out.push_back(ring_div_int(c, n));
      return RingValue::from_poly(spec, std::move(out));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

// ---------------------------------------------------------------------------
// Polynomial helpers

RingValue poly_derivative(const RingValue& p) {
  if (p.spec().kind() != RingSpec::Kind::Polynomial)
    throw Error(ErrorKind::SpecMismatch, "poly_derivative on " + p.spec().to_string());
  const auto& c = p.poly_coeffs();
  RingValue::PolyCoeffs out;
  for (size_t i = 1; i < c.size(); ++i) {
    RingValue k = RingValue::from_int(c[i].spec(), static_cast<long>(i));
    out.push_back(ring_mul(c[i], k));
  }
  return RingValue::from_poly(p.spec(), std::move(out));
}

int poly_degree(const RingValue& p) {
  if (p.spec().kind() != RingSpec::Kind::Polynomial)
    throw Error(ErrorKind::SpecMismatch, "poly_degree on " + p.spec().to_string());
  return static_cast<int>(p.poly_coeffs().size()) - 1;
}

RingValue poly_coeff(const RingValue& p, int i) {
  if (p.spec().kind() != RingSpec::Kind::Polynomial)
    throw Error(ErrorKind::SpecMismatch, "poly_coeff on " + p.spec().to_string());
  if (i < 0 || i >= static_cast<int>(p.poly_coeffs().size()))
    return RingValue::zero(p.spec().base());
  return p.poly_coeffs()[i];
}

bool divides_all_coeffs(const RingValue& p, const mpz_class& m) {
  switch (p.spec().kind()) {
    case RingSpec::Kind::Integers:
      return mpz_divisible_p(p.as_mpz().get_mpz_t(), m.get_mpz_t()) != 0;
    case RingSpec::Kind::Polynomial: {
      for (const RingValue& c : p.poly_coeffs())
        if (!divides_all_coeffs(c, m)) return false;
      return true;
    }
    default:
      throw Error(ErrorKind::SpecMismatch,
                  "divisibility test needs integer coefficients, got " + p.spec().to_string());
  }
}

// ---------------------------------------------------------------------------
// Ring maps

RingValue ring_map(const RingValue& v, const RingSpec& target,
                   const std::map<std::string, RingValue>& assign) {
  switch (v.spec().kind()) {
    case RingSpec::Kind::Integers:
      return RingValue::from_int(target, v.as_mpz());
    case RingSpec::Kind::Rationals:
      return RingValue::from_rational(target, v.as_mpq());
    case RingSpec::Kind::IntegersMod: {
      if (target.kind() != RingSpec::Kind::IntegersMod ||
          !mpz_divisible_p(v.spec().modulus().get_mpz_t(), target.modulus().get_mpz_t()))
        throw Error(ErrorKind::SpecMismatch,
                    "no map " + v.spec().to_string() + " -> " + target.to_string());
      return RingValue::from_int(target, v.as_mpz());
    }
    case RingSpec::Kind::Polynomial: {
      auto it = assign.find(v.spec().var());
      if (it != assign.end()) {
        // Horner evaluation at the assigned value.
        if (it->second.spec() != target)
          throw Error(ErrorKind::SpecMismatch,
                      "assignment for '" + v.spec().var() + "' is not in " + target.to_string());
        RingValue acc = RingValue::zero(target);
        const auto& c = v.poly_coeffs();
        for (size_t i = c.size(); i-- > 0;)
          acc = ring_add(ring_mul(acc, it->second), ring_map(c[i], target, assign));
        return acc;
      }
      if (target.kind() != RingSpec::Kind::Polynomial || target.var() != v.spec().var())
        throw Error(ErrorKind::SpecMismatch,
                    "no map " + v.spec().to_string() + " -> " + target.to_string() +
                        " (variable '" + v.spec().var() + "' unassigned)");
      RingValue::PolyCoeffs out;
      out.reserve(v.poly_coeffs().size());
      for (const RingValue& c : v.poly_coeffs())
        out.push_back(ring_map(c, target.base(), assign));
      return RingValue::from_poly(target, std::move(out));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

// ---------------------------------------------------------------------------
// Printing / parsing

std::string RingValue::to_string() const {
  switch (spec_.kind()) {
    case RingSpec::Kind::Integers:
    case RingSpec::Kind::IntegersMod: return as_mpz().get_str();
    case RingSpec::Kind::Rationals: return as_mpq().get_str();
    case RingSpec::Kind::Polynomial: {
      const auto& c = poly_coeffs();
      if (c.empty()) return "0";
      std::ostringstream os;
      bool first = true;
      for (size_t i = 0; i < c.size(); ++i) {
        if (ring_is_zero(c[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c[i].to_string();
        bool atomic = cs.find_first_of("+- /") == std::string::npos ||
                      (cs[0] == '-' && cs.find_first_of("+- /", 1) == std::string::npos);
        if (i == 0) {
          os << cs;
          continue;
        }
        if (cs == "1") {
        } else if (cs == "-1") {
          os << "-";
        } else if (atomic) {
          os << cs << "*";
        } else {
          os << "(" << cs << ")*";
        }
        os << spec_.var();
        if (i > 1) os << "^" << i;
      }
      return os.str();
    }
  }
  return "?";
}

RingValue parse_ring_value(const RingSpec& spec, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty value literal");
  auto is_number = [](const std::string& s) {
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t slash = t.find('/');
  if (slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_number(num) || !is_number(den))
      throw Error(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    mpq_class q{mpz_class(num), d};
    q.canonicalize();
    return RingValue::from_rational(spec, q);
  }
  if (is_number(t)) return RingValue::from_int(spec, mpz_class(t));
  // Variable from the polynomial tower.
  const RingSpec* s = &spec;
  while (s->kind() == RingSpec::Kind::Polynomial) {
    if (s->var() == t) return RingValue::generator(spec, t);
    s = &s->base();
  }
  throw Error(ErrorKind::ParseError,
              "unknown value literal '" + text + "' in " + spec.to_string());
}

}  // namespace cartierlab
