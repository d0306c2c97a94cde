#include "cartierlab/cartier.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cartierlab {

CartierExpr CartierExpr::v(long n) {
  CartierExpr e;
  e.node = Node::V;
  e.n = n;
  return e;
}
CartierExpr CartierExpr::f(long n) {
  CartierExpr e;
  e.node = Node::F;
  e.n = n;
  return e;
}
CartierExpr CartierExpr::teich(RingValue c) {
  CartierExpr e;
  e.node = Node::Teich;
  e.c = std::move(c);
  return e;
}
CartierExpr CartierExpr::integer(long v) {
  CartierExpr e;
  e.node = Node::Int;
  e.n = v;
  return e;
}
CartierExpr CartierExpr::sum(std::vector<CartierExpr> args) {
  CartierExpr e;
  e.node = Node::Sum;
  e.args = std::move(args);
  return e;
}
CartierExpr CartierExpr::prod(std::vector<CartierExpr> args) {
  CartierExpr e;
  e.node = Node::Prod;
  e.args = std::move(args);
  return e;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct ExprParser {
  const std::string& text;
  const RingSpec& spec;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::ParseError,
                "cartier expression '" + text + "' at " + std::to_string(pos) + ": " + why);
  }
  long number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stol(text.substr(start, pos - start));
  }

  CartierExpr expr() {
    std::vector<CartierExpr> terms{term()};
    while (peek('+')) {
      ++pos;
      terms.push_back(term());
    }
    return terms.size() == 1 ? terms[0] : CartierExpr::sum(std::move(terms));
  }

  CartierExpr term() {
    std::vector<CartierExpr> factors{factor()};
    for (;;) {
      if (peek('*')) {
        ++pos;
        factors.push_back(factor());
        continue;
      }
      skip_ws();
      // Juxtaposition, e.g. "F2V3" or "V2[c]F2".
      if (pos < text.size() &&
          (text[pos] == 'V' || text[pos] == 'F' || text[pos] == '[' || text[pos] == '(' ||
           std::isdigit(static_cast<unsigned char>(text[pos])))) {
        factors.push_back(factor());
        continue;
      }
      break;
    }
    return factors.size() == 1 ? factors[0] : CartierExpr::prod(std::move(factors));
  }

  CartierExpr factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end");
    char c = text[pos];
    if (c == 'V') {
      ++pos;
      return CartierExpr::v(number());
    }
    if (c == 'F') {
      ++pos;
      return CartierExpr::f(number());
    }
    if (c == '[') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && text[pos] != ']') ++pos;
      if (pos >= text.size()) fail("missing ']'");
      std::string lit = text.substr(start, pos - start);
      ++pos;
      return CartierExpr::teich(parse_ring_value(spec, lit));
    }
    if (c == '(') {
      ++pos;
      CartierExpr e = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return CartierExpr::integer(number());
    fail("expected V<n>, F<n>, [c], integer, or '('");
  }
};

}  // namespace

CartierExpr parse_cartier_expr(const std::string& text, const RingSpec& spec) {
  ExprParser p{text, spec};
  CartierExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

// ---------------------------------------------------------------------------
// Defect coefficients

namespace {

// Coefficients g_2, g_3, ... with prod_{j>=2} (1 - g_j x^j) = r, peeled off a
// univariate series r = 1 + O(x^2) degree by degree.
std::vector<RingValue> product_form_peel(TruncatedSeries r, int upto) {
  const RingSpec& spec = r.spec();
  RingValue one = RingValue::one(spec);
  std::vector<RingValue> out;
  for (int j = 2; j <= upto; ++j) {
    RingValue gj = ring_neg(r.coeff({j}));
    out.push_back(gj);
    if (ring_is_zero(gj)) continue;
    TruncatedSeries peel = TruncatedSeries::constant(spec, r.vars(), upto, one);
    peel.set_coeff({j}, ring_neg(gj));
    r = series_mul(r, series_invert(peel));
  }
  return out;
}

TruncatedSeries one_minus_cx(const RingValue& c, int trunc) {
  TruncatedSeries s =
      TruncatedSeries::constant(c.spec(), {"x"}, trunc, RingValue::one(c.spec()));
  s.set_coeff({1}, ring_neg(c));
  return s;
}

// Canonical carry of Teichmuller addition: [a] + [b] = [a+b] +
// sum_{j>=2} V_j [e_j] F_j with prod (1 - e_j x^j) = (1-ax)(1-bx)/(1-(a+b)x).
// Note these are not the negated defect coefficients: negation in the
// Cartier ring is not bracket-wise.
std::vector<RingValue> teichmuller_carry(const RingValue& a, const RingValue& b, int upto) {
  TruncatedSeries num = series_mul(one_minus_cx(a, upto), one_minus_cx(b, upto));
  TruncatedSeries r = series_mul(num, series_invert(one_minus_cx(ring_add(a, b), upto)));
  return product_form_peel(std::move(r), upto);
}

}  // namespace

std::vector<RingValue> teichmuller_defect(const RingValue& c1, const RingValue& c2, int upto) {
  if (c1.spec() != c2.spec()) throw Error(ErrorKind::SpecMismatch, "defect arguments");
  TruncatedSeries den = series_mul(one_minus_cx(c1, upto), one_minus_cx(c2, upto));
  TruncatedSeries r =
      series_mul(one_minus_cx(ring_add(c1, c2), upto), series_invert(den));
  return product_form_peel(std::move(r), upto);
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

// A weighted monomial mult * V_n [a] F_m. A word of generators reduces to
// this shape exactly, with no V-truncation, via the relation table alone
// (integer multiples are central). The V-filtration cutoff is applied only
// in the final additive combine, where defect corrections strictly increase
// the filtration level, so dropping there is exact.
struct Monomial {
  long mult;
  long n, m;
  RingValue a;
};

constexpr size_t kMonomialBudget = 1u << 20;

// mono1 * mono2: F_m V_p = g * V_{p/g} F_{m/g} with g = gcd(m, p), then
// [a] V_q = V_q [a^q] and F_r [b] = [b^r] F_r move the brackets together.
Monomial monomial_mul(const Monomial& t1, const Monomial& t2) {
  long g = std::gcd(t1.m, t2.n);
  long mp = t1.m / g, pp = t2.n / g;
  RingValue coeff = ring_mul(ring_pow(t1.a, static_cast<unsigned long>(pp)),
                             ring_pow(t2.a, static_cast<unsigned long>(mp)));
  return Monomial{t1.mult * t2.mult * g, t1.n * pp, mp * t2.m, std::move(coeff)};
}

// Pool of pending coefficients keyed by (n, m). Combining two coefficients
// at a slot emits corrections at (n*j, m*j), j >= 2, so processing slots in
// increasing (n, m) order terminates with one coefficient per slot.
CartierElement combine(const std::vector<Monomial>& monos, const RingSpec& spec, int vbound) {
  std::map<std::pair<long, long>, std::vector<RingValue>> pool;
  size_t expanded = 0;
  for (const Monomial& t : monos) {
    if (t.n >= vbound || t.mult == 0 || ring_is_zero(t.a)) continue;
    expanded += static_cast<size_t>(t.mult);
    if (expanded > kMonomialBudget)
      throw Error(ErrorKind::UsageError, "expression expands past the monomial budget");
    auto& slot = pool[{t.n, t.m}];
    for (long copy = 0; copy < t.mult; ++copy) slot.push_back(t.a);
  }
  CartierElement out;
  out.spec = spec;
  out.vbound = vbound;
  while (!pool.empty()) {
    auto it = pool.begin();
    auto [n, m] = it->first;
    std::vector<RingValue> coeffs = std::move(it->second);
    pool.erase(it);
    while (coeffs.size() >= 2) {
      RingValue a = coeffs.back();
      coeffs.pop_back();
      RingValue b = coeffs.back();
      coeffs.pop_back();
      long jmax = (vbound - 1) / n;
      if (jmax >= 2) {
        std::vector<RingValue> e = teichmuller_carry(a, b, static_cast<int>(jmax));
        for (long j = 2; j <= jmax; ++j)
          if (!ring_is_zero(e[j - 2])) pool[{n * j, m * j}].push_back(e[j - 2]);
      }
      coeffs.push_back(ring_add(a, b));
    }
    if (!coeffs.empty() && !ring_is_zero(coeffs[0])) out.terms[{n, m}] = coeffs[0];
  }
  return out;
}

// Expand an expression into exact weighted monomials (distributing sums over
// products). Nothing is truncated here.
std::vector<Monomial> expand_expr(const CartierExpr& expr, const RingSpec& spec) {
  RingValue one = RingValue::one(spec);
  switch (expr.node) {
    case CartierExpr::Node::V:
      if (expr.n < 1) throw Error(ErrorKind::UsageError, "V_n needs n >= 1");
      return {Monomial{1, expr.n, 1, one}};
    case CartierExpr::Node::F:
      if (expr.n < 1) throw Error(ErrorKind::UsageError, "F_n needs n >= 1");
      return {Monomial{1, 1, expr.n, one}};
    case CartierExpr::Node::Teich:
      if (expr.c.spec() != spec) throw Error(ErrorKind::SpecMismatch, "[c] ring");
      return {Monomial{1, 1, 1, expr.c}};
    case CartierExpr::Node::Int:
      if (expr.n < 0) throw Error(ErrorKind::UsageError, "negative literal");
      if (expr.n == 0) return {};
      return {Monomial{expr.n, 1, 1, one}};
    case CartierExpr::Node::Sum: {
      std::vector<Monomial> all;
      for (const CartierExpr& a : expr.args) {
        auto part = expand_expr(a, spec);
        all.insert(all.end(), part.begin(), part.end());
      }
      return all;
    }
    case CartierExpr::Node::Prod: {
      std::vector<Monomial> acc{Monomial{1, 1, 1, one}};
      for (const CartierExpr& arg : expr.args) {
        std::vector<Monomial> rhs = expand_expr(arg, spec);
        if (!rhs.empty() && acc.size() > kMonomialBudget / rhs.size())
          throw Error(ErrorKind::UsageError, "expression expands past the monomial budget");
        std::vector<Monomial> next;
        next.reserve(acc.size() * rhs.size());
        for (const Monomial& t1 : acc)
          for (const Monomial& t2 : rhs) next.push_back(monomial_mul(t1, t2));
        acc = std::move(next);
      }
      return acc;
    }
  }
  throw Error(ErrorKind::UsageError, "bad expression node");
}

}  // namespace

CartierElement cartier_normalize(const CartierExpr& expr, const RingSpec& spec, int vbound) {
  if (vbound < 2) throw Error(ErrorKind::VBoundTooSmall, "V-filtration bound must be >= 2");
  return combine(expand_expr(expr, spec), spec, vbound);
}

bool cartier_eq(const CartierElement& a, const CartierElement& b) {
  if (a.spec != b.spec || a.vbound != b.vbound || a.terms.size() != b.terms.size())
    return false;
  auto it = b.terms.begin();
  for (const auto& [nm, c] : a.terms) {
    if (it->first != nm || !ring_eq(it->second, c)) return false;
    ++it;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Module actions

WittVector cartier_apply(const CartierElement& xi, const WittVector& a) {
  if (xi.spec != a.spec) throw Error(ErrorKind::SpecMismatch, "cartier_apply ring");
  if (xi.terms.empty()) return WittVector::zero(a.spec, a.k);
  std::vector<WittVector> parts;
  int common = 0;
  bool first = true;
  for (const auto& [nm, c] : xi.terms) {
    auto [n, m] = nm;
    WittVector t = frobenius(m, a);
    t = teich_scale(c, t);
    t = verschiebung(n, t);
    if (first || t.k < common) common = t.k;
    first = false;
    parts.push_back(std::move(t));
  }
  WittVector acc = WittVector::zero(a.spec, common);
  for (WittVector& p : parts) acc = witt_add(acc, witt_truncate(p, common));
  return acc;
}

TruncatedSeries cartier_apply_ga(const CartierElement& xi, const TruncatedSeries& g) {
  if (g.nvars() != 1) throw Error(ErrorKind::UsageError, "Ga action is univariate");
  if (xi.spec != g.spec()) throw Error(ErrorKind::SpecMismatch, "cartier_apply_ga ring");
  if (!ring_is_zero(g.constant_term()))
    throw Error(ErrorKind::NonzeroConstantTerm, "Ga elements have zero constant term");
  int common = g.trunc();
  std::vector<TruncatedSeries> parts;
  for (const auto& [nm, c] : xi.terms) {
    auto [n, m] = nm;
    // F_m: c x^i -> m c x^(i/m) when m | i, else 0.
    TruncatedSeries t(g.spec(), g.vars(), g.trunc() / static_cast<int>(m));
    for (const auto& [e, cv] : g.terms())
      if (e[0] % m == 0)
        t.set_coeff({e[0] / static_cast<int>(m)}, ring_mul(cv, RingValue::from_int(g.spec(), m)));
    // [c]: g(x) -> g(cx).
    TruncatedSeries tc(t.spec(), t.vars(), t.trunc());
    for (const auto& [e, cv] : t.terms())
      tc.set_coeff(e, ring_mul(cv, ring_pow(c, static_cast<unsigned long>(e[0]))));
    // V_n: g(x) -> g(x^n).
    TruncatedSeries tv(t.spec(), t.vars(), tc.trunc() * static_cast<int>(n));
    for (const auto& [e, cv] : tc.terms()) tv.set_coeff({e[0] * static_cast<int>(n)}, cv);
    common = std::min(common, tv.trunc());
    parts.push_back(std::move(tv));
  }
  TruncatedSeries acc(g.spec(), g.vars(), common);
  for (const TruncatedSeries& p : parts) acc = series_add(acc, series_truncate(p, common));
  return acc;
}

}  // namespace cartierlab
