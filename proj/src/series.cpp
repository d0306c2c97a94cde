#include "cartierlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace cartierlab {

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.spec() != b.spec() || a.vars() != b.vars() || a.trunc() != b.trunc())
    throw Error(ErrorKind::SpecMismatch,
                "series mismatch: (" + a.spec().to_string() + ", " +
                    std::to_string(a.trunc()) + ") vs (" + b.spec().to_string() + ", " +
                    std::to_string(b.trunc()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(RingSpec spec, std::vector<std::string> vars, int trunc)
    : spec_(std::move(spec)), vars_(std::move(vars)), trunc_(trunc) {
  if (vars_.empty()) throw Error(ErrorKind::UsageError, "series needs at least one variable");
  if (trunc_ < 0) throw Error(ErrorKind::UsageError, "negative truncation");
}

TruncatedSeries TruncatedSeries::constant(const RingSpec& spec, std::vector<std::string> vars,
                                          int trunc, const RingValue& c) {
  TruncatedSeries s(spec, std::move(vars), trunc);
  s.set_coeff(Exponents(s.nvars(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(const RingSpec& spec, std::vector<std::string> vars,
                                          int trunc, size_t index) {
  TruncatedSeries s(spec, std::move(vars), trunc);
  if (index >= s.nvars()) throw Error(ErrorKind::UsageError, "variable index out of range");
  Exponents e(s.nvars(), 0);
  e[index] = 1;
  s.set_coeff(e, RingValue::one(spec));
  return s;
}

RingValue TruncatedSeries::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RingValue::zero(spec_) : it->second;
}

RingValue TruncatedSeries::constant_term() const { return coeff(Exponents(nvars(), 0)); }

void TruncatedSeries::set_coeff(const Exponents& e, RingValue c) {
  if (e.size() != nvars()) throw Error(ErrorKind::UsageError, "exponent arity mismatch");
  if (total_degree(e) > trunc_) return;
  if (ring_is_zero(c)) {
    terms_.erase(e);
    return;
  }
  if (c.spec() != spec_) throw Error(ErrorKind::SpecMismatch, "coefficient ring mismatch");
  terms_[e] = std::move(c);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries out = a;
  for (const auto& [e, c] : b.terms()) out.set_coeff(e, ring_add(out.coeff(e), c));
  return out;
}

TruncatedSeries series_neg(const TruncatedSeries& a) {
  TruncatedSeries out(a.spec(), a.vars(), a.trunc());
  for (const auto& [e, c] : a.terms()) out.set_coeff(e, ring_neg(c));
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, series_neg(b));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const RingValue& c) {
  TruncatedSeries out(a.spec(), a.vars(), a.trunc());
  for (const auto& [e, v] : a.terms()) out.set_coeff(e, ring_mul(v, c));
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries out(a.spec(), a.vars(), a.trunc());
  const int n = a.trunc();
  for (const auto& [ea, ca] : a.terms()) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > n) continue;
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.set_coeff(e, ring_add(out.coeff(e), ring_mul(ca, cb)));
    }
  }
  return out;
}

bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  if (a.terms().size() != b.terms().size()) return false;
  auto it = b.terms().begin();
  for (const auto& [e, c] : a.terms()) {
    if (it->first != e || !ring_eq(it->second, c)) return false;
    ++it;
  }
  return true;
}

TruncatedSeries series_compose(const TruncatedSeries& f,
                               const std::vector<TruncatedSeries>& args) {
  if (args.size() != f.nvars())
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(args.size()) + " args for " + std::to_string(f.nvars()) +
                    " variables");
  for (size_t i = 1; i < args.size(); ++i) require_compatible(args[0], args[i]);
  for (const auto& g : args) {
    if (g.spec() != f.spec()) throw Error(ErrorKind::SpecMismatch, "composition ring mismatch");
    if (!ring_is_zero(g.constant_term()))
      throw Error(ErrorKind::NonzeroConstantTerm, "composition argument has a constant term");
  }
  const auto& vars = args[0].vars();
  const int n = args[0].trunc();
  // Memoized powers of each argument.
  std::vector<std::vector<TruncatedSeries>> pows(args.size());
  auto power = [&](size_t i, int e) -> const TruncatedSeries& {
    auto& p = pows[i];
    if (p.empty())
      p.push_back(TruncatedSeries::constant(f.spec(), vars, n, RingValue::one(f.spec())));
    while (static_cast<int>(p.size()) <= e) p.push_back(series_mul(p.back(), args[i]));
    return p[e];
  };
  TruncatedSeries out(f.spec(), vars, n);
  for (const auto& [e, c] : f.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(f.spec(), vars, n, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = series_mul(term, power(i, e[i]));
    out = series_add(out, term);
  }
  return out;
}

TruncatedSeries series_invert(const TruncatedSeries& f) {
  RingValue c0 = f.constant_term();
  if (!ring_is_unit(c0))
    throw Error(ErrorKind::NonUnitConstantTerm, "constant term " + c0.to_string());
  RingValue c0inv = ring_inv(c0);
  // f = c0 (1 - u) with u of positive order; invert by Horner on 1+u+u^2+...
  TruncatedSeries one =
      TruncatedSeries::constant(f.spec(), f.vars(), f.trunc(), RingValue::one(f.spec()));
  TruncatedSeries u = series_sub(one, series_scale(f, c0inv));
  TruncatedSeries g = one;
  for (int i = 0; i < f.trunc(); ++i) g = series_add(one, series_mul(u, g));
  return series_scale(g, c0inv);
}

TruncatedSeries series_reversion(const TruncatedSeries& f) {
  if (f.nvars() != 1) throw Error(ErrorKind::UsageError, "reversion is univariate");
  if (!ring_is_zero(f.constant_term()))
    throw Error(ErrorKind::NotReversible, "nonzero constant term");
  RingValue a = f.coeff({1});
  if (!ring_is_unit(a))
    throw Error(ErrorKind::NotReversible, "linear coefficient " + a.to_string() + " is not a unit");
  RingValue ainv = ring_inv(a);
  // Normalize to u = x + h, then solve psi = x - h(psi) degree by degree.
  TruncatedSeries u = series_scale(f, ainv);
  TruncatedSeries x = TruncatedSeries::variable(f.spec(), f.vars(), f.trunc(), 0);
  TruncatedSeries h = series_sub(u, x);
  TruncatedSeries psi = x;
  for (int i = 0; i < f.trunc(); ++i) psi = series_sub(x, series_compose(h, {psi}));
  // f(g(x)) = x for g(x) = psi(x/a).
  return series_compose(psi, {series_scale(x, ainv)});
}

TruncatedSeries series_integrate(const TruncatedSeries& f) {
  if (f.nvars() != 1) throw Error(ErrorKind::UsageError, "integration is univariate");
  TruncatedSeries out(f.spec(), f.vars(), f.trunc() + 1);
  for (const auto& [e, c] : f.terms())
    out.set_coeff({e[0] + 1}, ring_div_int(c, e[0] + 1));
  return out;
}

TruncatedSeries series_log1p(const TruncatedSeries& u) {
  if (!ring_is_zero(u.constant_term()))
    throw Error(ErrorKind::NonzeroConstantTerm, "log1p needs zero constant term");
  TruncatedSeries out(u.spec(), u.vars(), u.trunc());
  TruncatedSeries p = u;
  for (int k = 1; k <= u.trunc(); ++k) {
    TruncatedSeries term = p;
    for (const auto& [e, c] : term.terms()) {
      RingValue v = ring_div_int(c, k);
      out.set_coeff(e, ring_add(out.coeff(e), (k % 2 == 0) ? ring_neg(v) : v));
    }
    if (k < u.trunc()) p = series_mul(p, u);
  }
  return out;
}

TruncatedSeries series_expm1(const TruncatedSeries& u) {
  if (!ring_is_zero(u.constant_term()))
    throw Error(ErrorKind::NonzeroConstantTerm, "expm1 needs zero constant term");
  TruncatedSeries out(u.spec(), u.vars(), u.trunc());
  TruncatedSeries p = u;
  mpz_class kfact = 1;
  for (int k = 1; k <= u.trunc(); ++k) {
    kfact *= k;
    for (const auto& [e, c] : p.terms())
      out.set_coeff(e, ring_add(out.coeff(e), ring_div_int(c, kfact)));
    if (k < u.trunc()) p = series_mul(p, u);
  }
  return out;
}

TruncatedSeries series_derivative(const TruncatedSeries& f, size_t var) {
  if (var >= f.nvars()) throw Error(ErrorKind::UsageError, "variable index out of range");
  TruncatedSeries out(f.spec(), f.vars(), std::max(0, f.trunc() - 1));
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.set_coeff(d, ring_mul(c, RingValue::from_int(f.spec(), e[var])));
  }
  return out;
}

TruncatedSeries series_truncate(const TruncatedSeries& f, int new_trunc) {
  TruncatedSeries out(f.spec(), f.vars(), new_trunc);
  for (const auto& [e, c] : f.terms()) out.set_coeff(e, c);
  return out;
}

TruncatedSeries series_embed(const TruncatedSeries& f, std::vector<std::string> new_vars,
                             const std::vector<size_t>& where) {
  if (where.size() != f.nvars()) throw Error(ErrorKind::ArityMismatch, "embed map arity");
  TruncatedSeries out(f.spec(), std::move(new_vars), f.trunc());
  for (const auto& [e, c] : f.terms()) {
    Exponents ne(out.nvars(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[where[i]] += e[i];
    out.set_coeff(ne, c);
  }
  return out;
}

TruncatedSeries series_map(const TruncatedSeries& f, const RingSpec& target,
                           const std::map<std::string, RingValue>& assign) {
  TruncatedSeries out(target, f.vars(), f.trunc());
  for (const auto& [e, c] : f.terms())
    out.set_coeff(e, ring_map(c, target, assign));
  return out;
}

RingValue series_eval(const TruncatedSeries& f, const std::vector<RingValue>& point) {
  if (point.size() != f.nvars()) throw Error(ErrorKind::ArityMismatch, "evaluation point arity");
  // Power tables per variable.
  std::vector<std::vector<RingValue>> pows(point.size());
  for (size_t i = 0; i < point.size(); ++i) pows[i].push_back(RingValue::one(f.spec()));
  auto power = [&](size_t i, int e) -> const RingValue& {
    auto& p = pows[i];
    while (static_cast<int>(p.size()) <= e) p.push_back(ring_mul(p.back(), point[i]));
    return p[e];
  };
  RingValue acc = RingValue::zero(f.spec());
  for (const auto& [e, c] : f.terms()) {
    RingValue t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = ring_mul(t, power(i, e[i]));
    acc = ring_add(acc, t);
  }
  return acc;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.to_string();
    bool needs_parens = cs.find_first_of("+ ") != std::string::npos;
    if (!needs_parens && !first && cs[0] == '-') {
      os << " - ";
      cs = cs.substr(1);
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (total_degree(e) == 0) {
      os << cs;
      continue;
    }
    if (cs == "1") {
    } else if (cs == "-1") {
      os << "-";
    } else {
      os << (needs_parens ? "(" + cs + ")" : cs) << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace cartierlab
