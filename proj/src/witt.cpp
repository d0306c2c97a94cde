#include "cartierlab/witt.hpp"

#include <atomic>
#include <mutex>
#include <tuple>

namespace cartierlab {

namespace {

void require_same(const WittVector& a, const WittVector& b) {
  if (a.spec != b.spec)
    throw Error(ErrorKind::SpecMismatch, a.spec.to_string() + " vs " + b.spec.to_string());
  if (a.k != b.k)
    throw Error(ErrorKind::SpecMismatch,
                "truncation mismatch k=" + std::to_string(a.k) + " vs " + std::to_string(b.k));
}

// The ghost/from-ghost recurrences and the series-coordinate group law are
// shared between the concrete path (T = RingValue) and the symbolic path
// used to derive universal polynomials (T = TruncatedSeries over Q).
template <class T, class Ops>
std::vector<T> ghost_generic(const std::vector<T>& b, const Ops& ops) {
  // f w = -x f' gives w_n = -n b_n - sum_{i=1}^{n-1} b_i w_{n-i}.
  std::vector<T> w;
  w.reserve(b.size());
  for (size_t n = 1; n <= b.size(); ++n) {
    T acc = ops.scale_int(b[n - 1], -static_cast<long>(n));
    for (size_t i = 1; i < n; ++i) acc = ops.add(acc, ops.neg(ops.mul(b[i - 1], w[n - i - 1])));
    w.push_back(std::move(acc));
  }
  return w;
}

template <class T, class Ops>
std::vector<T> from_ghost_generic(const std::vector<T>& w, const Ops& ops) {
  // b_n = -(1/n)(w_n + sum_{i=1}^{n-1} b_i w_{n-i}).
  std::vector<T> b;
  b.reserve(w.size());
  for (size_t n = 1; n <= w.size(); ++n) {
    T acc = w[n - 1];
    for (size_t i = 1; i < n; ++i) acc = ops.add(acc, ops.mul(b[i - 1], w[n - i - 1]));
    b.push_back(ops.div_int(ops.neg(acc), static_cast<long>(n)));
  }
  return b;
}

template <class T, class Ops>
std::vector<T> series_product_generic(const std::vector<T>& a, const std::vector<T>& c,
                                      const Ops& ops) {
  // Coefficients of (1 + sum a_i x^i)(1 + sum c_j x^j) up to the common length.
  size_t k = a.size();
  std::vector<T> out;
  out.reserve(k);
  for (size_t n = 1; n <= k; ++n) {
    T acc = ops.add(a[n - 1], c[n - 1]);
    for (size_t i = 1; i < n; ++i) acc = ops.add(acc, ops.mul(a[i - 1], c[n - i - 1]));
    out.push_back(std::move(acc));
  }
  return out;
}

struct ValueOps {
  RingSpec spec;
  RingValue add(const RingValue& a, const RingValue& b) const { return ring_add(a, b); }
  RingValue mul(const RingValue& a, const RingValue& b) const { return ring_mul(a, b); }
  RingValue neg(const RingValue& a) const { return ring_neg(a); }
  RingValue scale_int(const RingValue& a, long n) const {
    return ring_mul(a, RingValue::from_int(spec, n));
  }
  RingValue div_int(const RingValue& a, long n) const {
    try {
      return ring_div_int(a, mpz_class(n));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonInvertibleIndex)
        throw Error(ErrorKind::NotTorsionFree,
                    "ghost reconstruction division by " + std::to_string(n) + " failed over " +
                        spec.to_string());
      throw;
    }
  }
};

struct PolyOps {
  TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) const {
    return series_add(a, b);
  }
  TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) const {
    return series_mul(a, b);
  }
  TruncatedSeries neg(const TruncatedSeries& a) const { return series_neg(a); }
  TruncatedSeries scale_int(const TruncatedSeries& a, long n) const {
    return series_scale(a, RingValue::from_int(a.spec(), n));
  }
  TruncatedSeries div_int(const TruncatedSeries& a, long n) const {
    return series_scale(a, RingValue::from_rational(a.spec(), mpq_class(1, n)));
  }
};

}  // namespace

WittVector WittVector::zero(const RingSpec& spec, int k) {
  WittVector v;
  v.spec = spec;
  v.k = k;
  v.b.assign(k, RingValue::zero(spec));
  return v;
}

WittVector WittVector::from_coeffs(RingSpec spec, std::vector<RingValue> b) {
  WittVector v;
  v.spec = std::move(spec);
  v.k = static_cast<int>(b.size());
  for (const RingValue& c : b)
    if (c.spec() != v.spec) throw Error(ErrorKind::SpecMismatch, "witt coefficient ring");
  v.b = std::move(b);
  return v;
}

TruncatedSeries WittVector::series(const std::string& var) const {
  TruncatedSeries s = TruncatedSeries::constant(spec, {var}, k, RingValue::one(spec));
  for (int i = 1; i <= k; ++i) s.set_coeff({i}, b[i - 1]);
  return s;
}

bool witt_eq(const WittVector& a, const WittVector& b) {
  require_same(a, b);
  for (int i = 0; i < a.k; ++i)
    if (!ring_eq(a.b[i], b.b[i])) return false;
  return true;
}

WittVector witt_truncate(const WittVector& a, int k2) {
  if (k2 > a.k) throw Error(ErrorKind::TruncationTooShort, "cannot extend a Witt vector");
  WittVector v;
  v.spec = a.spec;
  v.k = k2;
  v.b.assign(a.b.begin(), a.b.begin() + k2);
  return v;
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
  require_same(a, b);
  WittVector v;
  v.spec = a.spec;
  v.k = a.k;
  v.b = series_product_generic(a.b, b.b, ValueOps{a.spec});
  return v;
}

WittVector witt_neg(const WittVector& a) {
  // Inverse series of 1 + sum b_i x^i: c_n = -(b_n + sum_{i<n} c_i b_{n-i}).
  WittVector v;
  v.spec = a.spec;
  v.k = a.k;
  v.b.reserve(a.k);
  for (int n = 1; n <= a.k; ++n) {
    RingValue acc = a.b[n - 1];
    for (int i = 1; i < n; ++i) acc = ring_add(acc, ring_mul(v.b[i - 1], a.b[n - i - 1]));
    v.b.push_back(ring_neg(acc));
  }
  return v;
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
  return witt_add(a, witt_neg(b));
}

WittVector witt_smul(long n, const WittVector& a) {
  WittVector base = n < 0 ? witt_neg(a) : a;
  unsigned long e = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  WittVector acc = WittVector::zero(a.spec, a.k);
  while (e > 0) {
    if (e & 1) acc = witt_add(acc, base);
    e >>= 1;
    if (e) base = witt_add(base, base);
  }
  return acc;
}

std::vector<RingValue> ghost(const WittVector& a) {
  return ghost_generic(a.b, ValueOps{a.spec});
}

WittVector from_ghost(const std::vector<RingValue>& w, const RingSpec& spec) {
  if (!spec.torsion_free())
    throw Error(ErrorKind::NotTorsionFree,
                "ghost components do not determine a Witt vector over " + spec.to_string());
  for (const RingValue& c : w)
    if (c.spec() != spec) throw Error(ErrorKind::SpecMismatch, "ghost component ring");
  WittVector v;
  v.spec = spec;
  v.k = static_cast<int>(w.size());
  v.b = from_ghost_generic(w, ValueOps{spec});
  return v;
}

WittVector teichmuller(const RingValue& c, int k) {
  WittVector v = WittVector::zero(c.spec(), k);
  if (k >= 1) v.b[0] = ring_neg(c);
  return v;
}

WittVector teich_scale(const RingValue& c, const WittVector& a) {
  if (c.spec() != a.spec) throw Error(ErrorKind::SpecMismatch, "teich_scale ring");
  WittVector v = a;
  RingValue p = RingValue::one(a.spec);
  for (int i = 1; i <= a.k; ++i) {
    p = ring_mul(p, c);
    v.b[i - 1] = ring_mul(v.b[i - 1], p);
  }
  return v;
}

WittVector verschiebung(long n, const WittVector& a, std::optional<int> k_out) {
  if (n < 1) throw Error(ErrorKind::UsageError, "V_n needs n >= 1");
  int ko = k_out.value_or(static_cast<int>(n) * a.k);
  WittVector v = WittVector::zero(a.spec, ko);
  for (int i = 1; i <= a.k; ++i) {
    long j = n * i;
    if (j <= ko) v.b[j - 1] = a.b[i - 1];
  }
  return v;
}

// --------------------------------------------------------------------------
// Universal polynomials

namespace {

std::vector<std::string> generic_vars(const char* stem, int k) {
  std::vector<std::string> v;
  for (int i = 1; i <= k; ++i) v.push_back(std::string(stem) + std::to_string(i));
  return v;
}

std::vector<TruncatedSeries> derive_universal(UniversalOp op, long frob_n, int k) {
  RingSpec q = RingSpec::rationals();
  std::vector<std::string> vars = generic_vars("a", k);
  if (op != UniversalOp::Frobenius) {
    auto cs = generic_vars("c", k);
    vars.insert(vars.end(), cs.begin(), cs.end());
  }
  // Weighted degree of every intermediate is bounded by 2k, so a total-degree
  // bound of 2k keeps all polynomial arithmetic exact.
  const int bound = 2 * k + 1;
  auto gen = [&](size_t i) { return TruncatedSeries::variable(q, vars, bound, i); };
  std::vector<TruncatedSeries> a, c;
  for (int i = 0; i < k; ++i) a.push_back(gen(i));
  if (op != UniversalOp::Frobenius)
    for (int i = 0; i < k; ++i) c.push_back(gen(k + i));

  PolyOps ops;
  std::vector<TruncatedSeries> result;
  switch (op) {
    case UniversalOp::Add:
      result = series_product_generic(a, c, ops);
      break;
    case UniversalOp::Mul: {
      auto wa = ghost_generic(a, ops);
      auto wc = ghost_generic(c, ops);
      std::vector<TruncatedSeries> wm;
      for (int i = 0; i < k; ++i) wm.push_back(series_mul(wa[i], wc[i]));
      result = from_ghost_generic(wm, ops);
      break;
    }
    case UniversalOp::Frobenius: {
      if (frob_n < 1) throw Error(ErrorKind::UsageError, "F_n needs n >= 1");
      auto wa = ghost_generic(a, ops);
      std::vector<TruncatedSeries> wf;
      for (long m = 1; m * frob_n <= k; ++m) wf.push_back(wa[m * frob_n - 1]);
      result = from_ghost_generic(wf, ops);
      break;
    }
  }
  // Integrality audit: the classical theory promises integer coefficients.
  for (const TruncatedSeries& p : result)
    for (const auto& [e, cv] : p.terms())
      if (cv.as_mpq().get_den() != 1)
        throw Error(ErrorKind::IntegralityFailure,
                    "non-integer universal coefficient " + cv.to_string());
  return result;
}

std::mutex g_universal_mutex;
std::map<std::tuple<int, long, int>, std::vector<TruncatedSeries>> g_universal_memo;
std::atomic<int> g_universal_ceiling{8};

RingValue eval_universal(const TruncatedSeries& poly, const std::vector<RingValue>& values,
                         const RingSpec& target) {
  std::vector<std::vector<RingValue>> pows(values.size());
  for (auto& p : pows) p.push_back(RingValue::one(target));
  auto power = [&](size_t i, int e) -> const RingValue& {
    auto& p = pows[i];
    while (static_cast<int>(p.size()) <= e) p.push_back(ring_mul(p.back(), values[i]));
    return p[e];
  };
  RingValue acc = RingValue::zero(target);
  for (const auto& [e, cv] : poly.terms()) {
    RingValue t = RingValue::from_int(target, cv.as_mpq().get_num());
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = ring_mul(t, power(i, e[i]));
    acc = ring_add(acc, t);
  }
  return acc;
}

}  // namespace

int universal_ceiling() { return g_universal_ceiling.load(); }
void set_universal_ceiling(int k) { g_universal_ceiling.store(k); }

const std::vector<TruncatedSeries>& universal_polynomials(UniversalOp op, long frob_n, int k) {
  if (k > universal_ceiling())
    throw Error(ErrorKind::CeilingExceeded,
                "universal polynomials requested at k=" + std::to_string(k) + " > ceiling " +
                    std::to_string(universal_ceiling()));
  if (op != UniversalOp::Frobenius) frob_n = 0;
  std::lock_guard<std::mutex> lock(g_universal_mutex);
  auto key = std::make_tuple(static_cast<int>(op), frob_n, k);
  auto it = g_universal_memo.find(key);
  if (it == g_universal_memo.end())
    it = g_universal_memo.emplace(key, derive_universal(op, frob_n, k)).first;
  return it->second;
}

WittVector frobenius(long n, const WittVector& a) {
  if (n < 1) throw Error(ErrorKind::UsageError, "F_n needs n >= 1");
  if (n == 1) return a;
  int kout = a.k / static_cast<int>(n);
  if (kout == 0)
    throw Error(ErrorKind::TruncationTooShort,
                "F_" + std::to_string(n) + " on W_[1," + std::to_string(a.k) + "]");
  if (a.spec.torsion_free()) {
    std::vector<RingValue> w = ghost(a);
    std::vector<RingValue> wf;
    wf.reserve(kout);
    for (int m = 1; m <= kout; ++m) wf.push_back(w[m * n - 1]);
    return from_ghost(wf, a.spec);
  }
  const auto& polys = universal_polynomials(UniversalOp::Frobenius, n, a.k);
  WittVector v = WittVector::zero(a.spec, kout);
  for (int i = 0; i < kout; ++i) v.b[i] = eval_universal(polys[i], a.b, a.spec);
  return v;
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  require_same(a, b);
  if (a.spec.torsion_free()) {
    std::vector<RingValue> wa = ghost(a), wb = ghost(b), wm;
    wm.reserve(a.k);
    for (int i = 0; i < a.k; ++i) wm.push_back(ring_mul(wa[i], wb[i]));
    return from_ghost(wm, a.spec);
  }
  const auto& polys = universal_polynomials(UniversalOp::Mul, 0, a.k);
  std::vector<RingValue> values = a.b;
  values.insert(values.end(), b.b.begin(), b.b.end());
  WittVector v = WittVector::zero(a.spec, a.k);
  for (int i = 0; i < a.k; ++i) v.b[i] = eval_universal(polys[i], values, a.spec);
  return v;
}

}  // namespace cartierlab
