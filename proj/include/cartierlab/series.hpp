#ifndef CARTIERLAB_SERIES_HPP
#define CARTIERLAB_SERIES_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cartierlab/ring.hpp"

namespace cartierlab {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded-lexicographic term order as it reads on paper: lower total degree
/// first, then earlier variables carry higher powers first
/// (1, x, y, x^2, xy, y^2, ...). Also the file emission order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Multivariate power series truncated at a total degree bound. Terms are a
/// sparse map from exponent vectors to nonzero coefficients; no stored term
/// exceeds the bound.
class TruncatedSeries {
 public:
  using TermMap = std::map<Exponents, RingValue, GrlexLess>;

  TruncatedSeries(RingSpec spec, std::vector<std::string> vars, int trunc);

  static TruncatedSeries constant(const RingSpec& spec, std::vector<std::string> vars,
                                  int trunc, const RingValue& c);
  static TruncatedSeries variable(const RingSpec& spec, std::vector<std::string> vars,
                                  int trunc, size_t index);

  const RingSpec& spec() const { return spec_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int trunc() const { return trunc_; }
  size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RingValue coeff(const Exponents& e) const;
  RingValue constant_term() const;
  /// Insert/replace a term, dropping zeros and anything past the bound.
  void set_coeff(const Exponents& e, RingValue c);

  std::string to_string() const;

 private:
  RingSpec spec_;
  std::vector<std::string> vars_;
  int trunc_;
  TermMap terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);
TruncatedSeries series_scale(const TruncatedSeries& a, const RingValue& c);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b);

/// Substitute args (one per variable of f, all sharing vars/trunc, zero
/// constant terms) into f's stored terms.
TruncatedSeries series_compose(const TruncatedSeries& f,
                               const std::vector<TruncatedSeries>& args);

/// Multiplicative inverse; the constant term must be a unit.
TruncatedSeries series_invert(const TruncatedSeries& f);

/// Compositional inverse of a univariate f = a*x + ... with a a unit.
TruncatedSeries series_reversion(const TruncatedSeries& f);

/// Term-wise antiderivative of a univariate series, zero constant;
/// output truncation is trunc+1.
TruncatedSeries series_integrate(const TruncatedSeries& f);

/// log(1+u) for u with zero constant term.
TruncatedSeries series_log1p(const TruncatedSeries& u);
/// exp(u)-1 for u with zero constant term.
TruncatedSeries series_expm1(const TruncatedSeries& u);

TruncatedSeries series_derivative(const TruncatedSeries& f, size_t var);
TruncatedSeries series_truncate(const TruncatedSeries& f, int new_trunc);

/// Reinterpret f in a larger variable list; `where[i]` is the index of f's
/// i-th variable in `new_vars`.
TruncatedSeries series_embed(const TruncatedSeries& f, std::vector<std::string> new_vars,
                             const std::vector<size_t>& where);

/// Coefficient-wise image under ring_map.
TruncatedSeries series_map(const TruncatedSeries& f, const RingSpec& target,
                           const std::map<std::string, RingValue>& assign = {});

/// Evaluate f at a point (one value per variable, in f's ring).
RingValue series_eval(const TruncatedSeries& f, const std::vector<RingValue>& point);

}  // namespace cartierlab

#endif
