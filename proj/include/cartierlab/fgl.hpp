#ifndef CARTIERLAB_FGL_HPP
#define CARTIERLAB_FGL_HPP

#include <vector>

#include "cartierlab/series.hpp"

namespace cartierlab {

/// Variable conventions: 1-dimensional laws live in (x, y) with logs and
/// forms in (x); d >= 2 uses x1..xd, y1..yd.
std::vector<std::string> fgl_xy_vars(int dim);
std::vector<std::string> fgl_x_vars(int dim);

/// A d-dimensional commutative formal group law F(x, y) stored to a total
/// degree bound: d series in the 2d variables.
struct FormalGroupLaw {
  RingSpec spec;
  int dim = 1;
  int trunc = 0;
  std::vector<TruncatedSeries> components;
};

/// Matrix of 1-form coefficients: row j holds omega_j = sum_i coeffs[j][i] dx_i.
/// Forms derived from a law at truncation N carry truncation N-1.
struct InvariantForm {
  RingSpec spec;
  int dim = 1;
  int trunc = 0;
  std::vector<std::vector<TruncatedSeries>> coeffs;
};

struct FglReport {
  bool unit_ok = false;
  bool comm_ok = false;
  bool assoc_ok = false;
  int max_degree_checked = 0;
  bool ok() const { return unit_ok && comm_ok && assoc_ok; }
};

/// Check the unit sections, commutativity, and associativity (the latter in
/// 3d variables) up to the stored truncation.
FglReport fgl_validate(const FormalGroupLaw& F);

FormalGroupLaw fgl_additive(const RingSpec& spec, int dim, int trunc);
FormalGroupLaw fgl_multiplicative(const RingSpec& spec, int trunc);

/// The unique invariant form normalized to the identity matrix at 0,
/// computed as the inverse of (dF_i/dy_j)(x, 0) applied to dx.
InvariantForm invariant_differential(const FormalGroupLaw& F);

/// m* omega = pr1* omega + pr2* omega, expanded coefficient-wise in the 2d
/// variables up to min(form trunc, law trunc - 1).
bool check_invariance(const FormalGroupLaw& F, const InvariantForm& omega);

/// Logarithms l_j = x_j + ... with l(F(x,y)) = l(x) + l(y); obtained by
/// integrating the invariant form (logs carry trunc N, forms N-1).
std::vector<TruncatedSeries> fgl_log(const FormalGroupLaw& F);

/// F(x,y) = l^{-1}(l(x) + l(y)) for logs l_j = x_j + higher order.
FormalGroupLaw fgl_from_log(const std::vector<TruncatedSeries>& logs);

/// Coefficient-wise image of the law under ring_map.
FormalGroupLaw fgl_base_change(const FormalGroupLaw& F, const RingSpec& target,
                               const std::map<std::string, RingValue>& assign = {});

}  // namespace cartierlab

#endif
