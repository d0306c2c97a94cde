#include "cartierlab/fgl.hpp"

#include <algorithm>

namespace cartierlab {

std::vector<std::string> fgl_xy_vars(int dim) {
  if (dim == 1) return {"x", "y"};
  std::vector<std::string> v;
  for (int i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i <= dim; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

std::vector<std::string> fgl_x_vars(int dim) {
  if (dim == 1) return {"x"};
  std::vector<std::string> v;
  for (int i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace {

TruncatedSeries zero_series(const RingSpec& spec, const std::vector<std::string>& vars,
                            int trunc) {
  return TruncatedSeries(spec, vars, trunc);
}

std::vector<TruncatedSeries> concat_args(const std::vector<TruncatedSeries>& xs,
                                         const std::vector<TruncatedSeries>& ys) {
  std::vector<TruncatedSeries> args = xs;
  args.insert(args.end(), ys.begin(), ys.end());
  return args;
}

}  // namespace

FglReport fgl_validate(const FormalGroupLaw& F) {
  FglReport rep;
  rep.max_degree_checked = F.trunc;
  const int d = F.dim;
  const int N = F.trunc;
  const RingSpec& spec = F.spec;
  for (const TruncatedSeries& c : F.components)
    if (!ring_is_zero(c.constant_term())) return rep;  // not even a pointed law

  // Unit sections: F(x, 0) = x and F(0, y) = y in the x-variables.
  auto xvars = fgl_x_vars(d);
  std::vector<TruncatedSeries> xs, zs;
  for (int i = 0; i < d; ++i) xs.push_back(TruncatedSeries::variable(spec, xvars, N, i));
  for (int i = 0; i < d; ++i) zs.push_back(zero_series(spec, xvars, N));
  bool unit = true;
  for (int i = 0; i < d && unit; ++i) {
    unit = unit && series_eq(series_compose(F.components[i], concat_args(xs, zs)), xs[i]);
    unit = unit && series_eq(series_compose(F.components[i], concat_args(zs, xs)), xs[i]);
  }
  rep.unit_ok = unit;

  // Commutativity: swap the two variable blocks.
  bool comm = true;
  std::vector<size_t> swap_map(2 * d);
  for (int i = 0; i < d; ++i) {
    swap_map[i] = d + i;
    swap_map[d + i] = i;
  }
  auto xyvars = fgl_xy_vars(d);
  for (int i = 0; i < d && comm; ++i)
    comm = series_eq(series_embed(F.components[i], xyvars, swap_map), F.components[i]);
  rep.comm_ok = comm;

  // Associativity in 3d variables.
  std::vector<std::string> tri;
  for (const char* stem : {"x", "y", "z"})
    for (int i = 1; i <= d; ++i)
      tri.push_back(d == 1 ? std::string(stem) : stem + std::to_string(i));
  std::vector<TruncatedSeries> xa, ya, za;
  for (int i = 0; i < 3 * d; ++i) {
    TruncatedSeries v = TruncatedSeries::variable(spec, tri, N, i);
    if (i < d) xa.push_back(v);
    else if (i < 2 * d) ya.push_back(v);
    else za.push_back(v);
  }
  auto eval_F = [&](const std::vector<TruncatedSeries>& a,
                    const std::vector<TruncatedSeries>& b) {
    std::vector<TruncatedSeries> args = a;
    args.insert(args.end(), b.begin(), b.end());
    std::vector<TruncatedSeries> out;
    for (int i = 0; i < d; ++i) out.push_back(series_compose(F.components[i], args));
    return out;
  };
  std::vector<TruncatedSeries> fxy = eval_F(xa, ya);
  std::vector<TruncatedSeries> fyz = eval_F(ya, za);
  std::vector<TruncatedSeries> lhs = eval_F(fxy, za);
  std::vector<TruncatedSeries> rhs = eval_F(xa, fyz);
  bool assoc = true;
  for (int i = 0; i < d && assoc; ++i) assoc = series_eq(lhs[i], rhs[i]);
  rep.assoc_ok = assoc;
  return rep;
}

FormalGroupLaw fgl_additive(const RingSpec& spec, int dim, int trunc) {
  FormalGroupLaw F;
  F.spec = spec;
  F.dim = dim;
  F.trunc = trunc;
  auto vars = fgl_xy_vars(dim);
  for (int i = 0; i < dim; ++i) {
    TruncatedSeries s(spec, vars, trunc);
    Exponents ex(2 * dim, 0), ey(2 * dim, 0);
    ex[i] = 1;
    ey[dim + i] = 1;
    s.set_coeff(ex, RingValue::one(spec));
    s.set_coeff(ey, RingValue::one(spec));
    F.components.push_back(std::move(s));
  }
  return F;
}

FormalGroupLaw fgl_multiplicative(const RingSpec& spec, int trunc) {
  FormalGroupLaw F;
  F.spec = spec;
  F.dim = 1;
  F.trunc = trunc;
  TruncatedSeries s(spec, fgl_xy_vars(1), trunc);
  s.set_coeff({1, 0}, RingValue::one(spec));
  s.set_coeff({0, 1}, RingValue::one(spec));
  s.set_coeff({1, 1}, ring_neg(RingValue::one(spec)));
  F.components.push_back(std::move(s));
  return F;
}

namespace {

// (dF_i/dy_j)(x, 0) as a matrix of series in the x-variables, trunc N-1.
std::vector<std::vector<TruncatedSeries>> jacobian_at_zero(const FormalGroupLaw& F) {
  const int d = F.dim;
  auto xvars = fgl_x_vars(d);
  std::vector<std::vector<TruncatedSeries>> M;
  for (int i = 0; i < d; ++i) {
    std::vector<TruncatedSeries> row;
    for (int j = 0; j < d; ++j) {
      TruncatedSeries der = series_derivative(F.components[i], d + j);
      TruncatedSeries restricted(F.spec, xvars, F.trunc - 1);
      for (const auto& [e, c] : der.terms()) {
        bool pure_x = true;
        for (int t = d; t < 2 * d && pure_x; ++t) pure_x = (e[t] == 0);
        if (!pure_x) continue;
        Exponents ex(e.begin(), e.begin() + d);
        restricted.set_coeff(ex, c);
      }
      row.push_back(std::move(restricted));
    }
    M.push_back(std::move(row));
  }
  return M;
}

}  // namespace

InvariantForm invariant_differential(const FormalGroupLaw& F) {
  const int d = F.dim;
  const int N = F.trunc - 1;
  const RingSpec& spec = F.spec;
  auto xvars = fgl_x_vars(d);
  auto M = jacobian_at_zero(F);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!ring_eq(M[i][j].constant_term(),
                   i == j ? RingValue::one(spec) : RingValue::zero(spec)))
        throw Error(ErrorKind::NonInvertibleJacobian, "law is not normalized at 0");
  // M = I - U with U of positive order; invert with G = I + U G repeated.
  auto identity = [&] {
    std::vector<std::vector<TruncatedSeries>> I;
    for (int i = 0; i < d; ++i) {
      std::vector<TruncatedSeries> row;
      for (int j = 0; j < d; ++j)
        row.push_back(i == j
                          ? TruncatedSeries::constant(spec, xvars, N, RingValue::one(spec))
                          : TruncatedSeries(spec, xvars, N));
      I.push_back(std::move(row));
    }
    return I;
  };
  auto I = identity();
  std::vector<std::vector<TruncatedSeries>> U = identity();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) U[i][j] = series_sub(I[i][j], M[i][j]);
  auto G = identity();
  for (int step = 0; step < N; ++step) {
    std::vector<std::vector<TruncatedSeries>> next = identity();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        TruncatedSeries acc = I[i][j];
        for (int t = 0; t < d; ++t) acc = series_add(acc, series_mul(U[i][t], G[t][j]));
        next[i][j] = std::move(acc);
      }
    G = std::move(next);
  }
  // omega_j = sum_i G_{ji} dx_i gives m* omega = pr1* + pr2* with G = M^{-1}.
  InvariantForm w;
  w.spec = spec;
  w.dim = d;
  w.trunc = N;
  w.coeffs = std::move(G);
  return w;
}

bool check_invariance(const FormalGroupLaw& F, const InvariantForm& omega) {
  if (F.spec != omega.spec || F.dim != omega.dim)
    throw Error(ErrorKind::SpecMismatch, "law/form mismatch");
  const int d = F.dim;
  const int Nc = std::min(omega.trunc, F.trunc - 1);
  auto xyvars = fgl_xy_vars(d);
  // Truncated law components as composition arguments.
  std::vector<TruncatedSeries> Fc;
  for (int i = 0; i < d; ++i) Fc.push_back(series_truncate(F.components[i], Nc));
  // g_{ji}(F(x,y)) for all j, i.
  std::vector<std::vector<TruncatedSeries>> gF;
  for (int j = 0; j < d; ++j) {
    std::vector<TruncatedSeries> row;
    for (int i = 0; i < d; ++i)
      row.push_back(series_compose(series_truncate(omega.coeffs[j][i], Nc), Fc));
    gF.push_back(std::move(row));
  }
  // Embeddings of g_{jk}(x) and g_{jk}(y) into the 2d variables.
  std::vector<size_t> into_x(d), into_y(d);
  for (int i = 0; i < d; ++i) {
    into_x[i] = i;
    into_y[i] = d + i;
  }
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < 2 * d; ++k) {
      TruncatedSeries lhs(F.spec, xyvars, Nc);
      for (int i = 0; i < d; ++i) {
        TruncatedSeries dFi = series_truncate(series_derivative(F.components[i], k), Nc);
        lhs = series_add(lhs, series_mul(gF[j][i], dFi));
      }
      TruncatedSeries rhs =
          k < d ? series_embed(series_truncate(omega.coeffs[j][k], Nc), xyvars, into_x)
                : series_embed(series_truncate(omega.coeffs[j][k - d], Nc), xyvars, into_y);
      if (!series_eq(lhs, rhs)) return false;
    }
  }
  return true;
}

std::vector<TruncatedSeries> fgl_log(const FormalGroupLaw& F) {
  InvariantForm w = invariant_differential(F);
  const int d = F.dim;
  auto xvars = fgl_x_vars(d);
  std::vector<TruncatedSeries> logs;
  for (int j = 0; j < d; ++j) {
    // Radial integration of the closed form: the x^e coefficient of
    // sum_i g_{ji} x_i divided by |e|.
    TruncatedSeries radial(F.spec, xvars, w.trunc + 1);
    for (int i = 0; i < d; ++i) {
      for (const auto& [e, c] : w.coeffs[j][i].terms()) {
        Exponents ue = e;
        ue[i] += 1;
        radial.set_coeff(ue, ring_add(radial.coeff(ue), c));
      }
    }
    TruncatedSeries lg(F.spec, xvars, w.trunc + 1);
    for (const auto& [e, c] : radial.terms())
      lg.set_coeff(e, ring_div_int(c, total_degree(e)));
    logs.push_back(std::move(lg));
  }
  return logs;
}

FormalGroupLaw fgl_from_log(const std::vector<TruncatedSeries>& logs) {
  if (logs.empty()) throw Error(ErrorKind::ArityMismatch, "no logarithms given");
  const int d = static_cast<int>(logs.size());
  const RingSpec& spec = logs[0].spec();
  const int N = logs[0].trunc();
  auto xvars = fgl_x_vars(d);
  for (int j = 0; j < d; ++j) {
    if (logs[j].spec() != spec || logs[j].trunc() != N || logs[j].nvars() != logs.size())
      throw Error(ErrorKind::SpecMismatch, "logarithm list mismatch");
    Exponents lin(d, 0);
    lin[j] = 1;
    if (!ring_is_zero(logs[j].constant_term()) ||
        !ring_eq(logs[j].coeff(lin), RingValue::one(spec)))
      throw Error(ErrorKind::NotReversible, "logarithm is not x_j + higher order");
  }
  // Compositional inverse of the system l = id + h: psi = x - h(psi).
  std::vector<TruncatedSeries> xs, hs, psi;
  for (int j = 0; j < d; ++j) {
    TruncatedSeries xj = TruncatedSeries::variable(spec, xvars, N, j);
    hs.push_back(series_sub(logs[j], xj));
    xs.push_back(xj);
    psi.push_back(std::move(xj));
  }
  for (int step = 0; step < N; ++step) {
    std::vector<TruncatedSeries> next;
    for (int j = 0; j < d; ++j) next.push_back(series_sub(xs[j], series_compose(hs[j], psi)));
    psi = std::move(next);
  }
  // F = psi(l(x) + l(y)) in the 2d variables.
  auto xyvars = fgl_xy_vars(d);
  std::vector<size_t> into_x(d), into_y(d);
  for (int i = 0; i < d; ++i) {
    into_x[i] = i;
    into_y[i] = d + i;
  }
  std::vector<TruncatedSeries> sums;
  for (int j = 0; j < d; ++j)
    sums.push_back(series_add(series_embed(logs[j], xyvars, into_x),
                              series_embed(logs[j], xyvars, into_y)));
  FormalGroupLaw F;
  F.spec = spec;
  F.dim = d;
  F.trunc = N;
  for (int j = 0; j < d; ++j) F.components.push_back(series_compose(psi[j], sums));
  return F;
}

FormalGroupLaw fgl_base_change(const FormalGroupLaw& F, const RingSpec& target,
                               const std::map<std::string, RingValue>& assign) {
  FormalGroupLaw out;
  out.spec = target;
  out.dim = F.dim;
  out.trunc = F.trunc;
  for (const TruncatedSeries& c : F.components)
    out.components.push_back(series_map(c, target, assign));
  return out;
}

}  // namespace cartierlab
