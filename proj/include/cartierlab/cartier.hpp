#ifndef CARTIERLAB_CARTIER_HPP
#define CARTIERLAB_CARTIER_HPP

#include <map>
#include <utility>
#include <vector>

#include "cartierlab/witt.hpp"

namespace cartierlab {

/// Canonical Cartier-ring element: a finite sum  sum V_n [a_{n,m}] F_m  with
/// 1 <= n < vbound (terms of V-filtration >= vbound are truncated away),
/// m >= 1, and no zero coefficients. Terms are kept in (n, m) lexicographic
/// order by the map.
struct CartierElement {
  RingSpec spec;
  int vbound = 2;
  std::map<std::pair<long, long>, RingValue> terms;
};

/// Formal word in the generators: V_n, F_n, [c], nonnegative integer
/// literals, +, *.
struct CartierExpr {
  enum class Node { V, F, Teich, Int, Sum, Prod };
  Node node = Node::Int;
  long n = 0;            // V/F index or integer literal
  RingValue c;           // Teich payload
  std::vector<CartierExpr> args;

  static CartierExpr v(long n);
  static CartierExpr f(long n);
  static CartierExpr teich(RingValue c);
  static CartierExpr integer(long v);
  static CartierExpr sum(std::vector<CartierExpr> args);
  static CartierExpr prod(std::vector<CartierExpr> args);
};

/// Grammar: expr := term ('+' term)*; term := factor ('*'? factor)*;
/// factor := 'V'<int> | 'F'<int> | '[' value ']' | <int> | '(' expr ')'.
CartierExpr parse_cartier_expr(const std::string& text, const RingSpec& spec);

/// The defect coefficients a_j(c1, c2), j = 2..upto, defined by
/// (1-(c1+c2)x) / ((1-c1 x)(1-c2 x)) = prod_j (1 - a_j x^j).
std::vector<RingValue> teichmuller_defect(const RingValue& c1, const RingValue& c2, int upto);

/// Rewrite a formal word into the canonical representation, truncated at the
/// V-filtration bound. The result is independent of evaluation order.
CartierElement cartier_normalize(const CartierExpr& expr, const RingSpec& spec, int vbound);

bool cartier_eq(const CartierElement& a, const CartierElement& b);

/// Left module action on W_[1,k](R); the result carries the largest
/// truncation supported by every term of xi. Since xi is only the canonical
/// form modulo the V-filtration, coefficients at degrees >= vbound reflect
/// the stored truncation, not the original operator.
WittVector cartier_apply(const CartierElement& xi, const WittVector& a);

/// Module action on the additive group of series with zero constant term:
/// V_n g = g(x^n),  F_n(c x^i) = n c x^(i/n) when n | i (else 0),
/// [c] g = g(cx).
TruncatedSeries cartier_apply_ga(const CartierElement& xi, const TruncatedSeries& g);

}  // namespace cartierlab

#endif
