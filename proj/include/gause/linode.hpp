#pragma once

#include <optional>
#include <vector>

#include "gause/linsolve.hpp"
#include "gause/upoly.hpp"

namespace gause {

/// a(x) w' + b(x) w = g0(x) + sum_k lambda_k g_k(x), with the lambda_k
/// unknown scalars.
struct LinOde {
  UPoly a;
  UPoly b;
  UPoly g0;
  std::vector<UPoly> g;

  std::size_t num_params() const { return g.size(); }
};

/// A point of the joint (w, lambda) space.
struct OdeMember {
  UPoly w;
  std::vector<QGauss> lambda;
};

/// All polynomial solutions as an affine set: particular + span(basis).
/// Constraints among the lambda_k are implicit in that parametrization;
/// `lambda_constraints` lists them explicitly as rows (c, d) meaning
/// sum_k c_k lambda_k = d.
struct PolySolutionSet {
  bool consistent = false;
  OdeMember particular;
  std::vector<OdeMember> basis;
  std::vector<std::pair<std::vector<QGauss>, QGauss>> lambda_constraints;
  /// Largest solution degree that was searched (nullopt: only w = 0 possible).
  std::optional<int> degree_bound;

  /// True when no solution other than w = 0 exists.
  bool empty() const;
};

/// Leading-term bound on the degree of polynomial solutions. With
/// delta = max(deg a - 1, deg b), the leading coefficient of a (x^n)' + b x^n
/// at x^(n + delta) is linear in n; its root n* (when a nonnegative integer)
/// is the only degree where cancellation happens. Returns the max of
/// rhs_degree - delta and n*, or nullopt when neither is a nonnegative
/// integer. rhs_degree == nullopt means a zero right-hand side.
/// Throws std::invalid_argument when a == 0.
std::optional<int> degree_bound(const UPoly& a, const UPoly& b, std::optional<int> rhs_degree);

/// Throws std::invalid_argument when a == 0.
PolySolutionSet poly_solutions(const LinOde& ode);

/// a w' + b w - g(lambda) for the given member.
UPoly ode_residual(const LinOde& ode, const OdeMember& member);

}  // namespace gause
