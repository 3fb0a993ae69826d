#include "gause/linode.hpp"

#include <algorithm>
#include <stdexcept>

namespace gause {

bool PolySolutionSet::empty() const {
  if (!consistent) return true;
  if (!particular.w.is_zero()) return false;
  return std::all_of(basis.begin(), basis.end(), [](const OdeMember& m) { return m.w.is_zero(); });
}

std::optional<int> degree_bound(const UPoly& a, const UPoly& b, std::optional<int> rhs_degree) {
  if (a.is_zero()) throw std::invalid_argument("degree_bound: coefficient of w' must be nonzero");
  const int a_shift = a.degree() - 1;
  const int delta = b.is_zero() ? a_shift : std::max(a_shift, b.degree());
  const bool a_leads = a_shift == delta;
  const bool b_leads = !b.is_zero() && b.degree() == delta;

  std::optional<int> best;
  auto offer = [&best](int n) {
    if (n >= 0 && (!best || n > *best)) best = n;
  };
  if (rhs_degree) offer(*rhs_degree - delta);
  if (a_leads && !b_leads) {
    offer(0);
  } else if (a_leads && b_leads) {
    const QGauss root = -b.leading() / a.leading();
    if (root.is_real() && root.re().get_den() == 1 && sgn(root.re()) >= 0 &&
        root.re().get_num().fits_sint_p())
      offer(static_cast<int>(root.re().get_num().get_si()));
  }
  return best;
}

UPoly ode_residual(const LinOde& ode, const OdeMember& member) {
  UPoly r = ode.a * member.w.derivative() + ode.b * member.w - ode.g0;
  for (std::size_t k = 0; k < ode.g.size() && k < member.lambda.size(); ++k)
    r -= ode.g[k] * member.lambda[k];
  return r;
}

PolySolutionSet poly_solutions(const LinOde& ode) {
  if (ode.a.is_zero()) throw std::invalid_argument("poly_solutions: coefficient of w' must be nonzero");

  int rhs_deg = ode.g0.degree();
  for (const auto& gk : ode.g) rhs_deg = std::max(rhs_deg, gk.degree());
  PolySolutionSet out;
  out.degree_bound =
      degree_bound(ode.a, ode.b, rhs_deg == kZeroDegree ? std::nullopt : std::optional<int>(rhs_deg));

  const int nw = out.degree_bound ? *out.degree_bound + 1 : 0;
  const std::size_t K = ode.g.size();
  const std::size_t ncols = static_cast<std::size_t>(nw) + K;

  // Images of the unknowns under w -> a w' + b w, and -g_k for the parameters.
  std::vector<UPoly> columns;
  columns.reserve(ncols);
  int max_deg = std::max(rhs_deg, 0);
  for (int i = 0; i < nw; ++i) {
    const UPoly xi = UPoly::monomial(QGauss(1), i);
    columns.push_back(ode.a * xi.derivative() + ode.b * xi);
    max_deg = std::max(max_deg, columns.back().degree());
  }
  for (const auto& gk : ode.g) columns.push_back(-gk);

  Matrix A(static_cast<std::size_t>(max_deg) + 1, ncols);
  std::vector<QGauss> rhs(A.rows());
  for (std::size_t c = 0; c < ncols; ++c)
    for (int d = 0; d <= columns[c].degree(); ++d) A(static_cast<std::size_t>(d), c) = columns[c].coeff(d);
  for (int d = 0; d <= ode.g0.degree(); ++d) rhs[static_cast<std::size_t>(d)] = ode.g0.coeff(d);

  const SolutionSet sol = linear_solve_exact(A, rhs);
  if (!sol.consistent) return out;
  out.consistent = true;

  auto to_member = [&](const std::vector<QGauss>& v) {
    OdeMember m;
    m.w = UPoly(std::vector<QGauss>(v.begin(), v.begin() + nw));
    m.lambda.assign(v.begin() + nw, v.end());
    return m;
  };
  out.particular = to_member(sol.particular);
  for (const auto& v : sol.nullspace) out.basis.push_back(to_member(v));

  if (K > 0) {
    // Rows c with c . lambda_s = 0 for every basis direction.
    Matrix B(out.basis.size(), K);
    for (std::size_t s = 0; s < out.basis.size(); ++s)
      for (std::size_t k = 0; k < K; ++k) B(s, k) = out.basis[s].lambda[k];
    const SolutionSet annihilators = linear_solve_exact(B, std::vector<QGauss>(B.rows()));
    for (const auto& c : annihilators.nullspace) {
      QGauss d;
      for (std::size_t k = 0; k < K; ++k) d += c[k] * out.particular.lambda[k];
      out.lambda_constraints.emplace_back(c, d);
    }
  }
  return out;
}

}  // namespace gause
