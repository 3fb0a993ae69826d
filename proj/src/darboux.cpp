#include "gause/darboux.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "gause/linode.hpp"
#include "gause/linsolve.hpp"

namespace gause {

YPoly apply_field(const PlanarField& field, const YPoly& f) {
  return field.p * f.dx() + field.q * f.dy();
}

std::optional<Cofactor> verify_darboux(const PlanarField& field, const YPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("verify_darboux: f must be nonzero");
  const YPoly Lf = apply_field(field, f);
  if (Lf.is_zero()) return Cofactor{};
  auto K = divide_exact(Lf, f);
  if (!K || K->deg_y() > 1) return std::nullopt;
  return Cofactor{K->stratum(0), K->stratum(1)};
}

DarbouxCertificate make_certificate(const PlanarField& field, const YPoly& f) {
  auto K = verify_darboux(field, f);
  if (!K) throw std::invalid_argument("make_certificate: " + f.to_string() + " is not invariant");
  return {f, *K, {}};
}

std::string canonical_key(const YPoly& f) {
  char prefix[32];
  std::snprintf(prefix, sizeof prefix, "%04d|%04d|", f.total_degree(), f.deg_y());
  return prefix + f.to_string();
}

std::vector<YPoly> enumerate_darboux(const PlanarField& field, int dx, int dy, const std::vector<QGauss>& coeffs,
                                     Exec exec) {
  if (dx < 0 || dy < 0 || coeffs.empty()) throw std::invalid_argument("enumerate_darboux: empty box");
  const int slots = (dx + 1) * (dy + 1);
  const double size = std::pow(static_cast<double>(coeffs.size()), slots);
  if (size > 4294967296.0) throw std::invalid_argument("enumerate_darboux: box too large");
  const long total = static_cast<long>(size);
  const long base = static_cast<long>(coeffs.size());

  auto build = [&](long index) {
    std::vector<UPoly> strata;
    for (int j = 0; j <= dy; ++j) {
      std::vector<QGauss> row;
      for (int i = 0; i <= dx; ++i) {
        row.push_back(coeffs[static_cast<std::size_t>(index % base)]);
        index /= base;
      }
      strata.emplace_back(std::move(row));
    }
    return YPoly(std::move(strata));
  };
  std::vector<char> hit(static_cast<std::size_t>(total), 0);
  auto test = [&](long index) {
    const YPoly f = build(index);
    if (!f.is_zero() && verify_darboux(field, f)) hit[static_cast<std::size_t>(index)] = 1;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long n = 0; n < total; ++n) test(n);
  } else {
    for (long n = 0; n < total; ++n) test(n);
  }
  std::vector<YPoly> out;
  for (long n = 0; n < total; ++n)
    if (hit[static_cast<std::size_t>(n)]) out.push_back(build(n));
  return out;
}

bool verify_exponential_factor(const PlanarField& field, const YPoly& f, const YPoly& g,
                               const Cofactor& K) {
  const YPoly common = gcd(f, g);
  if (common.is_zero() || !common.is_constant())
    throw std::invalid_argument("verify_exponential_factor: f and g are not coprime");
  auto Kg = verify_darboux(field, g);
  if (!Kg) return false;
  return apply_field(field, f) == f * Kg->as_ypoly() + g * K.as_ypoly();
}

// ---------------------------------------------------------------------------
// Darboux search

namespace {

/// terms[0] + sum_t theta_t terms[t + 1]
using Affine = std::vector<UPoly>;

Affine affine_derivative(const Affine& a) {
  Affine out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(t.derivative());
  return out;
}

/// theta = base + sum_s u_s dirs[s]
Affine substitute(const Affine& a, const std::vector<QGauss>& base,
                  const std::vector<std::vector<QGauss>>& dirs) {
  Affine out(dirs.size() + 1);
  out[0] = a[0];
  for (std::size_t t = 0; t + 1 < a.size(); ++t) {
    if (a[t + 1].is_zero()) continue;
    if (!base[t].is_zero()) out[0] += a[t + 1] * base[t];
    for (std::size_t s = 0; s < dirs.size(); ++s)
      if (!dirs[s][t].is_zero()) out[s + 1] += a[t + 1] * dirs[s][t];
  }
  return out;
}

struct FieldShape {
  UPoly p0, p1, q1;
  int p1_power = -1;  // -1 when p1 == 0
  QGauss p1_coeff;
};

FieldShape analyze_shape(const PlanarField& field) {
  if (field.p.deg_y() > 1 || field.q.deg_y() > 1 || !field.q.stratum(0).is_zero())
    throw std::invalid_argument(
        "darboux_search: field " + to_string(field.kind) +
        " is outside the supported shape p = p0 + p1 y, q = q1 y");
  FieldShape s{field.p.stratum(0), field.p.stratum(1), field.q.stratum(1), -1, QGauss()};
  if (s.p0.is_zero())
    throw std::invalid_argument(
        "darboux_search: p has no y-free part; every polynomial in x is invariant");
  if (!s.p1.is_zero()) {
    const int d = s.p1.degree();
    for (int i = 0; i < d; ++i)
      if (!s.p1.coeff(i).is_zero())
        throw std::invalid_argument("darboux_search: coefficient of y in p must be a monomial");
    s.p1_power = d;
    s.p1_coeff = s.p1.leading();
  }
  return s;
}

struct Branch {
  int j0;
  std::vector<int> mult;
  UPoly Q;
};

/// Darboux polynomials with lowest stratum y^j0 X and cofactor
/// P + Q y, where P is forced by X; returned as generators of the solution
/// family (the base member and each direction).
std::vector<YPoly> solve_branch(const FieldShape& s, const std::vector<UPoly>& factors,
                                const Branch& br, int Mmax, bool* consistent) {
  *consistent = false;
  UPoly X(1);
  for (std::size_t i = 0; i < factors.size(); ++i) X = X * pow(factors[i], br.mult[i]);
  UPoly P;
  if (!divides(X, s.p0 * X.derivative(), &P)) return {};
  P += s.q1 * QGauss(br.j0);

  std::vector<Affine> strata(static_cast<std::size_t>(Mmax) + 1);
  for (auto& st : strata) st = Affine(1);
  strata[static_cast<std::size_t>(br.j0)] = Affine{X};
  std::size_t nparams = 0;

  for (int j = br.j0 + 1; j <= Mmax; ++j) {
    const Affine& prev = strata[static_cast<std::size_t>(j - 1)];
    const Affine dprev = affine_derivative(prev);
    LinOde ode;
    ode.a = s.p0;
    ode.b = s.q1 * QGauss(j) - P;
    ode.g0 = br.Q * prev[0] - s.p1 * dprev[0];
    for (std::size_t t = 1; t < prev.size(); ++t) ode.g.push_back(br.Q * prev[t] - s.p1 * dprev[t]);
    const PolySolutionSet sol = poly_solutions(ode);
    if (!sol.consistent) return {};
    std::vector<std::vector<QGauss>> dirs;
    for (const auto& b : sol.basis) dirs.push_back(b.lambda);
    for (int i = br.j0; i < j; ++i)
      strata[static_cast<std::size_t>(i)] =
          substitute(strata[static_cast<std::size_t>(i)], sol.particular.lambda, dirs);
    Affine xj(sol.basis.size() + 1);
    xj[0] = sol.particular.w;
    for (std::size_t b = 0; b < sol.basis.size(); ++b) xj[b + 1] = sol.basis[b].w;
    strata[static_cast<std::size_t>(j)] = std::move(xj);
    nparams = sol.basis.size();
  }

  // Coefficient of y^(Mmax + 1): p1 X_M' - Q X_M = 0.
  const Affine& top = strata[static_cast<std::size_t>(Mmax)];
  const Affine dtop = affine_derivative(top);
  Affine closing(top.size());
  int rows = 0;
  for (std::size_t t = 0; t < top.size(); ++t) {
    closing[t] = s.p1 * dtop[t] - br.Q * top[t];
    rows = std::max(rows, closing[t].degree() + 1);
  }
  Matrix A(static_cast<std::size_t>(rows), nparams);
  std::vector<QGauss> rhs(static_cast<std::size_t>(rows));
  for (int d = 0; d < rows; ++d) {
    rhs[static_cast<std::size_t>(d)] = -closing[0].coeff(d);
    for (std::size_t t = 0; t < nparams; ++t) A(static_cast<std::size_t>(d), t) = closing[t + 1].coeff(d);
  }
  const SolutionSet fin = linear_solve_exact(A, rhs);
  if (!fin.consistent) return {};
  *consistent = true;

  std::vector<YPoly> out(fin.nullspace.size() + 1);
  for (int j = br.j0; j <= Mmax; ++j) {
    const Affine a = substitute(strata[static_cast<std::size_t>(j)], fin.particular, fin.nullspace);
    for (std::size_t g = 0; g < out.size(); ++g) out[g] += YPoly(a[g]).shifted(j);
  }
  return out;
}

std::vector<Branch> enumerate_branches(const FieldShape& s, std::size_t nfactors, int Mmax,
                                       int nmax) {
  std::vector<UPoly> Qs;
  if (s.p1_power < 0) {
    Qs.emplace_back();
  } else {
    // Top stratum c x^n: p1 n x^(n-1) = Q x^n.
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0 && s.p1_power == 0) break;
      Qs.push_back(n == 0 ? UPoly() : UPoly::monomial(s.p1_coeff * QGauss(n), s.p1_power - 1));
    }
  }
  std::vector<Branch> out;
  std::vector<int> mult(nfactors, 0);
  for (int j0 = 0; j0 <= Mmax; ++j0) {
    std::fill(mult.begin(), mult.end(), 0);
    for (;;) {
      for (const auto& Q : Qs) out.push_back({j0, mult, Q});
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == nmax) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  return out;
}

}  // namespace

std::vector<DarbouxCertificate> darboux_search(const PlanarField& field, int Mmax, int nmax,
                                               Exec exec, DarbouxSearchStats* stats) {
  if (Mmax < 0 || nmax < 0) throw std::invalid_argument("darboux_search: bounds must be nonnegative");
  const FieldShape s = analyze_shape(field);
  const std::vector<Branch> branches = enumerate_branches(s, field.root_factors.size(), Mmax, nmax);

  std::vector<std::vector<YPoly>> found(branches.size());
  std::vector<char> ok(branches.size(), 0);
  const long nb = static_cast<long>(branches.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < nb; ++b) {
      bool c = false;
      found[static_cast<std::size_t>(b)] =
          solve_branch(s, field.root_factors, branches[static_cast<std::size_t>(b)], Mmax, &c);
      ok[static_cast<std::size_t>(b)] = c;
    }
  } else {
    for (long b = 0; b < nb; ++b) {
      bool c = false;
      found[static_cast<std::size_t>(b)] =
          solve_branch(s, field.root_factors, branches[static_cast<std::size_t>(b)], Mmax, &c);
      ok[static_cast<std::size_t>(b)] = c;
    }
  }

  std::vector<std::pair<std::string, YPoly>> pool;
  for (const auto& list : found)
    for (const auto& g : list)
      if (!g.is_zero()) {
        YPoly n = g.normalized();
        pool.emplace_back(canonical_key(n), std::move(n));
      }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             pool.end());

  std::vector<DarbouxCertificate> certs;
  for (auto& [key, g] : pool) {
    YPoly rest = g;
    for (const auto& c : certs) {
      while (!rest.is_constant()) {
        auto qd = divide_exact(rest, c.f);
        if (!qd) break;
        rest = std::move(*qd);
      }
    }
    if (rest.is_constant()) continue;
    rest = rest.normalized();
    DarbouxCertificate cert = make_certificate(field, rest);
    cert.irreducible_factors = {{rest, 1}};
    certs.push_back(std::move(cert));
  }
  std::sort(certs.begin(), certs.end(), [](const auto& a, const auto& b) {
    return canonical_key(a.f) < canonical_key(b.f);
  });

  if (stats) {
    stats->branches = branches.size();
    stats->consistent_branches = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
    stats->generators = pool.size();
  }
  return certs;
}

// ---------------------------------------------------------------------------
// Integrating factors

namespace {

std::string branch_label(int N, int n2) {
  if (N == 0 && n2 == 0) return "Set1";
  if (n2 == 0) return "Set2";
  if (n2 < N) return "Set3";
  if (n2 == N) return "Set4";
  return "N<n2";
}

struct IFactorSystem {
  Matrix A;
  std::vector<QGauss> rhs;
  std::vector<int> row_ypow;  // power of y for each row
  std::size_t coeffs_per_stratum = 0;
};

/// Columns: coefficients of a_n (n = 0..N, degree <= n1 + n2 + 1), then
/// lambda1, lambda2. Rows: monomials x^d y^j of
/// h (lambda1 p/x + lambda2 q/y) + L[g] - g K_h = -h div.
IFactorSystem build_ifactor_system(const PlanarField& field, int N, int n1, int n2) {
  auto Kx = divide_exact(field.p, YPoly::x());
  auto Ky = divide_exact(field.q, YPoly::y());
  if (!Kx || !Ky) throw std::invalid_argument("ifactor: x and y must be invariant for the field");
  const YPoly h = YPoly::monomial(QGauss(1), n1, n2);
  const YPoly Kh = *Kx * QGauss(n1) + *Ky * QGauss(n2);
  const int D = n1 + n2 + 1;

  std::vector<YPoly> columns;
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= D; ++i) {
      const YPoly e = YPoly::monomial(QGauss(1), i, n);
      columns.push_back(apply_field(field, e) - e * Kh);
    }
  columns.push_back(h * *Kx);
  columns.push_back(h * *Ky);
  const YPoly rhs = -(h * field_divergence(field));

  std::map<std::pair<int, int>, std::size_t> rows;
  auto index = [&rows](const YPoly& f) {
    for (int j = 0; j <= f.deg_y(); ++j)
      for (int d = 0; d <= f.stratum(j).degree(); ++d)
        if (!f.stratum(j).coeff(d).is_zero()) rows.emplace(std::make_pair(j, d), 0);
  };
  for (const auto& c : columns) index(c);
  index(rhs);
  std::size_t r = 0;
  IFactorSystem sys;
  for (auto& [key, idx] : rows) {
    idx = r++;
    sys.row_ypow.push_back(key.first);
  }
  sys.A = Matrix(rows.size(), columns.size());
  sys.rhs.assign(rows.size(), QGauss());
  auto fill = [&rows](const YPoly& f, auto&& put) {
    for (int j = 0; j <= f.deg_y(); ++j)
      for (int d = 0; d <= f.stratum(j).degree(); ++d)
        if (!f.stratum(j).coeff(d).is_zero()) put(rows.at({j, d}), f.stratum(j).coeff(d));
  };
  for (std::size_t c = 0; c < columns.size(); ++c)
    fill(columns[c], [&](std::size_t row, const QGauss& v) { sys.A(row, c) = v; });
  fill(rhs, [&](std::size_t row, const QGauss& v) { sys.rhs[row] = v; });
  sys.coeffs_per_stratum = static_cast<std::size_t>(D) + 1;
  return sys;
}

}  // namespace

std::pair<IFactorBranch, std::optional<IFactorCandidate>> solve_ifactor_branch(
    const PlanarField& field, int N, int n1, int n2) {
  const IFactorSystem sys = build_ifactor_system(field, N, n1, n2);
  IFactorBranch br{N, n1, n2, branch_label(N, n2), sys.A.cols(), sys.A.rows(), 0, false};
  const SolutionSet sol = linear_solve_exact(sys.A, sys.rhs);
  br.rank = sol.rank;
  br.consistent = sol.consistent;
  if (!sol.consistent) return {br, std::nullopt};

  IFactorCandidate cand;
  cand.N = N;
  cand.n1 = n1;
  cand.n2 = n2;
  const std::size_t per = sys.coeffs_per_stratum;
  for (int n = 0; n <= N; ++n) {
    const auto first = sol.particular.begin() + static_cast<long>(static_cast<std::size_t>(n) * per);
    cand.a.emplace_back(std::vector<QGauss>(first, first + static_cast<long>(per)));
  }
  cand.lambda1 = sol.particular[sys.A.cols() - 2];
  cand.lambda2 = sol.particular[sys.A.cols() - 1];
  // g -> g + c h is always a solution direction when h lies in the ansatz.
  const bool trivial = n2 <= N;
  cand.free_directions = sol.nullspace.size() - (trivial && !sol.nullspace.empty() ? 1 : 0);
  return {br, cand};
}

Set1Analysis analyze_set1(const PlanarField& field) {
  const IFactorSystem sys = build_ifactor_system(field, 0, 0, 0);
  const int top = *std::max_element(sys.row_ypow.begin(), sys.row_ypow.end());
  std::vector<std::size_t> picked;
  for (std::size_t r = 0; r < sys.row_ypow.size(); ++r)
    if (sys.row_ypow[r] == top) picked.push_back(r);
  Matrix T(picked.size(), sys.A.cols());
  std::vector<QGauss> rhs(picked.size());
  for (std::size_t i = 0; i < picked.size(); ++i) {
    for (std::size_t c = 0; c < sys.A.cols(); ++c) T(i, c) = sys.A(picked[i], c);
    rhs[i] = sys.rhs[picked[i]];
  }
  Set1Analysis out;
  const SolutionSet partial = linear_solve_exact(T, rhs);
  out.top_rows_consistent = partial.consistent;
  if (partial.consistent) {
    const std::size_t l1 = sys.A.cols() - 2;
    const bool pinned = std::all_of(partial.nullspace.begin(), partial.nullspace.end(),
                                    [l1](const auto& v) { return v[l1].is_zero(); });
    if (pinned) out.forced_lambda1 = partial.particular[l1];
  }
  out.full_consistent = linear_solve_exact(sys.A, sys.rhs).consistent;
  return out;
}

bool verify_ifactor(const PlanarField& field, const IFactorCandidate& cand) {
  auto Kx = divide_exact(field.p, YPoly::x());
  auto Ky = divide_exact(field.q, YPoly::y());
  if (!Kx || !Ky) return false;
  const YPoly h = YPoly::monomial(QGauss(1), cand.n1, cand.n2);
  const YPoly g = cand.g();
  const YPoly lhs = h * h * (*Kx * cand.lambda1 + *Ky * cand.lambda2 + field_divergence(field)) +
                    apply_field(field, g) * h - g * apply_field(field, h);
  return lhs.is_zero();
}

IFactorResult ifactor_search(const GauseParams& params, int Nmax, int n1max, int n2max, Exec exec) {
  if (Nmax < 0 || n1max < 0 || n2max < 0)
    throw std::invalid_argument("ifactor_search: bounds must be nonnegative");
  const ParamClass pc = classify_params(params);
  if (pc.primary != ParamCase::GenericAMinusB)
    throw std::invalid_argument("ifactor_search: parameters are in class " + to_string(pc.primary) +
                                "; use special_first_integral for the closed-form first integral");
  const PlanarField field = build_unified_field(params);

  std::vector<int> n1s;
  for (int n1 = 0; n1 <= n1max; ++n1) n1s.push_back(n1);
  if (params.exact_values().beta.is_zero() && params.m() > n1max) n1s.push_back(params.m());

  std::vector<std::array<int, 3>> keys;
  for (int N = 0; N <= Nmax; ++N)
    for (int n1 : n1s)
      for (int n2 = 0; n2 <= n2max; ++n2) keys.push_back({N, n1, n2});

  std::vector<std::pair<IFactorBranch, std::optional<IFactorCandidate>>> res(keys.size());
  const long nk = static_cast<long>(keys.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nk; ++i) {
      const auto& k = keys[static_cast<std::size_t>(i)];
      res[static_cast<std::size_t>(i)] = solve_ifactor_branch(field, k[0], k[1], k[2]);
    }
  } else {
    for (long i = 0; i < nk; ++i) {
      const auto& k = keys[static_cast<std::size_t>(i)];
      res[static_cast<std::size_t>(i)] = solve_ifactor_branch(field, k[0], k[1], k[2]);
    }
  }

  IFactorResult out{Nmax, n1max, n2max, {}, {}, analyze_set1(field)};
  for (auto& [br, cand] : res) {
    out.branches.push_back(br);
    if (!cand) continue;
    if (!verify_ifactor(field, *cand))
      throw std::logic_error("ifactor_search: solved candidate fails the logarithmic-form check");
    out.candidates.push_back(std::move(*cand));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exceptional-class first integrals

SpecialIntegral special_first_integral(const GauseParams& params) {
  const ParamClass pc = classify_params(params);
  const auto v = params.values();
  const int m = params.m();
  SpecialIntegral out;
  out.tag = pc.primary;
  auto add = [&](const std::string& name, auto&& value_of) {
    if (params.is_exact()) out.coefficients.emplace_back(name, value_of(params.exact_values()));
  };

  switch (pc.primary) {
    case ParamCase::GenericAMinusB:
      throw std::invalid_argument(
          "special_first_integral: parameters are GENERIC_A_MINUS_B; no closed-form first integral "
          "applies");
    case ParamCase::CaseAAlphaZero: {
      if (v.r == CScalar(0.0)) {
        // p vanishes identically, so x itself is conserved.
        out.formula = "H = x";
        out.singular_set = "none";
        out.evaluate = [](CScalar x, CScalar) { return x; };
        break;
      }
      const CScalar e = -v.gamma / v.r;
      const CScalar k = v.k;
      out.formula = "H = y * ((x - k)/x)^(-gamma/r)";
      out.singular_set = "x = 0, x = k";
      add("exponent", [](const auto& p) { return -p.gamma / p.r; });
      add("k", [](const auto& p) { return p.k; });
      out.evaluate = [e, k](CScalar x, CScalar y) {
        if (x == CScalar(0.0) || x == k) throw std::domain_error("case-A integral: singular point");
        CScalar ratio = (x - k) / x;
        // Pin the sign of a zero imaginary part so real inputs stay on one branch.
        if (ratio.imag() == 0.0) ratio = CScalar(ratio.real(), 0.0);
        return y * std::pow(ratio, e);
      };
      break;
    }
    case ParamCase::CaseBRZero: {
      // dH/dx = -q/p = -(gamma beta/alpha) x^-m + (alpha c - gamma)/alpha
      const CScalar c1 = v.gamma * v.beta / v.alpha;
      const CScalar c2 = (v.alpha * v.c - v.gamma) / v.alpha;
      add("gamma*beta/alpha", [](const auto& p) { return p.gamma * p.beta / p.alpha; });
      add("(alpha*c-gamma)/alpha", [](const auto& p) { return (p.alpha * p.c - p.gamma) / p.alpha; });
      out.singular_set = "x = 0";
      if (m == 1) {
        out.formula = "H = y - (gamma*beta/alpha) ln x + ((alpha*c - gamma)/alpha) x";
        out.evaluate = [c1, c2](CScalar x, CScalar y) {
          if (x == CScalar(0.0)) throw std::domain_error("case-B integral: singular point");
          return y - c1 * std::log(x) + c2 * x;
        };
      } else {
        out.formula =
            "H = y + (gamma*beta/alpha) x^(1-m)/(m-1) + ((alpha*c - gamma)/alpha) x";
        out.evaluate = [c1, c2, m](CScalar x, CScalar y) {
          if (x == CScalar(0.0)) throw std::domain_error("case-B integral: singular point");
          return y + c1 * std::pow(x, 1 - m) / static_cast<double>(m - 1) + c2 * x;
        };
      }
      break;
    }
    case ParamCase::CaseCInB:
      out.formula = "H = y";
      out.singular_set = "none";
      out.evaluate = [](CScalar, CScalar y) { return y; };
      break;
  }
  return out;
}

}  // namespace gause
