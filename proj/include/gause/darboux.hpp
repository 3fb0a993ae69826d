#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gause/model.hpp"

namespace gause {

/// Selects the serial reference loop or the OpenMP loop for branch searches.
enum class Exec { Serial, Parallel };

/// Cofactor P(x) + Q(x) y.
struct Cofactor {
  UPoly P;
  UPoly Q;

  YPoly as_ypoly() const { return YPoly(std::vector<UPoly>{P, Q}); }
  friend bool operator==(const Cofactor&, const Cofactor&) = default;
};

struct DarbouxCertificate {
  YPoly f;
  Cofactor cofactor;
  std::vector<std::pair<YPoly, int>> irreducible_factors;
};

/// p df/dx + q df/dy.
YPoly apply_field(const PlanarField& field, const YPoly& f);

/// Cofactor of f when L[f] = K f with K = P + Q y; nullopt when f is not
/// invariant (or its cofactor has higher y-degree). Throws
/// std::invalid_argument for f == 0.
std::optional<Cofactor> verify_darboux(const PlanarField& field, const YPoly& f);

/// Builds a certificate for f, re-verifying invariance; irreducible_factors
/// is filled by the caller. Throws std::invalid_argument if f is not invariant.
DarbouxCertificate make_certificate(const PlanarField& field, const YPoly& f);

struct DarbouxSearchStats {
  std::size_t branches = 0;
  std::size_t consistent_branches = 0;
  std::size_t generators = 0;
};

/// Irreducible Darboux polynomials of a field of the form
/// p = p0(x) + p1(x) y, q = q1(x) y with p0 != 0 and p1 either zero or a
/// monomial, found by the stratified ansatz sum_j X_j(x) y^j with
/// deg_y <= Mmax and lowest stratum built from root_factors with
/// multiplicities <= nmax. Certificates are normalized and sorted by
/// canonical key. Throws NumericModeError for numeric parameters (via
/// build_field) and std::invalid_argument for unsupported field shapes.
std::vector<DarbouxCertificate> darboux_search(const PlanarField& field, int Mmax, int nmax,
                                               Exec exec = Exec::Parallel,
                                               DarbouxSearchStats* stats = nullptr);

/// Exhaustive enumeration: every nonzero polynomial with deg_x <= dx,
/// deg_y <= dy and coefficients drawn from `coeffs` that verify_darboux
/// accepts, in enumeration order (coefficient index of x^i y^j is digit
/// j * (dx + 1) + i of a base-|coeffs| counter). Throws
/// std::invalid_argument when the box exceeds 2^32 candidates.
std::vector<YPoly> enumerate_darboux(const PlanarField& field, int dx, int dy, const std::vector<QGauss>& coeffs,
                                     Exec exec = Exec::Parallel);

/// True iff g is invariant with some cofactor K_g and L[f] = f K_g + g K.
/// Throws std::invalid_argument when f and g have a nonconstant common factor.
bool verify_exponential_factor(const PlanarField& field, const YPoly& f, const YPoly& g,
                               const Cofactor& K);

/// Ordering key used to sort search output.
std::string canonical_key(const YPoly& f);

// ---------------------------------------------------------------------------
// Integrating factors x^lambda1 y^lambda2 exp(g / h), h = x^n1 y^n2.

struct IFactorCandidate {
  QGauss lambda1;
  QGauss lambda2;
  int n1 = 0;
  int n2 = 0;
  int N = 0;
  /// Strata a_0..a_N of g.
  std::vector<UPoly> a;
  /// Dimension of the solution family beyond the trivial g -> g + c h.
  std::size_t free_directions = 0;

  YPoly g() const { return YPoly(a); }
};

struct IFactorBranch {
  int N = 0;
  int n1 = 0;
  int n2 = 0;
  /// "Set1" (N = n2 = 0), "Set2" (n2 = 0 < N), "Set3" (0 < n2 < N),
  /// "Set4" (n2 = N > 0) or "N<n2".
  std::string label;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool consistent = false;
};

/// The N = n1 = n2 = 0 branch examined in two steps: the rows of the top
/// power of y alone, then the whole system.
struct Set1Analysis {
  /// lambda1 when the top rows determine it uniquely.
  std::optional<QGauss> forced_lambda1;
  bool top_rows_consistent = false;
  bool full_consistent = false;
};

struct IFactorResult {
  int Nmax = 0;
  int n1max = 0;
  int n2max = 0;
  std::vector<IFactorBranch> branches;
  std::vector<IFactorCandidate> candidates;
  Set1Analysis set1;
};

/// Polynomial field used by the integrating-factor search:
/// build_unified_field for any beta.
IFactorResult ifactor_search(const GauseParams& params, int Nmax, int n1max, int n2max,
                             Exec exec = Exec::Parallel);

/// Solves one (N, n1, n2) branch on a given field.
std::pair<IFactorBranch, std::optional<IFactorCandidate>> solve_ifactor_branch(
    const PlanarField& field, int N, int n1, int n2);

Set1Analysis analyze_set1(const PlanarField& field);

/// h^2 (lambda1 p/x + lambda2 q/y + div) + L[g] h - g L[h] == 0, the
/// integrating-factor condition in logarithmic form cleared of denominators.
bool verify_ifactor(const PlanarField& field, const IFactorCandidate& cand);

// ---------------------------------------------------------------------------
// Closed-form first integrals of the exceptional parameter classes.

struct SpecialIntegral {
  ParamCase tag = ParamCase::CaseCInB;
  std::string formula;
  /// Named exact constants appearing in the formula.
  std::vector<std::pair<std::string, QGauss>> coefficients;
  std::string singular_set;
  std::function<CScalar(CScalar x, CScalar y)> evaluate;
};

/// Throws std::invalid_argument for GENERIC parameters.
SpecialIntegral special_first_integral(const GauseParams& params);

}  // namespace gause
