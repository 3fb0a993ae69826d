#include <doctest.h>

#include <chrono>

#include "gause/darboux.hpp"

using namespace gause;

namespace {

QGauss q(const char* s) { return QGauss(parse_rational(s)); }

GauseParams params(const char* a, const char* r, const char* c, const char* k, const char* g,
                   const char* b, int m) {
  return GauseParams::exact({q(a), q(r), q(c), q(k), q(g), q(b)}, m);
}

const YPoly X = YPoly::x();
const YPoly Y = YPoly::y();
YPoly C(const QGauss& v) { return YPoly(UPoly(v)); }

}  // namespace

TEST_CASE("apply_field examples") {
  const auto f = build_field(params("1", "1", "1", "1", "1/4", "1", 1));
  CHECK(apply_field(f, X) == f.p);
  CHECK(apply_field(f, Y) == f.q);
  CHECK(apply_field(f, C(q("7/3"))).is_zero());
}

TEST_CASE("verify_darboux examples") {
  const auto v1 = build_field(params("1", "1", "1", "1", "1/4", "1", 1));
  auto K = verify_darboux(v1, X);
  REQUIRE(K);
  // -(r/k)(x - k)(x + beta) - alpha y with r = k = alpha = beta = 1.
  CHECK(K->P == -(UPoly::linear(QGauss(1)) * UPoly::linear(QGauss(-1))));
  CHECK(K->Q == UPoly(QGauss(-1)));

  const auto v2 = build_field(params("1", "1", "1", "1", "1/2", "0", 1));
  K = verify_darboux(v2, Y);
  REQUIRE(K);
  CHECK(K->P == UPoly(q("1/2")));
  CHECK(K->Q.is_zero());

  CHECK(!verify_darboux(v1, X + Y));
  CHECK_THROWS_AS(verify_darboux(v1, YPoly()), std::invalid_argument);
}

TEST_CASE("darboux_search reproduces the irreducible invariants") {
  const auto v1 = build_field(params("1", "1", "1", "1", "1/4", "1", 1));
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    const auto certs = darboux_search(v1, 3, 3, e);
    REQUIRE(certs.size() == 2);
    CHECK(certs[0].f == X);
    CHECK(certs[1].f == Y);
    CHECK(certs[0].cofactor == *verify_darboux(v1, X));
    CHECK(certs[1].cofactor.P == UPoly(std::vector<QGauss>{q("-1/4"), q("3/4")}));
  }

  const auto v2 = build_field(params("1", "1", "1", "1", "1/2", "0", 1));
  const auto certs = darboux_search(v2, 3, 3);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].f == Y);
  CHECK(certs[0].cofactor.P == UPoly(q("1/2")));
}

TEST_CASE("darboux_search on the q = 0 field finds y with zero cofactor") {
  const auto f = build_field(params("1", "1", "1", "1", "1", "0", 1));
  REQUIRE(f.kind == FieldKind::ReducedC);
  const auto certs = darboux_search(f, 2, 2);
  bool has_y = false;
  for (const auto& c : certs) {
    CHECK(verify_darboux(f, c.f) == c.cofactor);
    if (c.f == Y) {
      has_y = true;
      CHECK(c.cofactor == Cofactor{});
    }
  }
  CHECK(has_y);
}

TEST_CASE("darboux_search rejects unsupported input") {
  CHECK_THROWS_AS(darboux_search(build_field(params("1", "0", "1", "1", "1", "1", 1)), 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_field(GauseParams::numeric({1.0, 1.0, 1.0, 1.0, 0.25, 1.0}, 1)),
                  NumericModeError);
}

TEST_CASE("darboux_search with m = 2 and a split x^2 + beta") {
  // beta = -4: x^2 - 4 = (x - 2)(x + 2).
  const auto f = build_field(params("2", "3", "1", "5", "1/2", "-4", 2));
  REQUIRE(f.root_factors.size() == 4);
  const auto certs = darboux_search(f, 2, 2);
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].f == X);
  CHECK(certs[1].f == Y);
}

TEST_CASE("certificates of monomials match the closed cofactor") {
  const auto v = params("2", "3", "1/2", "5", "1/3", "7", 2);
  const auto f = build_field(v);
  const auto& p = v.exact_values();
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      const YPoly g = YPoly::monomial(QGauss(1), n1, n2);
      auto K = verify_darboux(f, g);
      REQUIRE(K);
      const UPoly xm = UPoly::monomial(QGauss(1), 2);
      const UPoly P = -(UPoly::linear(p.k) * (xm + UPoly(p.beta)) * (p.r / p.k * QGauss(n1))) -
                      (UPoly(p.gamma * p.beta) - xm * (p.alpha * p.c - p.gamma)) * QGauss(n2);
      CHECK(K->P == P);
      CHECK(K->Q == UPoly::monomial(-p.alpha * QGauss(n1), 1));
    }
}

TEST_CASE("verify_exponential_factor examples") {
  const auto v1 = build_field(params("1", "1", "1", "1", "1/4", "1", 1));
  CHECK(verify_exponential_factor(v1, YPoly(), C(QGauss(1)), Cofactor{}));
  CHECK(!verify_exponential_factor(v1, X, Y, Cofactor{UPoly(QGauss(1)), UPoly()}));
  const auto vb = build_field(params("1", "0", "1", "1", "1", "1", 2));
  REQUIRE(vb.kind == FieldKind::ReducedB);
  CHECK(verify_exponential_factor(vb, X, C(QGauss(1)), Cofactor{UPoly::monomial(QGauss(-1), 2), UPoly()}));
  CHECK_THROWS_AS(verify_exponential_factor(v1, X * Y, Y, Cofactor{}), std::invalid_argument);
}

TEST_CASE("ifactor_search is empty on generic fixtures") {
  auto r = ifactor_search(params("1", "1", "1", "1", "1/4", "1", 1), 3, 3, 3);
  CHECK(r.candidates.empty());
  CHECK(r.branches.size() == 64);
  for (const auto& b : r.branches) CHECK(!b.consistent);
  REQUIRE(r.set1.forced_lambda1);
  CHECK(*r.set1.forced_lambda1 == QGauss(-1));
  CHECK(r.set1.top_rows_consistent);
  CHECK(!r.set1.full_consistent);

  r = ifactor_search(params("1", "1", "1", "2", "1/3", "1", 2), 2, 3, 3, Exec::Serial);
  CHECK(r.candidates.empty());
  REQUIRE(r.set1.forced_lambda1);
  CHECK(*r.set1.forced_lambda1 == QGauss(-2));

  CHECK_THROWS_AS(ifactor_search(params("0", "1", "1", "1", "1", "1", 1), 1, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("ifactor branch solver finds a known integrating factor") {
  // Saddle x' = x, y' = -y: div = 0, so x^l y^l is an integrating factor for
  // every l; 1/(xy) is the usual one.
  PlanarField saddle;
  saddle.p = X;
  saddle.q = -Y;
  auto [br, cand] = solve_ifactor_branch(saddle, 0, 0, 0);
  CHECK(br.consistent);
  REQUIRE(cand);
  CHECK(cand->lambda1 == cand->lambda2);
  CHECK(verify_ifactor(saddle, *cand));
  IFactorCandidate wrong = *cand;
  wrong.lambda2 += QGauss(1);
  CHECK(!verify_ifactor(saddle, wrong));
}

TEST_CASE("Set1 analysis on a hand-built rank check") {
  // For m = 1 the top rows read -alpha (lambda1 + 1) = 0 and -alpha a0_1 = 0.
  const auto f = build_unified_field(params("2", "1", "1", "1", "1/4", "1", 1));
  const auto s = analyze_set1(f);
  REQUIRE(s.forced_lambda1);
  CHECK(*s.forced_lambda1 == QGauss(-1));
  CHECK(!s.full_consistent);
}

TEST_CASE("special_first_integral examples") {
  const auto a = special_first_integral(params("0", "1", "1", "2", "1/2", "1", 1));
  CHECK(a.tag == ParamCase::CaseAAlphaZero);
  // y ((x-2)/x)^(-1/2) at x = 4, y = 3: 3 * (1/2)^(-1/2) = 3 sqrt 2.
  CHECK(std::abs(a.evaluate({4.0, 0.0}, {3.0, 0.0}) - CScalar(3.0 * std::sqrt(2.0))) < 1e-14);
  CHECK_THROWS_AS(a.evaluate({0.0, 0.0}, {1.0, 0.0}), std::domain_error);

  const auto b = special_first_integral(params("1", "0", "1", "1", "2", "1", 1));
  CHECK(b.tag == ParamCase::CaseBRZero);
  const double x = 1.7, y = 0.3;
  // (alpha c - gamma)/alpha = -1, so the linear term enters with a minus sign.
  CHECK(std::abs(b.evaluate({x, 0.0}, {y, 0.0}) - CScalar(y - 2.0 * std::log(x) - x)) < 1e-14);

  const auto bm = special_first_integral(params("1", "0", "1", "1", "2", "1", 3));
  // H = y + 2 x^-2 / 2 - x
  CHECK(std::abs(bm.evaluate({2.0, 0.0}, {1.0, 0.0}) - CScalar(1.0 + 0.25 - 2.0)) < 1e-14);

  const auto c = special_first_integral(params("1", "1", "1", "1", "1", "0", 1));
  CHECK(c.tag == ParamCase::CaseCInB);
  CHECK(c.evaluate({0.3, 0.0}, {0.9, 0.0}) == CScalar(0.9));
  const auto fc = build_field(params("1", "1", "1", "1", "1", "0", 1));
  CHECK(apply_field(fc, Y).is_zero());

  CHECK_THROWS_AS(special_first_integral(params("1", "1", "1", "1", "1/4", "1", 1)),
                  std::invalid_argument);
}

TEST_CASE("special integrals are annihilated by their fields") {
  // Exact check at rational points for the polynomial case-B integral (m = 2):
  // L[H] = p H_x + q H_y with H_x, H_y computed in closed form.
  const auto v = params("3", "0", "1/2", "1", "2", "5", 2);
  const auto f = build_field(v);
  const auto& p = v.exact_values();
  for (long xi = 1; xi <= 4; ++xi) {
    const QGauss x0(xi), y0(xi + 1);
    const QGauss Hx = -(p.gamma * p.beta / p.alpha) / (x0 * x0) + (p.alpha * p.c - p.gamma) / p.alpha;
    CHECK(f.p(x0, y0) * Hx + f.q(x0, y0) == QGauss());
    // The opposite sign on the linear term is not conserved.
    const QGauss bad = -(p.gamma * p.beta / p.alpha) / (x0 * x0) + (p.gamma - p.alpha * p.c) / p.alpha;
    CHECK(f.p(x0, y0) * bad + f.q(x0, y0) != QGauss());
  }
}

TEST_CASE("beta = 0 with alpha c - gamma = 2r has the extra curve y + r x^2/(alpha k)") {
  const auto p = params("1/2", "3/2", "2", "1", "-2", "0", 2);
  const auto f = build_field(p);
  REQUIRE(f.kind == FieldKind::V2);
  const auto certs = darboux_search(f, 2, 2);
  REQUIRE(certs.size() == 2);
  const YPoly curve = Y + YPoly::monomial(q("3"), 2, 0);
  const auto& cy = certs[0].f == Y ? certs[0] : certs[1];
  const auto& cf = certs[0].f == Y ? certs[1] : certs[0];
  CHECK(cy.f == Y);
  CHECK(cf.f == curve);
  CHECK(cf.cofactor == Cofactor{UPoly(std::vector<QGauss>{q("3"), q("-3")}), UPoly()});
  // y^(-1/2) f^(-1) is an integrating factor: -K_y/2 - K_f + div = 0.
  const YPoly rest = cy.cofactor.as_ypoly() * q("-1/2") - cf.cofactor.as_ypoly() + field_divergence(f);
  CHECK(rest.is_zero());
}
