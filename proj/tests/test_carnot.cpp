#include <cmath>
#include <numbers>

#include "doctest.h"
#include "econthermo/carnot.hpp"
#include "econthermo/errors.hpp"
#include "econthermo/ideal_income.hpp"
#include "support/test_support.hpp"

using namespace econthermo;
using testing::rel_err;
using doctest::Approx;

namespace {

CarnotSpec unit_spec() {
  return {IdealIncomeModel::make(1, 1, 3), 2.0, 1.0, 1.0, std::numbers::e, 1000};
}

CarnotSpec random_spec(testing::Gen& gen, std::size_t samples = 1000) {
  const auto m = IdealIncomeModel::make(gen.log_uniform(0.2, 5), gen.log_uniform(0.2, 5),
                                        gen.pick({3, 5, 6}));
  const double I_C = gen.log_uniform(0.1, 10);
  const double Q_1 = gen.log_uniform(0.1, 10);
  return {m, I_C * gen.uniform(1.1, 10.0), I_C, Q_1, Q_1 * gen.uniform(1.1, 10.0), samples};
}

}  // namespace

TEST_CASE("CarnotSpec validation") {
  auto s = unit_spec();
  s.I_C = s.I_H;
  CHECK_THROWS_AS(build_cycle(s), DomainError);
  s = unit_spec();
  s.Q_2 = s.Q_1;
  CHECK_THROWS_AS(build_cycle(s), DomainError);
  s = unit_spec();
  s.samples_per_leg = 1;
  CHECK_THROWS_AS(build_cycle(s), DomainError);
  s = unit_spec();
  s.I_C = 0.0;
  CHECK_THROWS_AS(build_cycle(s), DomainError);
}

TEST_CASE("unit cycle reproduces the rectangle arithmetic") {
  const CycleReport r = build_cycle(unit_spec());
  CHECK(r.W == Approx(1.0).epsilon(1e-14));
  CHECK(r.q_H == Approx(2.0).epsilon(1e-14));
  CHECK(r.q_C == Approx(1.0).epsilon(1e-14));
  CHECK(r.eta == 0.5);
  CHECK(r.E_B - r.E_A == Approx(1.0).epsilon(1e-14));
  CHECK(r.orientation == Orientation::Clockwise);
  CHECK(r.legs.size() == 4);
  CHECK(validate_cycle(r).pass);
}

TEST_CASE("vertex geometry") {
  testing::Gen gen(31);
  for (int i = 0; i < 50; ++i) {
    const CarnotSpec s = random_spec(gen, 50);
    const CycleReport r = build_cycle(s);
    const double stretch = std::pow(s.I_H / s.I_C, s.model.half_dof());
    CHECK(rel_err(r.vertices[2].point.volume(), s.Q_2 * stretch) <= 1e-14);
    CHECK(rel_err(r.vertices[3].point.volume(), s.Q_1 * stretch) <= 1e-14);
    CHECK(r.vertices[0].point.stability() == s.I_H);
    CHECK(r.vertices[1].point.stability() == s.I_H);
    CHECK(r.vertices[2].point.stability() == s.I_C);
    CHECK(r.vertices[3].point.stability() == s.I_C);
    // E-I trace is an axis-aligned rectangle
    const double tol = 1e-12 * s.model.nR() * 10.0;
    CHECK(std::abs(r.vertices[0].entropy - r.vertices[3].entropy) <= tol);
    CHECK(std::abs(r.vertices[1].entropy - r.vertices[2].entropy) <= tol);
    CHECK(r.E_B > r.E_A);
    // leg 4->1 lands back on vertex 1
    const auto& end = r.legs[3].back().point;
    CHECK(rel_err(end.price(), r.vertices[0].point.price()) <= 1e-9);
    CHECK(rel_err(end.volume(), r.vertices[0].point.volume()) <= 1e-9);
    CHECK(rel_err(end.stability(), r.vertices[0].point.stability()) <= 1e-9);
  }
}

TEST_CASE("wealth rectangle and goods") {
  CHECK(wealth_rectangle(2, 1, 0, 3) == 3.0);
  CHECK(wealth_rectangle(1.7, 1.7, -1, 4) == 0.0);
  CHECK(wealth_rectangle(2, 1, 5, 5) == 0.0);
  CHECK_THROWS_AS(wealth_rectangle(1, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(wealth_rectangle(2, 1, 1, 0), DomainError);

  CHECK(goods_hot(2, 0, 1) == 2.0);
  CHECK(goods_cold(1, 0, 1) == 1.0);
  CHECK_THROWS_AS(goods_hot(2, 1, 1), DomainError);
  CHECK_THROWS_AS(goods_cold(1, 2, 1), DomainError);

  testing::Gen gen(32);
  for (int i = 0; i < 200; ++i) {
    const double I_C = gen.uniform(0.1, 5), I_H = I_C + gen.uniform(0.01, 5);
    const double E_A = gen.uniform(-5, 5), E_B = E_A + gen.uniform(0.01, 5);
    CHECK(goods_hot(I_H, E_A, E_B) - goods_cold(I_C, E_A, E_B) ==
          Approx(wealth_rectangle(I_H, I_C, E_A, E_B)).epsilon(1e-12));
  }
}

TEST_CASE("efficiency") {
  CHECK(efficiency(2, 1) == 0.5);
  CHECK(efficiency(300, 200) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(efficiency(1, 1), DomainError);
  CHECK_THROWS_AS(efficiency(1, 2), DomainError);
  CHECK_THROWS_AS(efficiency(1, 0), DomainError);

  testing::Gen gen(33);
  for (int i = 0; i < 200; ++i) {
    const double I_C = gen.log_uniform(0.1, 10), I_H = I_C * gen.uniform(1.01, 10);
    const double lambda = gen.log_uniform(1e-3, 1e3);
    CHECK(efficiency(lambda * I_H, lambda * I_C) == Approx(efficiency(I_H, I_C)).epsilon(1e-14));
    CHECK(efficiency(I_H * 1.01, I_C) > efficiency(I_H, I_C));
    CHECK(efficiency(I_H, I_C * 0.99) > efficiency(I_H, I_C));
  }
}

TEST_CASE("efficiency from the integrals matches the definition") {
  testing::Gen gen(34);
  for (int i = 0; i < 100; ++i) {
    const CarnotSpec s = random_spec(gen, 20);
    const CycleReport r = build_cycle(s);
    CHECK(rel_err(r.W / r.q_H, 1.0 - s.I_C / s.I_H) <= 1e-9);
  }
}

TEST_CASE("sampled loop integral equals the rectangle area") {
  testing::Gen gen(35);
  for (int i = 0; i < 30; ++i) {
    const CarnotSpec s = random_spec(gen, 1000);
    const CycleReport r = build_cycle(s);
    double loop = 0.0;
    for (const auto& leg : r.legs) loop += work_along(leg, Integration::Trapezoid);
    CHECK(rel_err(loop, wealth_rectangle(s.I_H, s.I_C, r.E_A, r.E_B)) <= 1e-6);
  }
}

TEST_CASE("reverse cycle") {
  const CycleReport forward = build_cycle(unit_spec());
  const CycleReport backward = reverse_cycle(forward);
  CHECK(backward.W == -forward.W);
  CHECK(backward.q_H == -forward.q_H);
  CHECK(backward.q_C == -forward.q_C);
  CHECK(backward.orientation == Orientation::Counterclockwise);
  CHECK(backward.vertices == forward.vertices);
  CHECK(reverse_cycle(backward) == forward);

  double loop = 0.0;
  for (const auto& leg : backward.legs) loop += work_along(leg, Integration::Trapezoid);
  CHECK(loop < 0.0);
  CHECK(validate_cycle(backward).pass);

  CycleReport legless = forward;
  legless.legs.clear();
  CHECK_THROWS_AS(reverse_cycle(legless), DomainError);
}

TEST_CASE("validate_cycle") {
  const CycleReport r = build_cycle(unit_spec());

  SUBCASE("analytic legs pass") {
    const auto d = validate_cycle(r);
    CHECK(d.pass);
    CHECK(d.closure_dG <= 1e-8 * std::abs(r.W));
    CHECK(d.area_mismatch <= 1e-6 * std::abs(r.W));
    CHECK(d.first_law <= 1e-9 * std::abs(r.q_H));
  }

  SUBCASE("perturbed leg fails") {
    CycleReport bad = r;
    std::vector<ExtendedState> samples = bad.legs[0].samples();
    for (auto& s : samples) {
      s.point = make_state(s.point.price() * (1.0 + 1e-3), s.point.volume(), s.point.stability());
    }
    bad.legs[0] = ProcessPath::make(PathKind::IsoIps, samples, bad.legs[0].model_id());
    const auto d = validate_cycle(bad);
    CHECK_FALSE(d.pass);
    CHECK(d.area_mismatch > 1e-6 * std::abs(r.W));
    CHECK(d.continuity > 1e-9);
  }

  SUBCASE("degenerate report has zero residuals") {
    const auto m = IdealIncomeModel::make(1, 1, 3);
    const auto v = extend(m, make_state(1, 1, 1));
    const auto still = adiabat_path(m, v.point, 1.0, 2);
    CycleReport flat;
    flat.vertices = {v, v, v, v};
    flat.E_A = flat.E_B = v.entropy;
    flat.legs = {still, still, still, still};
    const auto d = validate_cycle(flat);
    CHECK(d.closure_dG == 0.0);
    CHECK(d.area_mismatch == 0.0);
    CHECK(d.first_law == 0.0);
    CHECK(d.continuity == 0.0);
    CHECK(d.pass);
  }
}
