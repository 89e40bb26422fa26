#include <cmath>
#include <limits>

#include "doctest.h"
#include "econthermo/errors.hpp"
#include "econthermo/serialization.hpp"
#include "econthermo/state.hpp"
#include "support/test_support.hpp"

using namespace econthermo;

TEST_CASE("make_state accepts the open octant") {
  const StatePoint s = make_state(1, 1, 1);
  CHECK(s.price() == 1.0);
  CHECK(s.volume() == 1.0);
  CHECK(s.stability() == 1.0);
}

TEST_CASE("make_state rejects boundary, negative and non-finite coordinates") {
  CHECK_THROWS_AS(make_state(0, 1, 1), DomainError);
  CHECK_THROWS_AS(make_state(1, -2, 1), DomainError);
  CHECK_THROWS_AS(make_state(1, 1, 0), DomainError);
  CHECK_THROWS_AS(make_state(std::nan(""), 1, 1), DomainError);
  CHECK_THROWS_AS(make_state(1, std::numeric_limits<double>::infinity(), 1), DomainError);
}

TEST_CASE("model factories validate parameters") {
  CHECK_NOTHROW(IdealIncomeModel::make(1, 1, 3));
  CHECK_NOTHROW(IdealIncomeModel::make(1, 1, 5));
  CHECK_NOTHROW(IdealIncomeModel::make(1, 1, 6));
  CHECK_THROWS_AS(IdealIncomeModel::make(1, 1, 4), DomainError);
  CHECK_THROWS_AS(IdealIncomeModel::make(1, 1, 7), DomainError);
  CHECK_THROWS_AS(IdealIncomeModel::make(0, 1, 3), DomainError);
  CHECK_THROWS_AS(IdealIncomeModel::make(1, -1, 3), DomainError);
  CHECK_THROWS_AS(IdealIncomeModel::make(1, 1, 3, 0.0, 1.0), DomainError);

  CHECK_NOTHROW(VdWModel::make(27, 1, 8));
  CHECK_THROWS_AS(VdWModel::make(0, 1, 8), DomainError);
  CHECK_THROWS_AS(VdWModel::make(1, 0, 8), DomainError);
  CHECK_THROWS_AS(VdWModel::make(1, 1, 0), DomainError);
  CHECK_THROWS_AS(VdWModel::make(1, 1, 1, -1), DomainError);
}

TEST_CASE("extended state of an ideal model satisfies G = (f/2) nRI exactly") {
  testing::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const int f = gen.pick({3, 5, 6});
    const auto m = IdealIncomeModel::make(gen.log_uniform(0.1, 10), gen.log_uniform(0.1, 10), f);
    const double I = gen.log_uniform(1e-3, 1e3);
    const double Q = gen.log_uniform(1e-3, 1e3);
    const auto s = extend(m, make_state(m.nR() * I / Q, Q, I));
    CHECK(s.growth == 0.5 * f * m.nR() * I);
  }
}

TEST_CASE("ProcessPath enforces its invariants") {
  const auto m = IdealIncomeModel::make(1, 1, 3);
  const auto at = [&](double Q, double I) { return extend(m, make_state(m.nR() * I / Q, Q, I)); };

  SUBCASE("fewer than two samples") {
    CHECK_THROWS_AS(ProcessPath::make(PathKind::IsoIps, {at(1, 1)}, "m"), PathError);
  }
  SUBCASE("iso-ips needs constant I") {
    CHECK_THROWS_AS(ProcessPath::make(PathKind::IsoIps, {at(1, 1), at(2, 1.5)}, "m"), PathError);
  }
  SUBCASE("isentropic needs constant E") {
    CHECK_THROWS_AS(ProcessPath::make(PathKind::Isentropic, {at(1, 1), at(2, 1)}, "m"), PathError);
  }
  SUBCASE("Q must be monotone") {
    CHECK_THROWS_AS(ProcessPath::make(PathKind::IsoIps, {at(1, 1), at(2, 1), at(1.5, 1)}, "m"),
                    PathError);
  }
  SUBCASE("constant path is accepted") {
    CHECK_NOTHROW(ProcessPath::make(PathKind::Isentropic, {at(1, 1), at(1, 1)}, "m"));
  }
  SUBCASE("reversal is an involution") {
    const auto p = ProcessPath::make(PathKind::IsoIps, {at(1, 1), at(2, 1), at(3, 1)}, "m");
    CHECK(p.reversed().front() == p.back());
    CHECK(p.reversed().reversed() == p);
  }
}

TEST_CASE("JSON round trip is bit-exact for random accepted points") {
  testing::Gen gen(12);
  for (int i = 0; i < 1000; ++i) {
    const StatePoint s = make_state(gen.log_uniform(1e-300, 1e300), gen.log_uniform(1e-8, 1e8),
                                    gen.uniform(1e-12, 1.0));
    const auto text = nlohmann::json(s).dump();
    const auto back = nlohmann::json::parse(text).get<StatePoint>();
    CHECK(back == s);
  }
}

TEST_CASE("JSON field names") {
  const auto j = nlohmann::json(make_state(1, 2, 3));
  CHECK(j.at("P") == 1.0);
  CHECK(j.at("Q") == 2.0);
  CHECK(j.at("I") == 3.0);
  const auto m = nlohmann::json(IdealIncomeModel::make(2, 8.314, 5));
  CHECK(m.at("n") == 2.0);
  CHECK(m.at("R") == 8.314);
  CHECK(m.at("f") == 5);
  const auto v = nlohmann::json(VdWModel::make(27, 1, 8));
  CHECK(v.at("a") == 27.0);
  CHECK(v.at("b") == 1.0);
  CHECK(v.at("n") == 1.0);
}

TEST_CASE("JSON decoding re-validates") {
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"P":0,"Q":1,"I":1})").get<StatePoint>(), DomainError);
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"n":1,"R":1,"f":4})").get<IdealIncomeModel>(),
                  DomainError);
}
