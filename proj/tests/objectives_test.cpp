#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "quenchlab/objectives.hpp"

using namespace quenchlab;

TEST_CASE("search domain validation") {
  CHECK_THROWS_AS(SearchDomain{}.validate(), std::domain_error);
  CHECK_THROWS_AS(SearchDomain(2, 1.0, 1.0).validate(), std::domain_error);
  CHECK_THROWS_AS(SearchDomain({0.0, 5.0}, {1.0, 4.0}).validate(),
                  std::domain_error);
  CHECK_NOTHROW(SearchDomain(3, -1.0, 1.0).validate());
  CHECK(SearchDomain(3, -1.0, 1.0).dimension() == 3);
}

TEST_CASE("griewangk values") {
  std::vector<double> zero(10, 0.0);
  CHECK(eval_griewangk(zero) == doctest::Approx(0.0).epsilon(1e-14));

  // single coordinate: 1 + 100^2/4000 - cos(100/sqrt(1))
  std::vector<double> x1{100.0};
  CHECK(eval_griewangk(x1) ==
        doctest::Approx(2.637681127712316).epsilon(1e-14));

  // two coordinates bring in the sqrt(2) divisor of the product term
  std::vector<double> x2{100.0, 200.0};
  CHECK(eval_griewangk(x2) ==
        doctest::Approx(14.361254653183178).epsilon(1e-14));

  CHECK_THROWS_AS(eval_griewangk({}), std::domain_error);
}

TEST_CASE("rastrigin values") {
  std::vector<double> zero(7, 0.0);
  CHECK(eval_rastrigin(zero) == doctest::Approx(0.0).epsilon(1e-14));

  // cos(2 pi) rounds to 1 exactly, so each unit coordinate contributes -9
  std::vector<double> x{1.0, -1.0};
  CHECK(eval_rastrigin(x) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(eval_rastrigin({}), std::domain_error);
}

TEST_CASE("ackley values") {
  std::vector<double> zero(4, 0.0);
  CHECK(eval_ackley(zero) == doctest::Approx(0.0).epsilon(1e-12));

  std::vector<double> x{1.0};
  CHECK(eval_ackley(x) == doctest::Approx(3.6253849384403622).epsilon(1e-14));

  CHECK_THROWS_AS(eval_ackley({}), std::domain_error);
}

TEST_CASE("rana values") {
  // at the origin only the (x2+1) cos sin term survives: cos(1) sin(1)
  std::vector<double> zero{0.0, 0.0};
  CHECK(eval_rana(zero) == doctest::Approx(0.4546487134128409).epsilon(1e-14));

  std::vector<double> diag2(2, -514.04);
  CHECK(eval_rana(diag2) == doctest::Approx(-512.7531617147542).epsilon(1e-14));

  std::vector<double> diag100(100, -514.04);
  CHECK(eval_rana(diag100) ==
        doctest::Approx(-50762.56300976067).epsilon(1e-12));

  CHECK_THROWS_AS(eval_rana({}), std::domain_error);
  CHECK_THROWS_AS(eval_rana({{1.0}}), std::domain_error);
}

TEST_CASE("fitness is distance to the stored optimum") {
  ObjectiveSpec g = griewangk_spec(5);
  std::vector<double> zero(5, 0.0);
  CHECK(fitness(g, zero) == doctest::Approx(0.0).epsilon(1e-14));

  std::vector<double> pt(5, 10.0);
  CHECK(fitness(g, pt) ==
        doctest::Approx(eval_griewangk(pt)).epsilon(1e-14));

  std::vector<double> wrong(4, 0.0);
  CHECK_THROWS_AS(fitness(g, wrong), std::domain_error);
}

TEST_CASE("rana fitness is exactly zero at its stored optimum point") {
  ObjectiveSpec r = rana_spec();
  // the stored value is defined as the evaluation at the stored point,
  // so this must hold bitwise, not approximately
  CHECK(fitness(r, r.optimum_point) == 0.0);
}

TEST_CASE("built-in suite wiring") {
  const auto suite = builtin_suite();
  REQUIRE(suite.size() == 4);
  CHECK(suite[0].name == "griewangk");
  CHECK(suite[1].name == "rastrigin");
  CHECK(suite[2].name == "ackley");
  CHECK(suite[3].name == "rana");
  for (const auto& s : suite) {
    CHECK(s.domain.dimension() == 100);
    CHECK(static_cast<int>(s.optimum_point.size()) == 100);
  }
  CHECK(suite[0].domain.lower[0] == -512.0);
  CHECK(suite[0].domain.upper[0] == 512.0);
  CHECK(suite[1].domain.lower[0] == -50.0);
  CHECK(suite[2].domain.lower[0] == -100.0);
  CHECK(suite[3].domain.lower[0] == -520.0);

  CHECK(builtin_objective("ackley").has_value());
  CHECK_FALSE(builtin_objective("sphere").has_value());
}
