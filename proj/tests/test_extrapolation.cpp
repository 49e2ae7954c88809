#include "fluxcomm/extrapolation.hpp"
#include "fluxcomm/types.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace fluxcomm;

TEST_SUITE("extrapolation") {

TEST_CASE("exact for polynomial error models") {
  auto f = [](double h) { return 3.0 + 2.0 * h - 0.5 * h * h; };
  for (const std::vector<double>& steps :
       {std::vector<double>{0.2, 0.1, 0.05, 0.025}, std::vector<double>{0.9, 0.5, 0.3, 0.11}}) {
    std::vector<double> values;
    for (double h : steps) values.push_back(f(h));
    const Extrapolation e = richardson(steps, values);
    CHECK(e.estimate == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(e.residual < 1e-12);
  }
}

TEST_CASE("single elimination removes the linear term") {
  const std::vector<double> steps{0.1, 0.05};
  const std::vector<double> values{1.0 + 0.1 * 4, 1.0 + 0.05 * 4};
  const Extrapolation e = richardson(steps, values);
  CHECK(e.estimate == doctest::Approx(1.0));
  CHECK(e.residual == doctest::Approx(0.2));
  CHECK(std::isnan(e.observed_order));
  CHECK(e.tableau.size() == 2);
}

TEST_CASE("observed order") {
  const std::vector<double> steps{0.4, 0.2, 0.1, 0.05};
  std::vector<double> linear, quadratic;
  for (double h : steps) {
    linear.push_back(1 + h);
    quadratic.push_back(1 + h * h);
  }
  CHECK(richardson(steps, linear).observed_order == doctest::Approx(1.0));
  CHECK(richardson(steps, quadratic).observed_order == doctest::Approx(2.0));
}

TEST_CASE("input validation") {
  const std::vector<double> one{0.1};
  CHECK_THROWS_AS(richardson(one, one), InvalidInput);
  const std::vector<double> up{0.1, 0.2}, v{1, 2};
  CHECK_THROWS_AS(richardson(up, v), InvalidInput);
  const std::vector<double> neg{0.1, -0.2};
  CHECK_THROWS_AS(richardson(neg, v), InvalidInput);
  const std::vector<double> three{1, 2, 3};
  CHECK_THROWS_AS(richardson(std::vector<double>{0.2, 0.1}, three), InvalidInput);
}

}  // TEST_SUITE
