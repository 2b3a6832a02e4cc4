#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qcevo/nelder_mead.hpp"

namespace {

using qcevo::nelder_mead;
using qcevo::NelderMeadOptions;
using qcevo::NelderMeadResult;

TEST(NelderMead, MinimizesAShiftedQuadratic) {
  const auto objective = [](const std::vector<double>& x) {
    return (x[0] - 3.0) * (x[0] - 3.0) + (x[1] + 1.0) * (x[1] + 1.0);
  };
  const NelderMeadResult result = nelder_mead(objective, {0.0, 0.0});
  EXPECT_NEAR(result.best_point[0], 3.0, 1e-4);
  EXPECT_NEAR(result.best_point[1], -1.0, 1e-4);
  EXPECT_NEAR(result.best_value, 0.0, 1e-7);
  EXPECT_LE(result.evals_used, 200);
}

TEST(NelderMead, MinimizesInOneDimension) {
  const auto objective = [](const std::vector<double>& x) {
    return std::cos(x[0]) + 0.1 * x[0] * x[0];
  };
  const NelderMeadResult result = nelder_mead(objective, {1.0});
  // Positive global minimum of cos(x) + x^2/10 sits at x ~ 2.5957.
  EXPECT_NEAR(result.best_point[0], 2.5957, 5e-3);
  EXPECT_NEAR(result.best_value, -0.180898, 1e-5);
}

TEST(NelderMead, ImprovesOnRosenbrock) {
  const auto rosenbrock = [](const std::vector<double>& x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
  };
  NelderMeadOptions options;
  options.max_evals = 400;
  const NelderMeadResult result = nelder_mead(rosenbrock, {-1.2, 1.0}, options);
  EXPECT_LT(result.best_value, rosenbrock({-1.2, 1.0}) * 1e-3);
}

TEST(NelderMead, RespectsTheEvaluationBudgetExactly) {
  int calls = 0;
  const auto objective = [&calls](const std::vector<double>& x) {
    ++calls;
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  };
  NelderMeadOptions options;
  options.max_evals = 37;
  options.x_tolerance = 0.0;  // never converge by collapse
  options.f_tolerance = 0.0;
  const NelderMeadResult result = nelder_mead(objective, {5.0, -4.0, 3.0}, options);
  EXPECT_EQ(calls, 37);
  EXPECT_EQ(result.evals_used, 37);
}

TEST(NelderMead, SingleEvaluationReturnsTheStartPoint) {
  NelderMeadOptions options;
  options.max_evals = 1;
  const NelderMeadResult result =
      nelder_mead([](const std::vector<double>& x) { return x[0]; }, {2.5}, options);
  EXPECT_EQ(result.evals_used, 1);
  ASSERT_EQ(result.best_point.size(), 1u);
  EXPECT_DOUBLE_EQ(result.best_point[0], 2.5);
  EXPECT_DOUBLE_EQ(result.best_value, 2.5);
}

TEST(NelderMead, BestEverPointSurvivesNonMonotoneSteps) {
  // A deceptive objective: a narrow deep well at the start point that the
  // simplex immediately leaves. The reported best must still be the well.
  const auto objective = [](const std::vector<double>& x) {
    const double r2 = x[0] * x[0] + x[1] * x[1];
    return r2 < 1e-6 ? -100.0 : r2;
  };
  NelderMeadOptions options;
  options.max_evals = 50;
  const NelderMeadResult result = nelder_mead(objective, {0.0, 0.0}, options);
  EXPECT_DOUBLE_EQ(result.best_value, -100.0);
  EXPECT_DOUBLE_EQ(result.best_point[0], 0.0);
}

TEST(NelderMead, RejectsEmptyStartOrNonPositiveBudget) {
  const auto objective = [](const std::vector<double>&) { return 0.0; };
  EXPECT_THROW(nelder_mead(objective, {}), std::invalid_argument);
  NelderMeadOptions options;
  options.max_evals = 0;
  EXPECT_THROW(nelder_mead(objective, {1.0}, options), std::invalid_argument);
}

}  // namespace
