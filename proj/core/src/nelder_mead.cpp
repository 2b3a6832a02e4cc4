#include "qcevo/nelder_mead.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qcevo {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, const NelderMeadOptions& options) {
  if (start.empty()) {
    throw std::invalid_argument("nelder_mead: start point must be non-empty");
  }
  if (options.max_evals < 1) {
    throw std::invalid_argument("nelder_mead: max_evals must be >= 1");
  }
  const std::size_t dim = start.size();

  NelderMeadResult result;
  result.best_value = std::numeric_limits<double>::infinity();

  auto eval = [&](const std::vector<double>& x) {
    const double f = objective(x);
    ++result.evals_used;
    if (f < result.best_value) {
      result.best_value = f;
      result.best_point = x;
    }
    return f;
  };
  auto budget_left = [&] { return result.evals_used < options.max_evals; };

  std::vector<Vertex> simplex;
  simplex.push_back({start, eval(start)});
  for (std::size_t i = 0; i < dim && budget_left(); ++i) {
    std::vector<double> x = start;
    x[i] += options.initial_step;
    simplex.push_back({std::move(x), 0.0});
    simplex.back().f = eval(simplex.back().x);
  }

  while (simplex.size() == dim + 1 && budget_left()) {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

    double x_spread = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double lo = simplex[0].x[i];
      double hi = lo;
      for (const Vertex& v : simplex) {
        lo = std::min(lo, v.x[i]);
        hi = std::max(hi, v.x[i]);
      }
      x_spread = std::max(x_spread, hi - lo);
    }
    if (simplex.back().f - simplex.front().f <= options.f_tolerance &&
        x_spread <= options.x_tolerance) {
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) {
        centroid[i] += simplex[v].x[i];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(dim);
    }
    Vertex& worst = simplex.back();

    auto blend = [&](double t) {  // centroid + t * (centroid - worst)
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
      }
      return x;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = eval(xr);

    if (fr < simplex.front().f) {
      if (budget_left()) {
        std::vector<double> xe = blend(2.0);
        const double fe = eval(xe);
        if (fe < fr) {
          worst = {std::move(xe), fe};
          continue;
        }
      }
      worst = {std::move(xr), fr};
      continue;
    }
    if (fr < simplex[dim - 1].f) {
      worst = {std::move(xr), fr};
      continue;
    }
    if (!budget_left()) {
      break;
    }
    // Contract toward the better of the reflected point and the worst vertex.
    const bool outside = fr < worst.f;
    std::vector<double> xc = blend(outside ? 0.5 : -0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {std::move(xc), fc};
      continue;
    }
    // Shrink everything toward the best vertex.
    for (std::size_t v = 1; v < simplex.size() && budget_left(); ++v) {
      for (std::size_t i = 0; i < dim; ++i) {
        simplex[v].x[i] =
            simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
      }
      simplex[v].f = eval(simplex[v].x);
    }
  }
  return result;
}

}  // namespace qcevo
