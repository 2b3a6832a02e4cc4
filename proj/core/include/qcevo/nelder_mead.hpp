#pragma once

#include <functional>
#include <vector>

namespace qcevo {

struct NelderMeadOptions {
  int max_evals = 200;
  // Offset added to each coordinate of the start point to form the simplex.
  double initial_step = 0.5;
  double x_tolerance = 1e-8;
  double f_tolerance = 1e-12;
};

struct NelderMeadResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int evals_used = 0;
};

// Downhill simplex minimization (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). Stops when the simplex collapses below the tolerances or the
// evaluation budget runs out; the best point evaluated is always returned.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, const NelderMeadOptions& options = {});

}  // namespace qcevo
