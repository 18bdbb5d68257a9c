#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "sdl/spectrum.hpp"

namespace sdl {

// Box-count curve count(eps) with its power-law fit count ~ eps^{-dim}.
struct BoxCountCurve {
  struct Row {
    double epsilon = 0.0;
    std::size_t count = 0;
  };
  std::vector<Row> rows;  // epsilon strictly decreasing
  DecayFit fit;
};

// Number of distinct grid cells floor(coord / epsilon) (per axis, grid
// anchored at 0) holding at least one point. points is row-major with dim
// coordinates per point. The grid is deliberately not offset-averaged:
// alignment error is bounded (translation moves each count by at most a
// factor 2^dim) and absorbed by the fit tolerances downstream.
std::size_t box_count(const std::vector<double>& points, std::size_t dim,
                      double epsilon);

// Least-squares slope of log count against log(1/epsilon) over the whole
// grid. eps_grid must be geometric (constant ratio within 1e-9 relative),
// strictly decreasing, with at least 4 values. The caller owns keeping
// epsilon above the sample resolution — near the minimum positive gap the
// count saturates at |points| and the slope fakes dimension 0.
std::pair<double, BoxCountCurve> box_dim_estimate(
    const std::vector<double>& points, std::size_t dim,
    const std::vector<double>& eps_grid);

}  // namespace sdl
