#include "sdl/boxdim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "sdl/error.hpp"

namespace sdl {

namespace {

void check_points(const std::vector<double>& points, std::size_t dim,
                  const char* who) {
  if (dim < 1) fail_usage(std::string(who) + ": dim must be >= 1");
  if (points.empty()) fail_usage(std::string(who) + ": empty point set");
  if (points.size() % dim != 0)
    fail_usage(std::string(who) + ": point array does not divide by dim");
}

}  // namespace

std::size_t box_count(const std::vector<double>& points, std::size_t dim,
                      double epsilon) {
  check_points(points, dim, "box_count");
  if (!(epsilon > 0.0)) fail_usage("box_count: epsilon must be positive");

  const std::size_t n = points.size() / dim;
  std::vector<std::int64_t> cells(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    cells[i] = static_cast<std::int64_t>(std::floor(points[i] / epsilon));

  if (dim == 1) {
    std::sort(cells.begin(), cells.end());
    return static_cast<std::size_t>(
        std::unique(cells.begin(), cells.end()) - cells.begin());
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto row_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        cells.begin() + a * dim, cells.begin() + (a + 1) * dim,
        cells.begin() + b * dim, cells.begin() + (b + 1) * dim);
  };
  std::sort(idx.begin(), idx.end(), row_less);
  std::size_t distinct = 1;
  for (std::size_t i = 1; i < n; ++i)
    if (!std::equal(cells.begin() + idx[i] * dim,
                    cells.begin() + (idx[i] + 1) * dim,
                    cells.begin() + idx[i - 1] * dim))
      ++distinct;
  return distinct;
}

std::pair<double, BoxCountCurve> box_dim_estimate(
    const std::vector<double>& points, std::size_t dim,
    const std::vector<double>& eps_grid) {
  check_points(points, dim, "box_dim_estimate");
  if (eps_grid.size() < 4)
    fail_usage("box_dim_estimate: epsilon grid needs >= 4 values");
  for (std::size_t i = 0; i + 1 < eps_grid.size(); ++i)
    if (!(eps_grid[i + 1] > 0.0) || !(eps_grid[i + 1] < eps_grid[i]))
      fail_usage(
          "box_dim_estimate: epsilon grid must be positive and strictly "
          "decreasing");
  const double ratio = eps_grid[1] / eps_grid[0];
  for (std::size_t i = 1; i + 1 < eps_grid.size(); ++i)
    if (std::abs(eps_grid[i + 1] / eps_grid[i] - ratio) > 1e-9 * ratio)
      fail_usage("box_dim_estimate: epsilon grid must be geometric");

  BoxCountCurve curve;
  curve.rows.reserve(eps_grid.size());
  std::vector<std::pair<double, double>> pts;
  pts.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    const std::size_t c = box_count(points, dim, eps);
    curve.rows.push_back({eps, c});
    pts.emplace_back(eps, static_cast<double>(c));
  }
  // count ~ eps^{-dim}, so the decay exponent in eps IS the dimension
  curve.fit = fit_decay(pts, eps_grid.back(), eps_grid.front());
  return {curve.fit.exponent + 0.0, curve};
}

}  // namespace sdl
