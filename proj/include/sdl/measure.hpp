#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sdl {

// Finitely supported probability measure on R^d. The only measure
// representation in the library: continuous measures are approximated by
// sampling or endpoint quadrature before they get here, which is what makes
// the Fourier identities downstream exactly checkable.
//
// Immutable after construction; safe to share across threads read-only.
class DiscreteMeasure {
public:
  // positions is atom-major: atom i occupies [i*dim, (i+1)*dim).
  // Validates: dim >= 1, at least one atom, finite coordinates, weights in
  // (0,1] summing to 1 within 1e-12 (compensated sum).
  DiscreteMeasure(std::size_t ambient_dim, std::vector<double> positions,
                  std::vector<double> weights);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  const double* position(std::size_t i) const { return &positions_[i * dim_]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& positions() const { return positions_; }
  const std::vector<double>& weights() const { return weights_; }
  double support_radius() const { return support_radius_; }

  // Transposes positions into coordinate-major layout (coordinate t of atom i
  // at out[t*n + i]), the layout the transform kernels consume.
  std::vector<double> coords_dim_major() const;

private:
  std::size_t dim_;
  std::vector<double> positions_;
  std::vector<double> weights_;
  double support_radius_;
};

// n i.i.d. uniform atoms on S^{k-1}, weight 1/n each; k = 1 means {-1,+1}.
DiscreteMeasure make_sphere_measure(std::size_t k, std::size_t n,
                                    std::uint64_t seed);

// 2^depth equal-weight atoms at the left endpoints of the depth-level
// construction intervals of the middle-(1-2*ratio) Cantor set in [0,1].
// Similarity dimension log 2 / log(1/ratio). ratio in (0, 1/2), depth <= 24.
DiscreteMeasure make_cantor_measure(double ratio, int depth);

// As make_cantor_measure, but each parent interval places its two offspring
// uniformly at random inside itself (non-overlapping, gap >= 0): the slack
// (1-2*ratio)*parent_length is split by two sorted uniforms, recursing in
// DFS order so the stream layout is stable.
DiscreteMeasure make_random_translate_cantor(double ratio, int depth,
                                             std::uint64_t seed);

// n i.i.d. uniform atoms in [0,1]^d, weight 1/n.
DiscreteMeasure make_uniform_cube(std::size_t d, std::size_t n,
                                  std::uint64_t seed);

// n i.i.d. uniform atoms in the closed unit disk of R^2, sampled by
// rejection from [-1,1]^2. The absolutely continuous non-product partner for
// equivalence-constant comparisons against the cube.
DiscreteMeasure make_uniform_disk(std::size_t n, std::uint64_t seed);

DiscreteMeasure dirac(const std::vector<double>& position);

// All position pairs (a_i, b_j) with product weights, in row-major (i outer)
// order. ambient_dim = dim(a) + dim(b). Errors if |a|*|b| > max_atoms.
DiscreteMeasure product_measure(const DiscreteMeasure& a,
                                const DiscreteMeasure& b,
                                std::size_t max_atoms);

DiscreteMeasure translate(const DiscreteMeasure& m,
                          const std::vector<double>& v);

// Pushforward under F(y) = (y, |y|^2); dimension d+1, weights unchanged.
DiscreteMeasure lift(const DiscreteMeasure& m);

// Distribution of y - z for independent y, z ~ m: atoms at all pairwise
// differences, duplicate positions merged by weight summation. Merging uses
// exact coordinate equality only -- a tolerance here would make the mass
// accounting depend on atom enumeration order. Errors if |m|^2 > max_atoms.
DiscreteMeasure autocorrelation(const DiscreteMeasure& m,
                                std::size_t max_atoms);

// Diameter of the support: exact O(n^2) scan for n <= 2048, bounding-box
// diagonal (an upper bound within sqrt(d)) above that.
double support_diameter(const DiscreteMeasure& m);

// Image of a measure on [0,1] under one sampled d-dimensional Brownian path:
// atom times are sorted and the path is sampled only there, with exact
// Gaussian increments (variance = time gap per coordinate), so the finite
// dimensional distributions are exact. B(0) = 0.
DiscreteMeasure brownian_image(const DiscreteMeasure& base, std::size_t d,
                               std::uint64_t seed);

}  // namespace sdl
