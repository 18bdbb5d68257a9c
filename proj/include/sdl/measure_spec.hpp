#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "sdl/measure.hpp"

namespace sdl {

// Parse tree for the measure constructor mini-language:
//
//   node := sphere(k=INT,n=INT) | cantor(ratio=FLOAT,depth=INT)
//         | rcantor(ratio=FLOAT,depth=INT) | uniform(d=INT,n=INT)
//         | disk(n=INT) | dirac(FLOAT{,FLOAT}) | brownian(node,d=INT)
//         | product(node,node) | translate(node,FLOAT{,FLOAT})
//         | lift(node) | autocorr(node)
//
// Whitespace is insignificant everywhere.
enum class SpecKind {
  sphere,
  cantor,
  rcantor,
  uniform,
  disk,
  dirac,
  brownian,
  product,
  translate,
  lift,
  autocorr,
};

struct MeasureSpec {
  SpecKind kind;
  long long k = 0, n = 0, d = 0, depth = 0;
  double ratio = 0.0;
  std::vector<double> values;  // dirac coordinates / translate offset
  std::vector<MeasureSpec> children;
};

// Rejects malformed input with a character position in the message.
// Parameter ranges (ratio in (0,1/2), depth <= 24, counts >= 1) are also
// enforced here so errors point at the text, not at a later realize call.
MeasureSpec parse_measure_spec(const std::string& text);

struct Budgets {
  std::size_t max_product_atoms = 2'000'000;
  std::size_t max_autocorr_atoms = 2'000'000;
};

// Realizes the tree into atoms. Each randomness-consuming node (sphere,
// uniform, disk, rcantor, brownian) gets derive_seed(seed, counter) with a DFS
// pre-order counter, so distinct nodes never share a stream and the layout
// does not shift when a sibling subtree changes shape internally.
DiscreteMeasure realize(const MeasureSpec& spec, std::uint64_t seed,
                        const Budgets& budgets = {});

}  // namespace sdl
