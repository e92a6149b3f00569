// Random inputs for property tests: marked triangulations and triangulated
// discs. Deterministic for a given generator state.
#pragma once

#include <random>
#include <string>

#include "twistnf/moves.hpp"
#include "twistnf/triangulation.hpp"

namespace twistnf::testing {

struct RandomOptions {
  int min_tets = 1;
  int max_tets = 6;
  double glue_probability = 0.85;
  double link_probability = 0.7;  // chance of marking one edge cycle
  int max_vertex_marks = 3;
};

// A valid marked triangulation in file form (parse_triangulation accepts it).
std::string random_triangulation_text(std::mt19937_64& rng, const RandomOptions& opt = {});
MarkedTriangulation random_triangulation(std::mt19937_64& rng, const RandomOptions& opt = {});

// A triangulated disc with exactly w triangles, grown by ears and notch fills
// and then relabelled at random.
DiscComplex random_disc(std::mt19937_64& rng, int w);

}  // namespace twistnf::testing
