#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradeddim.hpp"
#include "hfunc.hpp"

namespace hfl {

// Truncated cone complex over GF(2): towers F[U]/U^N at each vertex, zero
// internal differential, arrows U^delta along the cone edges.
struct ModelComplex {
  struct Generator {
    int vertex;
    std::int64_t upower;
    std::int64_t grading;
  };
  std::vector<Generator> basis;                    // vertex-major, U-power ascending
  std::vector<std::vector<std::size_t>> boundary;  // target indices per source
  std::int64_t truncation = 0;
  std::int64_t max_h = 0;

  // Below this grading truncation artifacts may appear; homology is only
  // reported above it.
  std::int64_t report_cutoff() const { return -2 * truncation + 2 * max_h + 4; }
};

// The 2x2 cone computing HFL^- at p: inclusions act as U^delta with
// delta the h-drop along the edge.
ModelComplex build_minus_model(const HSource& h, LatticePoint p, std::int64_t N);

// The 16-vertex iterated cone computing the hat group at p: four 2x2 cones
// joined by U1/U2 acting as U^(1-delta).
ModelComplex build_hat_model(const HSource& h, LatticePoint p, std::int64_t N);

// dim ker - dim im per grading, reported only above the truncation cutoff.
GradedDim graded_homology(const ModelComplex& c);

}  // namespace hfl
