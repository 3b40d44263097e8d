#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wfinite/measure.hpp"
#include "wfinite/random.hpp"
#include "wfinite/statistics.hpp"

namespace wfinite {

/// N points in d >= 2 dimensions, row-major, uniform mass 1/N each.
class PointCloud {
 public:
  PointCloud(std::size_t dimension, std::vector<double> coordinates);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> coordinates() const noexcept { return coords_; }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// Sorted inner products with a unit direction (norm within 1e-9 of 1).
SortedSamples project(const PointCloud& cloud,
                      std::span<const double> direction);

/// Uniform direction on the unit sphere (normalized Gaussian vector).
std::vector<double> random_direction(std::size_t dimension, SpikeSeed seed);

/// Per-direction W1 values for explicitly given unit directions (row-major,
/// one direction per row).
std::vector<double> sliced_w1_values(const PointCloud& a, const PointCloud& b,
                                     std::span<const double> directions);

/// Monte-Carlo sliced W1: mean over `num_directions` uniform directions,
/// with the standard error over directions. Direction i uses
/// seed.substream(i).
MCEstimate sliced_w1(const PointCloud& a, const PointCloud& b,
                     int num_directions, SpikeSeed seed);

}  // namespace wfinite
