#include "wfinite/sliced.hpp"

#include <cmath>
#include <random>

#include "wfinite/error.hpp"
#include "wfinite/transport.hpp"

namespace wfinite {

PointCloud::PointCloud(std::size_t dimension, std::vector<double> coordinates)
    : dim_(dimension), coords_(std::move(coordinates)) {
  if (dim_ < 2) raise(ErrorKind::kDomain, "point clouds need dimension >= 2");
  if (coords_.empty() || coords_.size() % dim_ != 0) {
    raise(ErrorKind::kDomain, "coordinate count must be a positive multiple of the dimension");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) raise(ErrorKind::kInvalidSample, "coordinates must be finite");
  }
}

SortedSamples project(const PointCloud& cloud, std::span<const double> direction) {
  if (direction.size() != cloud.dimension()) {
    raise(ErrorKind::kDimensionMismatch, "direction and cloud dimensions differ");
  }
  double norm2 = 0.0;
  for (double d : direction) norm2 += d * d;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) raise(ErrorKind::kDomain, "direction must be a unit vector");

  std::vector<double> proj(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    double dot = 0.0;
    for (std::size_t c = 0; c < p.size(); ++c) dot += p[c] * direction[c];
    proj[i] = dot;
  }
  return SortedSamples::from_unsorted(std::move(proj));
}

std::vector<double> random_direction(std::size_t dimension, SpikeSeed seed) {
  Engine engine(seed);
  std::normal_distribution<double> normal;
  std::vector<double> dir(dimension);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& d : dir) {
      d = normal(engine);
      norm2 += d * d;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& d : dir) d *= inv;
  return dir;
}

std::vector<double> sliced_w1_values(const PointCloud& a, const PointCloud& b,
                                     std::span<const double> directions) {
  if (a.dimension() != b.dimension()) raise(ErrorKind::kDimensionMismatch, "clouds differ in dimension");
  const std::size_t d = a.dimension();
  if (directions.size() % d != 0) raise(ErrorKind::kDimensionMismatch, "direction block is ragged");
  std::vector<double> out;
  out.reserve(directions.size() / d);
  for (std::size_t i = 0; i < directions.size(); i += d) {
    const auto dir = directions.subspan(i, d);
    out.push_back(w1_general(EmpiricalMeasure::uniform(project(a, dir)),
                             EmpiricalMeasure::uniform(project(b, dir))));
  }
  return out;
}

MCEstimate sliced_w1(const PointCloud& a, const PointCloud& b, int num_directions,
                     SpikeSeed seed) {
  if (a.dimension() != b.dimension()) raise(ErrorKind::kDimensionMismatch, "clouds differ in dimension");
  if (num_directions < 1) raise(ErrorKind::kDomain, "need at least one direction");
  std::vector<double> dirs;
  dirs.reserve(static_cast<std::size_t>(num_directions) * a.dimension());
  for (int i = 0; i < num_directions; ++i) {
    const auto dir = random_direction(a.dimension(), seed.substream(static_cast<std::uint64_t>(i)));
    dirs.insert(dirs.end(), dir.begin(), dir.end());
  }
  const std::vector<double> values = sliced_w1_values(a, b, dirs);
  return make_estimate(values, seed);
}

}  // namespace wfinite
