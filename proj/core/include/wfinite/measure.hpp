#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wfinite {

/// Nondecreasing finite sequence of event times. May be empty; operations
/// that need at least one sample reject empty input themselves.
class SortedSamples {
 public:
  SortedSamples() = default;

  /// Sorts `values`. Throws kInvalidSample on NaN or infinity.
  static SortedSamples from_unsorted(std::vector<double> values);
  /// Validates order instead of sorting. Throws kInvalidSample if unsorted.
  static SortedSamples from_sorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double front() const noexcept { return values_.front(); }
  double back() const noexcept { return values_.back(); }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Rigid translation of every sample by `offset`.
  SortedSamples shifted(double offset) const;

  friend bool operator==(const SortedSamples&, const SortedSamples&) = default;

 private:
  explicit SortedSamples(std::vector<double> values) : values_(std::move(values)) {}

  std::vector<double> values_;
};

/// Discrete probability measure on the real line: sorted atoms with positive
/// masses summing to one. Ties are kept as distinct atoms.
class EmpiricalMeasure {
 public:
  static constexpr double kMassTolerance = 1e-12;

  /// Mass 1/N on each sample. Throws kInvalidMeasure when empty.
  static EmpiricalMeasure uniform(const SortedSamples& samples);

  /// Atoms need not be sorted; pairs are sorted by atom. Masses must be
  /// positive and sum to one within kMassTolerance (then renormalized).
  static EmpiricalMeasure weighted(std::vector<double> atoms,
                                   std::vector<double> masses);

  std::span<const double> atoms() const noexcept { return atoms_; }
  std::span<const double> masses() const noexcept { return masses_; }
  /// cumulative()[i] = mass of atoms 0..i; the last entry is exactly 1.
  std::span<const double> cumulative() const noexcept { return cumulative_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// Same masses, atoms translated by `offset`.
  EmpiricalMeasure shifted(double offset) const;

 private:
  EmpiricalMeasure() = default;

  std::vector<double> atoms_;
  std::vector<double> masses_;
  std::vector<double> cumulative_;
};

EmpiricalMeasure make_uniform_empirical(std::span<const double> values);

/// Generalized inverse CDF: the smallest atom whose cumulative mass is >= u.
/// Requires 0 < u <= 1 (kDomain otherwise).
double quantile(const EmpiricalMeasure& m, double u);

/// Total mass of atoms <= t. NaN t throws kDomain.
double cdf(const EmpiricalMeasure& m, double t);

/// Pools several trains into one uniform empirical measure (class-wise
/// aggregation of samples).
EmpiricalMeasure pool_uniform(std::span<const SortedSamples> trains);

}  // namespace wfinite
