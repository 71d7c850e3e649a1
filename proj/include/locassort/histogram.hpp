#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace locassort {

struct WeightedValue {
  double value = 0.0;
  double weight = 0.0;
};

inline constexpr std::array<double, 5> kSummaryPercentiles{10.0, 25.0, 50.0, 75.0, 90.0};

struct WeightedSummary {
  std::size_t count = 0;        // entries with positive weight
  double total_weight = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;
  std::array<double, 5> percentiles{};  // at kSummaryPercentiles
};

/// Histogram of weighted values with masses normalized to sum to 1.
struct WeightedHistogram {
  std::vector<double> edges;   // bins + 1 edges; empty when there is no data
  std::vector<double> mass;
  WeightedSummary summary;
  std::string bin_policy;

  bool empty() const noexcept { return mass.empty(); }
};

/// Weighted percentile: the smallest value whose cumulative weight reaches
/// p/100 of the total. Entries with non-positive weight are ignored.
double weighted_percentile(std::span<const WeightedValue> data, double p);

WeightedSummary summarize(std::span<const WeightedValue> data);

/// `bins` equal-width bins over [-1, 1] narrowed to the data range; values
/// outside the range land in the end bins.
WeightedHistogram build_histogram(std::span<const WeightedValue> data, std::size_t bins = 50);

}  // namespace locassort
