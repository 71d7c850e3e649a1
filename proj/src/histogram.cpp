#include "locassort/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "locassort/error.hpp"

namespace locassort {

namespace {

std::vector<WeightedValue> positive_sorted(std::span<const WeightedValue> data) {
  std::vector<WeightedValue> kept;
  kept.reserve(data.size());
  for (const auto& d : data)
    if (d.weight > 0.0 && std::isfinite(d.value)) kept.push_back(d);
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& x, const auto& y) { return x.value < y.value; });
  return kept;
}

double percentile_sorted(const std::vector<WeightedValue>& sorted, double total, double p) {
  const double target = p / 100.0 * total;
  double cum = 0.0;
  for (const auto& d : sorted) {
    cum += d.weight;
    if (cum >= target * (1.0 - 1e-12)) return d.value;
  }
  return sorted.back().value;
}

}  // namespace

double weighted_percentile(std::span<const WeightedValue> data, double p) {
  const auto sorted = positive_sorted(data);
  if (sorted.empty()) throw Error(ErrorKind::EmptyMixing, "no weighted values to summarize");
  double total = 0.0;
  for (const auto& d : sorted) total += d.weight;
  return percentile_sorted(sorted, total, p);
}

WeightedSummary summarize(std::span<const WeightedValue> data) {
  WeightedSummary s;
  const auto sorted = positive_sorted(data);
  if (sorted.empty()) return s;
  s.count = sorted.size();
  // Shifting by one sample keeps constant data exact.
  const double shift = sorted.front().value;
  double wx = 0.0;
  for (const auto& d : sorted) {
    s.total_weight += d.weight;
    wx += d.weight * (d.value - shift);
  }
  s.mean = shift + wx / s.total_weight;
  double var = 0.0;
  for (const auto& d : sorted) var += d.weight * (d.value - s.mean) * (d.value - s.mean);
  s.std_dev = std::sqrt(var / s.total_weight);
  for (std::size_t k = 0; k < kSummaryPercentiles.size(); ++k)
    s.percentiles[k] = percentile_sorted(sorted, s.total_weight, kSummaryPercentiles[k]);
  return s;
}

WeightedHistogram build_histogram(std::span<const WeightedValue> data, std::size_t bins) {
  if (bins == 0) throw Error(ErrorKind::Usage, "histogram needs at least one bin");
  WeightedHistogram h;
  h.summary = summarize(data);
  h.bin_policy = std::to_string(bins) + " equal-width bins over [-1,1] clamped to the data range";
  if (h.summary.count == 0) return h;

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& d : data) {
    if (!(d.weight > 0.0) || !std::isfinite(d.value)) continue;
    lo = std::min(lo, d.value);
    hi = std::max(hi, d.value);
  }
  lo = std::clamp(lo, -1.0, 1.0);
  hi = std::clamp(hi, -1.0, 1.0);
  if (!(hi > lo)) bins = 1;

  h.edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k)
    h.edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
  h.edges.back() = hi;
  h.mass.assign(bins, 0.0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (const auto& d : data) {
    if (!(d.weight > 0.0) || !std::isfinite(d.value)) continue;
    std::size_t k = 0;
    if (width > 0.0) {
      const double pos = std::floor((d.value - lo) / width);
      k = pos <= 0.0 ? 0 : std::min(bins - 1, static_cast<std::size_t>(pos));
    }
    h.mass[k] += d.weight / h.summary.total_weight;
  }
  return h;
}

}  // namespace locassort
