#ifndef FITT_METRICS_HPP
#define FITT_METRICS_HPP

#include "fitt/common.hpp"

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace fitt {

struct MetricSample
{
  /// Start of the bin in seconds.
  double timeBin;
  std::string node;
  std::string prefix;
  std::string metric;
  double value;
};

/**
 * \brief Time-binned metric store.
 *
 * Event counts are converted to per-second rates on export; gauges are exported as recorded.
 * Series declared with requireSeries() get a row in every bin, zero when nothing happened.
 */
class MetricRecorder
{
public:
  MetricRecorder(Time binWidth, Time duration);

  size_t
  binCount() const
  {
    return m_binCount;
  }

  Time
  binWidth() const
  {
    return m_binWidth;
  }

  /// Bin holding time \p t; events at exactly the run end fall in the last bin.
  size_t
  binOf(Time t) const;

  void
  count(Time t, const std::string& node, const std::string& prefix, const std::string& metric,
        double n = 1);

  void
  gauge(size_t bin, const std::string& node, const std::string& prefix, const std::string& metric,
        double value);

  void
  requireSeries(const std::string& node, const std::string& prefix, const std::string& metric);

  /// Rows sorted by (time bin, node, prefix, metric).
  std::vector<MetricSample>
  samples() const;

private:
  using Key = std::tuple<size_t, std::string, std::string, std::string>;

  Time m_binWidth;
  size_t m_binCount;
  std::map<Key, double> m_counts;
  std::map<Key, double> m_gauges;
  std::set<std::tuple<std::string, std::string, std::string>> m_required;
};

/// Indexed view of exported samples for analysis.
class MetricTable
{
public:
  MetricTable() = default;

  MetricTable(std::vector<MetricSample> samples, double binWidth, size_t binCount);

  const std::vector<MetricSample>&
  samples() const
  {
    return m_samples;
  }

  double
  binWidth() const
  {
    return m_binWidth;
  }

  size_t
  binCount() const
  {
    return m_binCount;
  }

  /// Value per bin for one series; bins without a row are \p missing.
  std::vector<double>
  series(const std::string& node, const std::string& prefix, const std::string& metric,
         double missing = 0) const;

  bool
  hasSeries(const std::string& node, const std::string& prefix, const std::string& metric) const;

private:
  std::vector<MetricSample> m_samples;
  double m_binWidth = 1.0;
  size_t m_binCount = 0;
  std::map<std::tuple<std::string, std::string, std::string>, std::map<size_t, double>> m_index;
};

/// Writes "time_bin,node,prefix,metric,value" followed by one line per sample, 6 decimals.
void
writeCsv(std::ostream& os, const std::vector<MetricSample>& samples);

std::string
formatFixed6(double value);

} // namespace fitt

#endif // FITT_METRICS_HPP
