#include "fitt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fitt {

MetricRecorder::MetricRecorder(Time binWidth, Time duration)
  : m_binWidth(binWidth)
{
  if (binWidth <= Time(0)) {
    throw Error("metric bin must be positive");
  }
  m_binCount = static_cast<size_t>((duration.count() + binWidth.count() - 1) / binWidth.count());
}

size_t
MetricRecorder::binOf(Time t) const
{
  auto bin = static_cast<size_t>(std::max<std::int64_t>(0, t.count() / m_binWidth.count()));
  return std::min(bin, m_binCount == 0 ? 0 : m_binCount - 1);
}

void
MetricRecorder::count(Time t, const std::string& node, const std::string& prefix, const std::string& metric,
                      double n)
{
  m_counts[Key{binOf(t), node, prefix, metric}] += n;
}

void
MetricRecorder::gauge(size_t bin, const std::string& node, const std::string& prefix,
                      const std::string& metric, double value)
{
  m_gauges[Key{bin, node, prefix, metric}] = value;
}

void
MetricRecorder::requireSeries(const std::string& node, const std::string& prefix, const std::string& metric)
{
  m_required.emplace(node, prefix, metric);
}

std::vector<MetricSample>
MetricRecorder::samples() const
{
  std::map<Key, double> merged;
  const double width = toSeconds(m_binWidth);
  for (size_t bin = 0; bin < m_binCount; ++bin) {
    for (const auto& [node, prefix, metric] : m_required) {
      merged[Key{bin, node, prefix, metric}] = 0;
    }
  }
  for (const auto& [key, n] : m_counts) {
    merged[key] = n / width;
  }
  for (const auto& [key, value] : m_gauges) {
    merged[key] = value;
  }

  std::vector<MetricSample> out;
  out.reserve(merged.size());
  for (const auto& [key, value] : merged) {
    const auto& [bin, node, prefix, metric] = key;
    out.push_back(MetricSample{static_cast<double>(bin) * width, node, prefix, metric, value});
  }
  return out;
}

MetricTable::MetricTable(std::vector<MetricSample> samples, double binWidth, size_t binCount)
  : m_samples(std::move(samples))
  , m_binWidth(binWidth)
  , m_binCount(binCount)
{
  for (const auto& s : m_samples) {
    auto bin = static_cast<size_t>(std::llround(s.timeBin / m_binWidth));
    m_index[{s.node, s.prefix, s.metric}][bin] = s.value;
  }
}

std::vector<double>
MetricTable::series(const std::string& node, const std::string& prefix, const std::string& metric,
                    double missing) const
{
  std::vector<double> values(m_binCount, missing);
  auto it = m_index.find({node, prefix, metric});
  if (it != m_index.end()) {
    for (const auto& [bin, value] : it->second) {
      if (bin < values.size()) {
        values[bin] = value;
      }
    }
  }
  return values;
}

bool
MetricTable::hasSeries(const std::string& node, const std::string& prefix, const std::string& metric) const
{
  return m_index.count({node, prefix, metric}) > 0;
}

std::string
formatFixed6(double value)
{
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value == 0 ? 0.0 : value);
  return buf;
}

void
writeCsv(std::ostream& os, const std::vector<MetricSample>& samples)
{
  os << "time_bin,node,prefix,metric,value\n";
  for (const auto& s : samples) {
    os << formatFixed6(s.timeBin) << ',' << s.node << ',' << s.prefix << ',' << s.metric << ','
       << formatFixed6(s.value) << '\n';
  }
}

} // namespace fitt
