#include "rse/proximity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rse/error.hpp"
#include "rse/format.hpp"
#include "rse/information_system.hpp"
#include "rse/union_find.hpp"

namespace rse {

ProximityMatrix::ProximityMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("proximity matrix needs n*n entries");
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 1.0)
      throw std::invalid_argument("proximity diagonal must be exactly 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (at(i, j) != at(j, i))
        throw std::invalid_argument("proximity matrix must be symmetric");
      if (!(at(i, j) >= 0.0 && at(i, j) <= 1.0))
        fail(ErrorCode::OutOfRange, "proximity entry outside [0, 1]");
    }
  }
}

std::string ProximityMatrix::to_csv(std::span<const std::string> ids) const {
  if (ids.size() != n_) throw std::invalid_argument("id count does not match matrix size");
  std::ostringstream out;
  out << "id";
  for (const std::string& id : ids) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < n_; ++i) {
    out << ids[i];
    for (std::size_t j = 0; j < n_; ++j) out << ',' << render_3dp(at(i, j));
    out << '\n';
  }
  return out.str();
}

ProximityMatrix numeric_proximity(std::span<const double> values, double range) {
  if (!(range > 0.0) || !std::isfinite(range))
    fail(ErrorCode::ConfigFormat, "range must be a positive number");
  for (double v : values)
    if (!(v >= 0.0 && v <= range))
      fail(ErrorCode::OutOfRange, "value outside [0, range]");
  std::size_t n = values.size();
  std::vector<double> entries(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      double sim = 1.0 - std::abs(values[i] - values[j]) / range;
      entries[i * n + j] = sim;
      entries[j * n + i] = sim;
    }
  return ProximityMatrix(n, std::move(entries));
}

ProximityMatrix categorical_proximity(std::span<const std::string> labels) {
  std::size_t n = labels.size();
  std::vector<double> entries(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      double sim = labels[i] == labels[j] ? 1.0 : 0.0;
      entries[i * n + j] = sim;
      entries[j * n + i] = sim;
    }
  return ProximityMatrix(n, std::move(entries));
}

ProximityMatrix build_proximity(std::span<const Value> values, const AttributeSpec& spec) {
  if (spec.kind == AttributeKind::Numeric) {
    std::vector<double> numbers;
    numbers.reserve(values.size());
    for (const Value& v : values) numbers.push_back(std::get<double>(v));
    return numeric_proximity(numbers, spec.range);
  }
  std::vector<std::string> labels;
  labels.reserve(values.size());
  for (const Value& v : values) labels.push_back(std::get<std::string>(v));
  return categorical_proximity(labels);
}

ProximityMatrix build_proximity(const InformationSystem& system, std::string_view attr) {
  const AttributeSpec& spec = system.attribute(attr);
  if (spec.kind == AttributeKind::Numeric) {
    std::vector<double> values = system.numeric_column(attr);
    return numeric_proximity(values, spec.range);
  }
  std::vector<std::string> labels = system.label_column(attr);
  return categorical_proximity(labels);
}

Partition alpha_partition(const ProximityMatrix& matrix, double alpha,
                          std::vector<std::string> universe) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(ErrorCode::ConfigFormat, "alpha must lie in [0, 1]");
  if (universe.size() != matrix.size())
    throw std::invalid_argument("universe size does not match matrix");
  UnionFind components(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (matrix.at(i, j) >= alpha) components.unite(i, j);
  std::vector<std::size_t> assignment(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) assignment[i] = components.find(i);
  return Partition(std::move(universe), assignment);
}

Partition attribute_partition(const InformationSystem& system, std::string_view attr,
                              double alpha) {
  return alpha_partition(build_proximity(system, attr), alpha, system.objects());
}

}  // namespace rse
