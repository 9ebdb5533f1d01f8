#pragma once

#include <string>
#include <vector>

namespace rse {

enum class AttributeKind { Numeric, Categorical };

// Direction of preference: whether larger raw values are better or worse.
enum class Polarity { HigherBetter, LowerBetter };

struct AttributeSpec {
  std::string name;
  AttributeKind kind = AttributeKind::Numeric;
  Polarity polarity = Polarity::HigherBetter;

  // Numeric attributes: the maximum attainable span of the value domain,
  // used to normalise pairwise distances. Must be > 0.
  double range = 0.0;

  // Categorical attributes: admissible labels, best first.
  std::vector<std::string> label_order;

  // Level this attribute is evaluated under; assigned from the config.
  std::string level;

  // Throws ConfigFormat when the fields are inconsistent with the kind.
  void validate() const;
};

}  // namespace rse
