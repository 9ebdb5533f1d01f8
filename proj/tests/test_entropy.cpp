#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "rse/entropy.hpp"
#include "rse/error.hpp"
#include "rse/format.hpp"
#include "rse/proximity.hpp"
#include "support/test_support.hpp"

using rse::AttributePartitions;
using rse::ErrorCode;
using rse::normalise_weights;
using rse::Partition;
using rse::partition_entropy;
using rse::significance;
using rse::WeightReport;
using rse::weighting_report;
using testsup::code_of;

namespace {

// Entropy computed straight from block sizes, as a cross-check.
double h_of(std::initializer_list<int> sizes, double base = 10.0) {
  double n = 0.0;
  for (int s : sizes) n += s;
  double h = 0.0;
  for (int s : sizes) {
    double p = s / n;
    h -= p * std::log(p) / std::log(base);
  }
  return h;
}

Partition sized_partition(std::initializer_list<int> sizes) {
  std::vector<std::string> universe;
  std::vector<std::size_t> assignment;
  std::size_t block = 0;
  for (int s : sizes) {
    for (int k = 0; k < s; ++k) {
      universe.push_back("o" + std::to_string(universe.size() + 1));
      assignment.push_back(block);
    }
    ++block;
  }
  return Partition(universe, assignment);
}

AttributePartitions level_partitions(const rse::InformationSystem& is,
                                     std::initializer_list<const char*> names,
                                     double alpha) {
  AttributePartitions out;
  for (const char* name : names)
    out.emplace_back(name, rse::attribute_partition(is, name, alpha));
  return out;
}

AttributePartitions level1(const rse::InformationSystem& is) {
  return level_partitions(is, {"IC", "IF", "PP", "Fee", "CC"}, 0.85);
}

}  // namespace

TEST_CASE("entropy matches the worked block-size examples") {
  CHECK(rse::render_3dp(partition_entropy(sized_partition({5, 1, 1, 1, 2}), 10)) ==
        "0.590");
  CHECK(rse::render_3dp(partition_entropy(sized_partition({6, 1, 1, 2}), 10)) == "0.473");
  CHECK(partition_entropy(sized_partition({5, 1, 1, 1, 2}), 10) ==
        doctest::Approx(h_of({5, 1, 1, 1, 2})).epsilon(1e-14));
}

TEST_CASE("entropy spans zero to log of the universe size") {
  CHECK(partition_entropy(sized_partition({7}), 10) == 0.0);
  CHECK(partition_entropy(sized_partition({1, 1, 1, 1, 1, 1, 1, 1}), 10) ==
        doctest::Approx(std::log10(8.0)).epsilon(1e-14));
  CHECK(partition_entropy(sized_partition({1, 1, 1, 1}), 2) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("entropy depends only on the block-size distribution") {
  Partition a = Partition::from_blocks({"p", "q", "r", "s"}, {{0, 1}, {2, 3}});
  Partition b = Partition::from_blocks({"p", "q", "r", "s"}, {{0, 3}, {1, 2}});
  CHECK(partition_entropy(a, 10) == partition_entropy(b, 10));
}

TEST_CASE("refining a partition never lowers its entropy") {
  rse::InformationSystem is = testsup::institutions();
  for (const char* name : {"IC", "IF", "PP", "CC", "ECA"}) {
    double coarse = partition_entropy(rse::attribute_partition(is, name, 0.75), 10);
    double fine = partition_entropy(rse::attribute_partition(is, name, 0.95), 10);
    CHECK(fine >= coarse);
  }
}

TEST_CASE("first-level significances match the hand-derived values") {
  rse::InformationSystem is = testsup::institutions();
  AttributePartitions parts = level1(is);
  CHECK(significance(parts, "IC", 10) ==
        doctest::Approx(0.117405748062177).epsilon(1e-12));
  CHECK(significance(parts, "IC", 10) ==
        doctest::Approx(h_of({5, 1, 1, 1, 2}) - h_of({6, 1, 1, 2})).epsilon(1e-12));
  CHECK(significance(parts, "PP", 10) ==
        doctest::Approx(h_of({5, 1, 1, 1, 2}) - h_of({5, 1, 2, 2})).epsilon(1e-12));
  CHECK(significance(parts, "CC", 10) == significance(parts, "PP", 10));
  CHECK(significance(parts, "IF", 10) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(significance(parts, "Fee", 10) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("an attribute listed twice contributes nothing on its own") {
  rse::InformationSystem is = testsup::institutions();
  AttributePartitions parts;
  parts.emplace_back("first", rse::attribute_partition(is, "IC", 0.85));
  parts.emplace_back("second", rse::attribute_partition(is, "IC", 0.85));
  CHECK(significance(parts, "first", 10) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(significance(parts, "second", 10) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("with one attribute the significance is its whole entropy") {
  rse::InformationSystem is = testsup::institutions();
  AttributePartitions parts;
  parts.emplace_back("IC", rse::attribute_partition(is, "IC", 0.85));
  CHECK(significance(parts, "IC", 10) ==
        doctest::Approx(partition_entropy(parts[0].second, 10)).epsilon(1e-14));
}

TEST_CASE("asking about an unlisted attribute is an error") {
  rse::InformationSystem is = testsup::institutions();
  AttributePartitions parts = level1(is);
  CHECK(code_of([&] { significance(parts, "Nope", 10); }) == ErrorCode::UnknownAttribute);
}

TEST_CASE("normalisation keeps proportions and drops the insignificant") {
  std::vector<std::pair<std::string, double>> sgf = {
      {"IC", 0.117405748062177}, {"IF", 0.0},  {"PP", 0.060205999132796},
      {"Fee", 0.0},              {"CC", 0.060205999132796}};
  std::vector<std::string> redundant;
  auto weights = normalise_weights(sgf, 1e-9, &redundant);
  REQUIRE(weights.size() == 3);
  CHECK(weights[0].first == "IC");
  CHECK(weights[0].second == doctest::Approx(0.493679508258243).epsilon(1e-12));
  CHECK(weights[1].second == doctest::Approx(0.253160245870878).epsilon(1e-12));
  CHECK(weights[2].second == doctest::Approx(0.253160245870878).epsilon(1e-12));
  CHECK(redundant == std::vector<std::string>{"IF", "Fee"});
  double sum = 0.0;
  for (const auto& [name, w] : weights) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a single retained attribute takes all the weight") {
  std::vector<std::pair<std::string, double>> sgf = {{"A", 0.2}, {"B", 0.0}};
  auto weights = normalise_weights(sgf, 1e-9);
  REQUIRE(weights.size() == 1);
  CHECK(weights[0] == std::pair<std::string, double>{"A", 1.0});
}

TEST_CASE("equal significances split the weight exactly in half") {
  std::vector<std::pair<std::string, double>> sgf = {
      {"IL", 0.146142626619314}, {"RS", 0.0}, {"III", 0.146142626619314}};
  auto weights = normalise_weights(sgf, 1e-9);
  REQUIRE(weights.size() == 2);
  CHECK(weights[0].second == 0.5);
  CHECK(weights[1].second == 0.5);
}

TEST_CASE("everything redundant cannot be normalised") {
  std::vector<std::pair<std::string, double>> sgf = {{"A", 0.0}, {"B", 5e-10}};
  CHECK(code_of([&] { normalise_weights(sgf, 1e-9); }) == ErrorCode::AllRedundant);
}

TEST_CASE("the full report ties entropies, significances, and weights together") {
  rse::InformationSystem is = testsup::institutions();
  WeightReport report = weighting_report(level1(is), 10, 1e-9);

  CHECK(report.h_full == doctest::Approx(h_of({5, 1, 1, 1, 2})).epsilon(1e-12));
  REQUIRE(report.h_drop.size() == 5);
  CHECK(report.h_drop[0].first == "IC");
  CHECK(report.h_drop[0].second == doctest::Approx(h_of({6, 1, 1, 2})).epsilon(1e-12));
  CHECK(report.h_drop[1].second == doctest::Approx(report.h_full).epsilon(1e-12));

  CHECK(report.sgf_of("IC") == doctest::Approx(0.117405748062177).epsilon(1e-12));
  CHECK(report.is_redundant("IF"));
  CHECK(report.is_redundant("Fee"));
  CHECK_FALSE(report.is_redundant("IC"));
  CHECK(report.redundant == std::vector<std::string>{"IF", "Fee"});

  CHECK(report.weight_of("IC") == doctest::Approx(0.493679508258243).epsilon(1e-12));
  CHECK(report.weight_of("IF") == 0.0);
  double sum = 0.0;
  for (const auto& [name, w] : report.weights) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weights do not depend on the logarithm base") {
  rse::InformationSystem is = testsup::institutions();
  WeightReport ten = weighting_report(level1(is), 10, 1e-9);
  WeightReport two = weighting_report(level1(is), 2, 1e-9);
  REQUIRE(ten.weights.size() == two.weights.size());
  for (std::size_t i = 0; i < ten.weights.size(); ++i) {
    CHECK(ten.weights[i].first == two.weights[i].first);
    CHECK(ten.weights[i].second == doctest::Approx(two.weights[i].second).epsilon(1e-12));
  }
  CHECK(two.h_full == doctest::Approx(ten.h_full / std::log10(2.0)).epsilon(1e-12));
}
