#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ontosim/measures.hpp"
#include "ontosim/stats.hpp"

namespace ontosim {

/// Mean pairwise similarity over all k(k-1)/2 unordered pairs of a resource
/// set (k >= 2).
struct SetCohesion {
  std::vector<int> members;  // matrix indices
  double cohesion = 0.0;
};

SetCohesion set_cohesion(const SimilarityMatrix& matrix, const std::vector<int>& members);

// Monte-Carlo null: cohesion of `samples` uniformly drawn k-subsets of the
// corpus (distinct resources within a subset; subsets may recur). Every
// sample s draws from its own substream of (seed, s), so the distribution is
// identical no matter how many workers computed it.
struct NullDistribution {
  std::uint64_t seed = 0;
  int set_size = 0;
  std::vector<double> values;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n-1)
};

NullDistribution sample_null(const SimilarityMatrix& matrix, int set_size, int samples,
                             std::uint64_t seed, int jobs = 0);
/// Serial reference for the parallel sampler; bitwise-identical output.
NullDistribution sample_null_serial(const SimilarityMatrix& matrix, int set_size, int samples,
                                    std::uint64_t seed);

/// t = (observed - null mean) / null stddev; confidence = Student-t CDF(t)
/// with the given degrees of freedom. Throws ZeroVariance when the null has
/// none.
struct CohesionTest {
  double observed = 0.0;
  double null_mean = 0.0;
  double null_stddev = 0.0;
  int samples = 0;
  double t = 0.0;
  int df = 0;
  double confidence = 0.0;
};

CohesionTest t_test(const SetCohesion& observed, const NullDistribution& null_dist, int df);

// --- experiment inputs ------------------------------------------------------

/// One benchmark line: `<set_id><TAB><resource_id>,<resource_id>,...`.
struct BenchmarkSet {
  std::string id;
  std::vector<std::string> resource_ids;
};

std::vector<BenchmarkSet> load_benchmark_sets(const std::string& path);
std::vector<BenchmarkSet> parse_benchmark_sets(std::string_view text,
                                               const std::string& origin = "<string>");

/// Consolidated per-pair judgement scores, keyed on the unordered pair.
class JudgementData {
 public:
  static JudgementData load(const std::string& path);
  static JudgementData parse(std::string_view text, const std::string& origin = "<string>");

  /// Score for the pair; throws UnknownResource when the pair is absent.
  double score(const std::string& a, const std::string& b) const;
  bool has(const std::string& a, const std::string& b) const;
  size_t size() const { return scores_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

// --- experiment runner ------------------------------------------------------

struct ExperimentRow {
  std::string method;
  std::string set_id;
  double cohesion = 0.0;
  double t = 0.0;
  double confidence = 0.0;
  std::optional<double> pearson;      // absent without judgement data
  bool pearson_undefined = false;     // ConstantVector was raised
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;  // per method x set, then one average row per method
  /// Null distributions per (method, set size), for histogram emission.
  std::map<std::pair<std::string, int>, NullDistribution> nulls;
};

struct ExperimentConfig {
  int samples = 100000;
  std::uint64_t seed = 0;
  std::optional<int> df;  // default: the evaluated set's cardinality
  int jobs = 0;
  bool keep_null_values = false;  // retain sample vectors in the report
};

/// Cohesion, t-value and confidence per method and benchmark set, plus
/// Pearson correlation against judgement scores when provided, plus one
/// cross-set average row per method. A ConstantVector from pearson is
/// surfaced on the row (and a warning printed by the CLI), never silently
/// dropped. Null distributions are derived from (seed, method name, k), so
/// method order and worker count never change any number.
ExperimentReport run_experiment(const Corpus& corpus,
                                const std::vector<std::unique_ptr<Measure>>& measures,
                                const std::vector<BenchmarkSet>& sets,
                                const JudgementData* judgement, const ExperimentConfig& config);

/// Fixed-width histogram of a null distribution plus the Fig-5-style marker
/// values (mean, stddev, observed, t).
std::string histogram_csv(const NullDistribution& null_dist, double observed, double t,
                          int bins = 100);

}  // namespace ontosim
