#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ontosim/baselines.hpp"
#include "ontosim/corpus.hpp"
#include "ontosim/semsim.hpp"

namespace ontosim {

// One similarity method bound to its taxonomy/corpus context, usable as a
// pure pairwise function. Instances are immutable and safe to share across
// threads.
class Measure {
 public:
  virtual ~Measure() = default;
  const std::string& name() const { return name_; }
  virtual double similarity(const AnnotationVector& a, const AnnotationVector& b) const = 0;

 protected:
  explicit Measure(std::string name) : name_(std::move(name)) {}

 private:
  std::string name_;
};

/// Builds a measure from its textual spec:
///   semsim:<CF|AF|TD|IIC>:<max|min|ave|gav>
///   dice | jaccard | sigmoid | rezaei-franti
///   wnsim[:normalized]
///   haase[:alpha=<a>,beta=<b>]
/// `stats_corpus` supplies the extensional statistics (CF/AF weights and the
/// WNSim IDF); it may be null for methods that need none.
std::unique_ptr<Measure> make_measure(const std::string& spec,
                                      std::shared_ptr<const Taxonomy> taxonomy,
                                      const Corpus* stats_corpus);

/// The sixteen semsim configurations plus the six comparison measures, in
/// report order.
std::vector<std::string> all_method_specs();

// Full pairwise similarity matrix over a corpus; symmetric with unit
// diagonal. Cells are pure functions of their pair, so the parallel builder
// is bitwise identical to the serial one for any worker count.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values);

  int size() const { return static_cast<int>(ids_.size()); }
  double at(int i, int j) const { return values_[static_cast<size_t>(i) * ids_.size() + j]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Row/column of a resource id; throws UnknownResource.
  int index_of(std::string_view id) const;

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;
};

/// OpenMP over the unordered pairs; jobs <= 0 means all available workers.
SimilarityMatrix similarity_matrix(const Corpus& corpus, const Measure& measure, int jobs = 0);

/// Serial reference for the parallel builder; kept for tests and benchmarks.
SimilarityMatrix similarity_matrix_serial(const Corpus& corpus, const Measure& measure);

}  // namespace ontosim
