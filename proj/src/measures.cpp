#include "ontosim/measures.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ontosim/io.hpp"
#include "ontosim/weighting.hpp"

namespace ontosim {

namespace {

class SemsimMeasure : public Measure {
 public:
  SemsimMeasure(std::string name, WeightedTaxonomy wt, NormFactor norm)
      : Measure(std::move(name)), wt_(std::move(wt)), norm_(norm) {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return semsim(wt_, a, b, norm_);
  }

 private:
  WeightedTaxonomy wt_;
  NormFactor norm_;
};

class DiceMeasure : public Measure {
 public:
  DiceMeasure() : Measure("dice") {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return dice(a, b);
  }
};

class JaccardMeasure : public Measure {
 public:
  JaccardMeasure() : Measure("jaccard") {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return jaccard(a, b);
  }
};

class SigmoidMeasure : public Measure {
 public:
  SigmoidMeasure() : Measure("sigmoid") {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return sigmoid(a, b);
  }
};

class WnsimMeasure : public Measure {
 public:
  WnsimMeasure(std::string name, std::shared_ptr<const Taxonomy> tax, const Corpus& idf_source,
               WnsimOptions options)
      : Measure(std::move(name)), tax_(std::move(tax)), idf_source_(&idf_source),
        options_(options) {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return wnsim_sym(*tax_, *idf_source_, a, b, options_);
  }

 private:
  std::shared_ptr<const Taxonomy> tax_;
  const Corpus* idf_source_;
  WnsimOptions options_;
};

class RezaeiFrantiMeasure : public Measure {
 public:
  explicit RezaeiFrantiMeasure(std::shared_ptr<const Taxonomy> tax)
      : Measure("rezaei-franti"), tax_(std::move(tax)) {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return rezaei_franti(*tax_, a, b);
  }

 private:
  std::shared_ptr<const Taxonomy> tax_;
};

class HaaseMeasure : public Measure {
 public:
  HaaseMeasure(std::string name, std::shared_ptr<const Taxonomy> tax, double alpha, double beta)
      : Measure(std::move(name)), tax_(std::move(tax)), alpha_(alpha), beta_(beta) {}
  double similarity(const AnnotationVector& a, const AnnotationVector& b) const override {
    return haase_sym(*tax_, a, b, alpha_, beta_);
  }

 private:
  std::shared_ptr<const Taxonomy> tax_;
  double alpha_, beta_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

double parse_param(const std::string& kv, const std::string& key, const std::string& spec) {
  auto eq = kv.find('=');
  if (eq == std::string::npos || kv.substr(0, eq) != key)
    throw Error(ErrorKind::Parse, "bad method spec: " + spec + " (expected " + key + "=...)",
                spec);
  char* end = nullptr;
  double v = std::strtod(kv.c_str() + eq + 1, &end);
  if (end == kv.c_str() + eq + 1 || *end != '\0' || !(v > 0))
    throw Error(ErrorKind::Parse, "bad method spec: " + spec + " (" + key + " must be > 0)",
                spec);
  return v;
}

}  // namespace

std::unique_ptr<Measure> make_measure(const std::string& spec,
                                      std::shared_ptr<const Taxonomy> taxonomy,
                                      const Corpus* stats_corpus) {
  auto parts = split(spec, ':');
  const std::string& head = parts[0];

  if (head == "semsim") {
    if (parts.size() != 3)
      throw Error(ErrorKind::Parse, "bad method spec: " + spec + " (want semsim:<w>:<norm>)",
                  spec);
    WeightingMethod wm = weighting_from_string(parts[1]);
    NormFactor nf = norm_from_string(parts[2]);
    std::string name = std::string("semsim:") + to_string(wm) + ":" + to_string(nf);
    return std::make_unique<SemsimMeasure>(std::move(name), weigh(taxonomy, wm, stats_corpus),
                                           nf);
  }
  if (head == "dice" && parts.size() == 1) return std::make_unique<DiceMeasure>();
  if (head == "jaccard" && parts.size() == 1) return std::make_unique<JaccardMeasure>();
  if (head == "sigmoid" && parts.size() == 1) return std::make_unique<SigmoidMeasure>();
  if (head == "wnsim") {
    WnsimOptions options;
    if (parts.size() == 2 && parts[1] == "normalized") options.normalized = true;
    else if (parts.size() != 1)
      throw Error(ErrorKind::Parse, "bad method spec: " + spec, spec);
    if (!stats_corpus)
      throw Error(ErrorKind::MissingCorpus, "wnsim needs a corpus for its IDF statistics");
    return std::make_unique<WnsimMeasure>(options.normalized ? "wnsim:normalized" : "wnsim",
                                          std::move(taxonomy), *stats_corpus, options);
  }
  if (head == "rezaei-franti" && parts.size() == 1)
    return std::make_unique<RezaeiFrantiMeasure>(std::move(taxonomy));
  if (head == "haase") {
    double alpha = 0.2, beta = 0.6;
    if (parts.size() == 2) {
      auto kvs = split(parts[1], ',');
      if (kvs.size() != 2)
        throw Error(ErrorKind::Parse, "bad method spec: " + spec, spec);
      alpha = parse_param(kvs[0], "alpha", spec);
      beta = parse_param(kvs[1], "beta", spec);
    } else if (parts.size() != 1) {
      throw Error(ErrorKind::Parse, "bad method spec: " + spec, spec);
    }
    std::string name = "haase";
    if (alpha != 0.2 || beta != 0.6)
      name += ":alpha=" + fmt6(alpha) + ",beta=" + fmt6(beta);
    return std::make_unique<HaaseMeasure>(std::move(name), std::move(taxonomy), alpha, beta);
  }
  throw Error(ErrorKind::Parse, "unknown method spec: " + spec, spec);
}

std::vector<std::string> all_method_specs() {
  std::vector<std::string> specs;
  for (const char* w : {"AF", "CF", "TD", "IIC"})
    for (const char* n : {"max", "min", "ave", "gav"})
      specs.push_back(std::string("semsim:") + w + ":" + n);
  for (const char* b : {"dice", "jaccard", "sigmoid", "wnsim", "rezaei-franti", "haase"})
    specs.push_back(b);
  return specs;
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {}

int SimilarityMatrix::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  throw Error(ErrorKind::UnknownResource, "unknown resource: " + std::string(id),
              std::string(id));
}

namespace {

SimilarityMatrix build_matrix(const Corpus& corpus, const Measure& measure, int jobs,
                              bool parallel) {
  const int n = corpus.size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int i = 0; i < n; ++i) ids.push_back(corpus.resource(i).id);
  std::vector<double> values(static_cast<size_t>(n) * n, 0.0);

  // Flattened upper triangle including the diagonal; each cell is
  // independent, so scheduling cannot change any result bit. A measure error
  // must not escape the worker region, so it is captured and rethrown after.
  const long long pairs = static_cast<long long>(n) * (n + 1) / 2;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

#ifdef _OPENMP
  const int threads = parallel ? (jobs > 0 ? jobs : omp_get_max_threads()) : 1;
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
#else
  (void)jobs;
  (void)parallel;
#endif
  for (long long p = 0; p < pairs; ++p) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      // Invert p = i*(i+1)/2 + j (j <= i).
      long long i =
          static_cast<long long>((std::sqrt(8.0 * static_cast<double>(p) + 1.0) - 1.0) / 2.0);
      while ((i + 1) * (i + 2) / 2 <= p) ++i;
      while (i * (i + 1) / 2 > p) --i;
      const long long j = p - i * (i + 1) / 2;
      const double v = measure.similarity(corpus.resource(static_cast<int>(i)).av,
                                          corpus.resource(static_cast<int>(j)).av);
      values[static_cast<size_t>(i) * n + j] = v;
      values[static_cast<size_t>(j) * n + i] = v;
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return SimilarityMatrix(std::move(ids), std::move(values));
}

}  // namespace

SimilarityMatrix similarity_matrix(const Corpus& corpus, const Measure& measure, int jobs) {
  return build_matrix(corpus, measure, jobs, true);
}

SimilarityMatrix similarity_matrix_serial(const Corpus& corpus, const Measure& measure) {
  return build_matrix(corpus, measure, 0, false);
}

}  // namespace ontosim
