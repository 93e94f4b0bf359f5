// Compares the OpenMP kernels against their serial references on synthetic
// data: full similarity-matrix construction and Monte-Carlo null sampling.
// Verifies bitwise equality while it measures.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontosim/cohesion.hpp"
#include "ontosim/measures.hpp"
#include "ontosim/rng.hpp"

using namespace ontosim;

namespace {

std::shared_ptr<const Taxonomy> random_taxonomy(int concepts, SplitMix64& rng) {
  std::vector<std::string> ids;
  std::vector<ConceptIndex> parents;
  for (int i = 0; i < concepts; ++i) {
    ids.push_back("c" + std::to_string(i));
    parents.push_back(i == 0 ? kNoConcept
                             : static_cast<ConceptIndex>(rng.below(static_cast<std::uint64_t>(i))));
  }
  return std::make_shared<const Taxonomy>(std::move(ids), std::move(parents));
}

Corpus random_corpus(std::shared_ptr<const Taxonomy> tax, int resources, int av_size,
                     SplitMix64& rng) {
  std::vector<Resource> rs;
  for (int i = 0; i < resources; ++i) {
    Resource r;
    r.id = "r" + std::to_string(i);
    std::vector<char> used(tax->size(), 0);
    while (static_cast<int>(r.av.concepts.size()) < av_size) {
      auto c = static_cast<ConceptIndex>(rng.below(static_cast<std::uint64_t>(tax->size())));
      if (used[c]) continue;
      used[c] = 1;
      r.av.concepts.push_back(c);
    }
    rs.push_back(std::move(r));
  }
  return Corpus::from_resources(std::move(tax), std::move(rs));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel benchmark"};
  int resources = 600, concepts = 500, av_size = 6, samples = 100000, set_size = 5, jobs = 0;
  std::uint64_t seed = 42;
  app.add_option("--resources", resources);
  app.add_option("--concepts", concepts);
  app.add_option("--av-size", av_size);
  app.add_option("--samples", samples);
  app.add_option("--set-size", set_size);
  app.add_option("--jobs", jobs);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  SplitMix64 rng(seed);
  auto tax = random_taxonomy(concepts, rng);
  Corpus corpus = random_corpus(tax, resources, av_size, rng);
  auto measure = make_measure("semsim:TD:gav", tax, &corpus);

  std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial[s]", "parallel[s]", "speedup",
              "bitwise");

  auto t0 = std::chrono::steady_clock::now();
  SimilarityMatrix serial = similarity_matrix_serial(corpus, *measure);
  const double matrix_serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  SimilarityMatrix parallel = similarity_matrix(corpus, *measure, jobs);
  const double matrix_parallel_s = seconds_since(t0);

  const bool matrix_equal = serial.values() == parallel.values();
  std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "similarity_matrix", matrix_serial_s,
              matrix_parallel_s, matrix_serial_s / matrix_parallel_s,
              matrix_equal ? "ok" : "MISMATCH");

  t0 = std::chrono::steady_clock::now();
  NullDistribution null_serial = sample_null_serial(parallel, set_size, samples, seed);
  const double null_serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  NullDistribution null_parallel = sample_null(parallel, set_size, samples, seed, jobs);
  const double null_parallel_s = seconds_since(t0);

  const bool null_equal = null_serial.values == null_parallel.values;
  std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "sample_null", null_serial_s, null_parallel_s,
              null_serial_s / null_parallel_s, null_equal ? "ok" : "MISMATCH");

  return matrix_equal && null_equal ? 0 : 1;
}
