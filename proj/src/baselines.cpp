#include "ontosim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ontosim/assignment.hpp"

namespace ontosim {

namespace {

void require_non_empty(const AnnotationVector& av) {
  if (av.concepts.empty()) throw Error(ErrorKind::EmptyVector, "empty annotation vector");
}

std::vector<ConceptIndex> sorted_set(const AnnotationVector& av) {
  std::vector<ConceptIndex> s = av.concepts;
  std::sort(s.begin(), s.end());
  return s;
}

long long intersection_size(const std::vector<ConceptIndex>& a,
                            const std::vector<ConceptIndex>& b) {
  long long n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else { ++n; ++ia; ++ib; }
  }
  return n;
}

// Directed WNSim score of av1 against av2.
double wnsim_directed(const Taxonomy& t, const Corpus& idf_source, const AnnotationVector& av1,
                      const AnnotationVector& av2, const WnsimOptions& options) {
  const double max_depth = static_cast<double>(t.max_depth_edges());
  double num = 0.0, den = 0.0;
  for (ConceptIndex ci : av1.concepts) {
    const double idf = idf_source.idf(ci);
    if (std::isinf(idf))
      throw Error(ErrorKind::UndefinedIdf,
                  "IDF undefined (concept never annotated): " + t.id_of(ci), t.id_of(ci));
    double best = 0.0;
    for (ConceptIndex cj : av2.concepts) {
      int len = t.path_length_edges(ci, cj);
      if (len == 0) len = 1;  // identical concepts: floor the path at one edge
      double lch = -std::log(static_cast<double>(len) / (2.0 * max_depth));
      if (options.normalized) lch /= std::log(2.0 * max_depth);
      best = std::max(best, lch);
    }
    num += best * idf;
    den += idf;
  }
  if (den == 0.0)
    throw Error(ErrorKind::ZeroIdfSum,
                "all concepts of the vector occur in every annotation vector");
  return num / den;
}

double haase_directed(const Taxonomy& t, const AnnotationVector& av1,
                      const AnnotationVector& av2, double alpha, double beta) {
  double sum = 0.0;
  for (ConceptIndex ci : av1.concepts) {
    double best = 0.0;
    for (ConceptIndex cj : av2.concepts) {
      double s;
      if (ci == cj) {
        s = 1.0;
      } else {
        const double l = static_cast<double>(t.path_length_edges(ci, cj));
        const double h = static_cast<double>(t.depth_edges(t.lcs(ci, cj)));
        s = std::exp(-alpha * l) * std::tanh(beta * h);
      }
      best = std::max(best, s);
    }
    sum += best;
  }
  return sum / static_cast<double>(av1.size());
}

}  // namespace

double dice(const AnnotationVector& av1, const AnnotationVector& av2) {
  require_non_empty(av1);
  require_non_empty(av2);
  const long long isec = intersection_size(sorted_set(av1), sorted_set(av2));
  return 2.0 * static_cast<double>(isec) / static_cast<double>(av1.size() + av2.size());
}

double jaccard(const AnnotationVector& av1, const AnnotationVector& av2) {
  require_non_empty(av1);
  require_non_empty(av2);
  const long long isec = intersection_size(sorted_set(av1), sorted_set(av2));
  return static_cast<double>(isec) / static_cast<double>(av1.size() + av2.size() - isec);
}

double sigmoid(const AnnotationVector& av1, const AnnotationVector& av2) {
  require_non_empty(av1);
  require_non_empty(av2);
  const long long isec = intersection_size(sorted_set(av1), sorted_set(av2));
  const double e = std::exp(static_cast<double>(isec));
  const long long diff = (av1.size() - isec) + (av2.size() - isec);
  return (e - 1.0) / ((e + 1.0) * static_cast<double>(diff + 1));
}

double wnsim_sym(const Taxonomy& taxonomy, const Corpus& idf_source,
                 const AnnotationVector& av1, const AnnotationVector& av2,
                 WnsimOptions options) {
  require_non_empty(av1);
  require_non_empty(av2);
  if (taxonomy.max_depth_edges() < 1)
    throw Error(ErrorKind::DegenerateTaxonomy, "wnsim needs a taxonomy of depth >= 1");
  return 0.5 * (wnsim_directed(taxonomy, idf_source, av1, av2, options) +
                wnsim_directed(taxonomy, idf_source, av2, av1, options));
}

double rezaei_franti(const Taxonomy& taxonomy, const AnnotationVector& av1,
                     const AnnotationVector& av2) {
  require_non_empty(av1);
  require_non_empty(av2);
  // Orient so the first vector is the larger; the measure divides by its size.
  const bool keep = av1.size() > av2.size() ||
                    (av1.size() == av2.size() && av1.concepts <= av2.concepts);
  const AnnotationVector& large = keep ? av1 : av2;
  const AnnotationVector& small = keep ? av2 : av1;

  std::vector<double> scores(static_cast<size_t>(small.size()) * large.size());
  for (int i = 0; i < small.size(); ++i) {
    for (int j = 0; j < large.size(); ++j) {
      ConceptIndex ci = small.concepts[i], cj = large.concepts[j];
      ConceptIndex anc = taxonomy.lcs(ci, cj);
      scores[static_cast<size_t>(i) * large.size() + j] =
          2.0 * static_cast<double>(taxonomy.depth_nodes(anc)) /
          static_cast<double>(taxonomy.depth_nodes(ci) + taxonomy.depth_nodes(cj));
    }
  }
  const double total = max_weight_assignment(scores, small.size(), large.size()).total;
  return total / static_cast<double>(large.size());
}

double haase_sym(const Taxonomy& taxonomy, const AnnotationVector& av1,
                 const AnnotationVector& av2, double alpha, double beta) {
  require_non_empty(av1);
  require_non_empty(av2);
  return 0.5 * (haase_directed(taxonomy, av1, av2, alpha, beta) +
                haase_directed(taxonomy, av2, av1, alpha, beta));
}

}  // namespace ontosim
