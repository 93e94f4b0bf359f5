#pragma once

#include <string_view>
#include <vector>

#include "ontosim/corpus.hpp"
#include "ontosim/weighting.hpp"

namespace ontosim {

// Denominator of the vector-similarity ratio when the two annotation vectors
// differ in cardinality: max privileges richer annotations, min compacter
// ones, ave/gav sit between.
enum class NormFactor { Max, Min, Ave, Gav };

const char* to_string(NormFactor f);
NormFactor norm_from_string(std::string_view s);
double norm_value(NormFactor f, int n, int m);

/// Concept-pair similarity: 2*IC(lcs) / (IC(c1)+IC(c2)), with the degenerate
/// cases pinned: c1 == c2 -> 1; zero denominator -> 0; any infinite IC on
/// distinct concepts -> 0. Always in [0,1].
double consim(const WeightedTaxonomy& wt, ConceptIndex c1, ConceptIndex c2);

struct MatchedPair {
  int left;    // index into av1
  int right;   // index into av2
  double value;
};

struct Matching {
  std::vector<MatchedPair> pairs;  // exactly min(n, m), zero-value pairs kept
  double total = 0.0;
};

/// The consim-maximal one-to-one pairing between the two vectors. Among
/// equally-optimal pairings the lexicographically smallest index pairs are
/// reported (up to 1e-9 slack), so the output is deterministic.
Matching best_matching(const WeightedTaxonomy& wt, const AnnotationVector& av1,
                       const AnnotationVector& av2);

/// Vector similarity: maximal consim pairing total divided by the
/// normalization factor. Symmetric bit-for-bit (computed in a canonical
/// argument order), in [0,1].
double semsim(const WeightedTaxonomy& wt, const AnnotationVector& av1,
              const AnnotationVector& av2, NormFactor norm);

/// Pairing total alone (the ratio's numerator).
double semsim_numerator(const WeightedTaxonomy& wt, const AnnotationVector& av1,
                        const AnnotationVector& av2);

}  // namespace ontosim
