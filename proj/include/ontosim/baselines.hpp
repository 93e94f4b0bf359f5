#pragma once

#include "ontosim/corpus.hpp"
#include "ontosim/taxonomy.hpp"

namespace ontosim {

/// 2|a ∩ b| / (|a| + |b|), set semantics over concept identity.
double dice(const AnnotationVector& av1, const AnnotationVector& av2);

/// |a ∩ b| / |a ∪ b|.
double jaccard(const AnnotationVector& av1, const AnnotationVector& av2);

/// (e^|∩| - 1) / ((e^|∩| + 1) * (|a−b| + |b−a| + 1)); in [0,1).
double sigmoid(const AnnotationVector& av1, const AnnotationVector& av2);

struct WnsimOptions {
  /// Divide the path term by ln(2*maxdepth) so it lands in [0,1]. Off by
  /// default: the plain term with natural log and edge-counted shortest path
  /// (floored to 1 for identical concepts).
  bool normalized = false;
};

/// IDF-weighted best-pair path similarity, symmetrized by averaging both
/// directions. Values in [0, ln(2*maxdepth)] (or [0,1] when normalized).
/// Throws ZeroIDFSum when a vector's concepts all appear in every annotation
/// vector, UndefinedIdf when one never appears at all.
double wnsim_sym(const Taxonomy& taxonomy, const Corpus& idf_source,
                 const AnnotationVector& av1, const AnnotationVector& av2,
                 WnsimOptions options = {});

/// Wu-Palmer scores (node-counted depth, root = 1) over the maximum-weight
/// one-to-one pairing of the smaller vector into the larger; unpaired
/// concepts contribute 0 and the sum is divided by the larger cardinality.
double rezaei_franti(const Taxonomy& taxonomy, const AnnotationVector& av1,
                     const AnnotationVector& av2);

/// Best-pair e^{-alpha*l} * tanh(beta*h) scores (l = path edges, h = edge
/// depth of the lcs; 1 for identical concepts), averaged per direction and
/// symmetrized. In [0,1].
double haase_sym(const Taxonomy& taxonomy, const AnnotationVector& av1,
                 const AnnotationVector& av2, double alpha = 0.2, double beta = 0.6);

}  // namespace ontosim
