#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ontosim/corpus.hpp"
#include "ontosim/taxonomy.hpp"

namespace ontosim {

// CF and AF derive concept probabilities from corpus frequencies
// (extensional); TD and IIC need only the taxonomy (intensional).
enum class WeightingMethod { CF, AF, TD, IIC };

const char* to_string(WeightingMethod m);
WeightingMethod weighting_from_string(std::string_view s);

// Taxonomy plus per-concept weight and information content under one method.
// For CF/AF/TD, ic(c) = -ln(weight(c)), +infinity when weight(c) = 0. For
// IIC the ic values come from the descendant-count formula directly and the
// weight map stays empty. ic(root) = 0 under every method.
class WeightedTaxonomy {
 public:
  WeightedTaxonomy(std::shared_ptr<const Taxonomy> taxonomy, WeightingMethod method,
                   std::vector<double> weights, std::vector<double> ic);

  /// Taxonomy with explicit ic values, for callers that weight externally.
  static WeightedTaxonomy with_ic(std::shared_ptr<const Taxonomy> taxonomy,
                                  std::vector<double> ic);

  const Taxonomy& taxonomy() const { return *tax_; }
  const std::shared_ptr<const Taxonomy>& taxonomy_ptr() const { return tax_; }
  WeightingMethod method() const { return method_; }

  bool has_weights() const { return !weights_.empty(); }
  double weight(ConceptIndex c) const { return weights_[c]; }
  double ic(ConceptIndex c) const { return ic_[c]; }

 private:
  std::shared_ptr<const Taxonomy> tax_;
  WeightingMethod method_;
  std::vector<double> weights_;
  std::vector<double> ic_;
};

/// Weights every concept under the given method. CF/AF require a non-empty
/// corpus (MissingCorpus / EmptyCorpus otherwise); TD/IIC ignore it.
WeightedTaxonomy weigh(std::shared_ptr<const Taxonomy> taxonomy, WeightingMethod method,
                       const Corpus* corpus = nullptr);

/// w_CF(c) = n(c+) / N.
double w_cf(const Corpus& corpus, ConceptIndex c);

/// w_AF(c) = |AV_{c+}| / |AV| = e^{-IDF(c)}.
double w_af(const Corpus& corpus, ConceptIndex c);

/// w_TD(root) = 1; otherwise the parent's weight split evenly among its
/// children.
double w_td(const Taxonomy& taxonomy, ConceptIndex c);

/// iic(c) = 1 - log(|desc(c)|+1) / log(|C|), in [0,1]; leaves get 1, the
/// root 0. Throws DegenerateTaxonomy for a single-concept taxonomy.
double iic(const Taxonomy& taxonomy, ConceptIndex c);

}  // namespace ontosim
