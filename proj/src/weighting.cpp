#include "ontosim/weighting.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace ontosim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double ic_of_weight(double w) { return w > 0 ? 0.0 - std::log(w) : kInf; }
}  // namespace

const char* to_string(WeightingMethod m) {
  switch (m) {
    case WeightingMethod::CF: return "CF";
    case WeightingMethod::AF: return "AF";
    case WeightingMethod::TD: return "TD";
    case WeightingMethod::IIC: return "IIC";
  }
  return "?";
}

WeightingMethod weighting_from_string(std::string_view s) {
  std::string up;
  for (char c : s) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "CF") return WeightingMethod::CF;
  if (up == "AF") return WeightingMethod::AF;
  if (up == "TD") return WeightingMethod::TD;
  if (up == "IIC") return WeightingMethod::IIC;
  throw Error(ErrorKind::Parse, "unknown weighting method: " + std::string(s), std::string(s));
}

WeightedTaxonomy::WeightedTaxonomy(std::shared_ptr<const Taxonomy> taxonomy,
                                   WeightingMethod method, std::vector<double> weights,
                                   std::vector<double> ic)
    : tax_(std::move(taxonomy)), method_(method), weights_(std::move(weights)),
      ic_(std::move(ic)) {
  if (ic_.size() != static_cast<size_t>(tax_->size()))
    throw Error(ErrorKind::Structure, "ic vector size does not match taxonomy");
  if (!weights_.empty() && weights_.size() != ic_.size())
    throw Error(ErrorKind::Structure, "weight vector size does not match taxonomy");
}

WeightedTaxonomy WeightedTaxonomy::with_ic(std::shared_ptr<const Taxonomy> taxonomy,
                                           std::vector<double> ic) {
  return WeightedTaxonomy(std::move(taxonomy), WeightingMethod::IIC, {}, std::move(ic));
}

WeightedTaxonomy weigh(std::shared_ptr<const Taxonomy> taxonomy, WeightingMethod method,
                       const Corpus* corpus) {
  const Taxonomy& t = *taxonomy;
  const int n = t.size();

  if (method == WeightingMethod::CF || method == WeightingMethod::AF) {
    if (!corpus)
      throw Error(ErrorKind::MissingCorpus,
                  std::string(to_string(method)) + " weighting needs a corpus");
    if (corpus->size() == 0) throw Error(ErrorKind::EmptyCorpus, "corpus has no resources");
    std::vector<double> w(n), ic(n);
    for (ConceptIndex c = 0; c < n; ++c) {
      w[c] = method == WeightingMethod::CF ? w_cf(*corpus, c) : w_af(*corpus, c);
      ic[c] = ic_of_weight(w[c]);
    }
    return WeightedTaxonomy(std::move(taxonomy), method, std::move(w), std::move(ic));
  }

  if (method == WeightingMethod::TD) {
    // One preorder pass: parents are weighted before their children.
    std::vector<double> w(n), ic(n);
    for (ConceptIndex c : t.preorder()) {
      if (t.parent(c) == kNoConcept)
        w[c] = 1.0;
      else
        w[c] = w[t.parent(c)] / static_cast<double>(t.children(t.parent(c)).size());
      ic[c] = ic_of_weight(w[c]);
    }
    return WeightedTaxonomy(std::move(taxonomy), method, std::move(w), std::move(ic));
  }

  std::vector<double> ic(n);
  for (ConceptIndex c = 0; c < n; ++c) ic[c] = iic(t, c);
  return WeightedTaxonomy(std::move(taxonomy), WeightingMethod::IIC, {}, std::move(ic));
}

double w_cf(const Corpus& corpus, ConceptIndex c) {
  return static_cast<double>(corpus.occurrences_plus(c)) /
         static_cast<double>(corpus.total_occurrences());
}

double w_af(const Corpus& corpus, ConceptIndex c) {
  return static_cast<double>(corpus.vectors_containing_plus(c)) /
         static_cast<double>(corpus.size());
}

double w_td(const Taxonomy& taxonomy, ConceptIndex c) {
  double w = 1.0;
  for (ConceptIndex x = c; taxonomy.parent(x) != kNoConcept; x = taxonomy.parent(x))
    w /= static_cast<double>(taxonomy.children(taxonomy.parent(x)).size());
  return w;
}

double iic(const Taxonomy& taxonomy, ConceptIndex c) {
  if (taxonomy.size() == 1)
    throw Error(ErrorKind::DegenerateTaxonomy,
                "iic undefined on a single-concept taxonomy (log(1) denominator)");
  return 1.0 - std::log(static_cast<double>(taxonomy.descendant_count(c) + 1)) /
                   std::log(static_cast<double>(taxonomy.size()));
}

}  // namespace ontosim
