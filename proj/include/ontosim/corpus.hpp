#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontosim/taxonomy.hpp"

namespace ontosim {

/// Concepts describing one resource; non-empty, no duplicates, all valid in
/// the bound taxonomy. Order carries no meaning.
struct AnnotationVector {
  std::vector<ConceptIndex> concepts;

  int size() const { return static_cast<int>(concepts.size()); }
};

struct Resource {
  std::string id;
  AnnotationVector av;
  std::map<std::string, std::string> meta;
};

// The annotated-resource dataset plus the extensional statistics the
// weighting methods consume: n(c+) and |AV_{c+}| are aggregated once at
// construction and are immutable afterwards.
class Corpus {
 public:
  /// One JSON record per line: {"id": "...", "annotations": ["...", ...],
  /// "meta": {...}}. meta is optional. Rejects empty files, duplicate
  /// resource ids, duplicate annotations within a record, unknown concepts.
  static Corpus load(const std::string& path, std::shared_ptr<const Taxonomy> taxonomy);
  static Corpus parse(std::string_view text, std::shared_ptr<const Taxonomy> taxonomy,
                      const std::string& origin = "<string>");
  static Corpus from_resources(std::shared_ptr<const Taxonomy> taxonomy,
                               std::vector<Resource> resources);

  /// Canonical serialization: records sorted by id, annotation lists sorted
  /// lexicographically. load(save(c)) round-trips byte-identically.
  std::string serialize() const;
  void save(const std::string& path) const;

  const Taxonomy& taxonomy() const { return *tax_; }
  const std::shared_ptr<const Taxonomy>& taxonomy_ptr() const { return tax_; }

  int size() const { return static_cast<int>(resources_.size()); }
  const Resource& resource(int i) const { return resources_[i]; }
  const std::vector<Resource>& resources() const { return resources_; }

  /// Resource lookup; -1 if absent.
  int find_resource(std::string_view id) const noexcept;
  /// Resource lookup; throws UnknownResource.
  int resource_index(std::string_view id) const;

  /// N: total concept occurrences over all annotation vectors.
  long long total_occurrences() const { return total_; }
  /// n(c+): occurrences of c and its descendants across all vectors.
  long long occurrences_plus(ConceptIndex c) const { return occ_plus_[c]; }
  /// |AV_{c+}|: vectors containing c or a descendant, each counted once.
  long long vectors_containing_plus(ConceptIndex c) const { return av_plus_[c]; }

  /// IDF(c) = ln(|AV| / |AV_{c+}|); +infinity when |AV_{c+}| = 0.
  double idf(ConceptIndex c) const;

 private:
  Corpus() = default;
  void build_stats();

  std::shared_ptr<const Taxonomy> tax_;
  std::vector<Resource> resources_;
  std::unordered_map<std::string, int> by_id_;
  std::vector<long long> occ_plus_;
  std::vector<long long> av_plus_;
  long long total_ = 0;
};

}  // namespace ontosim
