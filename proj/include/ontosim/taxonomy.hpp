#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontosim/errors.hpp"

namespace ontosim {

/// Dense index of a concept inside one Taxonomy.
using ConceptIndex = int;
inline constexpr ConceptIndex kNoConcept = -1;

// Immutable rooted tree of concepts. Construction validates the tree shape
// (single root, acyclic, everything reachable); afterwards the structure is
// read-only and safe for unrestricted concurrent reads.
class Taxonomy {
 public:
  /// Concept ids paired with a parent index per concept (kNoConcept marks the
  /// root). Throws StructureError / Parse on invalid input.
  Taxonomy(std::vector<std::string> ids, std::vector<ConceptIndex> parents);

  /// Reads the edge-list format: one `child<TAB>parent` record per line, the
  /// root declared with parent `-`, `#` comments and blank lines ignored.
  /// Ids are preserved byte-exactly.
  static Taxonomy load(const std::string& path);
  static Taxonomy parse(std::string_view text, const std::string& origin = "<string>");

  /// Canonical edge-list serialization (one record per concept, file order).
  std::string serialize() const;

  int size() const { return static_cast<int>(ids_.size()); }
  ConceptIndex root() const { return root_; }

  const std::string& id_of(ConceptIndex c) const { return ids_[c]; }
  /// Index lookup; throws UnknownConcept.
  ConceptIndex index_of(std::string_view id) const;
  /// Index lookup; kNoConcept if absent.
  ConceptIndex find(std::string_view id) const noexcept;
  bool contains(std::string_view id) const noexcept { return find(id) != kNoConcept; }

  ConceptIndex parent(ConceptIndex c) const { return parent_[c]; }
  const std::vector<ConceptIndex>& children(ConceptIndex c) const { return children_[c]; }

  /// depth_edges(root) == 0; depth_nodes(root) == 1.
  int depth_edges(ConceptIndex c) const { return depth_[c]; }
  int depth_nodes(ConceptIndex c) const { return depth_[c] + 1; }
  int max_depth_edges() const { return max_depth_; }

  /// Number of descendants of c, excluding c.
  int descendant_count(ConceptIndex c) const { return subtree_[c] - 1; }
  /// Descendants of c, excluding c, in preorder.
  std::vector<ConceptIndex> descendants(ConceptIndex c) const;

  bool is_ancestor_or_self(ConceptIndex ancestor, ConceptIndex c) const {
    return tin_[ancestor] <= tin_[c] && tout_[c] <= tout_[ancestor];
  }

  /// Least common subsumer; deepest ancestor-or-self of both (unique in a tree).
  ConceptIndex lcs(ConceptIndex a, ConceptIndex b) const;

  /// Edges on the unique tree path between a and b; 0 for a == b.
  int path_length_edges(ConceptIndex a, ConceptIndex b) const;

  /// Concept indices ordered so every node appears before its descendants.
  const std::vector<ConceptIndex>& preorder() const { return preorder_; }

 private:
  void check_index(ConceptIndex c) const;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, ConceptIndex> index_;
  std::vector<ConceptIndex> parent_;
  std::vector<std::vector<ConceptIndex>> children_;
  std::vector<int> depth_;
  std::vector<int> subtree_;
  std::vector<int> tin_, tout_;
  std::vector<ConceptIndex> preorder_;
  ConceptIndex root_ = kNoConcept;
  int max_depth_ = 0;
};

// A multi-parent classification scheme (node labels + parent sets), the raw
// material treeify_dag expands into a tree. Nodes with no parents are roots.
class DagScheme {
 public:
  /// Same line format as the taxonomy edge list, but a child may appear on
  /// several lines (one per parent) and `node<TAB>-` declares a parentless
  /// node. Nodes first seen as parents are created implicitly.
  static DagScheme load(const std::string& path);
  static DagScheme parse(std::string_view text, const std::string& origin = "<string>");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int node) const { return labels_[node]; }
  const std::vector<int>& parents(int node) const { return parents_[node]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Adds the node if absent, returns its index.
  int add_node(std::string_view label);
  /// Records `parent` as a parent of `child` (duplicates collapse).
  void add_edge(int child, int parent);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> parents_;
  std::unordered_map<std::string, int> index_;
};

struct TreeifyCounts {
  long long dag_nodes = 0;
  long long path_concepts = 0;   // excludes the synthetic root
  long long total_concepts = 0;  // includes the synthetic root
  long long isa_edges = 0;       // == path_concepts in a tree
};

/// Expands every path of the scheme that ends in a root into one concept whose
/// id is the path labels joined leaf-to-root by `separator`, with
/// `root_label` appended; a synthetic root named `root_label` closes the tree.
/// A node with k distinct root-paths yields k concepts. Throws CycleError.
Taxonomy treeify_dag(const DagScheme& dag, const std::string& separator,
                     const std::string& root_label, TreeifyCounts* counts = nullptr);

}  // namespace ontosim
