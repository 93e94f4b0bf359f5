#include "ontosim/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace ontosim {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Splits one edge-list record into (child, parent). Ids are kept byte-exact;
// only a trailing \r is stripped before the split.
bool split_record(std::string_view line, std::string_view& child, std::string_view& parent,
                  const std::string& origin, long long lineno) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (is_blank(line) || line.front() == '#') return false;
  auto tab = line.find('\t');
  if (tab == std::string_view::npos)
    throw Error(ErrorKind::Parse,
                origin + ":" + std::to_string(lineno) + ": expected child<TAB>parent");
  child = line.substr(0, tab);
  parent = line.substr(tab + 1);
  if (child.empty() || parent.empty() || parent.find('\t') != std::string_view::npos)
    throw Error(ErrorKind::Parse,
                origin + ":" + std::to_string(lineno) + ": malformed record");
  return true;
}

}  // namespace

Taxonomy::Taxonomy(std::vector<std::string> ids, std::vector<ConceptIndex> parents)
    : ids_(std::move(ids)), parent_(std::move(parents)) {
  const int n = static_cast<int>(ids_.size());
  if (n == 0) throw Error(ErrorKind::Structure, "taxonomy has no concepts");
  if (parent_.size() != ids_.size())
    throw Error(ErrorKind::Structure, "ids/parents size mismatch");

  index_.reserve(ids_.size());
  for (int i = 0; i < n; ++i) {
    if (ids_[i].empty())
      throw Error(ErrorKind::Parse, "empty concept id");
    if (ids_[i].find('\t') != std::string::npos || ids_[i].find('\n') != std::string::npos)
      throw Error(ErrorKind::Parse, "concept id contains tab or newline", ids_[i]);
    if (!index_.emplace(ids_[i], i).second)
      throw Error(ErrorKind::Structure, "duplicate concept id: " + ids_[i], ids_[i]);
  }

  children_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    ConceptIndex p = parent_[i];
    if (p == kNoConcept) {
      if (root_ != kNoConcept)
        throw Error(ErrorKind::Structure,
                    "multiple roots: " + ids_[root_] + " and " + ids_[i], ids_[i]);
      root_ = i;
    } else {
      if (p < 0 || p >= n)
        throw Error(ErrorKind::Structure, "parent index out of range for " + ids_[i], ids_[i]);
      children_[p].push_back(i);
    }
  }
  if (root_ == kNoConcept) throw Error(ErrorKind::Structure, "no root concept");

  // Preorder walk from the root; anything left unvisited sits on a cycle or
  // hangs off one.
  depth_.assign(n, -1);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  preorder_.reserve(n);
  std::vector<std::pair<ConceptIndex, size_t>> stack;
  depth_[root_] = 0;
  stack.emplace_back(root_, 0);
  int clock = 0;
  tin_[root_] = clock++;
  preorder_.push_back(root_);
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    if (next_child < children_[node].size()) {
      ConceptIndex c = children_[node][next_child++];
      depth_[c] = depth_[node] + 1;
      tin_[c] = clock++;
      preorder_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      tout_[node] = clock;
      stack.pop_back();
    }
  }
  if (static_cast<int>(preorder_.size()) != n) {
    for (int i = 0; i < n; ++i)
      if (depth_[i] < 0)
        throw Error(ErrorKind::Structure,
                    "concept unreachable from root (cycle?): " + ids_[i], ids_[i]);
  }
  max_depth_ = *std::max_element(depth_.begin(), depth_.end());

  subtree_.assign(n, 1);
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it)
    if (parent_[*it] != kNoConcept) subtree_[parent_[*it]] += subtree_[*it];
}

Taxonomy Taxonomy::load(const std::string& path) { return parse(read_file(path), path); }

Taxonomy Taxonomy::parse(std::string_view text, const std::string& origin) {
  // First pass assigns indices in file order so ids_ keeps the input order.
  std::vector<std::string> ids;
  std::vector<std::string> parent_ids;
  std::unordered_map<std::string, int> seen;
  long long lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::string_view child, parent;
    if (!split_record(line, child, parent, origin, lineno)) continue;
    if (seen.count(std::string(child)))
      throw Error(ErrorKind::Structure, origin + ": duplicate concept id: " + std::string(child),
                  std::string(child));
    seen.emplace(std::string(child), static_cast<int>(ids.size()));
    ids.emplace_back(child);
    parent_ids.emplace_back(parent);
  }
  if (ids.empty()) throw Error(ErrorKind::Parse, origin + ": empty taxonomy file");

  std::vector<ConceptIndex> parents(ids.size(), kNoConcept);
  for (size_t i = 0; i < ids.size(); ++i) {
    if (parent_ids[i] == "-") continue;
    auto it = seen.find(parent_ids[i]);
    if (it == seen.end())
      throw Error(ErrorKind::Structure,
                  origin + ": parent of " + ids[i] + " never declared: " + parent_ids[i],
                  parent_ids[i]);
    parents[i] = it->second;
  }
  return Taxonomy(std::move(ids), std::move(parents));
}

std::string Taxonomy::serialize() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    out += ids_[i];
    out += '\t';
    out += parent_[i] == kNoConcept ? "-" : ids_[parent_[i]];
    out += '\n';
  }
  return out;
}

ConceptIndex Taxonomy::index_of(std::string_view id) const {
  ConceptIndex c = find(id);
  if (c == kNoConcept)
    throw Error(ErrorKind::UnknownConcept, "unknown concept: " + std::string(id), std::string(id));
  return c;
}

ConceptIndex Taxonomy::find(std::string_view id) const noexcept {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? kNoConcept : it->second;
}

std::vector<ConceptIndex> Taxonomy::descendants(ConceptIndex c) const {
  check_index(c);
  // Descendants are contiguous after c in preorder.
  auto begin = std::find(preorder_.begin(), preorder_.end(), c) + 1;
  return {begin, begin + descendant_count(c)};
}

ConceptIndex Taxonomy::lcs(ConceptIndex a, ConceptIndex b) const {
  check_index(a);
  check_index(b);
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

int Taxonomy::path_length_edges(ConceptIndex a, ConceptIndex b) const {
  ConceptIndex anc = lcs(a, b);
  return depth_[a] + depth_[b] - 2 * depth_[anc];
}

void Taxonomy::check_index(ConceptIndex c) const {
  if (c < 0 || c >= size())
    throw Error(ErrorKind::UnknownConcept, "concept index out of range: " + std::to_string(c));
}

DagScheme DagScheme::load(const std::string& path) { return parse(read_file(path), path); }

DagScheme DagScheme::parse(std::string_view text, const std::string& origin) {
  DagScheme dag;
  std::unordered_map<int, bool> declared_root;
  long long lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::string_view child, parent;
    if (!split_record(line, child, parent, origin, lineno)) continue;
    int c = dag.add_node(child);
    if (parent == "-") {
      if (!dag.parents_[c].empty())
        throw Error(ErrorKind::Structure,
                    origin + ": node declared both parentless and child: " + std::string(child),
                    std::string(child));
      declared_root[c] = true;
    } else {
      if (declared_root.count(c))
        throw Error(ErrorKind::Structure,
                    origin + ": node declared both parentless and child: " + std::string(child),
                    std::string(child));
      dag.add_edge(c, dag.add_node(parent));
    }
  }
  if (dag.size() == 0) throw Error(ErrorKind::Parse, origin + ": empty scheme file");
  return dag;
}

int DagScheme::add_node(std::string_view label) {
  auto it = index_.find(std::string(label));
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(labels_.size());
  index_.emplace(std::string(label), id);
  labels_.emplace_back(label);
  parents_.emplace_back();
  return id;
}

void DagScheme::add_edge(int child, int parent) {
  auto& ps = parents_[child];
  if (std::find(ps.begin(), ps.end(), parent) == ps.end()) ps.push_back(parent);
}

Taxonomy treeify_dag(const DagScheme& dag, const std::string& separator,
                     const std::string& root_label, TreeifyCounts* counts) {
  const int n = dag.size();

  // Kahn order, parents before children, so each node's root-paths extend the
  // already-expanded paths of its parents.
  std::vector<std::vector<int>> children(n);
  std::vector<int> pending(n, 0);
  std::deque<int> ready;
  for (int v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(dag.parents(v).size());
    if (pending[v] == 0) ready.push_back(v);
    for (int p : dag.parents(v)) children[p].push_back(v);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (int c : children[v])
      if (--pending[c] == 0) ready.push_back(c);
  }
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorKind::Cycle, "classification scheme contains a cycle");

  std::vector<std::string> ids;
  std::vector<ConceptIndex> parents;
  ids.push_back(root_label);
  parents.push_back(kNoConcept);

  // Concept indices of each node's root-paths, ordered by (parent, parent's
  // path) for determinism.
  std::vector<std::vector<int>> path_concepts(n);
  for (int v : order) {
    if (dag.parents(v).empty()) {
      ids.push_back(dag.label(v) + separator + root_label);
      parents.push_back(0);
      path_concepts[v].push_back(static_cast<int>(ids.size()) - 1);
      continue;
    }
    for (int p : dag.parents(v)) {
      for (int pc : path_concepts[p]) {
        ids.push_back(dag.label(v) + separator + ids[pc]);
        parents.push_back(pc);
        path_concepts[v].push_back(static_cast<int>(ids.size()) - 1);
      }
    }
  }

  if (counts) {
    counts->dag_nodes = n;
    counts->total_concepts = static_cast<long long>(ids.size());
    counts->path_concepts = counts->total_concepts - 1;
    counts->isa_edges = counts->path_concepts;
  }
  return Taxonomy(std::move(ids), std::move(parents));
}

}  // namespace ontosim
