#include "ontosim/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ontosim/io.hpp"

namespace ontosim {

using nlohmann::json;

Corpus Corpus::load(const std::string& path, std::shared_ptr<const Taxonomy> taxonomy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), std::move(taxonomy), path);
}

Corpus Corpus::parse(std::string_view text, std::shared_ptr<const Taxonomy> taxonomy,
                     const std::string& origin) {
  std::vector<Resource> resources;
  long long lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const std::string where = origin + ":" + std::to_string(lineno);
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object())
      throw Error(ErrorKind::Parse, where + ": not a JSON object");
    if (!rec.contains("id") || !rec["id"].is_string())
      throw Error(ErrorKind::Parse, where + ": missing string field \"id\"");
    if (!rec.contains("annotations") || !rec["annotations"].is_array())
      throw Error(ErrorKind::Parse, where + ": missing array field \"annotations\"");

    Resource r;
    r.id = rec["id"].get<std::string>();
    if (r.id.empty()) throw Error(ErrorKind::Parse, where + ": empty resource id");
    for (const auto& a : rec["annotations"]) {
      if (!a.is_string())
        throw Error(ErrorKind::Parse, where + ": annotations must be strings", r.id);
      const std::string cid = a.get<std::string>();
      ConceptIndex c = taxonomy->find(cid);
      if (c == kNoConcept)
        throw Error(ErrorKind::UnknownConcept,
                    where + ": resource " + r.id + " annotates unknown concept: " + cid, cid);
      if (std::find(r.av.concepts.begin(), r.av.concepts.end(), c) != r.av.concepts.end())
        throw Error(ErrorKind::Parse,
                    where + ": duplicate concept " + cid + " in resource " + r.id, r.id);
      r.av.concepts.push_back(c);
    }
    if (r.av.concepts.empty())
      throw Error(ErrorKind::Parse, where + ": resource " + r.id + " has no annotations", r.id);
    if (rec.contains("meta")) {
      if (!rec["meta"].is_object())
        throw Error(ErrorKind::Parse, where + ": \"meta\" must be an object", r.id);
      for (auto& [k, v] : rec["meta"].items()) {
        if (!v.is_string())
          throw Error(ErrorKind::Parse, where + ": meta values must be strings", r.id);
        r.meta[k] = v.get<std::string>();
      }
    }
    resources.push_back(std::move(r));
  }
  if (resources.empty()) throw Error(ErrorKind::Parse, origin + ": empty corpus");
  return from_resources(std::move(taxonomy), std::move(resources));
}

Corpus Corpus::from_resources(std::shared_ptr<const Taxonomy> taxonomy,
                              std::vector<Resource> resources) {
  if (resources.empty()) throw Error(ErrorKind::EmptyCorpus, "corpus has no resources");
  Corpus corpus;
  corpus.tax_ = std::move(taxonomy);
  corpus.resources_ = std::move(resources);
  corpus.by_id_.reserve(corpus.resources_.size());
  for (int i = 0; i < corpus.size(); ++i) {
    const Resource& r = corpus.resources_[i];
    if (r.av.concepts.empty())
      throw Error(ErrorKind::EmptyVector, "resource has empty annotation vector: " + r.id, r.id);
    for (ConceptIndex c : r.av.concepts)
      if (c < 0 || c >= corpus.tax_->size())
        throw Error(ErrorKind::UnknownConcept, "annotation outside taxonomy in " + r.id, r.id);
    if (!corpus.by_id_.emplace(r.id, i).second)
      throw Error(ErrorKind::DuplicateResourceId, "duplicate resource id: " + r.id, r.id);
  }
  corpus.build_stats();
  return corpus;
}

void Corpus::build_stats() {
  const int n = tax_->size();
  occ_plus_.assign(n, 0);
  av_plus_.assign(n, 0);
  total_ = 0;

  for (const Resource& r : resources_) total_ += r.av.size();

  // n(c+): per-concept occurrence counts pushed up the tree, children first.
  for (const Resource& r : resources_)
    for (ConceptIndex c : r.av.concepts) ++occ_plus_[c];
  const auto& pre = tax_->preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it)
    if (tax_->parent(*it) != kNoConcept) occ_plus_[tax_->parent(*it)] += occ_plus_[*it];

  // |AV_{c+}|: each vector stamps its concepts' ancestor-or-self sets once.
  std::vector<int> stamp(n, -1);
  for (int i = 0; i < size(); ++i) {
    for (ConceptIndex c : resources_[i].av.concepts) {
      for (ConceptIndex a = c; a != kNoConcept && stamp[a] != i; a = tax_->parent(a)) {
        stamp[a] = i;
        ++av_plus_[a];
      }
    }
  }
}

std::string Corpus::serialize() const {
  std::vector<int> order(resources_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return resources_[a].id < resources_[b].id; });

  std::string out;
  for (int i : order) {
    const Resource& r = resources_[i];
    std::vector<std::string> ann;
    ann.reserve(r.av.concepts.size());
    for (ConceptIndex c : r.av.concepts) ann.push_back(tax_->id_of(c));
    std::sort(ann.begin(), ann.end());
    json rec;
    rec["id"] = r.id;
    rec["annotations"] = ann;
    if (!r.meta.empty()) rec["meta"] = r.meta;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

void Corpus::save(const std::string& path) const { write_file_atomic(path, serialize()); }

int Corpus::find_resource(std::string_view id) const noexcept {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? -1 : it->second;
}

int Corpus::resource_index(std::string_view id) const {
  int i = find_resource(id);
  if (i < 0)
    throw Error(ErrorKind::UnknownResource, "unknown resource: " + std::string(id),
                std::string(id));
  return i;
}

double Corpus::idf(ConceptIndex c) const {
  if (av_plus_[c] == 0) return std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(size()) / static_cast<double>(av_plus_[c]));
}

}  // namespace ontosim
