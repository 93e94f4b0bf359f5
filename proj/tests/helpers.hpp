// Shared fixtures, generators and independent oracles for the test suites.
// Oracles deliberately avoid the library's own algorithms: matching totals
// come from exhaustive enumeration, path lengths from BFS, the Student-t CDF
// from adaptive Simpson integration of the density.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "ontosim/corpus.hpp"
#include "ontosim/rng.hpp"
#include "ontosim/taxonomy.hpp"
#include "ontosim/weighting.hpp"

namespace testutil {

using namespace ontosim;

// --- fixtures ----------------------------------------------------------------

inline std::shared_ptr<const Taxonomy> small_taxonomy() {
  return std::make_shared<const Taxonomy>(Taxonomy::parse(
      "Person\t-\nWorker\tPerson\nStudent\tPerson\nEmployee\tWorker\nFreelance\tWorker\n"));
}

inline Corpus small_corpus(std::shared_ptr<const Taxonomy> tax) {
  return Corpus::parse(
      "{\"id\": \"r1\", \"annotations\": [\"Worker\", \"Student\"]}\n"
      "{\"id\": \"r2\", \"annotations\": [\"Employee\"]}\n"
      "{\"id\": \"r3\", \"annotations\": [\"Student\"]}\n"
      "{\"id\": \"r4\", \"annotations\": [\"Employee\", \"Freelance\"]}\n",
      std::move(tax));
}

// --- generators ----------------------------------------------------------------

/// Random tree: node i's parent is uniform over 0..i-1.
inline std::shared_ptr<const Taxonomy> random_taxonomy(int concepts, SplitMix64& rng) {
  std::vector<std::string> ids;
  std::vector<ConceptIndex> parents;
  for (int i = 0; i < concepts; ++i) {
    ids.push_back("c" + std::to_string(i));
    parents.push_back(i == 0 ? kNoConcept
                             : static_cast<ConceptIndex>(rng.below(static_cast<std::uint64_t>(i))));
  }
  return std::make_shared<const Taxonomy>(std::move(ids), std::move(parents));
}

/// Random monotone information content: the root gets 0, children add a
/// positive increment, and `inf_fraction` of leaves-of-the-walk become
/// zero-weight concepts (infinite ic).
inline WeightedTaxonomy random_weighted(std::shared_ptr<const Taxonomy> tax, SplitMix64& rng,
                                        double inf_fraction = 0.0) {
  const Taxonomy& t = *tax;
  std::vector<double> ic(t.size(), 0.0);
  for (ConceptIndex c : t.preorder()) {
    if (t.parent(c) == kNoConcept) continue;
    ic[c] = ic[t.parent(c)] + 0.05 + rng.uniform01();
    if (inf_fraction > 0.0 && rng.uniform01() < inf_fraction)
      ic[c] = std::numeric_limits<double>::infinity();
  }
  // Keep ic monotone: descendants of an infinite node are infinite too.
  for (ConceptIndex c : t.preorder())
    if (t.parent(c) != kNoConcept && std::isinf(ic[t.parent(c)]))
      ic[c] = std::numeric_limits<double>::infinity();
  return WeightedTaxonomy::with_ic(std::move(tax), std::move(ic));
}

/// Random annotation vector of n distinct concepts (clamped to the available
/// pool); can exclude the root (WNSim's IDF is 0 there by construction).
inline AnnotationVector random_av(const Taxonomy& t, int n, SplitMix64& rng,
                                  bool exclude_root = false) {
  n = std::min(n, t.size() - (exclude_root ? 1 : 0));
  AnnotationVector av;
  std::vector<char> used(t.size(), 0);
  while (static_cast<int>(av.concepts.size()) < n) {
    auto c = static_cast<ConceptIndex>(rng.below(static_cast<std::uint64_t>(t.size())));
    if (used[c] || (exclude_root && c == t.root())) continue;
    used[c] = 1;
    av.concepts.push_back(c);
  }
  return av;
}

/// Random corpus over a two-branch taxonomy, padded with one singleton
/// resource per non-root concept. The padding pins every non-root IDF into
/// (0, ln|AV|): each concept is annotated somewhere, and no concept's closure
/// can cover the other branch's singletons. WNSim is then total on any
/// root-free vector pair.
inline Corpus random_corpus(std::shared_ptr<const Taxonomy> tax, int resources, int max_av,
                            SplitMix64& rng) {
  std::vector<Resource> rs;
  for (int i = 0; i < resources; ++i) {
    Resource r;
    r.id = "r" + std::to_string(i);
    r.av = random_av(*tax, 1 + static_cast<int>(rng.below(max_av)), rng, true);
    rs.push_back(std::move(r));
  }
  for (ConceptIndex c = 0; c < tax->size(); ++c) {
    if (c == tax->root()) continue;
    Resource r;
    r.id = "cover" + std::to_string(c);
    r.av.concepts.push_back(c);
    rs.push_back(std::move(r));
  }
  return Corpus::from_resources(std::move(tax), std::move(rs));
}

/// Taxonomy guaranteed to have two children under the root (for the planted
/// disjoint-subtree resources).
inline std::shared_ptr<const Taxonomy> random_taxonomy_two_branches(int concepts,
                                                                    SplitMix64& rng) {
  std::vector<std::string> ids{"c0", "c1", "c2"};
  std::vector<ConceptIndex> parents{kNoConcept, 0, 0};
  for (int i = 3; i < concepts; ++i) {
    ids.push_back("c" + std::to_string(i));
    parents.push_back(1 + static_cast<ConceptIndex>(rng.below(static_cast<std::uint64_t>(i - 1))));
  }
  return std::make_shared<const Taxonomy>(std::move(ids), std::move(parents));
}

// --- oracles ----------------------------------------------------------------

/// Exhaustive maximum over all one-to-one pairings of size min(rows, cols).
inline double brute_force_best_total(const std::vector<double>& scores, int rows, int cols) {
  const bool transpose = rows > cols;
  const int n = transpose ? cols : rows;  // n <= m
  const int m = transpose ? rows : cols;
  auto value = [&](int i, int j) {
    return transpose ? scores[static_cast<size_t>(j) * cols + i]
                     : scores[static_cast<size_t>(i) * cols + j];
  };
  std::vector<char> used(m, 0);
  std::function<double(int)> best = [&](int i) -> double {
    if (i == n) return 0.0;
    double best_here = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      best_here = std::max(best_here, value(i, j) + best(i + 1));
      used[j] = 0;
    }
    return best_here;
  };
  return best(0);
}

/// Path length in edges by breadth-first search over the undirected tree.
inline int bfs_path_length(const Taxonomy& t, ConceptIndex a, ConceptIndex b) {
  std::vector<int> dist(t.size(), -1);
  std::queue<ConceptIndex> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    ConceptIndex x = q.front();
    q.pop();
    if (x == b) return dist[x];
    std::vector<ConceptIndex> adjacent = t.children(x);
    if (t.parent(x) != kNoConcept) adjacent.push_back(t.parent(x));
    for (ConceptIndex y : adjacent) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  return -1;
}

/// Student-t density.
inline double t_density(double x, int df) {
  const double nu = df;
  return std::exp(std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2)) / std::sqrt(nu * M_PI) *
         std::pow(1.0 + x * x / nu, -(nu + 1) / 2);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fb, double fm, double whole, double eps,
                               int depth) {
  const double m = (a + b) / 2;
  const double lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15 * eps)
    return left + right + (left + right - whole) / 15;
  return adaptive_simpson(f, a, m, fa, fm, flm, left, eps / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, right, eps / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fb, fm, whole, eps, 40);
}

/// Independent Student-t CDF: numerical integration of the density.
inline double t_cdf_oracle(double t, int df) {
  if (t < 0) return 1.0 - t_cdf_oracle(-t, df);
  auto f = [df](double x) { return t_density(x, df); };
  return 0.5 + integrate(f, 0.0, t, 1e-10);
}

}  // namespace testutil
