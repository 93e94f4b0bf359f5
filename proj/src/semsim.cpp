#include "ontosim/semsim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "ontosim/assignment.hpp"

namespace ontosim {

namespace {

void require_non_empty(const AnnotationVector& av) {
  if (av.concepts.empty()) throw Error(ErrorKind::EmptyVector, "empty annotation vector");
}

// Computation always runs with the shorter vector first (ties broken on the
// concept index sequence), so both argument orders hit identical float ops.
bool canonical_order(const AnnotationVector& a, const AnnotationVector& b) {
  if (a.size() != b.size()) return a.size() <= b.size();
  return a.concepts <= b.concepts;
}

std::vector<double> consim_matrix(const WeightedTaxonomy& wt, const AnnotationVector& a,
                                  const AnnotationVector& b) {
  std::vector<double> m(static_cast<size_t>(a.size()) * b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      m[static_cast<size_t>(i) * b.size() + j] = consim(wt, a.concepts[i], b.concepts[j]);
  return m;
}

}  // namespace

const char* to_string(NormFactor f) {
  switch (f) {
    case NormFactor::Max: return "max";
    case NormFactor::Min: return "min";
    case NormFactor::Ave: return "ave";
    case NormFactor::Gav: return "gav";
  }
  return "?";
}

NormFactor norm_from_string(std::string_view s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "max") return NormFactor::Max;
  if (low == "min") return NormFactor::Min;
  if (low == "ave") return NormFactor::Ave;
  if (low == "gav") return NormFactor::Gav;
  throw Error(ErrorKind::Parse, "unknown normalization factor: " + std::string(s),
              std::string(s));
}

double norm_value(NormFactor f, int n, int m) {
  switch (f) {
    case NormFactor::Max: return static_cast<double>(std::max(n, m));
    case NormFactor::Min: return static_cast<double>(std::min(n, m));
    case NormFactor::Ave: return (static_cast<double>(n) + static_cast<double>(m)) / 2.0;
    case NormFactor::Gav: return std::sqrt(static_cast<double>(n) * static_cast<double>(m));
  }
  return 0.0;
}

double consim(const WeightedTaxonomy& wt, ConceptIndex c1, ConceptIndex c2) {
  const Taxonomy& t = wt.taxonomy();
  if (c1 < 0 || c1 >= t.size() || c2 < 0 || c2 >= t.size())
    throw Error(ErrorKind::UnknownConcept, "concept index out of range");
  if (c1 == c2) return 1.0;
  const double ic1 = wt.ic(c1), ic2 = wt.ic(c2);
  if (std::isinf(ic1) || std::isinf(ic2)) return 0.0;
  const double denom = ic1 + ic2;
  if (denom == 0.0) return 0.0;
  return 2.0 * wt.ic(t.lcs(c1, c2)) / denom;
}

double semsim_numerator(const WeightedTaxonomy& wt, const AnnotationVector& av1,
                        const AnnotationVector& av2) {
  require_non_empty(av1);
  require_non_empty(av2);
  const bool keep = canonical_order(av1, av2);
  const AnnotationVector& a = keep ? av1 : av2;
  const AnnotationVector& b = keep ? av2 : av1;
  auto m = consim_matrix(wt, a, b);
  return max_weight_assignment(m, a.size(), b.size()).total;
}

double semsim(const WeightedTaxonomy& wt, const AnnotationVector& av1,
              const AnnotationVector& av2, NormFactor norm) {
  return semsim_numerator(wt, av1, av2) / norm_value(norm, av1.size(), av2.size());
}

Matching best_matching(const WeightedTaxonomy& wt, const AnnotationVector& av1,
                       const AnnotationVector& av2) {
  require_non_empty(av1);
  require_non_empty(av2);
  const bool keep = canonical_order(av1, av2);
  const AnnotationVector& a = keep ? av1 : av2;
  const AnnotationVector& b = keep ? av2 : av1;
  const int n = a.size(), m = b.size();
  auto scores = consim_matrix(wt, a, b);

  // Fix pairs greedily in index order: at each row take the smallest column
  // whose value plus the optimal completion of the rest stays within 1e-12 of
  // the step's best. This pins the lexicographically smallest optimal
  // pairing; the step maximum itself is always reachable, so a partner always
  // exists. n <= m here, so every left concept gets one.
  constexpr double kSlack = 1e-12;
  std::vector<char> used(m, 0);
  std::vector<int> partner(n, -1);
  for (int i = 0; i < n; ++i) {
    const int rem_rows = n - i - 1;
    std::vector<double> cand(m, -1.0);
    double step_best = -1.0;
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      // Optimal completion over rows > i and the columns left after taking j.
      double completion = 0.0;
      if (rem_rows > 0) {
        std::vector<double> sub;
        int sub_cols = 0;
        for (int jj = 0; jj < m; ++jj)
          if (!used[jj] && jj != j) ++sub_cols;
        sub.reserve(static_cast<size_t>(rem_rows) * sub_cols);
        for (int ii = i + 1; ii < n; ++ii)
          for (int jj = 0; jj < m; ++jj)
            if (!used[jj] && jj != j) sub.push_back(scores[static_cast<size_t>(ii) * m + jj]);
        completion = max_weight_assignment(sub, rem_rows, sub_cols).total;
      }
      cand[j] = scores[static_cast<size_t>(i) * m + j] + completion;
      step_best = std::max(step_best, cand[j]);
    }
    for (int j = 0; j < m; ++j) {
      if (used[j] || cand[j] < step_best - kSlack) continue;
      used[j] = 1;
      partner[i] = j;
      break;
    }
  }

  Matching result;
  result.pairs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double value = scores[static_cast<size_t>(i) * m + partner[i]];
    if (keep)
      result.pairs.push_back({i, partner[i], value});
    else
      result.pairs.push_back({partner[i], i, value});
    result.total += value;
  }
  if (!keep)
    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const MatchedPair& x, const MatchedPair& y) { return x.left < y.left; });
  return result;
}

}  // namespace ontosim
