#include "ontosim/cohesion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ontosim/io.hpp"
#include "ontosim/rng.hpp"

namespace ontosim {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Members are summed in sorted order so the value depends only on the set,
// not on the order it was drawn or written in.
double cohesion_of(const SimilarityMatrix& matrix, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  const int k = static_cast<int>(members.size());
  double sum = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) sum += matrix.at(members[i], members[j]);
  return sum / (static_cast<double>(k) * (k - 1) / 2.0);
}

// Partial Fisher-Yates over [0, n) with a sparse swap map: O(k) per sample.
void sample_distinct(SplitMix64& rng, int n, int k, std::vector<int>& out) {
  std::unordered_map<int, int> moved;
  out.resize(k);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    auto at = [&](int x) {
      auto it = moved.find(x);
      return it == moved.end() ? x : it->second;
    };
    out[i] = at(j);
    moved[j] = at(i);
  }
}

// Mean and sample stddev, shifted about the first value so an all-identical
// sample yields exactly zero variance.
void summarize(NullDistribution& d) {
  const size_t n = d.values.size();
  const double x0 = d.values[0];
  double sum = 0.0;
  for (double v : d.values) sum += v - x0;
  const double delta = sum / static_cast<double>(n);
  d.mean = x0 + delta;
  double ss = 0.0;
  for (double v : d.values) {
    const double diff = v - x0;
    ss += diff * diff;
  }
  const double var =
      n > 1 ? (ss - static_cast<double>(n) * delta * delta) / (static_cast<double>(n) - 1.0)
            : 0.0;
  d.stddev = var > 0.0 ? std::sqrt(var) : 0.0;
}

NullDistribution run_sampler(const SimilarityMatrix& matrix, int set_size, int samples,
                             std::uint64_t seed, int jobs, bool parallel) {
  if (set_size < 2)
    throw Error(ErrorKind::TooFewResources, "sample sets need at least 2 resources");
  if (matrix.size() < set_size)
    throw Error(ErrorKind::CorpusTooSmall,
                "corpus smaller than the requested set size " + std::to_string(set_size));
  if (samples < 2) throw Error(ErrorKind::TooFewResources, "need at least 2 samples");

  NullDistribution d;
  d.seed = seed;
  d.set_size = set_size;
  d.values.assign(samples, 0.0);

#ifdef _OPENMP
  const int threads = parallel ? (jobs > 0 ? jobs : omp_get_max_threads()) : 1;
#pragma omp parallel num_threads(threads)
  {
    std::vector<int> members;
#pragma omp for schedule(static)
    for (int s = 0; s < samples; ++s) {
      SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(s)));
      sample_distinct(rng, matrix.size(), set_size, members);
      d.values[s] = cohesion_of(matrix, members);
    }
  }
#else
  (void)jobs;
  (void)parallel;
  std::vector<int> members;
  for (int s = 0; s < samples; ++s) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(s)));
    sample_distinct(rng, matrix.size(), set_size, members);
    d.values[s] = cohesion_of(matrix, members);
  }
#endif

  summarize(d);
  return d;
}

}  // namespace

SetCohesion set_cohesion(const SimilarityMatrix& matrix, const std::vector<int>& members) {
  if (members.size() < 2)
    throw Error(ErrorKind::TooFewResources,
                "cohesion needs at least 2 resources, got " + std::to_string(members.size()));
  for (int m : members)
    if (m < 0 || m >= matrix.size())
      throw Error(ErrorKind::UnknownResource, "resource index out of range");
  SetCohesion sc;
  sc.members = members;
  sc.cohesion = cohesion_of(matrix, members);
  return sc;
}

NullDistribution sample_null(const SimilarityMatrix& matrix, int set_size, int samples,
                             std::uint64_t seed, int jobs) {
  return run_sampler(matrix, set_size, samples, seed, jobs, true);
}

NullDistribution sample_null_serial(const SimilarityMatrix& matrix, int set_size, int samples,
                                    std::uint64_t seed) {
  return run_sampler(matrix, set_size, samples, seed, 0, false);
}

CohesionTest t_test(const SetCohesion& observed, const NullDistribution& null_dist, int df) {
  if (null_dist.stddev <= 0.0)
    throw Error(ErrorKind::ZeroVariance, "null distribution has zero variance");
  if (df < 1) throw Error(ErrorKind::Parse, "degrees of freedom must be >= 1");
  CohesionTest test;
  test.observed = observed.cohesion;
  test.null_mean = null_dist.mean;
  test.null_stddev = null_dist.stddev;
  test.samples = static_cast<int>(null_dist.values.size());
  test.t = (observed.cohesion - null_dist.mean) / null_dist.stddev;
  test.df = df;
  test.confidence = student_t_cdf(test.t, df);
  return test;
}

std::vector<BenchmarkSet> load_benchmark_sets(const std::string& path) {
  return parse_benchmark_sets(read_file(path), path);
}

std::vector<BenchmarkSet> parse_benchmark_sets(std::string_view text, const std::string& origin) {
  std::vector<BenchmarkSet> sets;
  std::unordered_set<std::string> seen;
  long long lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;

    const std::string where = origin + ":" + std::to_string(lineno);
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0)
      throw Error(ErrorKind::Parse, where + ": expected <set_id><TAB><id>,<id>,...");
    BenchmarkSet set;
    set.id = std::string(line.substr(0, tab));
    if (!seen.insert(set.id).second)
      throw Error(ErrorKind::Parse, where + ": duplicate set id: " + set.id, set.id);
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view id = rest.substr(0, comma);
      if (id.empty()) throw Error(ErrorKind::Parse, where + ": empty resource id", set.id);
      if (std::find(set.resource_ids.begin(), set.resource_ids.end(), id) !=
          set.resource_ids.end())
        throw Error(ErrorKind::Parse,
                    where + ": duplicate resource in set: " + std::string(id), set.id);
      set.resource_ids.emplace_back(id);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (set.resource_ids.empty())
      throw Error(ErrorKind::Parse, where + ": set has no resources", set.id);
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw Error(ErrorKind::Parse, origin + ": no benchmark sets");
  return sets;
}

JudgementData JudgementData::load(const std::string& path) {
  return parse(read_file(path), path);
}

JudgementData JudgementData::parse(std::string_view text, const std::string& origin) {
  JudgementData data;
  long long lineno = 0;
  bool seen_data = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;
    if (!seen_data && line == "resource_a,resource_b,score") continue;  // optional header
    seen_data = true;

    const std::string where = origin + ":" + std::to_string(lineno);
    auto c1 = line.find(',');
    auto c2 = c1 == std::string_view::npos ? std::string_view::npos : line.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
      throw Error(ErrorKind::Parse, where + ": expected resource_a,resource_b,score");
    std::string a(line.substr(0, c1));
    std::string b(line.substr(c1 + 1, c2 - c1 - 1));
    std::string score_text(line.substr(c2 + 1));
    if (a.empty() || b.empty())
      throw Error(ErrorKind::Parse, where + ": empty resource id");
    char* end = nullptr;
    double score = std::strtod(score_text.c_str(), &end);
    if (end == score_text.c_str() || *end != '\0' || score < 0.0 || score > 1.0)
      throw Error(ErrorKind::Parse, where + ": score must be a number in [0,1]");
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!data.scores_.emplace(std::move(key), score).second)
      throw Error(ErrorKind::Parse, where + ": duplicate pair: " + a + "," + b);
  }
  if (data.scores_.empty()) throw Error(ErrorKind::Parse, origin + ": no judgement scores");
  return data;
}

double JudgementData::score(const std::string& a, const std::string& b) const {
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = scores_.find(key);
  if (it == scores_.end())
    throw Error(ErrorKind::UnknownResource, "no judgement score for pair " + a + "," + b,
                a + "," + b);
  return it->second;
}

bool JudgementData::has(const std::string& a, const std::string& b) const {
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  return scores_.count(key) > 0;
}

ExperimentReport run_experiment(const Corpus& corpus,
                                const std::vector<std::unique_ptr<Measure>>& measures,
                                const std::vector<BenchmarkSet>& sets,
                                const JudgementData* judgement,
                                const ExperimentConfig& config) {
  ExperimentReport report;
  for (const auto& measure : measures) {
    SimilarityMatrix matrix = similarity_matrix(corpus, *measure, config.jobs);

    double conf_sum = 0.0;
    double pearson_sum = 0.0;
    int pearson_count = 0;

    for (const BenchmarkSet& set : sets) {
      std::vector<int> members;
      members.reserve(set.resource_ids.size());
      for (const std::string& id : set.resource_ids)
        members.push_back(matrix.index_of(id));
      const int k = static_cast<int>(members.size());
      SetCohesion observed = set_cohesion(matrix, members);

      auto key = std::make_pair(measure->name(), k);
      auto it = report.nulls.find(key);
      if (it == report.nulls.end()) {
        // Substream fixed by (seed, method name, k): reordering methods or
        // sets cannot move any sample.
        const std::uint64_t null_seed =
            substream_seed(substream_seed(config.seed, fnv1a64(measure->name())),
                           static_cast<std::uint64_t>(k));
        it = report.nulls
                 .emplace(key, sample_null(matrix, k, config.samples, null_seed, config.jobs))
                 .first;
      }
      CohesionTest test = t_test(observed, it->second, config.df.value_or(k));

      ExperimentRow row;
      row.method = measure->name();
      row.set_id = set.id;
      row.cohesion = observed.cohesion;
      row.t = test.t;
      row.confidence = test.confidence;
      if (judgement) {
        std::vector<double> method_scores, judgement_scores;
        for (size_t i = 0; i < set.resource_ids.size(); ++i) {
          for (size_t j = i + 1; j < set.resource_ids.size(); ++j) {
            method_scores.push_back(matrix.at(members[i], members[j]));
            judgement_scores.push_back(
                judgement->score(set.resource_ids[i], set.resource_ids[j]));
          }
        }
        try {
          row.pearson = pearson(method_scores, judgement_scores);
          pearson_sum += *row.pearson;
          ++pearson_count;
        } catch (const Error& e) {
          // A constant similarity column (or a set with a single pair) leaves
          // the correlation undefined for this cell only.
          if (e.kind() != ErrorKind::ConstantVector && e.kind() != ErrorKind::LengthMismatch)
            throw;
          row.pearson_undefined = true;
        }
      }
      conf_sum += row.confidence;
      report.rows.push_back(std::move(row));
    }

    ExperimentRow avg;
    avg.method = measure->name();
    avg.set_id = "average";
    avg.cohesion = std::numeric_limits<double>::quiet_NaN();
    avg.t = std::numeric_limits<double>::quiet_NaN();
    avg.confidence = conf_sum / static_cast<double>(sets.size());
    if (judgement && pearson_count > 0)
      avg.pearson = pearson_sum / static_cast<double>(pearson_count);
    report.rows.push_back(std::move(avg));
  }

  if (!config.keep_null_values)
    for (auto& [key, dist] : report.nulls) dist.values.clear();
  return report;
}

std::string histogram_csv(const NullDistribution& null_dist, double observed, double t,
                          int bins) {
  const auto& v = null_dist.values;
  double lo = v[0], hi = v[0];
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi <= lo) {
    lo = lo - 0.5;
    hi = hi + 0.5;
    bins = 1;
  }
  std::vector<long long> counts(bins, 0);
  const double width = (hi - lo) / bins;
  for (double x : v) {
    int b = static_cast<int>((x - lo) / width);
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  std::string out = "bin_left,bin_right,count\n";
  for (int b = 0; b < bins; ++b) {
    out += fmt6(lo + b * width);
    out += ',';
    out += fmt6(lo + (b + 1) * width);
    out += ',';
    out += std::to_string(counts[b]);
    out += '\n';
  }
  out += "# stats: mean=" + fmt6(null_dist.mean) + " sigma=" + fmt6(null_dist.stddev) +
         " observed=" + fmt6(observed) + " t=" + fmt6(t) +
         " samples=" + std::to_string(v.size()) + "\n";
  return out;
}

}  // namespace ontosim
