#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ontosim/cohesion.hpp"
#include "ontosim/io.hpp"
#include "ontosim/measures.hpp"
#include "ontosim/weighting.hpp"

namespace {

using namespace ontosim;
using nlohmann::json;

struct GlobalOptions {
  std::string taxonomy_path;
  std::string corpus_path;
  std::string weight_corpus_path;
  std::string out_path;
  std::string format = "csv";
  int jobs = 0;
  std::uint64_t seed = 0;
};

void emit(const GlobalOptions& g, const std::string& content) {
  if (g.out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    write_file_atomic(g.out_path, content);
  }
}

std::shared_ptr<const Taxonomy> load_taxonomy(const GlobalOptions& g) {
  if (g.taxonomy_path.empty())
    throw Error(ErrorKind::Parse, "missing required option --taxonomy");
  return std::make_shared<const Taxonomy>(Taxonomy::load(g.taxonomy_path));
}

Corpus load_corpus(const GlobalOptions& g, const std::shared_ptr<const Taxonomy>& tax) {
  if (g.corpus_path.empty()) throw Error(ErrorKind::Parse, "missing required option --corpus");
  return Corpus::load(g.corpus_path, tax);
}

// The weighting corpus backs the extensional statistics (CF/AF weights and
// the WNSim IDF); it defaults to the analysis corpus.
std::optional<Corpus> load_weight_corpus(const GlobalOptions& g,
                                         const std::shared_ptr<const Taxonomy>& tax) {
  if (g.weight_corpus_path.empty()) return std::nullopt;
  return Corpus::load(g.weight_corpus_path, tax);
}

int cmd_treeify(const GlobalOptions& g, const std::string& dag_path,
                const std::string& separator, const std::string& root_label) {
  DagScheme dag = DagScheme::load(dag_path);
  TreeifyCounts counts;
  Taxonomy tree = treeify_dag(dag, separator, root_label, &counts);
  emit(g, tree.serialize());
  std::fprintf(stderr,
               "dag_nodes=%lld path_concepts=%lld total_concepts=%lld isa_edges=%lld\n",
               counts.dag_nodes, counts.path_concepts, counts.total_concepts, counts.isa_edges);
  return 0;
}

int cmd_weigh(const GlobalOptions& g, const std::string& weighting) {
  auto tax = load_taxonomy(g);
  WeightingMethod method = weighting_from_string(weighting);
  std::optional<Corpus> corpus;
  if (method == WeightingMethod::CF || method == WeightingMethod::AF) {
    if (!g.weight_corpus_path.empty())
      corpus = Corpus::load(g.weight_corpus_path, tax);
    else
      corpus = load_corpus(g, tax);
  }
  WeightedTaxonomy wt = weigh(tax, method, corpus ? &*corpus : nullptr);

  std::vector<ConceptIndex> order(tax->size());
  for (int i = 0; i < tax->size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](ConceptIndex a, ConceptIndex b) { return tax->id_of(a) < tax->id_of(b); });

  if (g.format == "json") {
    json out = json::array();
    for (ConceptIndex c : order) {
      json rec;
      rec["concept_id"] = tax->id_of(c);
      if (wt.has_weights()) rec["weight"] = wt.weight(c);
      rec["ic"] = std::isinf(wt.ic(c)) ? json("inf") : json(wt.ic(c));
      out.push_back(std::move(rec));
    }
    emit(g, out.dump(2) + "\n");
  } else {
    std::string out = "concept_id,weight,ic\n";
    for (ConceptIndex c : order) {
      out += csv_field(tax->id_of(c));
      out += ',';
      if (wt.has_weights()) out += fmt6(wt.weight(c));
      out += ',';
      out += fmt6(wt.ic(c));
      out += '\n';
    }
    emit(g, out);
  }
  return 0;
}

int cmd_sim(const GlobalOptions& g, const std::string& method_spec, const std::string& id_a,
            const std::string& id_b) {
  auto tax = load_taxonomy(g);
  Corpus corpus = load_corpus(g, tax);
  auto weight_corpus = load_weight_corpus(g, tax);
  const Corpus& stats = weight_corpus ? *weight_corpus : corpus;
  auto measure = make_measure(method_spec, tax, &stats);
  const Resource& a = corpus.resource(corpus.resource_index(id_a));
  const Resource& b = corpus.resource(corpus.resource_index(id_b));
  emit(g, fmt6(measure->similarity(a.av, b.av)) + "\n");
  return 0;
}

int cmd_matrix(const GlobalOptions& g, const std::string& method_spec) {
  auto tax = load_taxonomy(g);
  Corpus corpus = load_corpus(g, tax);
  auto weight_corpus = load_weight_corpus(g, tax);
  const Corpus& stats = weight_corpus ? *weight_corpus : corpus;
  auto measure = make_measure(method_spec, tax, &stats);
  SimilarityMatrix matrix = similarity_matrix(corpus, *measure, g.jobs);

  if (g.format == "json") {
    json out;
    out["method"] = measure->name();
    out["ids"] = matrix.ids();
    json rows = json::array();
    for (int i = 0; i < matrix.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < matrix.size(); ++j) row.push_back(matrix.at(i, j));
      rows.push_back(std::move(row));
    }
    out["values"] = std::move(rows);
    emit(g, out.dump() + "\n");
  } else {
    std::string out = "id";
    for (const auto& id : matrix.ids()) {
      out += ',';
      out += csv_field(id);
    }
    out += '\n';
    for (int i = 0; i < matrix.size(); ++i) {
      out += csv_field(matrix.ids()[i]);
      for (int j = 0; j < matrix.size(); ++j) {
        out += ',';
        out += fmt6(matrix.at(i, j));
      }
      out += '\n';
    }
    emit(g, out);
  }
  return 0;
}

std::string report_csv(const ExperimentReport& report) {
  std::string out = "method,set_id,cohesion,t,confidence,pearson\n";
  for (const auto& row : report.rows) {
    out += csv_field(row.method);
    out += ',';
    out += csv_field(row.set_id);
    out += ',';
    if (!std::isnan(row.cohesion)) out += fmt6(row.cohesion);
    out += ',';
    if (!std::isnan(row.t)) out += fmt6(row.t);
    out += ',';
    out += fmt6(row.confidence);
    out += ',';
    if (row.pearson) out += fmt6(*row.pearson);
    out += '\n';
  }
  return out;
}

std::string report_json(const ExperimentReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["method"] = row.method;
    r["set_id"] = row.set_id;
    r["cohesion"] = std::isnan(row.cohesion) ? json(nullptr) : json(row.cohesion);
    r["t"] = std::isnan(row.t) ? json(nullptr) : json(row.t);
    r["confidence"] = row.confidence;
    r["pearson"] = row.pearson ? json(*row.pearson) : json(nullptr);
    if (row.pearson_undefined) r["pearson_undefined"] = true;
    rows.push_back(std::move(r));
  }
  return rows.dump(2) + "\n";
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ':' || c == '/' || c == '\\' || c == ',') c = '_';
  return s;
}

int cmd_cohesion(const GlobalOptions& g, const std::vector<std::string>& method_specs,
                 const std::string& sets_path, const std::string& judgement_path, int samples,
                 std::optional<int> df, const std::string& hist_dir) {
  auto tax = load_taxonomy(g);
  Corpus corpus = load_corpus(g, tax);
  auto weight_corpus = load_weight_corpus(g, tax);
  const Corpus& stats = weight_corpus ? *weight_corpus : corpus;

  std::vector<std::unique_ptr<Measure>> measures;
  for (const auto& spec : method_specs) measures.push_back(make_measure(spec, tax, &stats));
  if (measures.empty()) throw Error(ErrorKind::Parse, "no --method given");

  auto sets = load_benchmark_sets(sets_path);
  std::optional<JudgementData> judgement;
  if (!judgement_path.empty()) judgement = JudgementData::load(judgement_path);

  ExperimentConfig config;
  config.samples = samples;
  config.seed = g.seed;
  config.df = df;
  config.jobs = g.jobs;
  config.keep_null_values = !hist_dir.empty();

  ExperimentReport report =
      run_experiment(corpus, measures, sets, judgement ? &*judgement : nullptr, config);

  for (const auto& row : report.rows)
    if (row.pearson_undefined)
      std::fprintf(stderr,
                   "warning: pearson undefined for method=%s set=%s (constant similarity)\n",
                   row.method.c_str(), row.set_id.c_str());

  if (!hist_dir.empty()) {
    std::filesystem::create_directories(hist_dir);
    for (const auto& row : report.rows) {
      if (row.set_id == "average") continue;
      for (const auto& [key, dist] : report.nulls) {
        if (key.first != row.method) continue;
        // one histogram per method x set, marked with that set's observation
        bool right_size = false;
        for (const auto& set : sets)
          if (set.id == row.set_id &&
              static_cast<int>(set.resource_ids.size()) == key.second)
            right_size = true;
        if (!right_size) continue;
        write_file_atomic(hist_dir + "/" + sanitize(row.method) + "_" + sanitize(row.set_id) +
                              ".csv",
                          histogram_csv(dist, row.cohesion, row.t));
      }
    }
  }

  emit(g, g.format == "json" ? report_json(report) : report_csv(report));
  return 0;
}

int cmd_correlate(const GlobalOptions& g, const std::vector<std::string>& method_specs,
                  const std::string& sets_path, const std::string& judgement_path) {
  auto tax = load_taxonomy(g);
  Corpus corpus = load_corpus(g, tax);
  auto weight_corpus = load_weight_corpus(g, tax);
  const Corpus& stats = weight_corpus ? *weight_corpus : corpus;

  std::vector<std::unique_ptr<Measure>> measures;
  for (const auto& spec : method_specs) measures.push_back(make_measure(spec, tax, &stats));
  if (measures.empty()) throw Error(ErrorKind::Parse, "no --method given");
  auto sets = load_benchmark_sets(sets_path);
  JudgementData judgement = JudgementData::load(judgement_path);

  std::string out = "method,set_id,pearson\n";
  json jrows = json::array();
  for (const auto& measure : measures) {
    SimilarityMatrix matrix = similarity_matrix(corpus, *measure, g.jobs);
    double sum = 0.0;
    int count = 0;
    for (const auto& set : sets) {
      std::vector<double> xs, ys;
      for (size_t i = 0; i < set.resource_ids.size(); ++i) {
        for (size_t j = i + 1; j < set.resource_ids.size(); ++j) {
          xs.push_back(matrix.at(matrix.index_of(set.resource_ids[i]),
                                 matrix.index_of(set.resource_ids[j])));
          ys.push_back(judgement.score(set.resource_ids[i], set.resource_ids[j]));
        }
      }
      std::optional<double> p;
      try {
        p = pearson(xs, ys);
        sum += *p;
        ++count;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ConstantVector && e.kind() != ErrorKind::LengthMismatch)
          throw;
        std::fprintf(stderr, "warning: pearson undefined for method=%s set=%s (%s)\n",
                     measure->name().c_str(), set.id.c_str(), e.kind_name());
      }
      out += csv_field(measure->name()) + "," + csv_field(set.id) + "," +
             (p ? fmt6(*p) : "") + "\n";
      json r;
      r["method"] = measure->name();
      r["set_id"] = set.id;
      r["pearson"] = p ? json(*p) : json(nullptr);
      jrows.push_back(std::move(r));
    }
    out += csv_field(measure->name()) + ",average," +
           (count > 0 ? fmt6(sum / count) : "") + "\n";
    json avg;
    avg["method"] = measure->name();
    avg["set_id"] = "average";
    avg["pearson"] = count > 0 ? json(sum / count) : json(nullptr);
    jrows.push_back(std::move(avg));
  }
  emit(g, g.format == "json" ? jrows.dump(2) + "\n" : out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-based semantic similarity and cohesion analysis"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--taxonomy", g.taxonomy_path, "Taxonomy edge-list file");
  app.add_option("--corpus", g.corpus_path, "Corpus file (one JSON record per line)");
  app.add_option("--weight-corpus", g.weight_corpus_path,
                 "Corpus for extensional statistics (CF/AF weights, WNSim IDF); "
                 "defaults to --corpus");
  app.add_option("--out", g.out_path, "Output path (default: stdout)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", g.jobs, "Worker cap for parallel sections (0 = all cores)");
  app.add_option("--seed", g.seed, "Seed for all randomness");

  auto* treeify = app.add_subcommand("treeify", "Expand a multi-parent scheme into a taxonomy");
  treeify->fallthrough();
  std::string dag_path, separator = "_", root_label = "owl:Thing";
  treeify->add_option("--dag", dag_path, "Scheme edge-list file")->required();
  treeify->add_option("--separator", separator, "Label separator in concept ids");
  treeify->add_option("--root-label", root_label, "Synthetic root id");

  auto* weigh_cmd = app.add_subcommand("weigh", "Emit concept weights and information content");
  weigh_cmd->fallthrough();
  std::string weighting;
  weigh_cmd->add_option("--weighting", weighting, "CF, AF, TD or IIC")->required();

  auto* sim = app.add_subcommand("sim", "Similarity of two resources");
  sim->fallthrough();
  std::string sim_method, id_a, id_b;
  sim->add_option("--method", sim_method, "Method spec, e.g. semsim:AF:gav")->required();
  sim->add_option("--a", id_a, "First resource id")->required();
  sim->add_option("--b", id_b, "Second resource id")->required();

  auto* matrix = app.add_subcommand("matrix", "Full pairwise similarity matrix");
  matrix->fallthrough();
  std::string matrix_method;
  matrix->add_option("--method", matrix_method, "Method spec")->required();

  auto* cohesion = app.add_subcommand("cohesion", "Cohesion test against Monte-Carlo null");
  cohesion->fallthrough();
  std::vector<std::string> cohesion_methods;
  std::string sets_path, judgement_path, hist_dir;
  int samples = 100000;
  std::optional<int> df;
  cohesion->add_option("--method", cohesion_methods, "Method spec (repeatable)")->required();
  cohesion->add_option("--sets", sets_path, "Benchmark sets file")->required();
  cohesion->add_option("--judgement", judgement_path, "Judgement CSV for Pearson correlation");
  cohesion->add_option("--samples", samples, "Monte-Carlo samples per null distribution");
  cohesion->add_option("--df", df, "Degrees of freedom (default: set cardinality)");
  cohesion->add_option("--hist", hist_dir, "Directory for null-distribution histograms");

  auto* correlate = app.add_subcommand("correlate", "Pearson correlation against judgement");
  correlate->fallthrough();
  std::vector<std::string> correlate_methods;
  std::string correlate_sets, correlate_judgement;
  correlate->add_option("--method", correlate_methods, "Method spec (repeatable)")->required();
  correlate->add_option("--sets", correlate_sets, "Benchmark sets file")->required();
  correlate->add_option("--judgement", correlate_judgement, "Judgement CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "{\"error\":\"ParseError\",\"message\":%s}\n",
                 nlohmann::json(std::string(e.what())).dump().c_str());
    return 2;
  }

  try {
    if (treeify->parsed()) return cmd_treeify(g, dag_path, separator, root_label);
    if (weigh_cmd->parsed()) return cmd_weigh(g, weighting);
    if (sim->parsed()) return cmd_sim(g, sim_method, id_a, id_b);
    if (matrix->parsed()) return cmd_matrix(g, matrix_method);
    if (cohesion->parsed())
      return cmd_cohesion(g, cohesion_methods, sets_path, judgement_path, samples, df, hist_dir);
    if (correlate->parsed())
      return cmd_correlate(g, correlate_methods, correlate_sets, correlate_judgement);
  } catch (const ontosim::Error& e) {
    nlohmann::json err;
    err["error"] = e.kind_name();
    err["message"] = e.what();
    if (!e.entity().empty()) err["entity"] = e.entity();
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return e.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "{\"error\":\"Internal\",\"message\":%s}\n",
                 nlohmann::json(std::string(e.what())).dump().c_str());
    return 1;
  }
  return 0;
}
