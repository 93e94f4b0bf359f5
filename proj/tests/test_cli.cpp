// End-to-end checks of the installed binary: subcommand outputs, exit-code
// families, deterministic reruns, atomic output files. The binary path comes
// from ONTOSIM_BIN (set by ctest).
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
int checks = 0;

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int exit_code;
  std::string out;
};

std::string bin_path;
std::filesystem::path work_dir;

RunResult run(const std::string& args) {
  const std::string out_file = (work_dir / "cmd.out").string();
  const std::string cmd = bin_path + " " + args + " >" + out_file + " 2>" +
                          (work_dir / "cmd.err").string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

void write(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

}  // namespace

int main() {
  const char* bin = std::getenv("ONTOSIM_BIN");
  if (!bin) {
    std::cerr << "ONTOSIM_BIN not set\n";
    return 1;
  }
  bin_path = bin;

  work_dir = std::filesystem::temp_directory_path() /
             ("ontosim-cli-test-" + std::to_string(::getpid()));
  std::filesystem::create_directories(work_dir);

  const std::string tax = (work_dir / "tax.tsv").string();
  write(tax,
        "Person\t-\nWorker\tPerson\nStudent\tPerson\nEmployee\tWorker\nFreelance\tWorker\n");
  const std::string corpus = (work_dir / "corpus.jsonl").string();
  write(corpus,
        "{\"id\": \"r1\", \"annotations\": [\"Worker\", \"Student\"]}\n"
        "{\"id\": \"r2\", \"annotations\": [\"Employee\"]}\n"
        "{\"id\": \"r3\", \"annotations\": [\"Student\"]}\n"
        "{\"id\": \"r4\", \"annotations\": [\"Employee\", \"Freelance\"]}\n"
        "{\"id\": \"r5\", \"annotations\": [\"Person\", \"Freelance\"]}\n"
        "{\"id\": \"r6\", \"annotations\": [\"Worker\"]}\n");
  const std::string sets = (work_dir / "sets.tsv").string();
  write(sets, "issueA\tr1,r3,r6\nissueB\tr2,r4\n");

  // sim prints the hand-computed value
  RunResult sim = run("--taxonomy " + tax + " --corpus " + corpus +
                      " sim --method semsim:TD:max --a r1 --b r3");
  expect(sim.exit_code == 0, "sim exits 0");
  expect(sim.out == "0.500000\n", "sim prints 0.500000, got: " + sim.out);

  // weigh CSV, sorted by concept id, running-example values
  // n(Worker+) = 6 occurrences out of N = 9 on this corpus
  RunResult weigh = run("--taxonomy " + tax + " --corpus " + corpus + " weigh --weighting CF");
  expect(weigh.exit_code == 0, "weigh exits 0");
  expect(weigh.out.find("concept_id,weight,ic") == 0, "weigh emits the CSV header");
  expect(weigh.out.find("Worker,0.666667,") != std::string::npos,
         "w_CF(Worker) = 6/9 on the extended corpus, got: " + weigh.out);

  // TD weights are corpus-free and exact
  RunResult weigh_td = run("--taxonomy " + tax + " weigh --weighting TD");
  expect(weigh_td.out.find("Worker,0.500000,") != std::string::npos, "w_TD(Worker) = 1/2");
  expect(weigh_td.out.find("Person,1.000000,0.000000") != std::string::npos,
         "w_TD(root) = 1, ic 0");

  // IIC leaves the weight column empty
  RunResult weigh_iic = run("--taxonomy " + tax + " weigh --weighting IIC");
  expect(weigh_iic.out.find("Employee,,1.000000") != std::string::npos,
         "iic leaf row has empty weight and ic 1");

  // matrix on a single-resource corpus
  const std::string tiny = (work_dir / "tiny.jsonl").string();
  write(tiny, "{\"id\": \"only\", \"annotations\": [\"Worker\"]}\n");
  RunResult m1 = run("--taxonomy " + tax + " --corpus " + tiny + " matrix --method dice");
  expect(m1.exit_code == 0, "1x1 matrix exits 0");
  expect(m1.out == "id,only\nonly,1.000000\n", "1x1 matrix CSV, got: " + m1.out);

  // exit code families
  RunResult unknown = run("--taxonomy " + tax + " --corpus " + corpus +
                          " sim --method dice --a r1 --b nope");
  expect(unknown.exit_code == 4, "unknown resource exits 4");
  const std::string bad_tax = (work_dir / "bad.tsv").string();
  write(bad_tax, "A\t-\nB\t-\n");
  RunResult two_roots = run("--taxonomy " + bad_tax + " --corpus " + corpus +
                            " sim --method dice --a r1 --b r2");
  expect(two_roots.exit_code == 3, "two roots exit 3");
  RunResult bad_method = run("--taxonomy " + tax + " --corpus " + corpus +
                             " sim --method bogus --a r1 --b r2");
  expect(bad_method.exit_code == 2, "bad method spec exits 2");
  const std::string empty_corpus = (work_dir / "empty.jsonl").string();
  write(empty_corpus, "");
  RunResult empty = run("--taxonomy " + tax + " --corpus " + empty_corpus +
                        " sim --method dice --a r1 --b r2");
  expect(empty.exit_code == 2, "empty corpus exits 2");

  // cohesion reruns are byte-identical; output file is written atomically
  const std::string report1 = (work_dir / "report1.csv").string();
  const std::string report2 = (work_dir / "report2.csv").string();
  const std::string cohesion_args =
      "--taxonomy " + tax + " --corpus " + corpus +
      " --seed 7 cohesion --method semsim:AF:gav --method dice --sets " + sets +
      " --samples 2000";
  RunResult c1 = run(cohesion_args + " --out " + report1);
  RunResult c2 = run(cohesion_args + " --out " + report2);
  expect(c1.exit_code == 0, "cohesion exits 0");
  expect(c2.exit_code == 0, "cohesion rerun exits 0");
  std::ifstream f1(report1, std::ios::binary), f2(report2, std::ios::binary);
  std::ostringstream b1, b2;
  b1 << f1.rdbuf();
  b2 << f2.rdbuf();
  expect(!b1.str().empty(), "cohesion report non-empty");
  expect(b1.str() == b2.str(), "same seed gives byte-identical reports");
  expect(b1.str().find("method,set_id,cohesion,t,confidence,pearson") == 0,
         "report header present");
  for (const auto& entry : std::filesystem::directory_iterator(work_dir))
    expect(entry.path().string().find(".tmp.") == std::string::npos,
           "no temp files left behind");

  // different seed changes the numbers
  RunResult c3 = run("--taxonomy " + tax + " --corpus " + corpus +
                     " --seed 8 cohesion --method semsim:AF:gav --method dice --sets " + sets +
                     " --samples 2000 --out " + (work_dir / "report3.csv").string());
  expect(c3.exit_code == 0, "cohesion with another seed exits 0");
  std::ifstream f3(work_dir / "report3.csv", std::ios::binary);
  std::ostringstream b3;
  b3 << f3.rdbuf();
  expect(b1.str() != b3.str(), "different seed changes the report");

  // treeify: expand, then reload the result as a taxonomy
  const std::string dag = (work_dir / "dag.tsv").string();
  write(dag, "root1\t-\nroot2\t-\nmid\troot1\nleaf\tmid\nleaf\troot2\n");
  const std::string tree_out = (work_dir / "tree.tsv").string();
  RunResult tre = run("treeify --dag " + dag + " --out " + tree_out);
  expect(tre.exit_code == 0, "treeify exits 0");
  RunResult reload = run("--taxonomy " + tree_out + " weigh --weighting TD");
  expect(reload.exit_code == 0, "treeified output loads as a taxonomy");
  expect(reload.out.find("leaf_mid_root1_owl:Thing") != std::string::npos,
         "path concept present");
  expect(reload.out.find("leaf_root2_owl:Thing") != std::string::npos,
         "second path concept present");

  // correlate emits per-set pearson
  const std::string judgement = (work_dir / "judgement.csv").string();
  write(judgement,
        "resource_a,resource_b,score\nr1,r3,0.9\nr1,r6,0.5\nr3,r6,0.4\nr2,r4,0.7\n");
  RunResult corr = run("--taxonomy " + tax + " --corpus " + corpus +
                       " correlate --method semsim:TD:gav --sets " + sets + " --judgement " +
                       judgement);
  expect(corr.exit_code == 0, "correlate exits 0");
  expect(corr.out.find("method,set_id,pearson") == 0, "correlate header");

  // histograms
  const std::string hist_dir = (work_dir / "hist").string();
  RunResult hist = run("--taxonomy " + tax + " --corpus " + corpus +
                       " --seed 7 cohesion --method dice --sets " + sets +
                       " --samples 500 --hist " + hist_dir + " --out " +
                       (work_dir / "hist_report.csv").string());
  expect(hist.exit_code == 0, "cohesion with --hist exits 0");
  expect(std::filesystem::exists(hist_dir + "/dice_issueA.csv"), "histogram file written");

  std::filesystem::remove_all(work_dir);
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << (checks - failures) << "/" << checks
            << " checks)\n";
  return failures == 0 ? 0 : 1;
}
