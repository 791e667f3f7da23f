#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "corvar/feature_words.hpp"
#include "corvar/profile_io.hpp"

namespace fs = std::filesystem;
using namespace corvar;

namespace {

const std::string kBin = CORVAR_BIN_PATH;
const fs::path kFixtures = CORVAR_FIXTURES_DIR;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("corvar_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;

  const std::string cmd =
      kBin + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  return p;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("analyze: token corpus to the pinned json profile") {
  const auto r =
      run_cli("analyze --input " + q(kFixtures / "tokens_small.txt"));
  REQUIRE(r.exit_code == 0);

  const auto profile = profile_from_json(nlohmann::json::parse(r.out));
  REQUIRE(std::holds_alternative<LexicalProfile>(profile));
  const auto& lex = std::get<LexicalProfile>(profile);
  CHECK(lex.id == "tokens_small");  // file stem is the default id
  CHECK(lex.token_count > 0);
  CHECK(lex.type_count <= lex.token_count);

  const auto renamed = run_cli("analyze --id zh1 --input " +
                               q(kFixtures / "tokens_small.txt"));
  REQUIRE(renamed.exit_code == 0);
  CHECK(std::get<LexicalProfile>(
            profile_from_json(nlohmann::json::parse(renamed.out)))
            .id == "zh1");
}

TEST_CASE("analyze: conllu corpus to a syntactic profile") {
  const auto r = run_cli("analyze --format conllu --input " +
                         q(kFixtures / "treebank_small.conllu"));
  REQUIRE(r.exit_code == 0);

  const auto profile = profile_from_json(nlohmann::json::parse(r.out));
  REQUIRE(std::holds_alternative<SyntacticProfile>(profile));
  const auto& syn = std::get<SyntacticProfile>(profile);
  CHECK(syn.arc_count > 0);
  double sum = 0;
  for (const auto& rel : syn.relations) sum += rel.proportion;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exit codes separate input errors from undefined results") {
  CHECK(run_cli("analyze --input /no/such/file.txt").exit_code == 1);

  const auto empty = write_temp("empty.txt", "\n\n");
  CHECK(run_cli("analyze --input " + q(empty)).exit_code == 2);

  const auto bad = write_temp("bad.conllu", "1\tx\ty\n");
  CHECK(run_cli("analyze --format conllu --input " + q(bad)).exit_code == 1);

  const auto badarc = write_temp(
      "badarc.conllu",
      "1\tx\t_\t_\t_\t_\t7\tA\t_\t_\n2\ty\t_\t_\t_\t_\t0\tHED\t_\t_\n");
  CHECK(run_cli("analyze --format conllu --input " + q(badarc)).exit_code == 1);

  CHECK(run_cli("analyze --input x --bogus-flag").exit_code == 1);
  CHECK(run_cli("analyze").exit_code == 1);  // --input is required
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sample: same seed gives identical bytes, different seeds differ") {
  const fs::path a = scratch_dir() / "sample_a.txt";
  const fs::path b = scratch_dir() / "sample_b.txt";
  const fs::path c = scratch_dir() / "sample_c.txt";
  const std::string base = "sample --n 3 --input " +
                           q(kFixtures / "tokens_small.txt") + " --out ";

  REQUIRE(run_cli(base + q(a) + " --seed 42").exit_code == 0);
  REQUIRE(run_cli(base + q(b) + " --seed 42").exit_code == 0);
  REQUIRE(run_cli(base + q(c) + " --seed 43").exit_code == 0);

  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("sample: conllu output records the seed in a comment") {
  const auto r = run_cli("sample --format conllu --n 2 --seed 7 --input " +
                         q(kFixtures / "treebank_small.conllu"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("# corvar sample seed=7 n=2\n", 0) == 0);
  CHECK(r.err.find("sampled") != std::string::npos);
}

TEST_CASE("compare: markdown report across saved profiles") {
  const fs::path p1 = scratch_dir() / "p1.json";
  const fs::path p2 = scratch_dir() / "p2.json";
  REQUIRE(run_cli("analyze --id sin --input " +
                  q(kFixtures / "tokens_small.txt") + " --out " + q(p1))
              .exit_code == 0);
  REQUIRE(run_cli("analyze --id mld --format conllu --input " +
                  q(kFixtures / "treebank_small.conllu") + " --out " + q(p2))
              .exit_code == 0);

  const auto r = run_cli("compare --profiles " + q(p1) + " " + q(p2));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("| sin |") != std::string::npos);
  CHECK(r.out.find("Relations — mld") != std::string::npos);
  CHECK(r.err.find("warning") != std::string::npos);  // < 3 lexical profiles

  CHECK(run_cli("compare --profiles").exit_code == 1);
  CHECK(run_cli("compare --profiles /no/such/profile.json").exit_code == 1);
}

TEST_CASE("compare: csv with relevance columns once three corpora exist") {
  const std::string analyze = "analyze --input " +
                              q(kFixtures / "tokens_small.txt") + " --id c";
  const fs::path p1 = scratch_dir() / "c1.json";
  const fs::path p2 = scratch_dir() / "c2.json";
  const fs::path p3 = scratch_dir() / "c3.json";
  REQUIRE(run_cli(analyze + "1 --out " + q(p1)).exit_code == 0);
  REQUIRE(run_cli(analyze + "2 --out " + q(p2)).exit_code == 0);
  REQUIRE(run_cli(analyze + "3 --out " + q(p3)).exit_code == 0);

  const auto r = run_cli("compare --csv --profiles " + q(p1) + " " + q(p2) +
                         " " + q(p3));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("metric,c1,c2,c3,relevance_rho", 0) == 0);
}

TEST_CASE("features: skeleton TSV straight from two corpora") {
  const fs::path out = scratch_dir() / "cands.tsv";
  const auto r = run_cli("features --target " +
                         q(kFixtures / "variant_target.txt") + " --reference " +
                         q(kFixtures / "variant_reference.txt") + " --out " +
                         q(out));
  REQUIRE(r.exit_code == 0);

  const auto records = read_annotations(out);
  REQUIRE(!records.empty());
  CHECK(accepted_count(records) == 0);  // everything starts rejected
  bool saw_variant = false;
  for (const auto& rec : records) saw_variant = saw_variant || rec.word == "谘询";
  CHECK(saw_variant);
}

TEST_CASE("relations and mdd text summaries") {
  const auto rel = run_cli("relations --input " +
                           q(kFixtures / "treebank_small.conllu"));
  REQUIRE(rel.exit_code == 0);
  CHECK(rel.out.find("ATT") != std::string::npos);

  const auto mdd = run_cli("mdd --top-sentences 2 --input " +
                           q(kFixtures / "treebank_small.conllu"));
  REQUIRE(mdd.exit_code == 0);
  CHECK(mdd.out.find("macro_mdd\t") != std::string::npos);
  CHECK(mdd.out.find("micro_mdd\t") != std::string::npos);
  CHECK(mdd.out.find("extreme\t") != std::string::npos);
}
