#include <sys/wait.h>

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pivot/json_io.h"
#include "tmpdir.h"

namespace {

using nlohmann::json;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PIVOT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

struct CliFixture {
  TmpDir tmp;
  std::string train0, train1, test0, test1;

  CliFixture() {
    train0 = tmp.file("train0.txt",
                      "good food here\nreally good service\nthe best meal\n"
                      "good times\nwhat a fine place\nlovely good evening\n");
    train1 = tmp.file("train1.txt",
                      "bad food here\nreally bad service\nthe worst meal\n"
                      "bad times\nwhat an awful place\nhorrid bad evening\n");
    test0 = tmp.file("test0.txt", "good stuff\nfine good day\n");
    test1 = tmp.file("test1.txt", "bad stuff\nawful bad day\n");
  }
};

}  // namespace

TEST_CASE("usage errors exit 2, runtime errors exit 1, help exits 0") {
  CliFixture fx;
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("discover --help") == 0);
  CHECK(run_cli("definitely-not-a-subcommand") == 2);
  CHECK(run_cli("discover --class0 " + fx.train0) == 2);  // missing required flags
  CHECK(run_cli("discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                " --out " + fx.tmp.path("p.json") + " --badflag") == 2);
  CHECK(run_cli("discover --class0 " + fx.tmp.path("nope.txt") + " --class1 " +
                fx.train1 + " --out " + fx.tmp.path("p.json")) == 1);
  CHECK(run_cli("discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                " --p0 0.3 --out " + fx.tmp.path("p.json")) == 2);
  CHECK(run_cli("histogram --class0 " + fx.train0 + " --class1 " + fx.train1 +
                " --format png --out " + fx.tmp.path("h.png")) == 2);
}

TEST_CASE("classify refuses to reuse the discovery files") {
  CliFixture fx;
  const std::string pivots = fx.tmp.path("pivots.json");
  REQUIRE(run_cli("discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                  " --f0 1 --p0 0.6 --seed 3 --out " + pivots) == 0);
  CHECK(run_cli("classify --class0 " + fx.train0 + " --class1 " + fx.train1 +
                " --pivots " + pivots + " --seed 3 --out " + fx.tmp.path("e.json")) == 2);
  CHECK(run_cli("classify --class0 " + fx.test0 + " --class1 " + fx.test1 +
                " --pivots " + pivots + " --seed 3 --out " + fx.tmp.path("e.json")) == 0);
}

TEST_CASE("the full pipeline is byte-identical across reruns with one seed") {
  CliFixture fx;
  const std::string pairs0 = fx.tmp.file(
      "pairs0.tsv", "good food here\tbad food here\nreally good service\treally bad service\n");
  const std::string pairs1 = fx.tmp.file(
      "pairs1.tsv", "bad times\tgood times\n");
  const std::string series = fx.tmp.file(
      "series.csv", "label,x,y\na,0.88,0.62\nb,0.73,0.41\nc,0.72,0.35\nd,0.98,0.75\n");

  const std::vector<std::string> outputs{"pivots.json", "eval.json",  "eval.tsv",
                                         "hist.svg",    "audit.json", "audit.tsv",
                                         "model.json",  "corr.json",  "sweep.json"};
  auto run_all = [&] {
    const std::string pivots = fx.tmp.path("pivots.json");
    REQUIRE(run_cli("discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                    " --f0 1 --p0 0.6 --seed 11 --out " + pivots) == 0);
    REQUIRE(run_cli("classify --class0 " + fx.test0 + " --class1 " + fx.test1 +
                    " --pivots " + pivots + " --seed 11 --out " +
                    fx.tmp.path("eval.json") + " --per-sentence " +
                    fx.tmp.path("eval.tsv")) == 0);
    REQUIRE(run_cli("histogram --class0 " + fx.train0 + " --class1 " + fx.train1 +
                    " --seed 11 --format svg --out " + fx.tmp.path("hist.svg")) == 0);
    REQUIRE(run_cli("audit --pairs0 " + pairs0 + " --pairs1 " + pairs1 + " --pivots " +
                    pivots + " --seed 11 --out " + fx.tmp.path("audit.json") +
                    " --per-pair " + fx.tmp.path("audit.tsv")) == 0);
    REQUIRE(run_cli("train-logistic --class0 " + fx.train0 + " --class1 " + fx.train1 +
                    " --seed 11 --out " + fx.tmp.path("model.json")) == 0);
    REQUIRE(run_cli("correlate --in " + series + " --seed 11 --out " +
                    fx.tmp.path("corr.json")) == 0);
    REQUIRE(run_cli("sweep --class0 " + fx.train0 + " --class1 " + fx.train1 +
                    " --val0 " + fx.test0 + " --val1 " + fx.test1 +
                    " --p0 0.5:0.7:0.1 --f0 1,2 --seed 11 --out " +
                    fx.tmp.path("sweep.json")) == 0);
  };
  run_all();
  std::map<std::string, std::string> first;
  for (const std::string& name : outputs) {
    first[name] = pivot::read_file(fx.tmp.path(name));
  }
  run_all();
  for (const std::string& name : outputs) {
    CHECK(pivot::read_file(fx.tmp.path(name)) == first[name]);
  }
}

TEST_CASE("reports round-trip through their JSON schemas") {
  CliFixture fx;
  const std::string pivots = fx.tmp.path("pivots.json");
  REQUIRE(run_cli("discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                  " --f0 1 --p0 0.6 --seed 5 --out " + pivots) == 0);
  const json doc = json::parse(pivot::read_file(pivots));
  REQUIRE(doc.contains("classes"));
  const pivot::PivotSet set0 = pivot::pivots_from_json(doc["classes"][0]);
  CHECK(set0.class_label == 0);
  CHECK(set0.contains("good"));
  CHECK_FALSE(set0.contains("bad"));
  CHECK(doc["config"]["seed"] == 5);
  CHECK(doc["config"]["paths"]["class0"] == fx.train0);

  // words are sorted by precision desc, then token asc
  const auto& words = doc["classes"][0]["words"];
  for (std::size_t i = 1; i < words.size(); ++i) {
    const double prev = words[i - 1]["precision"].get<double>();
    const double cur = words[i]["precision"].get<double>();
    CHECK(prev >= cur);
    if (prev == cur) {
      CHECK(words[i - 1]["token"].get<std::string>() <
            words[i]["token"].get<std::string>());
    }
  }
}

TEST_CASE("run config round-trips through JSON losslessly") {
  pivot::RunConfig config;
  config.f0 = 37;
  config.p0 = 0.65;
  config.bin_width = 0.05;
  config.seed = 991;
  config.lowercase = false;
  config.mask_mode = "pivots-only";
  config.paths = {{"class0", "a.txt"}, {"out", "b.json"}};
  const pivot::RunConfig back = pivot::config_from_json(pivot::config_json(config));
  CHECK(back == config);
}

TEST_CASE("PIVOT_SEED supplies the default seed and the flag beats it") {
  CliFixture fx;
  const std::string out_file = fx.tmp.path("pivots_env.json");
  const std::string base = "discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                           " --f0 1 --p0 0.6 --out " + out_file;
  REQUIRE(std::system(("PIVOT_SEED=21 " + std::string(PIVOT_CLI_PATH) + " " + base +
                       " >/dev/null 2>&1").c_str()) == 0);
  CHECK(json::parse(pivot::read_file(out_file))["config"]["seed"] == 21);
  REQUIRE(std::system(("PIVOT_SEED=21 " + std::string(PIVOT_CLI_PATH) + " " + base +
                       " --seed 4 >/dev/null 2>&1").c_str()) == 0);
  CHECK(json::parse(pivot::read_file(out_file))["config"]["seed"] == 4);
  REQUIRE(std::system(("PIVOT_SEED=bogus " + std::string(PIVOT_CLI_PATH) + " " + base +
                       " >/dev/null 2>&1").c_str()) != 0);
}

TEST_CASE("audit report carries directions and a merged overall block") {
  CliFixture fx;
  const std::string pivots = fx.tmp.path("pivots.json");
  REQUIRE(run_cli("discover --class0 " + fx.train0 + " --class1 " + fx.train1 +
                  " --f0 1 --p0 0.6 --seed 2 --out " + pivots) == 0);
  const std::string pairs0 =
      fx.tmp.file("p0.tsv", "good food here\tbad food here\n");
  const std::string pairs1 =
      fx.tmp.file("p1.tsv", "bad times\tgood times\nthe worst meal\tthe best meal\n");
  const std::string out_file = fx.tmp.path("audit.json");
  REQUIRE(run_cli("audit --pairs0 " + pairs0 + " --pairs1 " + pairs1 + " --pivots " +
                  pivots + " --out " + out_file) == 0);
  const json doc = json::parse(pivot::read_file(out_file));
  REQUIRE(doc["directions"].size() == 2);
  CHECK(doc["directions"][0]["mask_all"]["n_pairs"] == 1);
  CHECK(doc["directions"][1]["mask_all"]["n_pairs"] == 2);
  CHECK(doc["overall"]["mask_all"]["n_pairs"] == 3);
  // every modified word in the fixture is a pivot seen in training
  CHECK(doc["overall"]["mask_all"]["pct_pivot_among_modified"] == 1.0);
  CHECK(doc["overall"]["mask_all"]["distance_distribution"]["0"] == 1.0);
}

TEST_CASE("config file values apply and flags win over them") {
  CliFixture fx;
  const std::string config = fx.tmp.file("run.json", R"({"f0": 2, "p0": 0.55, "seed": 9})");
  const std::string out_file = fx.tmp.path("pivots_cfg.json");
  REQUIRE(run_cli("discover --config " + config + " --class0 " + fx.train0 +
                  " --class1 " + fx.train1 + " --out " + out_file) == 0);
  json doc = json::parse(pivot::read_file(out_file));
  CHECK(doc["config"]["f0"] == 2);
  CHECK(doc["config"]["p0"] == 0.55);
  CHECK(doc["config"]["seed"] == 9);

  REQUIRE(run_cli("discover --config " + config + " --f0 1 --class0 " + fx.train0 +
                  " --class1 " + fx.train1 + " --out " + out_file) == 0);
  doc = json::parse(pivot::read_file(out_file));
  CHECK(doc["config"]["f0"] == 1);
  CHECK(doc["config"]["p0"] == 0.55);
}

TEST_CASE("sweep flags exactly one best cell") {
  CliFixture fx;
  const std::string out_file = fx.tmp.path("sweep.json");
  REQUIRE(run_cli("sweep --class0 " + fx.train0 + " --class1 " + fx.train1 + " --val0 " +
                  fx.test0 + " --val1 " + fx.test1 +
                  " --p0 0.5,0.6 --f0 1,2 --seed 4 --out " + out_file) == 0);
  const json doc = json::parse(pivot::read_file(out_file));
  REQUIRE(doc["grid"].size() == 4);
  int best_count = 0;
  for (const auto& cell : doc["grid"]) {
    best_count += cell["best"].get<bool>() ? 1 : 0;
    CHECK(cell.contains("accuracy"));
  }
  CHECK(best_count == 1);
  CHECK(doc["best"]["accuracy"].get<double>() >= 0.5);

  CHECK(run_cli("sweep --class0 " + fx.train0 + " --class1 " + fx.train1 + " --val0 " +
                fx.train0 + " --val1 " + fx.train1 + " --seed 4 --out " + out_file) == 2);
}

TEST_CASE("model JSON round-trips and drives classify") {
  CliFixture fx;
  const std::string model_path = fx.tmp.path("model.json");
  REQUIRE(run_cli("train-logistic --class0 " + fx.train0 + " --class1 " + fx.train1 +
                  " --seed 6 --out " + model_path) == 0);
  const json doc = json::parse(pivot::read_file(model_path));
  const pivot::LogisticModel model = pivot::model_from_json(doc["model"]);
  CHECK(model.weights.count("good") == 1);
  CHECK(model.weights.at("good") < 0.0);  // pulls toward class 0
  CHECK(model.weights.at("bad") > 0.0);
  CHECK(doc["train_eval"]["accuracy"].get<double>() == 1.0);

  REQUIRE(run_cli("classify --class0 " + fx.test0 + " --class1 " + fx.test1 +
                  " --model " + model_path + " --seed 6 --out " +
                  fx.tmp.path("eval_model.json")) == 0);
  const json eval = json::parse(pivot::read_file(fx.tmp.path("eval_model.json")));
  CHECK(eval["classifier"] == "logistic");
}
