#include <doctest.h>

#include <narranet/edge_list.hpp>
#include <narranet/report.hpp>
#include <narranet/season_model.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_root() {
  static const fs::path root = [] {
    fs::path p = fs::temp_directory_path() /
                 ("narranet_cli_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = scratch_root() / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot read " << p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE_MESSAGE(bool(out), "cannot write " << p.string());
  out << content;
}

CliResult run_cli(const std::string& args) {
  static int call = 0;
  const fs::path out_file = scratch_root() / ("stdout_" + std::to_string(call));
  const fs::path err_file = scratch_root() / ("stderr_" + std::to_string(call));
  ++call;
  const std::string cmd = std::string("\"") + NARRANET_CLI_BIN + "\" " + args +
                          " > " + out_file.string() + " 2> " + err_file.string();
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

const char* kFitCsv =
    "season,episode,scene,char_a,char_b\n"
    "1,1,1,A,B\n"
    "1,1,1,A,B\n"
    "1,1,2,A,C\n"
    "1,2,1,C,D\n"
    "2,1,1,A,B\n";

fs::path write_small_model(const fs::path& dir) {
  narranet::SeasonModel m;
  std::set<narranet::NodeId> cast;
  std::set<narranet::NodeId> core;
  for (int i = 1; i <= 3; ++i) {
    const narranet::NodeId id = "core_" + std::to_string(i);
    cast.insert(id);
    core.insert(id);
  }
  for (int i = 1; i <= 5; ++i) cast.insert("extra_" + std::to_string(i));
  m.partition = narranet::CharacterPartition::split(cast, core);
  m.lambda_cc = 5.0;
  m.lambda_cn = 0.5;
  m.lambda_nn = 0.05;
  m.season = 1;
  const fs::path path = dir / "model.txt";
  narranet::write_season_model_file(path, m);
  return path;
}

// Replicate directories named in the manifest as completed.
std::vector<int> completed_reps(const fs::path& run_dir, json* manifest_out = nullptr) {
  const json manifest = json::parse(slurp(run_dir / "manifest.json"));
  if (manifest_out != nullptr) {
    *manifest_out = manifest;
  }
  std::set<int> skipped;
  for (const auto& v : manifest.at("skipped")) skipped.insert(v.get<int>());
  std::vector<int> reps;
  for (int k = 0; k < manifest.at("config").at("n_sims").get<int>(); ++k) {
    if (!skipped.contains(k)) reps.push_back(k);
  }
  REQUIRE(static_cast<int>(reps.size()) ==
          manifest.at("replicates_completed").get<int>());
  return reps;
}

}  // namespace

TEST_CASE("cli: no subcommand is a usage error") {
  CliResult r = run_cli("");
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli: version and help") {
  CliResult v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.out.find("narranet 0.1.0") != std::string::npos);

  CliResult h = run_cli("--help");
  CHECK(h.code == 0);
  for (const char* sub :
       {"fit", "simulate", "compare", "parse-scripts", "trend", "export", "rank"}) {
    CAPTURE(sub);
    CHECK(h.out.find(sub) != std::string::npos);
  }
}

TEST_CASE("cli: fit writes a model with hand-checkable rates") {
  const fs::path dir = scratch_dir("fit");
  spit(dir / "log.csv", kFitCsv);
  const fs::path model_path = dir / "model.txt";
  CliResult r = run_cli("fit --interactions " + (dir / "log.csv").string() +
                        " --core A,B --season 1 --out " + model_path.string());
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.find("lambda_cc = 2") != std::string::npos);

  narranet::SeasonModel m = narranet::read_season_model_file(model_path);
  CHECK(m.season == 1);
  CHECK(m.lambda_cc == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m.lambda_cn == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(m.lambda_nn == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.partition.core == std::set<narranet::NodeId>{"A", "B"});
  CHECK(m.partition.non_core == std::set<narranet::NodeId>{"C", "D"});
}

TEST_CASE("cli: fit failure modes are data errors") {
  const fs::path dir = scratch_dir("fit_errors");
  spit(dir / "log.csv", kFitCsv);

  CliResult missing = run_cli("fit --interactions " + (dir / "absent.csv").string() +
                              " --core A,B --season 1 --out " +
                              (dir / "m.txt").string());
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  CliResult bad_core = run_cli("fit --interactions " + (dir / "log.csv").string() +
                               " --core A,Z --season 1 --out " +
                               (dir / "m.txt").string());
  CHECK(bad_core.code == 2);

  CliResult bad_season = run_cli("fit --interactions " + (dir / "log.csv").string() +
                                 " --core A,B --season 9 --out " +
                                 (dir / "m.txt").string());
  CHECK(bad_season.code == 2);
  CHECK(bad_season.err.find("season 9") != std::string::npos);

  // Season 2 has only two characters: no non-core class to estimate.
  CliResult empty_class = run_cli("fit --interactions " + (dir / "log.csv").string() +
                                  " --core A,B --season 2 --out " +
                                  (dir / "m.txt").string());
  CHECK(empty_class.code == 2);
}

TEST_CASE("cli: simulate writes per-replicate channels plus a manifest") {
  const fs::path dir = scratch_dir("simulate");
  const fs::path model = write_small_model(dir);
  const fs::path run = dir / "run";
  CliResult r = run_cli("simulate --model " + model.string() + " --out " +
                        run.string() + " --n-sims 4 --scenes 3 --ints-per-scene 2" +
                        " --seed 42 --threads 2");
  REQUIRE_MESSAGE(r.code == 0, r.err);

  json manifest;
  const std::vector<int> reps = completed_reps(run, &manifest);
  CHECK(manifest.at("tool") == "narranet");
  CHECK(manifest.at("command") == "simulate");
  CHECK(manifest.at("config").at("n_sims") == 4);
  CHECK(manifest.at("config").at("seed") == 42);
  CHECK(manifest.at("characters") == 8);
  CHECK(manifest.at("core").size() == 3);

  REQUIRE_FALSE(reps.empty());
  for (int k : reps) {
    const fs::path rep = run / ("rep_" + std::to_string(k));
    for (const char* channel : {"manual.edges", "cooc.edges", "nlp.edges"}) {
      CAPTURE(k);
      CAPTURE(channel);
      REQUIRE(fs::is_regular_file(rep / channel));
      CHECK_NOTHROW(narranet::read_edge_list_file(rep / channel));
    }
    CHECK_FALSE(fs::exists(rep / "episode.txt"));  // only with --keep-episodes
  }
}

TEST_CASE("cli: identical seeds give byte-identical replicates") {
  const fs::path dir = scratch_dir("determinism");
  const fs::path model = write_small_model(dir);
  const std::string common = "simulate --model " + model.string() +
                             " --n-sims 6 --scenes 3 --ints-per-scene 3 --seed 7";
  CliResult a = run_cli(common + " --out " + (dir / "run_a").string() + " --threads 1");
  CliResult b = run_cli(common + " --out " + (dir / "run_b").string() + " --threads 3");
  REQUIRE_MESSAGE(a.code == 0, a.err);
  REQUIRE_MESSAGE(b.code == 0, b.err);

  const std::vector<int> reps = completed_reps(dir / "run_a");
  CHECK(completed_reps(dir / "run_b") == reps);
  for (int k : reps) {
    const std::string rep = "rep_" + std::to_string(k);
    for (const char* channel : {"manual.edges", "cooc.edges", "nlp.edges"}) {
      CAPTURE(rep);
      CAPTURE(channel);
      CHECK(slurp(dir / "run_a" / rep / channel) ==
            slurp(dir / "run_b" / rep / channel));
    }
  }
}

TEST_CASE("cli: keep-episodes adds a readable episode transcript") {
  const fs::path dir = scratch_dir("keep_episodes");
  const fs::path model = write_small_model(dir);
  const fs::path run = dir / "run";
  CliResult r = run_cli("simulate --model " + model.string() + " --out " +
                        run.string() +
                        " --n-sims 2 --scenes 2 --ints-per-scene 2 --seed 3" +
                        " --keep-episodes");
  REQUIRE_MESSAGE(r.code == 0, r.err);
  for (int k : completed_reps(run)) {
    const fs::path ep = run / ("rep_" + std::to_string(k)) / "episode.txt";
    REQUIRE(fs::is_regular_file(ep));
    CHECK(slurp(ep).rfind("SCENE 1\n", 0) == 0);
  }
}

TEST_CASE("cli: config file fills defaults but flags win") {
  const fs::path dir = scratch_dir("config");
  const fs::path model = write_small_model(dir);
  spit(dir / "config.json", "{\"n_sims\": 2, \"seed\": 7, \"scenes\": 3}\n");
  CliResult r = run_cli("simulate --model " + model.string() + " --out " +
                        (dir / "run").string() + " --config " +
                        (dir / "config.json").string() + " --seed 9");
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const json manifest = json::parse(slurp(dir / "run" / "manifest.json"));
  CHECK(manifest.at("config").at("n_sims") == 2);    // from the config file
  CHECK(manifest.at("config").at("scenes") == 3);    // from the config file
  CHECK(manifest.at("config").at("seed") == 9);      // flag beats config
  CHECK(manifest.at("config").at("ints_per_scene") == 4);  // built-in default

  spit(dir / "bad.json", "{\"bogus\": 1}\n");
  CliResult bad = run_cli("simulate --model " + model.string() + " --out " +
                          (dir / "run2").string() + " --config " +
                          (dir / "bad.json").string());
  CHECK(bad.code == 2);
  CHECK(bad.err.find("bogus") != std::string::npos);

  spit(dir / "types.json", "{\"n_sims\": \"many\"}\n");
  CliResult types = run_cli("simulate --model " + model.string() + " --out " +
                            (dir / "run3").string() + " --config " +
                            (dir / "types.json").string());
  CHECK(types.code == 2);
}

TEST_CASE("cli: rewire probability zero makes nlp equal manual") {
  const fs::path dir = scratch_dir("rewire_zero");
  const fs::path model = write_small_model(dir);
  const fs::path run = dir / "run";
  CliResult r = run_cli("simulate --model " + model.string() + " --out " +
                        run.string() +
                        " --n-sims 5 --scenes 3 --ints-per-scene 3 --seed 5" +
                        " --rewire-prob 0");
  REQUIRE_MESSAGE(r.code == 0, r.err);
  for (int k : completed_reps(run)) {
    const fs::path rep = run / ("rep_" + std::to_string(k));
    CHECK(slurp(rep / "nlp.edges") == slurp(rep / "manual.edges"));
  }
}

TEST_CASE("cli: compare produces correlation tables deterministically") {
  const fs::path dir = scratch_dir("compare");
  const fs::path model = write_small_model(dir);
  const fs::path run = dir / "run";
  CliResult sim = run_cli("simulate --model " + model.string() + " --out " +
                          run.string() +
                          " --n-sims 8 --scenes 4 --ints-per-scene 3 --seed 11");
  REQUIRE_MESSAGE(sim.code == 0, sim.err);

  CliResult cmp = run_cli("compare --run " + run.string() + " --threads 2");
  REQUIRE_MESSAGE(cmp.code == 0, cmp.err);
  CHECK(cmp.out.find("compared") != std::string::npos);

  const std::vector<int> reps = completed_reps(run);
  {
    std::ifstream in(run / "correlations.csv");
    REQUIRE(bool(in));
    const auto rows = narranet::read_correlations_csv(in);
    CHECK(rows.size() == reps.size() * 16);
  }
  const json summary = json::parse(slurp(run / "summary.json"));
  CHECK(summary.at("replicates") == reps.size());
  CHECK(summary.at("character").at("manual_cooc").contains("degree"));

  // Re-running writes byte-identical outputs.
  const std::string csv_before = slurp(run / "correlations.csv");
  const std::string json_before = slurp(run / "summary.json");
  CliResult again = run_cli("compare --run " + run.string() + " --threads 1 --out " +
                            (dir / "out2").string());
  REQUIRE_MESSAGE(again.code == 0, again.err);
  CHECK(slurp(dir / "out2" / "correlations.csv") == csv_before);
  CHECK(slurp(dir / "out2" / "summary.json") == json_before);
}

TEST_CASE("cli: compare demands every completed replicate directory") {
  const fs::path dir = scratch_dir("compare_missing");
  const fs::path model = write_small_model(dir);
  const fs::path run = dir / "run";
  CliResult sim = run_cli("simulate --model " + model.string() + " --out " +
                          run.string() +
                          " --n-sims 3 --scenes 2 --ints-per-scene 2 --seed 13");
  REQUIRE_MESSAGE(sim.code == 0, sim.err);
  const std::vector<int> reps = completed_reps(run);
  REQUIRE_FALSE(reps.empty());
  fs::remove_all(run / ("rep_" + std::to_string(reps.front())));

  CliResult cmp = run_cli("compare --run " + run.string());
  CHECK(cmp.code == 2);
  CHECK(cmp.err.find("rep_" + std::to_string(reps.front())) != std::string::npos);

  CliResult no_run = run_cli("compare --run " + (dir / "nowhere").string());
  CHECK(no_run.code == 2);
}

TEST_CASE("cli: parse-scripts builds cooccurrence networks per episode") {
  const fs::path dir = scratch_dir("scripts");
  const fs::path scripts = dir / "scripts";
  fs::create_directories(scripts);
  spit(scripts / "e01.txt",
       "[Scene: cafe]\n"
       "Mon: hi\n"
       "Rach: hey\n"
       "Mon: again\n"
       "[Scene: apartment]\n"
       "Ross: hello\n"
       "Mon: hi ross\n");
  spit(scripts / "e02.txt",
       "[Scene: street]\n"
       "Joey: yo\n"
       "Ross: hi\n");
  spit(scripts / "skip.txt", "no markers here at all\nJust: prose\n");
  spit(dir / "aliases.tsv", "Mon\tMonica\nRach\tRachel\n");

  const fs::path out = dir / "networks";
  CliResult r = run_cli("parse-scripts --scripts " + scripts.string() +
                        " --aliases " + (dir / "aliases.tsv").string() + " --out " +
                        out.string() + " --season-out " +
                        (dir / "season.edges").string());
  REQUIRE_MESSAGE(r.code == 0, r.err);

  narranet::WeightedGraph e1 = narranet::read_edge_list_file(out / "e01.edges");
  CHECK(e1.weight("MONICA", "RACHEL") == 1);
  CHECK(e1.weight("MONICA", "ROSS") == 1);
  CHECK(e1.edge_count() == 2);
  narranet::WeightedGraph e2 = narranet::read_edge_list_file(out / "e02.edges");
  CHECK(e2.weight("JOEY", "ROSS") == 1);

  // The marker-free file is reported in the warnings log, not fatal.
  CHECK_FALSE(fs::exists(out / "skip.edges"));
  const std::string log = slurp(out / "parse_warnings.log");
  CHECK(log.find("skip.txt") != std::string::npos);

  narranet::WeightedGraph season =
      narranet::read_edge_list_file(dir / "season.edges");
  CHECK(season.weight("MONICA", "RACHEL") == 1);
  CHECK(season.weight("JOEY", "ROSS") == 1);
  CHECK(season.edge_count() == 3);
}

TEST_CASE("cli: parse-scripts fails only when nothing parses") {
  const fs::path dir = scratch_dir("scripts_all_bad");
  const fs::path scripts = dir / "scripts";
  fs::create_directories(scripts);
  spit(scripts / "a.txt", "nothing\n");
  CliResult r = run_cli("parse-scripts --scripts " + scripts.string() + " --out " +
                        (dir / "out").string());
  CHECK(r.code == 2);
}

TEST_CASE("cli: export slices an interaction log into edge lists") {
  const fs::path dir = scratch_dir("export");
  spit(dir / "log.csv", kFitCsv);

  const fs::path by_season = dir / "by_season";
  CliResult season = run_cli("export --interactions " + (dir / "log.csv").string() +
                             " --granularity season --out " + by_season.string() +
                             " --summary");
  REQUIRE_MESSAGE(season.code == 0, season.err);
  CHECK(season.out.find("season") != std::string::npos);
  narranet::WeightedGraph s1 = narranet::read_edge_list_file(by_season / "season_1.edges");
  CHECK(s1.weight("A", "B") == 2);
  CHECK(s1.weight("A", "C") == 1);
  CHECK(s1.weight("C", "D") == 1);
  narranet::WeightedGraph s2 = narranet::read_edge_list_file(by_season / "season_2.edges");
  CHECK(s2.weight("A", "B") == 1);

  const fs::path by_episode = dir / "by_episode";
  CliResult episode = run_cli("export --interactions " + (dir / "log.csv").string() +
                              " --granularity episode --out " + by_episode.string());
  REQUIRE_MESSAGE(episode.code == 0, episode.err);
  CHECK(fs::is_regular_file(by_episode / "season_1_episode_1.edges"));
  CHECK(fs::is_regular_file(by_episode / "season_1_episode_2.edges"));
  CHECK(fs::is_regular_file(by_episode / "season_2_episode_1.edges"));

  CliResult bad = run_cli("export --interactions " + (dir / "log.csv").string() +
                          " --granularity bogus --out " + (dir / "x").string());
  CHECK(bad.code == 1);  // rejected by flag validation
}

TEST_CASE("cli: trend fits the core interaction line across seasons") {
  const fs::path dir = scratch_dir("trend");
  spit(dir / "log.csv", kFitCsv);
  const fs::path seasons = dir / "seasons";
  CliResult exp = run_cli("export --interactions " + (dir / "log.csv").string() +
                          " --granularity season --out " + seasons.string());
  REQUIRE_MESSAGE(exp.code == 0, exp.err);

  const fs::path out = dir / "trend.csv";
  CliResult r = run_cli("trend --dataset obs=" + seasons.string() +
                        " --dataset alt=" + seasons.string() + " --core A,B --out " +
                        out.string());
  REQUIRE_MESSAGE(r.code == 0, r.err);
  std::ifstream in(out);
  REQUIRE(bool(in));
  const auto by_dataset = narranet::read_trend_csv(in);
  REQUIRE(by_dataset.size() == 2);
  const narranet::TrendResult& obs = by_dataset.at("obs");
  REQUIRE(obs.points.size() == 2);
  CHECK(obs.points[0] == narranet::TrendPoint{1, 2.0});  // A-B weight 2
  CHECK(obs.points[1] == narranet::TrendPoint{2, 1.0});  // A-B weight 1
  CHECK(obs.fit.slope == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(obs.fit.intercept == doctest::Approx(3.0).epsilon(1e-12));

  CliResult dup = run_cli("trend --dataset obs=" + seasons.string() +
                          " --dataset obs=" + seasons.string() + " --core A,B --out " +
                          (dir / "t2.csv").string());
  CHECK(dup.code == 2);
  CliResult nodir = run_cli("trend --dataset obs=" + (dir / "nope").string() +
                            " --dataset b=" + seasons.string() + " --core A,B --out " +
                            (dir / "t3.csv").string());
  CHECK(nodir.code == 2);
}

TEST_CASE("cli: rank reports one row per season") {
  const fs::path dir = scratch_dir("rank");
  spit(dir / "log.csv", kFitCsv);
  const fs::path seasons = dir / "seasons";
  CliResult exp = run_cli("export --interactions " + (dir / "log.csv").string() +
                          " --granularity season --out " + seasons.string());
  REQUIRE_MESSAGE(exp.code == 0, exp.err);

  CliResult r = run_cli("rank --dataset " + seasons.string() +
                        " --character A --metric degree --out " +
                        (dir / "rank.csv").string());
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.find("season,rank") != std::string::npos);
  CHECK(slurp(dir / "rank.csv") == "season,rank\n1,1\n2,1\n");

  CliResult bad_metric = run_cli("rank --dataset " + seasons.string() +
                                 " --character A --metric bogus");
  CHECK(bad_metric.code == 1);

  CliResult absent = run_cli("rank --dataset " + seasons.string() +
                             " --character NOBODY --metric degree");
  CHECK(absent.code == 2);
}
