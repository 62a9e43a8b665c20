#include <doctest.h>

#include <narranet/summary.hpp>

#include <cmath>
#include <sstream>

using namespace narranet;

namespace {

InteractionLog make_log() {
  InteractionLog log;
  // Season 1: two episodes; episode 1 has scenes 1,1,2; episode 2 scene 1.
  log.records.push_back({1, 1, 1, "a", "b"});
  log.records.push_back({1, 1, 1, "a", "c"});
  log.records.push_back({1, 1, 2, "b", "c"});
  log.records.push_back({1, 2, 1, "a", "b"});
  // Season 2: one episode, one scene, one new character.
  log.records.push_back({2, 1, 1, "a", "d"});
  return log;
}

}  // namespace

TEST_CASE("scene counts track distinct scene indices per episode") {
  SceneCounts counts = scene_counts_from_log(make_log());
  REQUIRE(counts.size() == 3);
  CHECK(counts.at({1, 1}) == 2);
  CHECK(counts.at({1, 2}) == 1);
  CHECK(counts.at({2, 1}) == 1);
}

TEST_CASE("summarize produces one row per season") {
  InteractionLog log = make_log();
  auto rows = summarize(log, scene_counts_from_log(log));
  REQUIRE(rows.size() == 2);

  const SeasonSummary& s1 = rows[0];
  CHECK(s1.season == 1);
  CHECK(s1.episodes == 2);
  CHECK(s1.characters == 3);
  CHECK(s1.interactions == 4);
  CHECK(s1.scenes == 3);
  CHECK(s1.interactions_per_episode == doctest::Approx(2.0));
  CHECK(s1.scenes_per_episode == doctest::Approx(1.5));
  CHECK(s1.interactions_per_scene == doctest::Approx(4.0 / 3.0));

  const SeasonSummary& s2 = rows[1];
  CHECK(s2.season == 2);
  CHECK(s2.episodes == 1);
  CHECK(s2.characters == 2);
  CHECK(s2.interactions == 1);
}

TEST_CASE("summarize covers seasons present only in the scene counts") {
  InteractionLog log = make_log();
  SceneCounts counts = scene_counts_from_log(log);
  counts[{3, 1}] = 4;  // a season with scenes but no logged interactions
  auto rows = summarize(log, counts);
  REQUIRE(rows.size() == 3);
  const SeasonSummary& s3 = rows[2];
  CHECK(s3.season == 3);
  CHECK(s3.episodes == 1);
  CHECK(s3.characters == 0);
  CHECK(s3.interactions == 0);
  CHECK(s3.scenes == 4);
  CHECK(s3.interactions_per_scene == doctest::Approx(0.0));
}

TEST_CASE("zero-denominator ratios are NaN and print as a dash") {
  InteractionLog empty;
  SceneCounts none;
  auto rows = summarize(empty, none);
  CHECK(rows.empty());

  SeasonSummary weird;
  weird.season = 9;
  weird.interactions_per_episode = std::nan("");
  weird.scenes_per_episode = std::nan("");
  weird.interactions_per_scene = std::nan("");
  std::ostringstream out;
  write_summary_table(out, {weird});
  CHECK(out.str().find('-') != std::string::npos);
  CHECK(out.str().find("nan") == std::string::npos);
}

TEST_CASE("summary table includes headers and season rows") {
  InteractionLog log = make_log();
  auto rows = summarize(log, scene_counts_from_log(log));
  std::ostringstream out;
  write_summary_table(out, rows);
  const std::string text = out.str();
  CHECK(text.find("season") != std::string::npos);
  CHECK(text.find("episodes") != std::string::npos);
  CHECK(text.find("interactions") != std::string::npos);
}
