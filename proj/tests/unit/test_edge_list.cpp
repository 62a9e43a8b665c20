#include <doctest.h>

#include <narranet/edge_list.hpp>
#include <narranet/errors.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace narranet;
namespace fs = std::filesystem;

namespace {

WeightedGraph sample() {
  WeightedGraph g;
  g.add_weight("rachel", "ross", 7);
  g.add_weight("joey", "rachel", 2);
  g.add_weight("chandler", "joey", 1);
  return g;
}

}  // namespace

TEST_CASE("edge list serializes sorted with tab separators") {
  std::ostringstream out;
  write_edge_list(out, sample());
  CHECK(out.str() ==
        "chandler\tjoey\t1\n"
        "joey\trachel\t2\n"
        "rachel\tross\t7\n");
}

TEST_CASE("edge list round-trips through text") {
  std::ostringstream out;
  write_edge_list(out, sample());
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == sample());
}

TEST_CASE("reader skips blank lines and tolerates trailing carriage returns") {
  std::istringstream in("a\tb\t2\r\n\nb\tc\t1\n");
  WeightedGraph g = read_edge_list(in);
  CHECK(g.weight("a", "b") == 2);
  CHECK(g.weight("b", "c") == 1);
}

TEST_CASE("reader rejects malformed rows") {
  auto expect_parse_error = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), ParseError);
  };
  expect_parse_error("a\tb\n");           // missing weight
  expect_parse_error("a\tb\tx\n");        // non-numeric weight
  expect_parse_error("a\tb\t0\n");        // weights start at 1
  expect_parse_error("a\tb\t-3\n");       // negative
  expect_parse_error("b\ta\t1\n");        // endpoints out of order
  expect_parse_error("a\ta\t1\n");        // self-loop
  expect_parse_error("a\tb\t1\ta\n");     // extra field
  expect_parse_error("a\tb\t1\na\tb\t2\n");  // duplicate edge
}

TEST_CASE("parse errors carry the offending line number") {
  std::istringstream in("a\tb\t1\nbad row\n");
  try {
    read_edge_list(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("file helpers round-trip and name the file on failure") {
  fs::path dir = fs::temp_directory_path() / "narranet_edge_list_test";
  fs::create_directories(dir);
  fs::path good = dir / "good.edges";
  write_edge_list_file(good, sample());
  CHECK(read_edge_list_file(good) == sample());

  fs::path bad = dir / "bad.edges";
  std::ofstream(bad) << "oops\n";
  try {
    read_edge_list_file(bad);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("bad.edges") != std::string::npos);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(read_edge_list_file(dir / "absent.edges"), DataError);
  fs::remove_all(dir);
}
