#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "deck/decomposer.hpp"
#include "deck/io.hpp"
#include "deck/verifier.hpp"

using namespace deck;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t count = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("edgelist header and first emitted edge") {
  const std::string text = io::to_edgelist(deck_e(6));
  CHECK(text.substr(0, 4) == "6 3\n");
  CHECK(text.substr(4, 6) == "1 3 4\n");  // first edge joins the two centers
  CHECK(count_occurrences(text, "\n") == 16);  // header + 15 edges
}

TEST_CASE("round-trip through both formats") {
  for (int n = 3; n <= 40; ++n) {
    const TreeCover cover = decompose(n).first;
    CHECK(io::parse_cover(io::to_edgelist(cover)) == cover);
    CHECK(io::parse_cover(io::to_json(cover)) == cover);
  }
  const TreeCover big = decompose(100).first;
  CHECK(io::parse_cover(io::to_edgelist(big)) == big);
  CHECK(io::parse_cover(io::to_json(big)) == big);
}

TEST_CASE("json carries the schema fields") {
  const std::string text = io::to_json(deck_o(7));
  CHECK(text.find("\"format_version\":1") != std::string::npos);
  CHECK(text.find("\"n\":7") != std::string::npos);
  CHECK(text.find("\"tau\":4") != std::string::npos);
  const TreeCover back = io::cover_from_json(text);
  CHECK(back.trees.size() == 4);
  CHECK(back.trees[0].size() == 6);
}

TEST_CASE("dot output has one block per tree and one line per edge") {
  for (int n : {4, 7, 12}) {
    const TreeCover cover = decompose(n).first;
    const std::string dot = io::to_dot(cover);
    CHECK(count_occurrences(dot, "graph T") == cover.trees.size());
    CHECK(count_occurrences(dot, " -- ") ==
          static_cast<size_t>(complete_edge_count(n)));
  }
}

TEST_CASE("edgelist parser normalizes unordered pairs") {
  const TreeCover cover = io::cover_from_edgelist("3 2\n1 2 1\n1 2 3\n2 3 1\n");
  CHECK(cover.n == 3);
  CHECK(cover.trees[0] == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(cover.trees[1] == std::vector<Edge>{{1, 3}});
  CHECK(verify_cover(cover).pass());
}

TEST_CASE("edgelist parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(io::cover_from_edgelist(""),
                       doctest::Contains("line 1"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(io::cover_from_edgelist("abc\n"),
                       doctest::Contains("line 1"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(io::cover_from_edgelist("6 3\n1 2\n"),
                       doctest::Contains("line 2"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(io::cover_from_edgelist("6 3\n4 1 2\n"),
                       doctest::Contains("tree index 4"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(io::cover_from_edgelist("6 3\n1 2 3 4\n"),
                       doctest::Contains("trailing"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(io::cover_from_edgelist("6 99\n"),
                       doctest::Contains("tree count"), io::CoverParseError);
}

TEST_CASE("json parse errors are diagnosed") {
  CHECK_THROWS_AS(io::cover_from_json("{\"n\": 6,"), io::CoverParseError);
  CHECK_THROWS_AS(io::cover_from_json("[1,2]"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(
      io::cover_from_json("{\"n\":3,\"tau\":2,\"trees\":[[[1,2]]]}"),
      doctest::Contains("does not match"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(
      io::cover_from_json(
          "{\"n\":3,\"tau\":1,\"trees\":[[[1,2,3]]]}"),
      doctest::Contains("integer pair"), io::CoverParseError);
  CHECK_THROWS_WITH_AS(
      io::cover_from_json(
          "{\"format_version\":2,\"n\":3,\"tau\":0,\"trees\":[]}"),
      doctest::Contains("format_version"), io::CoverParseError);
}

TEST_CASE("parse_cover sniffs the format") {
  const TreeCover cover = decompose(9).first;
  CHECK(io::parse_cover("  \n " + io::to_json(cover)) == cover);
  CHECK(io::parse_cover(io::to_edgelist(cover)) == cover);
  CHECK_THROWS_AS(io::parse_cover("   \n  "), io::CoverParseError);
}

TEST_CASE("param table fixed-width rows") {
  const std::string table = io::render_param_table(param_table(4));
  CHECK(table ==
        "   n      m  sigma  alpha    tau\n"
        "   3      3      1      2      2\n"
        "   4      6      2      2      2\n");
}

TEST_CASE("split table lists even orders first") {
  const std::string split = io::render_param_table_split(8);
  const size_t even_pos = split.find("even n");
  const size_t odd_pos = split.find("odd n");
  CHECK(even_pos == 0);
  CHECK(odd_pos != std::string::npos);
  CHECK(even_pos < odd_pos);
  CHECK(split.find("   8     28      4      4      4\n") < odd_pos);
  CHECK(split.find("   7     21      3      4      4\n") > odd_pos);
}

TEST_CASE("bench records carry exact emission counts") {
  const auto records = io::run_decompose_bench({8, 16, 32}, 3);
  REQUIRE(records.size() == 3);
  for (const auto& r : records) {
    CHECK(r.emitted_edges == r.m);
    CHECK(r.best_ns >= 1);
    CHECK(r.trials == 3);
  }
  CHECK_THROWS_AS(io::run_decompose_bench({8}, 1), std::invalid_argument);
  CHECK_THROWS_AS(io::run_decompose_bench({2}, 3), std::invalid_argument);
}

TEST_CASE("loglog slope on synthetic records") {
  std::vector<io::BenchRecord> perfect;
  for (long long m : {100, 1000, 10000}) {
    io::BenchRecord r;
    r.m = m;
    r.best_ns = 7 * m;  // exactly linear
    perfect.push_back(r);
  }
  CHECK(std::abs(io::loglog_slope(perfect) - 1.0) < 1e-12);

  std::vector<io::BenchRecord> quadratic;
  for (long long m : {100, 1000, 10000}) {
    io::BenchRecord r;
    r.m = m;
    r.best_ns = m * m;
    quadratic.push_back(r);
  }
  CHECK(std::abs(io::loglog_slope(quadratic) - 2.0) < 1e-12);

  CHECK(std::isnan(io::loglog_slope({perfect[0]})));
}
