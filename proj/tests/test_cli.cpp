#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "genbell/cli.hpp"

#ifndef GENBELL_FIXTURE_DIR
#define GENBELL_FIXTURE_DIR "fixtures"
#endif

namespace genbell::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run capture(F&& f) {
  std::ostringstream out, err;
  int const code = f(out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(std::string const& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::size_t count_occurrences(std::string const& s, std::string const& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Parse, FormatsAndSizes) {
  EXPECT_EQ(parse_format("md"), OutputFormat::markdown);
  EXPECT_EQ(parse_format("dot"), OutputFormat::dot);
  EXPECT_FALSE(parse_format("xml"));
  EXPECT_EQ(parse_sizes("3,3"), (std::vector<unsigned>{3, 3}));
  EXPECT_EQ(parse_sizes("2, 3, 1"), (std::vector<unsigned>{2, 3, 1}));
  EXPECT_THROW(parse_sizes("3,,3"), std::invalid_argument);
  EXPECT_THROW(parse_sizes("3,x"), std::invalid_argument);
  EXPECT_THROW(parse_sizes(""), std::invalid_argument);
  EXPECT_EQ(parse_suite("oeis"), Suite::oeis);
  EXPECT_FALSE(parse_suite("everything"));
}

TEST(Table, CliqueTriangleCsv) {
  auto const r = capture([](auto& o, auto& e) { return cmd_table(3, 3, 5, OutputFormat::csv, o, e); });
  ASSERT_EQ(r.code, exit_ok) << r.err;
  std::istringstream lines(r.out);
  std::string header, row1, row2, row3, row4, row5;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  std::getline(lines, row3);
  std::getline(lines, row4);
  std::getline(lines, row5);
  EXPECT_EQ(header, "n,3,4,5,6,7,8,9,10,11,12,13,14,15");
  EXPECT_EQ(row1, "1,1,,,,,,,,,,,,");
  EXPECT_EQ(row2, "2,6,18,9,1,,,,,,,,,");
  EXPECT_EQ(row4.substr(0, 46), "4,216,13608,94284,186876,149580,56808,11025,11");
  EXPECT_EQ(row5.rfind("5,1296,330480,6148872,28245672,49658508,41392620,18428400,4691412,", 0), 0u);
}

TEST(Table, LahMarkdown) {
  auto const r = capture([](auto& o, auto& e) { return cmd_table(2, 1, 9, OutputFormat::markdown, o, e); });
  ASSERT_EQ(r.code, exit_ok) << r.err;
  EXPECT_EQ(r.out.rfind("| n \\ k | 1 | 2 |", 0), 0u);
  EXPECT_NE(r.out.find("| 8 | 40320 | 141120 | 141120 | 58800 | 11760 | 1176 | 56 | 1 |"), std::string::npos)
      << r.out;
  EXPECT_EQ(count_lines(r.out), 11u);
}

TEST(Table, StirlingSecondKind) {
  auto const r = capture([](auto& o, auto& e) { return cmd_table(1, 1, 4, OutputFormat::csv, o, e); });
  ASSERT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "n,1,2,3,4\n1,1,,,\n2,1,1,,\n3,1,3,1,\n4,1,7,6,1\n");
}

TEST(Table, JsonUsesStrings) {
  auto const r = capture([](auto& o, auto& e) { return cmd_table(2, 2, 2, OutputFormat::json, o, e); });
  ASSERT_EQ(r.code, exit_ok);
  auto const doc = json::parse(r.out);
  EXPECT_EQ(doc["rows"][1]["values"]["3"], "4");
  EXPECT_EQ(doc["rows"][1]["values"]["2"], "2");
}

TEST(Table, RejectsBadParameters) {
  EXPECT_EQ(capture([](auto& o, auto& e) { return cmd_table(1, 2, 3, OutputFormat::csv, o, e); }).code, exit_usage);
  EXPECT_EQ(capture([](auto& o, auto& e) { return cmd_table(2, 0, 3, OutputFormat::csv, o, e); }).code, exit_usage);
  EXPECT_EQ(capture([](auto& o, auto& e) { return cmd_table(2, 2, 0, OutputFormat::csv, o, e); }).code, exit_usage);
  auto const dot = capture([](auto& o, auto& e) { return cmd_table(2, 2, 2, OutputFormat::dot, o, e); });
  EXPECT_EQ(dot.code, exit_usage);
  EXPECT_TRUE(dot.out.empty());
}

TEST(Bell, Sequences) {
  auto bell = [](unsigned m, unsigned n) {
    return capture([&](auto& o, auto& e) { return cmd_bell(m, n, OutputFormat::text, o, e); });
  };
  EXPECT_EQ(bell(3, 4).out, "1, 34, 2971, 513559\n");
  EXPECT_EQ(bell(1, 5).out, "1, 2, 5, 15, 52\n");
  EXPECT_EQ(bell(2, 1).out, "1\n");
  EXPECT_EQ(bell(0, 3).code, exit_usage);
  auto const csv = capture([](auto& o, auto& e) { return cmd_bell(2, 3, OutputFormat::csv, o, e); });
  EXPECT_EQ(csv.out, "n,value\n1,1\n2,7\n3,87\n");
}

TEST(Enumerate, Counts) {
  auto const col = capture([](auto& o, auto& e) {
    return cmd_enumerate(EnumerateKind::colourings, {3, 3}, 4u, OutputFormat::text, o, e);
  });
  ASSERT_EQ(col.code, exit_ok);
  EXPECT_EQ(count_lines(col.out), 18u);

  auto const dig = capture([](auto& o, auto& e) {
    return cmd_enumerate(EnumerateKind::digraphs, {3, 3}, std::nullopt, OutputFormat::text, o, e);
  });
  ASSERT_EQ(dig.code, exit_ok);
  EXPECT_EQ(count_lines(dig.out), 34u);

  auto const dot = capture([](auto& o, auto& e) {
    return cmd_enumerate(EnumerateKind::digraphs, {3, 3}, std::nullopt, OutputFormat::dot, o, e);
  });
  ASSERT_EQ(dot.code, exit_ok);
  EXPECT_EQ(count_occurrences(dot.out, "digraph "), 34u);
  EXPECT_NE(dot.out.find("digraph D34 {"), std::string::npos);

  auto const js = capture([](auto& o, auto& e) {
    return cmd_enumerate(EnumerateKind::colourings, {2, 1}, std::nullopt, OutputFormat::json, o, e);
  });
  ASSERT_EQ(js.code, exit_ok);
  std::istringstream lines(js.out);
  std::size_t n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    EXPECT_NO_THROW(colouring_from_json(json::parse(line)));
  }
  EXPECT_EQ(n, 3u);
}

TEST(Enumerate, RejectsBadInput) {
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cmd_enumerate(EnumerateKind::colourings, {3, 0}, std::nullopt, OutputFormat::text, o, e);
            }).code,
            exit_usage);
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cmd_enumerate(EnumerateKind::colourings, {3}, std::nullopt, OutputFormat::dot, o, e);
            }).code,
            exit_usage);
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cmd_enumerate(EnumerateKind::digraphs, {3}, std::nullopt, OutputFormat::csv, o, e);
            }).code,
            exit_usage);
}

Run bijection(Direction d, std::vector<unsigned> const& sizes, std::string const& input,
              OutputFormat f = OutputFormat::json) {
  std::istringstream in(input);
  return capture([&](auto& o, auto& e) { return cmd_bijection(d, sizes, in, f, o, e); });
}

TEST(Bijection, WorkedDigraphToColouring) {
  auto const r = bijection(Direction::to_colouring, {3, 3},
                           R"({"k":4,"cycles":[[[1,2],[2,3],[3,1]],[[3,2],[2,4],[4,3]]]})",
                           OutputFormat::text);
  ASSERT_EQ(r.code, exit_ok) << r.err;
  EXPECT_EQ(r.out, "v1.1 v2.1 | v1.2 v2.3 | v1.3 | v2.2\n");
}

TEST(Bijection, ColouringToDigraph) {
  auto const r = bijection(Direction::to_digraph, {3}, R"({"blocks":[[[1,1]],[[1,2]],[[1,3]]]})");
  ASSERT_EQ(r.code, exit_ok) << r.err;
  auto const d = digraph_from_json(json::parse(r.out));
  EXPECT_EQ(d.vertex_count, 3u);
  ASSERT_EQ(d.cycles.size(), 1u);
  EXPECT_TRUE(validate(d));

  auto const back = bijection(Direction::to_colouring, {3}, r.out, OutputFormat::text);
  EXPECT_EQ(back.out, "v1.1 | v1.2 | v1.3\n");
}

TEST(Bijection, RejectsInvalidInput) {
  EXPECT_EQ(bijection(Direction::to_digraph, {3}, R"({"blocks":[[[1,1],[1,2]],[[1,3]]]})").code, exit_failure);
  EXPECT_EQ(bijection(Direction::to_colouring, {3}, R"({"k":3,"cycles":[[[1,2],[2,3],[3,2]]]})").code,
            exit_failure);
  EXPECT_EQ(bijection(Direction::to_colouring, {3}, "not json").code, exit_failure);
  EXPECT_EQ(bijection(Direction::to_digraph, {}, "{}").code, exit_usage);
  EXPECT_EQ(bijection(Direction::to_colouring, {3}, "{}", OutputFormat::dot).code, exit_usage);
}

TEST(Verify, PassesAndReportsJson) {
  VerifyOptions opts;
  opts.fixtures = GENBELL_FIXTURE_DIR;
  opts.max_vertices = 5;
  auto const text = capture([&](auto& o, auto& e) { return cmd_verify(Suite::all, opts, false, o, e); });
  EXPECT_EQ(text.code, exit_ok) << text.out << text.err;
  EXPECT_EQ(text.out.find("FAIL"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("all checks passed"), std::string::npos);

  auto const js = capture([&](auto& o, auto& e) { return cmd_verify(Suite::oeis, opts, true, o, e); });
  ASSERT_EQ(js.code, exit_ok);
  auto const doc = json::parse(js.out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_FALSE(doc["checks"].empty());
}

TEST(Verify, MissingFixturesIsUsageError) {
  VerifyOptions opts;
  opts.fixtures = "/nonexistent/genbell/fixtures";
  auto const r = capture([&](auto& o, auto& e) { return cmd_verify(Suite::oeis, opts, false, o, e); });
  EXPECT_EQ(r.code, exit_usage);
  EXPECT_FALSE(r.err.empty());
  auto const tables = capture([&](auto& o, auto& e) { return cmd_verify(Suite::tables, opts, false, o, e); });
  EXPECT_EQ(tables.code, exit_ok);
}

TEST(Output, IsDeterministic) {
  auto run = [] {
    return capture([](auto& o, auto& e) {
             return cmd_enumerate(EnumerateKind::digraphs, {2, 3}, std::nullopt, OutputFormat::json, o, e);
           })
        .out;
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
}  // namespace genbell::cli
