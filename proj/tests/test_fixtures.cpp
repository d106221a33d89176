#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "genbell/fixtures.hpp"
#include "genbell/stirling.hpp"

#ifndef GENBELL_FIXTURE_DIR
#define GENBELL_FIXTURE_DIR "fixtures"
#endif

namespace genbell {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("genbell-fixtures-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  void write(std::string const& name, std::string const& body) const {
    std::ofstream(path_ / name) << body;
  }

  fs::path const& path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<Natural> nat(std::initializer_list<unsigned long long> xs) {
  return {xs.begin(), xs.end()};
}

TEST(LoadFixtures, CommittedSet) {
  auto const set = load_fixtures(GENBELL_FIXTURE_DIR);
  for (auto const* id : {"A069223", "A105278", "A001147", "A007559", "A000110"}) {
    ASSERT_TRUE(set.count(id)) << id;
    EXPECT_GE(set.at(id).values.size(), 10u) << id;
  }
  auto const& a = set.at("A069223");
  EXPECT_EQ(a.offset, 1);
  EXPECT_EQ(std::vector<Natural>(a.values.begin(), a.values.begin() + 4), nat({1, 34, 2971, 513559}));
  EXPECT_EQ(set.at("A001147").term(3), Natural(15));
  EXPECT_FALSE(set.at("A001147").term(-1).has_value());
}

TEST(LoadFixtures, EmptyAndMissingDirectories) {
  TempDir dir;
  EXPECT_TRUE(load_fixtures(dir.path()).empty());
  EXPECT_THROW(load_fixtures(dir.path() / "nope"), fixture_error);
}

TEST(LoadFixtures, ParseErrorsNameFileAndLine) {
  TempDir dir;
  dir.write("bad.seq", "id: X1\noffset: 0\n1, 2,\n3, x4, 5\n");
  try {
    load_fixtures(dir.path());
    FAIL() << "expected a parse error";
  } catch (fixture_error const& e) {
    std::string const msg = e.what();
    EXPECT_NE(msg.find("bad.seq:4"), std::string::npos) << msg;
    EXPECT_NE(msg.find("x4"), std::string::npos) << msg;
  }
}

TEST(LoadFixtures, StructuralErrors) {
  auto parse = [](std::string const& body) {
    std::istringstream in(body);
    return parse_fixture(in, "mem");
  };
  EXPECT_THROW(parse("offset: 0\n1, 2\n"), fixture_error);
  EXPECT_THROW(parse("id: A\n1, 2\n"), fixture_error);
  EXPECT_THROW(parse("id: A\noffset: 0\n"), fixture_error);
  EXPECT_THROW(parse("id: A\noffset: zero\n1\n"), fixture_error);
  EXPECT_THROW(parse("id: A\noffset: 0\nfoo: bar\n1\n"), fixture_error);
  EXPECT_THROW(parse("id: A\noffset: 0\n1\ndescription: late\n"), fixture_error);
  auto const ok = parse("# c\nid: A\noffset: 2\ndescription: d\n\n 1 2,3\n4,\n");
  EXPECT_EQ(ok.values, nat({1, 2, 3, 4}));
  EXPECT_EQ(ok.description, "d");
}

TEST(LoadFixtures, DuplicateIds) {
  TempDir dir;
  dir.write("a.seq", "id: A\noffset: 0\n1\n");
  dir.write("b.seq", "id: A\noffset: 0\n2\n");
  dir.write("ignored.txt", "not a fixture");
  EXPECT_THROW(load_fixtures(dir.path()), fixture_error);
}

TEST(CheckSequence, MatchAndMismatch) {
  SequenceFixture const f{"T", "", 0, nat({1, 2})};
  auto const bad = check_sequence(f, nat({1, 3}));
  EXPECT_FALSE(bad.match);
  EXPECT_EQ(bad.first_mismatch, 1u);
  EXPECT_EQ(bad.expected, 2);
  EXPECT_EQ(bad.actual, 3);

  auto const good = check_sequence(f, nat({1, 2, 99}));
  EXPECT_TRUE(good.match);
  EXPECT_EQ(good.compared, 2u);

  EXPECT_THROW(check_sequence(f, std::vector<Natural>{}), std::invalid_argument);
  EXPECT_THROW(check_sequence(f, nat({1}), -1), std::invalid_argument);
  EXPECT_TRUE(check_sequence(f, nat({2}), 1).match);
}

TEST(CheckSequence, PrintedBellPrefix) {
  auto const set = load_fixtures(GENBELL_FIXTURE_DIR);
  std::vector<Natural> computed;
  for (unsigned n = 1; n <= 4; ++n) {
    computed.push_back(bell_mm(3, n));
  }
  EXPECT_TRUE(check_sequence(set.at("A069223"), computed).match);
}

TEST(CheckSequence, LahRowsMatch) {
  auto const set = load_fixtures(GENBELL_FIXTURE_DIR);
  std::vector<Natural> computed;
  for (unsigned n = 1; n <= 9; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      computed.push_back(lah(n, k));
    }
  }
  auto const r = check_sequence(set.at("A105278"), computed);
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.compared, 45u);
}

TEST(CheckSequence, VerdictIsSymmetric) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Natural> a(1 + trial % 6), b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = val(rng);
      b[i] = val(rng);
    }
    auto const ab = compare_prefix(a, b);
    auto const ba = compare_prefix(b, a);
    EXPECT_EQ(ab.match, ba.match);
    EXPECT_EQ(ab.first_mismatch, ba.first_mismatch);
  }
}

TEST(VerifyConjectures, DoubleAndTripleFactorials) {
  auto const set = load_fixtures(GENBELL_FIXTURE_DIR);
  auto const checks = verify_conjectures(set, 10);
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_EQ(checks[0].fixture_id, "A001147");
  EXPECT_EQ(checks[1].fixture_id, "A007559");
  for (auto const& c : checks) {
    EXPECT_TRUE(c.holds()) << c.fixture_id;
    EXPECT_EQ(c.terms.size(), 10u);
  }
  auto const small = verify_conjectures(set, 3);
  EXPECT_EQ(small[0].terms[2].computed, 15);
  EXPECT_EQ(small[1].terms[2].computed, 28);
  EXPECT_EQ(small[0].terms[0].computed, 1);
  EXPECT_EQ(small[1].terms[0].computed, 1);
  EXPECT_THROW(verify_conjectures(set, 0), std::invalid_argument);
}

TEST(VerifyConjectures, ReportsDisagreementAndMissingTerms) {
  FixtureSet set;
  set["A001147"] = {"A001147", "", 0, nat({1, 1, 3, 16})};
  set["A007559"] = {"A007559", "", 0, nat({1, 1, 4, 28})};
  auto const checks = verify_conjectures(set, 3);
  EXPECT_FALSE(checks[0].holds());
  EXPECT_FALSE(checks[0].terms[2].agrees());
  EXPECT_TRUE(checks[1].holds());
  EXPECT_FALSE(verify_conjectures(set, 4)[1].holds());
  EXPECT_THROW(verify_conjectures(FixtureSet{}, 3), fixture_error);
}

}  // namespace
}  // namespace genbell
