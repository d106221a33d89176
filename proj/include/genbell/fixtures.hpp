#pragma once

// Committed integer-sequence prefixes and comparison against computed values.
//
// File format (one sequence per file, fixtures/<id>.seq):
//   # free-form provenance comments
//   id: A069223
//   offset: 1
//   description: ...
//   1, 34, 2971, 513559, ...
// Values are decimal, separated by commas and/or whitespace, across any
// number of lines.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genbell/integer.hpp"
#include "genbell/stirling.hpp"

namespace genbell {

class fixture_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceFixture {
  std::string id;
  std::string description;
  long offset = 0;
  std::vector<Natural> values;

  /// Term a(index), if the prefix reaches it.
  std::optional<Natural> term(long index) const {
    if (index < offset || static_cast<std::size_t>(index - offset) >= values.size()) {
      return std::nullopt;
    }
    return values[static_cast<std::size_t>(index - offset)];
  }
};

using FixtureSet = std::map<std::string, SequenceFixture>;

namespace detail {

  inline std::string trim(std::string s) {
    auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
  }

}  // namespace detail

/// Parses one fixture from text; `origin` prefixes error messages.
inline SequenceFixture parse_fixture(std::istream& in, std::string const& origin) {
  SequenceFixture f;
  bool have_id = false;
  bool have_offset = false;
  std::size_t line_no = 0;
  auto fail = [&](std::string const& msg) {
    return fixture_error(origin + ":" + std::to_string(line_no) + ": " + msg);
  };
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string const line = detail::trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto const colon = line.find(':');
    if (colon != std::string::npos) {
      if (!f.values.empty()) {
        throw fail("header line after values");
      }
      std::string const key = detail::trim(line.substr(0, colon));
      std::string const value = detail::trim(line.substr(colon + 1));
      if (key == "id") {
        if (value.empty()) {
          throw fail("empty id");
        }
        f.id = value;
        have_id = true;
      } else if (key == "offset") {
        try {
          std::size_t used = 0;
          f.offset = std::stol(value, &used);
          if (used != value.size()) {
            throw std::invalid_argument(value);
          }
        } catch (std::exception const&) {
          throw fail("offset '" + value + "' is not an integer");
        }
        have_offset = true;
      } else if (key == "description") {
        f.description = value;
      } else {
        throw fail("unknown header '" + key + "'");
      }
      continue;
    }
    std::string token;
    auto flush = [&] {
      if (token.empty()) {
        return;
      }
      if (!std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        throw fail("non-numeric token '" + token + "'");
      }
      f.values.emplace_back(token);
      token.clear();
    };
    for (char ch : line) {
      if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        token += ch;
      }
    }
    flush();
  }
  if (!have_id) {
    throw fixture_error(origin + ": missing 'id:' header");
  }
  if (!have_offset) {
    throw fixture_error(origin + ": missing 'offset:' header");
  }
  if (f.values.empty()) {
    throw fixture_error(origin + ": no values");
  }
  return f;
}

inline SequenceFixture load_fixture_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw fixture_error("cannot open fixture file " + path.string());
  }
  return parse_fixture(in, path.string());
}

/// Loads every *.seq file in the directory. Ids must be unique.
inline FixtureSet load_fixtures(std::filesystem::path const& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw fixture_error("fixture directory " + directory.string() + " does not exist");
  }
  std::vector<fs::path> files;
  for (auto const& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".seq") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  FixtureSet out;
  for (auto const& file : files) {
    auto f = load_fixture_file(file);
    std::string const id = f.id;
    if (!out.emplace(id, std::move(f)).second) {
      throw fixture_error(file.string() + ": duplicate fixture id " + id);
    }
  }
  return out;
}

struct SequenceReport {
  bool match = true;
  std::size_t compared = 0;
  /// 0-based position, among the compared terms, of the first disagreement.
  std::optional<std::size_t> first_mismatch;
  Natural expected = 0;
  Natural actual = 0;
};

/// Compares the common leading terms of two sequences.
inline SequenceReport compare_prefix(std::span<Natural const> expected,
                                     std::span<Natural const> actual) {
  SequenceReport r;
  r.compared = std::min(expected.size(), actual.size());
  for (std::size_t t = 0; t < r.compared; ++t) {
    if (expected[t] != actual[t]) {
      r.match = false;
      r.first_mismatch = t;
      r.expected = expected[t];
      r.actual = actual[t];
      break;
    }
  }
  return r;
}

/// Compares computed[t] against the fixture term at index first_index + t.
/// first_index defaults to the fixture's own offset.
inline SequenceReport check_sequence(SequenceFixture const& fixture,
                                     std::span<Natural const> computed,
                                     std::optional<long> first_index = std::nullopt) {
  if (computed.empty()) {
    throw std::invalid_argument("nothing computed to compare against " + fixture.id);
  }
  long const start = first_index.value_or(fixture.offset);
  if (start < fixture.offset) {
    throw std::invalid_argument("index " + std::to_string(start) + " precedes the offset of " +
                                fixture.id);
  }
  auto const skip = static_cast<std::size_t>(start - fixture.offset);
  if (skip >= fixture.values.size()) {
    return SequenceReport{true, 0, std::nullopt, 0, 0};
  }
  return compare_prefix(std::span<Natural const>(fixture.values).subspan(skip), computed);
}

inline SequenceReport check_sequence(SequenceFixture const& fixture,
                                     std::vector<Natural> const& computed,
                                     std::optional<long> first_index = std::nullopt) {
  return check_sequence(fixture, std::span<Natural const>(computed), first_index);
}

struct HypothesisTerm {
  unsigned n = 0;
  Natural computed = 0;
  std::optional<Natural> expected;
  bool agrees() const { return expected.has_value() && *expected == computed; }
};

/// Observed agreement between S_{r,1}(n,1) and a catalogued sequence a(n).
struct HypothesisCheck {
  std::string fixture_id;
  unsigned r = 0;
  unsigned s = 0;
  std::vector<HypothesisTerm> terms;

  bool holds() const {
    return !terms.empty() &&
           std::all_of(terms.begin(), terms.end(), [](auto const& t) { return t.agrees(); });
  }
};

inline HypothesisCheck check_first_column(FixtureSet const& fixtures, std::string const& id,
                                          unsigned r, unsigned s, unsigned n_max) {
  auto it = fixtures.find(id);
  if (it == fixtures.end()) {
    throw fixture_error("fixture " + id + " is not loaded");
  }
  HypothesisCheck check{id, r, s, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    auto const row = gen_stirling_row(r, s, n);
    auto const cell = row.find(s);
    check.terms.push_back({n, cell == row.end() ? Natural(0) : cell->second, it->second.term(n)});
  }
  return check;
}

/// S_{3,1}(n,1) against A001147 and S_{4,1}(n,1) against A007559, n = 1..n_max.
inline std::vector<HypothesisCheck> verify_conjectures(FixtureSet const& fixtures, unsigned n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("n_max must be at least 1");
  }
  return {check_first_column(fixtures, "A001147", 3, 1, n_max),
          check_first_column(fixtures, "A007559", 4, 1, n_max)};
}

}  // namespace genbell
