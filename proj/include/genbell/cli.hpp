#pragma once

// Subcommand implementations behind tools/genbell. Each command writes its
// result to `out`, diagnostics to `err`, and returns the process exit code.
// Tables and reports are rendered completely before anything is written, so
// a failing command never leaves a partial table behind; enumerations stream.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "genbell/colouring.hpp"
#include "genbell/eulerian.hpp"
#include "genbell/json_io.hpp"
#include "genbell/stirling.hpp"
#include "genbell/verify.hpp"

namespace genbell::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

enum class OutputFormat { csv, json, markdown, text, dot };

inline std::optional<OutputFormat> parse_format(std::string const& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "text") return OutputFormat::text;
  if (name == "dot") return OutputFormat::dot;
  return std::nullopt;
}

/// "3,3" or "2, 3, 1" -> {3,3} / {2,3,1}.
inline std::vector<unsigned> parse_sizes(std::string const& text) {
  std::vector<unsigned> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) {
      throw std::invalid_argument("empty entry in clique list '" + text + "'");
    }
    if (token.size() > 6 || !std::all_of(token.begin(), token.end(), ::isdigit)) {
      throw std::invalid_argument("bad clique size '" + token + "'");
    }
    out.push_back(static_cast<unsigned>(std::stoul(token)));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      token += ch;
    }
  }
  flush();
  return out;
}

namespace detail {

  inline std::string render_triangle(Triangle const& t, unsigned first_k, unsigned last_k,
                                     OutputFormat format) {
    std::ostringstream os;
    unsigned const n_max = t.max_n();
    switch (format) {
      case OutputFormat::csv: {
        os << "n";
        for (unsigned k = first_k; k <= last_k; ++k) {
          os << ',' << k;
        }
        os << '\n';
        for (unsigned n = 1; n <= n_max; ++n) {
          os << n;
          for (unsigned k = first_k; k <= last_k; ++k) {
            os << ',';
            if (t.contains(n, k)) {
              os << t.at(n, k);
            }
          }
          os << '\n';
        }
        break;
      }
      case OutputFormat::markdown: {
        os << "| n \\ k |";
        for (unsigned k = first_k; k <= last_k; ++k) {
          os << ' ' << k << " |";
        }
        os << "\n|---|";
        for (unsigned k = first_k; k <= last_k; ++k) {
          os << "---:|";
        }
        os << '\n';
        for (unsigned n = 1; n <= n_max; ++n) {
          os << "| " << n << " |";
          for (unsigned k = first_k; k <= last_k; ++k) {
            os << ' ';
            if (t.contains(n, k)) {
              os << t.at(n, k) << ' ';
            }
            os << '|';
          }
          os << '\n';
        }
        break;
      }
      case OutputFormat::json: {
        json rows = json::array();
        for (unsigned n = 1; n <= n_max; ++n) {
          json values = json::object();
          for (unsigned k : t.columns(n)) {
            values[std::to_string(k)] = t.at(n, k).str();
          }
          rows.push_back({{"n", n}, {"values", std::move(values)}});
        }
        json doc{{"family", to_string(t.family)}, {"parameters", t.parameters}, {"rows", std::move(rows)}};
        os << doc.dump() << '\n';
        break;
      }
      case OutputFormat::text: {
        std::size_t width = 2;
        for (auto const& [key, value] : t.entries) {
          width = std::max(width, value.str().size());
        }
        os << std::setw(4) << "n\\k";
        for (unsigned k = first_k; k <= last_k; ++k) {
          os << ' ' << std::setw(static_cast<int>(width)) << k;
        }
        os << '\n';
        for (unsigned n = 1; n <= n_max; ++n) {
          os << std::setw(4) << n;
          for (unsigned k = first_k; k <= last_k; ++k) {
            os << ' ' << std::setw(static_cast<int>(width)) << (t.contains(n, k) ? t.at(n, k).str() : "");
          }
          os << '\n';
        }
        break;
      }
      case OutputFormat::dot:
        throw std::invalid_argument("dot output is only available for digraphs");
    }
    return os.str();
  }

}  // namespace detail

/// S_{r,s}(n,k) for n = 1..n_max by coefficient extraction, cross-checked
/// against the clique recurrence when r == s.
inline int cmd_table(unsigned r, unsigned s, unsigned n_max, OutputFormat format, std::ostream& out,
                     std::ostream& err) {
  if (s == 0 || r < s) {
    err << "error: table needs r >= s >= 1 (got r=" << r << ", s=" << s << ")\n";
    return exit_usage;
  }
  if (n_max == 0) {
    err << "error: --n-max must be at least 1\n";
    return exit_usage;
  }
  if (format == OutputFormat::dot) {
    err << "error: dot output is only available for digraphs\n";
    return exit_usage;
  }
  Triangle const t = gen_stirling_triangle(r, s, n_max);
  if (r == s) {
    for (auto const& [cell, value] : t.entries) {
      if (stirling_mm(r, cell.first, cell.second) != value) {
        err << "error: computation routes disagree at n=" << cell.first << ", k=" << cell.second
            << "\n";
        return exit_failure;
      }
    }
  }
  out << detail::render_triangle(t, s, n_max * s, format);
  return exit_ok;
}

inline int cmd_bell(unsigned m, unsigned n_max, OutputFormat format, std::ostream& out,
                    std::ostream& err) {
  if (m == 0 || n_max == 0) {
    err << "error: bell needs m >= 1 and n-max >= 1\n";
    return exit_usage;
  }
  std::vector<Natural> values;
  for (unsigned n = 1; n <= n_max; ++n) {
    values.push_back(bell_mm(m, n));
  }
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? ", " : "") << values[i];
      }
      os << '\n';
      break;
    case OutputFormat::csv:
      os << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << i + 1 << ',' << values[i] << '\n';
      }
      break;
    case OutputFormat::markdown:
      os << "| n | B |\n|---|---:|\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << "| " << i + 1 << " | " << values[i] << " |\n";
      }
      break;
    case OutputFormat::json: {
      json arr = json::array();
      for (auto const& v : values) {
        arr.push_back(v.str());
      }
      os << json{{"m", m}, {"values", std::move(arr)}}.dump() << '\n';
      break;
    }
    case OutputFormat::dot:
      err << "error: dot output is only available for digraphs\n";
      return exit_usage;
  }
  out << os.str();
  return exit_ok;
}

enum class EnumerateKind { colourings, digraphs };

/// Streams canonical colourings or digraphs, one per line (text/json) or one
/// graph block each (dot).
inline int cmd_enumerate(EnumerateKind kind, std::vector<unsigned> const& sizes,
                         std::optional<unsigned> k, OutputFormat format, std::ostream& out,
                         std::ostream& err) {
  std::optional<CliqueFamily> family;
  try {
    family.emplace(sizes);
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  bool const text_like = format == OutputFormat::text || format == OutputFormat::json;
  if (!(text_like || (format == OutputFormat::dot && kind == EnumerateKind::digraphs))) {
    err << "error: enumerate supports text and json output"
        << (kind == EnumerateKind::digraphs ? " (and dot)" : "") << '\n';
    return exit_usage;
  }
  if (kind == EnumerateKind::colourings) {
    auto emit = [&](Colouring const& c) {
      out << (format == OutputFormat::json ? to_json(c).dump() : to_text(c)) << '\n';
    };
    if (k) {
      for_each_colouring(*family, *k, emit);
    } else {
      for_each_colouring(*family, emit);
    }
  } else {
    std::size_t index = 0;
    auto emit = [&](LabelledEulerianDigraph const& d) {
      ++index;
      if (format == OutputFormat::dot) {
        out << to_dot(d, "D" + std::to_string(index));
      } else {
        out << (format == OutputFormat::json ? to_json(d).dump() : to_text(d)) << '\n';
      }
    };
    if (k) {
      for_each_digraph(*family, *k, emit);
    } else {
      for_each_digraph(*family, emit);
    }
  }
  return exit_ok;
}

enum class Direction { to_digraph, to_colouring };

/// Applies the bijection to one JSON object read from `in`.
inline int cmd_bijection(Direction direction, std::vector<unsigned> const& sizes, std::istream& in,
                         OutputFormat format, std::ostream& out, std::ostream& err) {
  std::optional<CliqueFamily> family;
  try {
    family.emplace(sizes);
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (format != OutputFormat::json && format != OutputFormat::text &&
      !(format == OutputFormat::dot && direction == Direction::to_digraph)) {
    err << "error: bijection supports json and text output (dot for digraphs)\n";
    return exit_usage;
  }
  json input;
  try {
    input = json::parse(std::string(std::istreambuf_iterator<char>(in), {}));
  } catch (json::parse_error const& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return exit_failure;
  }
  try {
    if (direction == Direction::to_digraph) {
      auto const d = canonicalize(colouring_to_digraph(*family, colouring_from_json(input)));
      if (format == OutputFormat::dot) {
        out << to_dot(d);
      } else {
        out << (format == OutputFormat::json ? to_json(d).dump() : to_text(d)) << '\n';
      }
    } else {
      auto const c = digraph_to_colouring(*family, digraph_from_json(input));
      out << (format == OutputFormat::json ? to_json(c).dump() : to_text(c)) << '\n';
    }
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

enum class Suite { tables, oeis, bijection, all };

inline std::optional<Suite> parse_suite(std::string const& name) {
  if (name == "tables") return Suite::tables;
  if (name == "oeis") return Suite::oeis;
  if (name == "bijection") return Suite::bijection;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

/// Runs the named suite. Exit 0 iff every check passes, 1 on a failed check,
/// 2 when the configuration (e.g. the fixture directory) is unusable.
inline int cmd_verify(Suite suite, VerifyOptions const& opts, bool json_report, std::ostream& out,
                      std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    if (suite == Suite::tables || suite == Suite::all) {
      verify_tables(results);
    }
    if (suite == Suite::oeis || suite == Suite::all) {
      verify_oeis(results, opts);
    }
    if (suite == Suite::bijection || suite == Suite::all) {
      verify_bijection(results, opts);
    }
  } catch (fixture_error const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  bool const passed = std::all_of(results.begin(), results.end(), [](auto const& r) { return r.passed; });
  if (json_report) {
    json checks = json::array();
    for (auto const& r : results) {
      checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << json{{"passed", passed}, {"checks", std::move(checks)}}.dump(2) << '\n';
  } else {
    for (auto const& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
      if (!r.detail.empty()) {
        out << " - " << r.detail;
      }
      out << '\n';
    }
    out << (passed ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return passed ? exit_ok : exit_failure;
}

}  // namespace genbell::cli
