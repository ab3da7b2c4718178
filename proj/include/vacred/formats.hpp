#pragma once

// Text formats: APX (`arg(a). att(a,b).` statements, `%` comments) and TGF
// (node ids, `#`, edge lines). Parsers reject undeclared attack endpoints and
// report positions; argument order of first declaration fixes indices.
// Extension collections print in ICCMA style (`[[a,d],[b]]`, `NO` when no
// extension exists) or as JSON with the semantics token and a framework hash.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vacred/af.hpp"

namespace vacred {

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
  Severity severity = Severity::Error;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (severity == Severity::Error ? "error: " : "warning: ") + message;
  }
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diagnostic)
      : Error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

inline bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

namespace detail {

struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    const char c = text[pos++];
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    return c;
  }

  [[noreturn]] void fail(std::string message) const {
    throw ParseError(ParseDiagnostic{line, column, std::move(message),
                                     ParseDiagnostic::Severity::Error});
  }

  void skip_blank_and_comments() {
    while (!done()) {
      const char c = peek();
      if (c == '%') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string read_name() {
    std::string name;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_'))
      name += advance();
    if (name.empty()) fail("expected an argument name");
    return name;
  }

  void expect(char c, std::string_view what) {
    skip_ws_in_statement();
    if (done() || peek() != c)
      fail("expected '" + std::string(1, c) + "' " + std::string(what));
    advance();
  }

  void skip_ws_in_statement() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }
};

}  // namespace detail

/// Parses ASPARTIX text. Warnings (duplicate attacks) are appended to
/// `warnings` when a sink is given; errors carry the offending position.
inline ArgumentationFramework parse_apx(
    std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr) {
  detail::TextCursor in{text};
  std::vector<std::string> names;
  std::vector<std::pair<std::pair<std::string, std::string>,
                        std::pair<std::size_t, std::size_t>>>
      attacks;
  for (;;) {
    in.skip_blank_and_comments();
    if (in.done()) break;
    const std::size_t stmt_line = in.line;
    const std::size_t stmt_column = in.column;
    const std::string keyword = in.read_name();
    if (keyword == "arg") {
      in.expect('(', "after 'arg'");
      in.skip_ws_in_statement();
      std::string name = in.read_name();
      in.expect(')', "after the argument name");
      in.expect('.', "to end the statement");
      for (const std::string& existing : names)
        if (existing == name)
          throw ParseError(ParseDiagnostic{
              stmt_line, stmt_column,
              "argument '" + name + "' declared twice",
              ParseDiagnostic::Severity::Error});
      if (static_cast<int>(names.size()) >= kMaxArguments)
        throw ParseError(ParseDiagnostic{
            stmt_line, stmt_column,
            "more than " + std::to_string(kMaxArguments) + " arguments",
            ParseDiagnostic::Severity::Error});
      names.push_back(std::move(name));
    } else if (keyword == "att") {
      in.expect('(', "after 'att'");
      in.skip_ws_in_statement();
      std::string from = in.read_name();
      in.expect(',', "between attack endpoints");
      in.skip_ws_in_statement();
      std::string to = in.read_name();
      in.expect(')', "after the attack endpoints");
      in.expect('.', "to end the statement");
      attacks.push_back({{std::move(from), std::move(to)},
                         {stmt_line, stmt_column}});
    } else {
      throw ParseError(ParseDiagnostic{stmt_line, stmt_column,
                                       "expected 'arg' or 'att', got '" +
                                           keyword + "'",
                                       ParseDiagnostic::Severity::Error});
    }
  }
  const int declared = static_cast<int>(names.size());
  ArgumentationFramework af(declared, std::move(names));
  for (const auto& [endpoints, where] : attacks) {
    const auto from = af.index_of(endpoints.first);
    const auto to = af.index_of(endpoints.second);
    if (!from || !to)
      throw ParseError(ParseDiagnostic{
          where.first, where.second,
          "attack endpoint '" + (!from ? endpoints.first : endpoints.second) +
              "' is not a declared argument",
          ParseDiagnostic::Severity::Error});
    if (af.has_attack(*from, *to) && warnings)
      warnings->push_back(ParseDiagnostic{
          where.first, where.second,
          "duplicate attack (" + endpoints.first + "," + endpoints.second +
              ")",
          ParseDiagnostic::Severity::Warning});
    af.add_attack(*from, *to);
  }
  return af;
}

/// Trivial graph format: one node id per line, a `#` line, then `src dst`
/// edge lines.
inline ArgumentationFramework parse_tgf(
    std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> attacks;
  bool after_separator = false;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t newline = text.find('\n', start);
    std::string_view line = newline == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, newline - start);
    start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_number;
    while (!line.empty() &&
           std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    while (!line.empty() &&
           std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty()) continue;
    if (line == "#") {
      if (after_separator)
        throw ParseError(ParseDiagnostic{line_number, 1,
                                         "second '#' separator",
                                         ParseDiagnostic::Severity::Error});
      after_separator = true;
      continue;
    }
    const std::size_t space = line.find(' ');
    if (!after_separator) {
      if (space != std::string_view::npos)
        throw ParseError(ParseDiagnostic{
            line_number, 1, "edge line before the '#' separator",
            ParseDiagnostic::Severity::Error});
      if (!is_valid_name(line))
        throw ParseError(ParseDiagnostic{line_number, 1,
                                         "invalid node id '" +
                                             std::string(line) + "'",
                                         ParseDiagnostic::Severity::Error});
      for (const std::string& existing : names)
        if (existing == line)
          throw ParseError(ParseDiagnostic{
              line_number, 1,
              "node '" + std::string(line) + "' declared twice",
              ParseDiagnostic::Severity::Error});
      if (static_cast<int>(names.size()) >= kMaxArguments)
        throw ParseError(ParseDiagnostic{
            line_number, 1,
            "more than " + std::to_string(kMaxArguments) + " arguments",
            ParseDiagnostic::Severity::Error});
      names.emplace_back(line);
    } else {
      if (space == std::string_view::npos)
        throw ParseError(ParseDiagnostic{line_number, 1,
                                         "expected 'src dst' edge line",
                                         ParseDiagnostic::Severity::Error});
      std::string_view from = line.substr(0, space);
      std::string_view to = line.substr(space + 1);
      while (!to.empty() && std::isspace(static_cast<unsigned char>(to.front())))
        to.remove_prefix(1);
      if (!is_valid_name(from) || !is_valid_name(to))
        throw ParseError(ParseDiagnostic{line_number, 1,
                                         "invalid edge line",
                                         ParseDiagnostic::Severity::Error});
      attacks.emplace_back(std::string(from), std::string(to));
    }
  }
  if (!after_separator)
    throw ParseError(ParseDiagnostic{line_number, 1,
                                     "missing '#' separator",
                                     ParseDiagnostic::Severity::Error});
  const int declared = static_cast<int>(names.size());
  ArgumentationFramework af(declared, std::move(names));
  for (const auto& [from, to] : attacks) {
    const auto i = af.index_of(from);
    const auto j = af.index_of(to);
    if (!i || !j)
      throw ParseError(ParseDiagnostic{
          0, 0, "edge endpoint '" + (!i ? from : to) + "' is not a declared node",
          ParseDiagnostic::Severity::Error});
    if (af.has_attack(*i, *j) && warnings)
      warnings->push_back(ParseDiagnostic{0, 0,
                                          "duplicate edge " + from + " " + to,
                                          ParseDiagnostic::Severity::Warning});
    af.add_attack(*i, *j);
  }
  return af;
}

inline std::string write_apx(const ArgumentationFramework& af) {
  std::string text;
  for (int i = 0; i < af.arg_count(); ++i)
    text += "arg(" + af.label(i) + ").\n";
  for (int i = 0; i < af.arg_count(); ++i)
    for (int j = 0; j < af.arg_count(); ++j)
      if (af.has_attack(i, j))
        text += "att(" + af.label(i) + "," + af.label(j) + ").\n";
  return text;
}

inline std::string write_tgf(const ArgumentationFramework& af) {
  std::string text;
  for (int i = 0; i < af.arg_count(); ++i) text += af.label(i) + "\n";
  text += "#\n";
  for (int i = 0; i < af.arg_count(); ++i)
    for (int j = 0; j < af.arg_count(); ++j)
      if (af.has_attack(i, j))
        text += af.label(i) + " " + af.label(j) + "\n";
  return text;
}

/// FNV-1a over the argument count, labels and attack pairs.
inline std::uint64_t af_hash(const ArgumentationFramework& af) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  const auto mix = [&hash](std::string_view bytes) {
    for (char c : bytes) {
      hash ^= static_cast<unsigned char>(c);
      hash *= 0x100000001b3ULL;
    }
    hash ^= 0xff;
    hash *= 0x100000001b3ULL;
  };
  mix(std::to_string(af.arg_count()));
  for (int i = 0; i < af.arg_count(); ++i) mix(af.label(i));
  for (int i = 0; i < af.arg_count(); ++i)
    for (int j = 0; j < af.arg_count(); ++j)
      if (af.has_attack(i, j))
        mix(std::to_string(i) + ">" + std::to_string(j));
  return hash;
}

inline std::string af_hash_hex(const ArgumentationFramework& af) {
  static const char digits[] = "0123456789abcdef";
  std::uint64_t hash = af_hash(af);
  std::string text(16, '0');
  for (int i = 15; i >= 0; --i) {
    text[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return text;
}

enum class ExtensionStyle { Iccma, Json };

inline nlohmann::ordered_json extensions_to_json_names(
    const ArgumentationFramework& af, const ExtensionSet& extensions) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (ArgSet e : extensions) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (ArgSet rest = e; rest != 0; rest &= rest - 1)
      one.push_back(af.label(std::countr_zero(rest)));
    list.push_back(std::move(one));
  }
  return list;
}

/// ICCMA style prints `NO` for an empty collection — a semantics returning
/// zero extensions is different from one returning only the empty set.
inline std::string write_extensions(const ArgumentationFramework& af,
                                    const ExtensionSet& extensions,
                                    ExtensionStyle style,
                                    std::string_view semantics_token = "") {
  if (style == ExtensionStyle::Iccma) {
    if (extensions.empty()) return "NO";
    std::string text = "[";
    bool first_set = true;
    for (ArgSet e : extensions) {
      if (!first_set) text += ",";
      text += "[";
      bool first_arg = true;
      for (ArgSet rest = e; rest != 0; rest &= rest - 1) {
        if (!first_arg) text += ",";
        text += af.label(std::countr_zero(rest));
        first_arg = false;
      }
      text += "]";
      first_set = false;
    }
    text += "]";
    return text;
  }
  nlohmann::ordered_json doc;
  doc["semantics"] = std::string(semantics_token);
  doc["af_hash"] = af_hash_hex(af);
  doc["extension_count"] = extensions.size();
  doc["extensions"] = extensions_to_json_names(af, extensions);
  return doc.dump();
}

/// Splits a multi-framework corpus file on `%---` separator lines.
inline std::vector<std::string> split_apx_blocks(std::string_view text) {
  std::vector<std::string> blocks;
  std::string current;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t newline = text.find('\n', start);
    const std::string_view line = newline == std::string_view::npos
                                      ? text.substr(start)
                                      : text.substr(start, newline - start);
    if (line.starts_with("%---")) {
      blocks.push_back(std::move(current));
      current.clear();
    } else {
      current += line;
      current += '\n';
    }
    if (newline == std::string_view::npos) break;
    start = newline + 1;
  }
  blocks.push_back(std::move(current));
  // Drop blocks that contain no statements at all (leading or trailing
  // separators), but keep genuinely empty frameworks written as comments.
  std::vector<std::string> kept;
  for (std::string& block : blocks) {
    bool has_content = false;
    for (char c : block)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        has_content = true;
        break;
      }
    if (has_content) kept.push_back(std::move(block));
  }
  return kept;
}

}  // namespace vacred
