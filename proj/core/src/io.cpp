#include "prefcast/io.hpp"

#include <cctype>
#include <sstream>
#include <tuple>
#include <vector>

namespace prefcast {

namespace {

// Cursor over APX text tracking the current line for error reports.
struct ApxScanner {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  bool at_end() {
    skip_blank();
    return pos >= text.size();
  }

  void skip_blank() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '%') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(line, std::string("expected '") + c + "'");
    ++pos;
  }

  static bool name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
           c != ',' && c != '.' && c != '%';
  }

  std::string read_name() {
    std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (pos == start) throw ParseError(line, "expected a name");
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Framework parse_apx(std::string_view text) {
  ApxScanner in{text};
  FrameworkBuilder builder;
  std::vector<std::tuple<int, std::string, std::string>> pending_attacks;

  while (!in.at_end()) {
    int fact_line = in.line;
    std::string head = in.read_name();
    in.skip_blank();
    if (head == "arg") {
      in.expect('(');
      in.skip_blank();
      std::string name = in.read_name();
      in.skip_blank();
      in.expect(')');
      in.skip_blank();
      in.expect('.');
      if (builder.index_of(name) >= 0)
        throw ParseError(fact_line, "duplicate arg fact: " + name);
      builder.add_argument(name);
    } else if (head == "att") {
      in.expect('(');
      in.skip_blank();
      std::string from = in.read_name();
      in.skip_blank();
      in.expect(',');
      in.skip_blank();
      std::string to = in.read_name();
      in.skip_blank();
      in.expect(')');
      in.skip_blank();
      in.expect('.');
      pending_attacks.emplace_back(fact_line, std::move(from), std::move(to));
    } else {
      throw ParseError(fact_line, "unknown fact: " + head);
    }
  }

  for (const auto& [line, from, to] : pending_attacks) {
    int a = builder.index_of(from);
    int b = builder.index_of(to);
    if (a < 0) throw ParseError(line, "attack references undeclared argument: " + from);
    if (b < 0) throw ParseError(line, "attack references undeclared argument: " + to);
    builder.add_attack(a, b);
  }
  return builder.build();
}

Framework parse_tgf(std::string_view text) {
  FrameworkBuilder builder;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool seen_separator = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    if (first == "#") {
      if (seen_separator) throw ParseError(line_no, "duplicate separator");
      seen_separator = true;
      continue;
    }
    std::string second, extra;
    if (!seen_separator) {
      if (fields >> second)
        throw ParseError(line_no, "missing '#' separator before edge line");
      if (builder.index_of(first) >= 0)
        throw ParseError(line_no, "duplicate node label: " + first);
      builder.add_argument(first);
    } else {
      if (!(fields >> second)) throw ParseError(line_no, "edge line needs two endpoints");
      if (fields >> extra) throw ParseError(line_no, "trailing tokens on edge line");
      int a = builder.index_of(first);
      int b = builder.index_of(second);
      if (a < 0) throw ParseError(line_no, "edge references undeclared node: " + first);
      if (b < 0) throw ParseError(line_no, "edge references undeclared node: " + second);
      builder.add_attack(a, b);
    }
  }
  if (!seen_separator) throw ParseError(line_no == 0 ? 1 : line_no, "missing '#' separator");
  return builder.build();
}

std::string render_apx(const Framework& f) {
  std::ostringstream out;
  for (int i = 0; i < f.size(); ++i) out << "arg(" << f.label(i) << ").\n";
  for (auto [from, to] : f.attacks())
    out << "att(" << f.label(from) << "," << f.label(to) << ").\n";
  return out.str();
}

std::string render_tgf(const Framework& f) {
  std::ostringstream out;
  for (int i = 0; i < f.size(); ++i) out << f.label(i) << "\n";
  out << "#\n";
  for (auto [from, to] : f.attacks()) out << f.label(from) << " " << f.label(to) << "\n";
  return out.str();
}

}  // namespace prefcast
