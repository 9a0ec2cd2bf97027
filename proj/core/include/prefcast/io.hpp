#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "prefcast/framework.hpp"

namespace prefcast {

// Malformed input text; carries the 1-based line where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// APX facts: `arg(<name>).` and `att(<from>,<to>).`, separated by arbitrary
// whitespace; `%` starts a comment running to end of line. Arguments are
// indexed in order of first `arg` declaration. Errors: duplicate `arg`
// facts, attacks on undeclared arguments, malformed facts.
Framework parse_apx(std::string_view text);

// TGF: one node label per line, a lone `#` separator, then `<from> <to>`
// edge lines. Errors: missing separator, undeclared edge endpoints.
Framework parse_tgf(std::string_view text);

// Canonical forms: arguments in index order, attacks in lexicographic
// (from, to) index order. parse(render(f)) reproduces f exactly.
std::string render_apx(const Framework& f);
std::string render_tgf(const Framework& f);

}  // namespace prefcast
