#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tfit {

// A 1-based position in an input file. Every AST node, instruction and
// constraint carries exactly one of these so findings can be anchored back
// to source text.
struct SourceLoc {
  std::string file;
  int line = 1;
  int column = 1;

  bool operator==(const SourceLoc& o) const {
    return line == o.line && column == o.column && file == o.file;
  }
  bool operator<(const SourceLoc& o) const {
    if (file != o.file) return file < o.file;
    if (line != o.line) return line < o.line;
    return column < o.column;
  }
  std::string to_string() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

// User-facing failure in the input program (lexing, parsing, name
// resolution, type checking). Reported on stderr and mapped to exit code 2.
class CompileError : public std::runtime_error {
 public:
  CompileError(SourceLoc loc, const std::string& msg)
      : std::runtime_error(loc.to_string() + ": error: " + msg), loc_(std::move(loc)) {}
  const SourceLoc& loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

}  // namespace tfit
