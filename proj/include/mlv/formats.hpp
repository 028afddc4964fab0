#pragma once

#include <string>
#include <vector>

#include "mlv/basis.hpp"
#include "mlv/code.hpp"

// Stable text formats consumed and emitted by the command-line tool.
//
// Code file: "name:" (optional), "n:", then an "H:" section of 0/1 rows,
// optional "coset_reps:" rows and an optional "basis:" section of
// "X: <bits> Z: <bits>" lines. Character i of a 0/1 string is qubit i+1.
//
// Basis file: one pair per line,
//   "X: <bits>  Z: <bits>  class: matched" or "... class: crossed(j)".
//
// Concatenation spec: ordered lines, innermost code first; each line is a
// catalog key (qhamming15, c422, c622, steane7, hamming<m>) or a code-file
// path.

namespace mlv {

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

SelfDualCssCode parse_code_file(const std::string& text);
std::string serialize_code(const SelfDualCssCode& code);

SymplecticBasis parse_basis_file(const std::string& text);
std::string serialize_basis(const SymplecticBasis& basis);

/// Resolves one concat-spec line: a catalog key, "hamming<m>", or a path to
/// a code file on disk.
SelfDualCssCode resolve_code_reference(const std::string& ref);
std::vector<SelfDualCssCode> parse_concat_spec(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace mlv
