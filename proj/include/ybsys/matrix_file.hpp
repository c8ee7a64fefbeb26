#pragma once

#include "ybsys/errors.hpp"
#include "ybsys/matrix.hpp"

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybsys {

// Line-oriented text format for (R, Q) pairs and null-space gauges.
//
//   # comment
//   dimension 2                 optional, default 2
//   params t a                  optional
//   bind t "3/4"                optional, one per parameter
//   R                           then d^2 lines of d^2 quoted expressions
//   "1" "0" "0" "0"
//   ...
//   Q                           optional, same layout
//   basis alpha                 gauge files: one block per coordinate
//   ...
//
// A '#' outside quotes starts a comment.
struct MatrixFile {
  std::size_t d = 2;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::optional<std::vector<std::string>> r;
  std::optional<std::vector<std::string>> q;
  std::vector<std::pair<std::string, std::vector<std::string>>> basis;

  bool has_bindings() const { return !bindings.empty(); }
};

// Throws ParseError with the offending line number.
MatrixFile parse_matrix_file(std::istream& in, const std::string& source = "<input>");
MatrixFile read_matrix_file(const std::string& path);

std::string quote_grid(const std::vector<std::string>& entries, std::size_t n);

template <class T>
std::vector<std::string> entry_strings(const Matrix<T>& m) {
  std::vector<std::string> out;
  for (const auto& x : m.entries()) out.push_back(x.to_string());
  return out;
}

std::string write_matrix_file(const MatrixFile& file);

}  // namespace ybsys
