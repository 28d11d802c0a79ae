#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace owlkit {

// Base for every error raised by the library. The CLI maps these to exit
// code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` and `column` are 1-based; `offset` is the
// byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::size_t offset, std::vector<std::string> expected = {},
             std::string found = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

// A value violating a structural invariant of the data model.
class ModelError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace owlkit
