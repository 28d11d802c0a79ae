#include "owlkit/errors.hpp"

namespace owlkit {

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t column, std::size_t offset,
                       std::vector<std::string> expected, std::string found)
    : Error([&] {
        std::string what = "line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message;
        if (!expected.empty()) {
          what += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) what += i + 1 == expected.size() ? " or " : ", ";
            what += expected[i];
          }
          what += ")";
        }
        return what;
      }()),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace owlkit
