#include "dfca/error.hpp"

namespace dfca {

namespace {

std::string locate(const std::string& message, std::size_t offset,
                   std::optional<std::size_t> line) {
  std::string where = line ? "line " + std::to_string(*line) + ", offset " + std::to_string(offset)
                           : "offset " + std::to_string(offset);
  return where + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::optional<std::size_t> line)
    : Error(locate(message, offset, line)), detail_(message), offset_(offset), line_(line) {}

ParseError ParseError::at_line(std::size_t line) const {
  return ParseError(detail_, offset_, line);
}

BindingError::BindingError(std::string name)
    : Error("unknown name '" + name + "'"), name_(std::move(name)) {}

}  // namespace dfca
