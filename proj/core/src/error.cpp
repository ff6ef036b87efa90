#include "lexmsa/error.hpp"

namespace lexmsa {

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : Error("line " + std::to_string(line) + ", field '" + field + "': " + message),
      line_(line), field_(std::move(field)) {}

} // namespace lexmsa
