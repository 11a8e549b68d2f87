#include "dd2/error.hpp"

namespace dd2 {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

}  // namespace dd2
