#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dd2/error.hpp"

namespace dd2::detail {

/// Splits text into lines and counts them (1-based) for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<std::string_view> next() {
    if (pos_ > text_.size() || (pos_ == text_.size() && !pending_)) return std::nullopt;
    const auto end = text_.find('\n', pos_);
    std::string_view line = end == std::string_view::npos ? text_.substr(pos_) : text_.substr(pos_, end - pos_);
    pending_ = false;
    pos_ = end == std::string_view::npos ? text_.size() + 1 : end + 1;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

  std::optional<std::string_view> next_nonblank() {
    while (auto line = next()) {
      if (line->find_first_not_of(" \t") != std::string_view::npos) return line;
    }
    return std::nullopt;
  }

  std::size_t line_number() const noexcept { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  bool pending_ = true;
};

inline std::vector<std::size_t> parse_uints(std::string_view line, std::size_t line_number) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t value = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line_number, "expected a non-negative integer in \"" + std::string(line) + "\"");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace dd2::detail
