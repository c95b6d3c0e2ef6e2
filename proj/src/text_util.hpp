#ifndef CFC_TEXT_UTIL_HPP
#define CFC_TEXT_UTIL_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace cfc::detail {

// Whitespace separated tokens of one line.
std::vector<std::string_view> tokens_of(std::string_view line);

// Throws ParseError tagged with `line` unless `tok` is a whole integer.
long long to_integer(std::string_view tok, std::size_t line);

// Blank lines and '#' comment lines.
bool skippable(std::string_view line);

} // namespace cfc::detail

#endif // CFC_TEXT_UTIL_HPP
