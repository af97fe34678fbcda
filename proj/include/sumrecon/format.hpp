#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sumrecon {

/// Shortest decimal that round-trips to the same double (std::to_chars).
std::string format_double(double value);

/// Decimal, or hexadecimal with a 0x / 0X prefix. Throws InvalidArgument
/// on anything else, including a leading sign or trailing characters.
std::uint64_t parse_unsigned(std::string_view text);

}  // namespace sumrecon
