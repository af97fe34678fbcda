#include "sumrecon/format.hpp"

#include <array>
#include <charconv>

#include "sumrecon/errors.hpp"

namespace sumrecon {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw InvalidArgument("cannot format value");
  return std::string(buf.data(), ptr);
}

std::uint64_t parse_unsigned(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("cannot parse '" + std::string(text) + "' as an unsigned integer");
  }
  return value;
}

}  // namespace sumrecon
