#include "tmspec/io.hpp"

#include <charconv>

namespace tmspec {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

} // namespace tmspec
