#ifndef TMSPEC_IO_HPP
#define TMSPEC_IO_HPP

#include <string>

namespace tmspec {

// Locale-independent float formatting with 12 significant digits.
std::string format_double(double v);

} // namespace tmspec

#endif
