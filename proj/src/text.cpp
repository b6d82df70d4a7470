#include "evokit/text.hpp"

#include <charconv>

namespace evokit {

std::string format_double(double value) {
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

} // namespace evokit
