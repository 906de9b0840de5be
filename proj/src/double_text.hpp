#pragma once

#include <charconv>
#include <string>

namespace lsqfit::detail {

// Locale-independent decimal rendering at 17 significant digits: enough for
// any double to parse back bit-exactly.
inline std::string double_text(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                      std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

}  // namespace lsqfit::detail
