#pragma once

#include <charconv>
#include <string>

namespace ctrx {

// Shortest decimal form that round-trips to the same double. Keeps every
// emitted file byte-stable across runs.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace ctrx
