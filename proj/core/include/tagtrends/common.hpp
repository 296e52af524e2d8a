#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tagtrends {

// Bad arguments to an operation (precondition violated).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data; message carries line number and reason where known.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mid-pipeline failure (empty corpus, undefined correlation, solver stall...).
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// FNV-1a, 64 bit. Stable across platforms; used for per-tag seed derivation.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Fixed 6-decimal formatting so emitted CSV/SVG bytes are platform-stable.
inline std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline double round6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::strtod(buf, nullptr);
}

} // namespace tagtrends
