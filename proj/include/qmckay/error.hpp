#pragma once
#include <stdexcept>
#include <string>

namespace qmckay {

// Error categories; the CLI maps them one-to-one onto exit codes.
enum class errc { schema = 2, not_gorenstein = 3, cap_exceeded = 4, internal = 5 };

struct Error : std::runtime_error {
    errc kind;
    Error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw Error(k, msg); }

}  // namespace qmckay
