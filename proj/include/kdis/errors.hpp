#ifndef KDIS_ERRORS_HPP
#define KDIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdis {

enum class ErrorCode {
    Parse,        // malformed input text (carries a byte offset)
    Size,         // capacity exceeded (more than 64 vertices)
    Domain,       // argument outside the operation's domain
    Budget,       // request beyond the configured search budget
    Dependency,   // required precomputed data missing
    Contract,     // caller-supplied data violates a documented precondition
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, long offset = -1)
        : std::runtime_error(message), code_(code), offset_(offset) {}

    ErrorCode code() const noexcept { return code_; }

    /// Byte offset for parse errors, -1 otherwise.
    long offset() const noexcept { return offset_; }

private:
    ErrorCode code_;
    long offset_;
};

[[noreturn]] inline void throw_parse(const std::string& msg, long offset) {
    throw Error(ErrorCode::Parse, msg + " at byte " + std::to_string(offset), offset);
}

[[noreturn]] inline void throw_size(const std::string& msg) {
    throw Error(ErrorCode::Size, msg);
}

[[noreturn]] inline void throw_domain(const std::string& msg) {
    throw Error(ErrorCode::Domain, msg);
}

[[noreturn]] inline void throw_budget(const std::string& msg) {
    throw Error(ErrorCode::Budget, msg);
}

} // namespace kdis

#endif
