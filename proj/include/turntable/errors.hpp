#pragma once

#include <stdexcept>
#include <string>

namespace turntable {

/// Bad arguments or malformed inputs. CLI exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// File-level problems: missing manifest, corrupt image, inconsistent counts.
class io_error : public validation_error {
public:
    explicit io_error(const std::string& msg) : validation_error(msg) {}
};

/// Text parse failure; carries a 1-based line number in the message.
class parse_error : public validation_error {
public:
    parse_error(const std::string& file, std::size_t line, const std::string& msg)
        : validation_error(file + ":" + std::to_string(line) + ": " + msg),
          line_number(line) {}
    std::size_t line_number;
};

/// Numerical degeneracy or solver failure. CLI exit code 2.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input lacks the structure an analysis requires (e.g. non-circular embedding).
class structure_error : public numerical_error {
public:
    explicit structure_error(const std::string& msg) : numerical_error(msg) {}
};

} // namespace turntable
