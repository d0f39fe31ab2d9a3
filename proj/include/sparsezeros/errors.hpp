#ifndef SPARSEZEROS_ERRORS_HPP
#define SPARSEZEROS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sparsezeros {

/// Input violates a precondition (bad field parameters, malformed text, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A result cannot be produced at the available series precision.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap (enumeration size, dense degree, ...) was exceeded.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// A verified mathematical invariant failed.  Carries a reproducer string
/// (text-grammar serialization of the offending instance) when one exists.
class check_error : public std::runtime_error {
public:
    check_error(const std::string& what, std::string reproducer = {})
        : std::runtime_error(what), reproducer_(std::move(reproducer)) {}
    const std::string& reproducer() const { return reproducer_; }

private:
    std::string reproducer_;
};

class parse_error : public domain_error {
public:
    parse_error(const std::string& what, int line, int col)
        : domain_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace sparsezeros

#endif
