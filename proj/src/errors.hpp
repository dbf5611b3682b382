#pragma once

#include <stdexcept>
#include <string>

namespace k3web {

enum class ErrorKind {
    Usage,       // bad arguments to an API entry point
    Parse,       // text failed to parse
    Validation,  // record parsed but violates an invariant
    NotFound,    // id not present in the loaded tables
    Domain       // mathematical precondition violated
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error usage_error(const std::string& msg) { return Error(ErrorKind::Usage, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrorKind::Validation, msg); }
inline Error not_found_error(const std::string& msg) { return Error(ErrorKind::NotFound, msg); }
inline Error domain_error(const std::string& msg) { return Error(ErrorKind::Domain, msg); }

}  // namespace k3web
