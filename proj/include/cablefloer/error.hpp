#pragma once
#include <stdexcept>
#include <string>

namespace cablefloer {

enum class ErrorKind {
    Internal,
    Domain,
    Unsupported,
    ParseSyntax,
    ParseDuplicate,
    ParseDangling,
    Invalid,
    Budget,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Process exit code used by the CLI for each error kind.
int exit_code(ErrorKind k);

}  // namespace cablefloer
