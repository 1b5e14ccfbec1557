#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace recurkit {

// Violation of an operation's domain rules. `name()` is the stable
// identifier reported on stderr by the CLI (exit code 1).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}

    explicit DomainError(std::string name) : DomainError(std::move(name), "") {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Malformed input document (bad JSON shape, unparsable rational string,
// ...). The CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace recurkit
