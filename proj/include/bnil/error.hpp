#pragma once

// Domain errors carry a stable machine-readable code alongside the human
// message; the CLI surfaces the code in its JSON error object.

#include <stdexcept>
#include <string>

namespace bnil {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace bnil
