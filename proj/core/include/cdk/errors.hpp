#pragma once

#include <stdexcept>
#include <string>

namespace cdk {

// Invalid input: malformed files, bad shapes, out-of-domain arguments.
// The command line tool maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation that cannot proceed numerically: singular kernel matrices,
// comparison constants >= 1, undefined cosines. Mapped to exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cdk
