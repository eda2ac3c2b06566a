#pragma once

#include <stdexcept>

namespace jfusion {

/// A desk-scale size guard was exceeded (enumeration or explicit vertex sets).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jfusion
