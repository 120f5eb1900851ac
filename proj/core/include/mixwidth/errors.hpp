#pragma once

#include <stdexcept>

namespace mixwidth {

/// A well-formed request whose mathematical precondition does not hold,
/// e.g. running the exceptional-case pipeline on a rigid tuple.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace mixwidth
