#pragma once

#include <stdexcept>
#include <string>

namespace catfun {

struct BasisMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAnIdeal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSamePath : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInLambdaK : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace catfun

// internal-consistency check that stays active in release builds
#define CATFUN_ASSERT(cond, msg) \
    do { \
        if (!(cond)) throw std::logic_error(std::string("internal check failed: ") + (msg)); \
    } while (0)
