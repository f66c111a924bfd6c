#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetric : Error { using Error::Error; };
struct NotSchurPositive : Error { using Error::Error; };
struct CellNotInCoarea : Error { using Error::Error; };
struct DegreeBoundExceeded : Error { using Error::Error; };
struct NoValidSplit : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct PartitionSizeMismatch : Error { using Error::Error; };
struct CompositionSizeMismatch : Error { using Error::Error; };
struct WordNotDecreasing : Error { using Error::Error; };
struct PidesNotWeaklyDecreasing : Error { using Error::Error; };
struct PidesNotHook : Error { using Error::Error; };
struct PidesNotTwoOneShape : Error { using Error::Error; };
struct WordNotShuffleOfMu : Error { using Error::Error; };
struct UnknownVerifier : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

}  // namespace rsl
