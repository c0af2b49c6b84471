#pragma once

#include <stdexcept>
#include <string>

namespace elect {

// Base class for every error this library throws on contract violations.
struct ElectError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- election construction ---------------------------------------------------

struct UnknownCandidate : ElectError {
    using ElectError::ElectError;
};

struct SeatsOutOfRange : ElectError {
    using ElectError::ElectError;
};

struct VoterCountTooSmall : ElectError {
    using ElectError::ElectError;
};

// -- support computations ----------------------------------------------------

struct EmptyTargetSet : ElectError {
    using ElectError::ElectError;
};

// Subset enumeration asked for more candidates than the configured cap allows.
struct TargetSetTooLarge : ElectError {
    using ElectError::ElectError;
};

// kernel_of was given a candidate that is not least-supported under F.
struct NotLeastSupported : ElectError {
    using ElectError::ElectError;
};

// tight_kernel found no kernel satisfying both tightness conditions; the
// witness handed in was not optimal.
struct NoTightKernel : ElectError {
    using ElectError::ElectError;
};

// -- rules -------------------------------------------------------------------

// A subset scan would exceed its configured cap.
struct InstanceTooLarge : ElectError {
    using ElectError::ElectError;
};

struct SeatsMismatch : ElectError {
    using ElectError::ElectError;
};

// No voter-to-winner assignment satisfies the load bounds (possible when the
// voter head-count exceeds the number of cast ballots).
struct InfeasibleAssignment : ElectError {
    using ElectError::ElectError;
};

// -- axiom checks ------------------------------------------------------------

struct RuleCannotRun : ElectError {
    using ElectError::ElectError;
};

struct PreconditionFailed : ElectError {
    using ElectError::ElectError;
};

struct NotClosedListShaped : ElectError {
    using ElectError::ElectError;
};

// -- parsing -----------------------------------------------------------------

struct SyntaxError : ElectError {
    int line;
    int col;
    SyntaxError(int line_, int col_, const std::string& what_)
        : ElectError("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                     ": " + what_),
          line(line_),
          col(col_) {}
};

struct DuplicateHeader : ElectError {
    using ElectError::ElectError;
};

}  // namespace elect
