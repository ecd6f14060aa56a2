#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlab {

// Base for everything thrown on purpose.  Anything else escaping the library
// is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments / malformed input files.  CLI maps these to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct DomainError : UsageError {
    using UsageError::UsageError;
};

struct HostTooSmall : UsageError {
    long long n;
    int needed;
    HostTooSmall(long long n_, int needed_)
        : UsageError("host has n = " + std::to_string(n_) + " vertices but the pattern needs " +
                     std::to_string(needed_)),
          n(n_),
          needed(needed_) {}
};

struct RootArityMismatch : UsageError {
    using UsageError::UsageError;
};

struct MalformedGraph6 : UsageError {
    std::size_t offset;
    MalformedGraph6(const std::string& reason, std::size_t offset_)
        : UsageError("malformed graph6/sparse6 at byte " + std::to_string(offset_) + ": " + reason),
          offset(offset_) {}
};

struct FileError : UsageError {
    using UsageError::UsageError;
};

// Work refused because it exceeds a configured cap.  CLI maps these to exit
// code 3.
struct BudgetError : Error {
    using Error::Error;
};

struct CensusTooLarge : BudgetError {
    int edges;
    int cap;
    CensusTooLarge(int edges_, int cap_)
        : BudgetError("census over " + std::to_string(edges_) + " edges exceeds cap " +
                      std::to_string(cap_)),
          edges(edges_),
          cap(cap_) {}
};

struct SearchBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

// A required sparseness precondition failed; carries a witness description.
struct NotSparse : UsageError {
    std::string witness;
    NotSparse(const std::string& msg, std::string witness_)
        : UsageError(msg), witness(std::move(witness_)) {}
};

struct PreconditionUnmet : UsageError {
    using UsageError::UsageError;
};

}  // namespace tlab
