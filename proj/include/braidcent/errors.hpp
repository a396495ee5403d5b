#pragma once

#include <stdexcept>
#include <string>

namespace braidcent {

// All engine failures derive from Error so callers can catch one base type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (braid words, curve systems, patterns).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Operands live in braid groups on different numbers of strands.
struct StrandMismatch : Error {
  explicit StrandMismatch(const std::string& what) : Error(what) {}
};

// An argument is structurally invalid for the requested operation
// (index out of range, inconsistent permutation, non-laminar curves, ...).
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Curves that are neither disjoint nor nested cannot form a multicurve.
struct NotLaminar : InvalidArgument {
  explicit NotLaminar(const std::string& what) : InvalidArgument(what) {}
};

// The braid does not preserve the given curve system.
struct NotInvariant : InvalidArgument {
  explicit NotInvariant(const std::string& what) : InvalidArgument(what) {}
};

// An orbit or tube index outside the decomposition.
struct IndexOutOfRange : InvalidArgument {
  explicit IndexOutOfRange(const std::string& what) : InvalidArgument(what) {}
};

// The braid to embed does not commute with the interior braid of its orbit.
struct NotInCentralizerOfInterior : InvalidArgument {
  explicit NotInCentralizerOfInterior(const std::string& what)
      : InvalidArgument(what) {}
};

// A tubular-level permutation that mixes tubes of different sizes.
struct InconsistentPermutation : InvalidArgument {
  explicit InconsistentPermutation(const std::string& what)
      : InvalidArgument(what) {}
};

// The braid moves the tube system and has no tubular projection.
struct NotTubePreserving : InvalidArgument {
  explicit NotTubePreserving(const std::string& what)
      : InvalidArgument(what) {}
};

// The tubular braid is not in the consistency subgroup for the section.
struct NotConsistent : InvalidArgument {
  explicit NotConsistent(const std::string& what) : InvalidArgument(what) {}
};

// The requested lift exists only for proper divisors (d < n).
struct NotApplicable : InvalidArgument {
  explicit NotApplicable(const std::string& what) : InvalidArgument(what) {}
};

// A configured search cap was reached before the computation finished.
// Callers that can return partial results catch this and flag the report.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A conjugacy guaranteed by theory was not found; indicates a bug.
struct ConjugacySearchFailed : Error {
  explicit ConjugacySearchFailed(const std::string& what) : Error(what) {}
};

// The bounded tube-filling search for a section generator came up empty.
struct FillingSearchFailed : Error {
  explicit FillingSearchFailed(const std::string& what) : Error(what) {}
};

// An enumeration produced more results than the configured limit.
struct TooManySystems : Error {
  explicit TooManySystems(const std::string& what) : Error(what) {}
};

// Internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace braidcent
