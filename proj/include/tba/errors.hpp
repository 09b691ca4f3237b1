#pragma once

#include <stdexcept>
#include <string>

namespace tba {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input arrays have inconsistent sizes, out-of-range indices or duplicates.
struct ShapeMismatch : Error {
  using Error::Error;
};

/// Operands belong to different algebras.
struct AlgebraMismatch : Error {
  using Error::Error;
};

/// Two provably equivalent criteria disagreed; indicates an internal bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// A subset passed where a closed subset (1 in S, S*S inside S) is required.
struct NotClosed : Error {
  using Error::Error;
};

/// C+ b turned out not to be a scalar multiple of (Cb)+.
struct AlphaIdentityFailed : Error {
  using Error::Error;
};

/// Quotient structure constants changed with the coset representative.
struct RepresentativeDependence : Error {
  using Error::Error;
};

/// The two characterisations of degree-one quotient elements disagreed.
struct DegreeOneMismatch : Error {
  using Error::Error;
};

/// Closed-subset enumeration exceeded its configured cap.
struct SizeLimitExceeded : Error {
  using Error::Error;
};

/// No random central element split the algebra within the retry budget.
struct SplittingFailed : Error {
  using Error::Error;
};

/// A computed table violates one of its residual bounds.
struct ToleranceBreach : Error {
  using Error::Error;
};

/// Dual-form and linear-solver decompositions disagreed.
struct CrossCheckMismatch : Error {
  using Error::Error;
};

/// A character kernel failed the closed-subset assertion.
struct KernelNotClosed : Error {
  using Error::Error;
};

/// Operation requires a normal closed subset.
struct NotNormal : Error {
  using Error::Error;
};

/// Lifting did not give a bijection onto the expected irreducibles.
struct EmbeddingMismatch : Error {
  using Error::Error;
};

/// File could not be opened or read.
struct FileError : Error {
  using Error::Error;
};

/// File-format error carrying a 1-based line number.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& reason)
      : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

/// Relation matrix fails one of the association-scheme conditions.
struct NotAScheme : Error {
  using Error::Error;
};

/// Multiplication table fails one of the group axioms.
struct NotAGroup : Error {
  using Error::Error;
};

}  // namespace tba
