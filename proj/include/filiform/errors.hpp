#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filiform {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division (or inversion, or negative power) applied to zero. When raised
/// while evaluating a stratum expression it usually means the input lies
/// outside the claimed stratum.
struct DivisionByZero : Error {
  using Error::Error;
};

/// Scalar / expression text does not match the grammar.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Operands of incompatible dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Lower central series stabilized at a nonzero dimension.
struct NotNilpotent : Error {
  using Error::Error;
};

/// Recursion index outside its defined range.
struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Base-change pair violating A(A+B) != 0.
struct InvalidPair : Error {
  using Error::Error;
};

/// The isomorphism ansatz produced a constraint that is not affine in
/// the remaining unknowns; raised loudly instead of guessing.
struct NonAffineConstraint : Error {
  using Error::Error;
};

/// A stratum invariant's denominator vanished: input outside the stratum.
struct DenominatorZero : Error {
  using Error::Error;
};

/// Normalized-signature request for a tuple outside the open stratum U_1.
struct NotInU1 : Error {
  using Error::Error;
};

/// Stratum-aware operation on a dimension outside {5,6,7,8}.
struct UnsupportedDimension : Error {
  using Error::Error;
};

/// No stratum predicate matched; should not occur on audited dimensions
/// except on the documented out-of-family corner loci.
struct Unclassifiable : Error {
  using Error::Error;
};

/// Canonical-representative solve was inconsistent or non-affine.
struct ReconstructionFailure : Error {
  using Error::Error;
};

/// Family instantiation at an excluded slot value (a guard expression
/// evaluated to zero, so the tuple would leave its stratum).
struct GuardViolation : Error {
  using Error::Error;
};

/// Registry file failed to parse or validate.
struct RegistryError : Error {
  using Error::Error;
};

}  // namespace filiform
