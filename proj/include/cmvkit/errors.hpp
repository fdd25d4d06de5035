#pragma once

#include <stdexcept>
#include <string>

namespace cmv {

// Base of all library errors. The three subcategories correspond to the CLI
// exit codes: ValidationError -> 1, DegeneracyError -> 2, VerificationError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected inputs: malformed documents, parameters outside their domain,
// point sets that do not satisfy a solver's hypotheses.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerically degenerate but syntactically valid inputs: parameters at the
// edge of the disk, clustered eigenvalues, stalled iterations.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// A runtime-checked mathematical identity failed to hold within tolerance.
// Indicates a bug or an undetected degeneracy upstream.
class VerificationError : public Error {
 public:
  using Error::Error;
};

#define CMV_DEFINE_ERROR(NAME, BASE) \
  class NAME : public BASE {         \
   public:                           \
    using BASE::BASE;                \
  }

CMV_DEFINE_ERROR(AlphaOutOfDisk, ValidationError);
CMV_DEFINE_ERROR(BetaNotUnimodular, ValidationError);
CMV_DEFINE_ERROR(LengthMismatch, ValidationError);
CMV_DEFINE_ERROR(DegreeMismatch, ValidationError);
CMV_DEFINE_ERROR(NonMonic, ValidationError);
CMV_DEFINE_ERROR(RootOffCircle, ValidationError);
CMV_DEFINE_ERROR(DuplicatePoints, ValidationError);
CMV_DEFINE_ERROR(SizeMismatch, ValidationError);
CMV_DEFINE_ERROR(CommonPoint, ValidationError);
CMV_DEFINE_ERROR(TauNotUnimodular, ValidationError);
CMV_DEFINE_ERROR(PoleProximity, ValidationError);
CMV_DEFINE_ERROR(TOutOfRange, ValidationError);
CMV_DEFINE_ERROR(ZetaOffArc, ValidationError);
CMV_DEFINE_ERROR(CommonPointPresent, ValidationError);
CMV_DEFINE_ERROR(NotSingularPattern, ValidationError);
CMV_DEFINE_ERROR(NotInterlacing, ValidationError);
CMV_DEFINE_ERROR(DegenerateP, ValidationError);
CMV_DEFINE_ERROR(MixedSigns, ValidationError);
CMV_DEFINE_ERROR(SumNotZero, ValidationError);
CMV_DEFINE_ERROR(SpectraMismatch, ValidationError);
CMV_DEFINE_ERROR(DocumentError, ValidationError);

CMV_DEFINE_ERROR(NumericalDegeneracy, DegeneracyError);
CMV_DEFINE_ERROR(PhaseMonotonicityViolated, DegeneracyError);
CMV_DEFINE_ERROR(RootCountMismatch, DegeneracyError);
CMV_DEFINE_ERROR(NonPositiveMass, DegeneracyError);
CMV_DEFINE_ERROR(RootsLeakDisk, DegeneracyError);
CMV_DEFINE_ERROR(PZeroInDisk, DegeneracyError);
CMV_DEFINE_ERROR(IterationStalled, DegeneracyError);
CMV_DEFINE_ERROR(BracketCountMismatch, DegeneracyError);
CMV_DEFINE_ERROR(SolveFailed, DegeneracyError);
CMV_DEFINE_ERROR(DichotomyViolation, DegeneracyError);

#undef CMV_DEFINE_ERROR

}  // namespace cmv
