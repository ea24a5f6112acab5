#pragma once

#include <stdexcept>
#include <string>

namespace godeaux {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Polynomial layer.
struct VariableMismatch : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct UnknownVariable : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };
struct ZeroForm : Error { using Error::Error; };

// Singularity analysis.
struct NotSingular : Error { using Error::Error; };
struct RankNotOne : Error { using Error::Error; };
struct NotATripleLine : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };
/// The weighted jet is degenerate: terms below weight 6, or no weight-6 part.
struct DegenerateJet : Error { using Error::Error; };

// Divisor calculus.
struct LatticeMismatch : Error { using Error::Error; };
struct MissingCanonicalClass : Error { using Error::Error; };
struct InvalidBlowDown : Error { using Error::Error; };
struct OddBranchComponent : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };

/// A verification step found a counterexample; the message carries the witness.
struct CheckFailed : Error { using Error::Error; };

/// Should be unreachable with valid inputs.
struct InternalError : Error { using Error::Error; };

}  // namespace godeaux
