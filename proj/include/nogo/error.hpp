#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nogo {

/// Base class for all structured failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed external input (JSON, text formats, flags).
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

struct AntisymmetryViolation : Error {
  std::size_t i, j, k;
  AntisymmetryViolation(std::size_t i_, std::size_t j_, std::size_t k_,
                        const std::string& residual)
      : Error("antisymmetry violated at (i,j,k)=(" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + "), residual " + residual),
        i(i_), j(j_), k(k_) {}
};

struct JacobiViolation : Error {
  std::size_t i, j, k, l;
  JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, std::size_t l_,
                  const std::string& residual)
      : Error("Jacobi identity violated at (i,j,k,l)=(" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + "," + std::to_string(l_) +
              "), residual " + residual),
        i(i_), j(j_), k(k_), l(l_) {}
};

struct UnsupportedAlgebra : Error {
  explicit UnsupportedAlgebra(const std::string& msg) : Error(msg) {}
};

struct DecompositionFailure : Error {
  explicit DecompositionFailure(const std::string& msg) : Error(msg) {}
};

struct NotSimple : Error {
  explicit NotSimple(const std::string& msg) : Error(msg) {}
};

struct ZeroPoint : Error {
  ZeroPoint() : Error("orbit point h must be nonzero") {}
};

struct VariableMismatch : Error {
  explicit VariableMismatch(const std::string& msg) : Error(msg) {}
};

struct NonReducibleRelation : Error {
  explicit NonReducibleRelation(const std::string& msg) : Error(msg) {}
};

struct DegreeEscape : Error {
  std::size_t basis_index;
  DegreeEscape(std::size_t idx, const std::string& monomial)
      : Error("operator image of basis element #" + std::to_string(idx) +
              " leaves the space at monomial " + monomial),
        basis_index(idx) {}
};

struct MeanUndefined : Error {
  explicit MeanUndefined(const std::string& msg) : Error(msg) {}
};

struct NotZeroMean : Error {
  explicit NotZeroMean(const std::string& msg) : Error(msg) {}
};

struct CertificateFailure : Error {
  std::string step;
  CertificateFailure(const std::string& step_, const std::string& msg)
      : Error("certificate step '" + step_ + "' failed: " + msg), step(step_) {}
};

struct UnsupportedTruncation : Error {
  explicit UnsupportedTruncation(const std::string& msg) : Error(msg) {}
};

struct DimensionCap : Error {
  explicit DimensionCap(const std::string& msg) : Error(msg) {}
};

}  // namespace nogo
