#pragma once

#include <stdexcept>
#include <string>

namespace lqqg {

/// Base class for all errors raised by the library. `code()` is a stable
/// machine-readable tag; the CLI maps it into its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define LQQG_DEFINE_ERROR(name, tag)                       \
  class name : public Error {                              \
   public:                                                 \
    explicit name(const std::string& message)              \
        : Error(tag, message) {}                           \
  }

LQQG_DEFINE_ERROR(DimensionMismatch, "dimension_mismatch");
LQQG_DEFINE_ERROR(NotHurwitz, "not_hurwitz");
LQQG_DEFINE_ERROR(NonSymmetricInput, "non_symmetric_input");
LQQG_DEFINE_ERROR(NoStabilizingSolution, "no_stabilizing_solution");
LQQG_DEFINE_ERROR(SparsityViolation, "sparsity_violation");
LQQG_DEFINE_ERROR(InvalidGrid, "invalid_grid");
LQQG_DEFINE_ERROR(UnsupportedOrder, "unsupported_order");
LQQG_DEFINE_ERROR(ThetaOutOfRange, "theta_out_of_range");
LQQG_DEFINE_ERROR(NegativeTheta, "negative_theta");
LQQG_DEFINE_ERROR(QuadratureNotConverged, "quadrature_not_converged");
LQQG_DEFINE_ERROR(ZeroSystem, "zero_system");
LQQG_DEFINE_ERROR(NotPSD, "not_psd");
LQQG_DEFINE_ERROR(StepTooLarge, "step_too_large");
LQQG_DEFINE_ERROR(NotStabilizing, "not_stabilizing");
LQQG_DEFINE_ERROR(StabilizabilityFailure, "stabilizability_failure");
LQQG_DEFINE_ERROR(RiccatiFailure, "riccati_failure");
LQQG_DEFINE_ERROR(RankDeficient, "rank_deficient");
LQQG_DEFINE_ERROR(SingularBlock, "singular_block");
LQQG_DEFINE_ERROR(LineSearchFailure, "line_search_failure");
LQQG_DEFINE_ERROR(StabilityLost, "stability_lost");
LQQG_DEFINE_ERROR(InvalidModel, "invalid_model");
LQQG_DEFINE_ERROR(InvalidArgument, "invalid_argument");

#undef LQQG_DEFINE_ERROR

}  // namespace lqqg
