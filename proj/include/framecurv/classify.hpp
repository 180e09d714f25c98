#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "framecurv/frame.hpp"

namespace framecurv {

inline constexpr double kDefaultClassifyTolerance = 1e-6;

/// Constant-curvature model spaces of a Lorentzian surface, by sign of K.
enum class ModelSpace { DeSitter, Minkowski, AntiDeSitter, NonConstant, NotLorentzian };

std::string_view to_string(ModelSpace kind);

struct ClassificationVerdict {
  ModelSpace kind = ModelSpace::NonConstant;
  /// Whether max - min <= 2 tol over the samples.
  bool constant = false;
  /// Mean K; empty when the samples are not constant.
  std::optional<double> k_value;
  /// max - min over the samples.
  double spread = 0.0;
};

/// Sampled constancy check followed by naming of the model space:
/// de Sitter for K > tol, Minkowski for |K| <= tol, anti-de Sitter for
/// K < -tol. Non-Lorentzian inputs are reported as NotLorentzian with the
/// constancy fields still filled in.
///
/// Throws EmptyInput if there are no samples and PreconditionViolated
/// unless tol > 0.
ClassificationVerdict classify(std::span<const double> values, bool lorentzian,
                               double tol = kDefaultClassifyTolerance);

ClassificationVerdict classify(std::span<const Sample> samples, bool lorentzian,
                               double tol = kDefaultClassifyTolerance);

}  // namespace framecurv
