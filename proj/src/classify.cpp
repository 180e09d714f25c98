#include "framecurv/classify.hpp"

#include <algorithm>
#include <vector>

namespace framecurv {

std::string_view to_string(ModelSpace kind) {
  switch (kind) {
    case ModelSpace::DeSitter: return "DeSitter";
    case ModelSpace::Minkowski: return "Minkowski";
    case ModelSpace::AntiDeSitter: return "AntiDeSitter";
    case ModelSpace::NonConstant: return "NonConstant";
    case ModelSpace::NotLorentzian: return "NotLorentzian";
  }
  return "?";
}

ClassificationVerdict classify(std::span<const double> values, bool lorentzian, double tol) {
  if (values.empty()) throw EmptyInput("classify needs at least one sample");
  if (!(tol > 0.0)) throw PreconditionViolated("classification tolerance must be positive");

  // Sorted so the mean does not depend on sample order.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  ClassificationVerdict verdict;
  verdict.spread = sorted.back() - sorted.front();
  verdict.constant = verdict.spread <= 2.0 * tol;
  if (verdict.constant) {
    double sum = 0.0;
    for (double v : sorted) sum += v;
    verdict.k_value = sum / static_cast<double>(sorted.size());
  }

  if (!lorentzian) {
    verdict.kind = ModelSpace::NotLorentzian;
  } else if (!verdict.constant) {
    verdict.kind = ModelSpace::NonConstant;
  } else if (*verdict.k_value > tol) {
    verdict.kind = ModelSpace::DeSitter;
  } else if (*verdict.k_value < -tol) {
    verdict.kind = ModelSpace::AntiDeSitter;
  } else {
    verdict.kind = ModelSpace::Minkowski;
  }
  return verdict;
}

ClassificationVerdict classify(std::span<const Sample> samples, bool lorentzian, double tol) {
  std::vector<double> values;
  values.reserve(samples.size());
  for (const Sample& s : samples) values.push_back(s.value);
  return classify(values, lorentzian, tol);
}

}  // namespace framecurv
