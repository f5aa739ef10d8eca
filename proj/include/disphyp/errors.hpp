#pragma once

#include <stdexcept>
#include <string>

namespace disphyp {

struct HyperbolicityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StrictHyperbolicityError : HyperbolicityError {
  using HyperbolicityError::HyperbolicityError;
};
struct ZoneConstantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZoneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StiffnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegeneratePhaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PhaseSignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderBudgetError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace disphyp
