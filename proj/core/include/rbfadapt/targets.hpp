#pragma once

#include <string>
#include <utility>

#include "rbfadapt/points.hpp"

namespace rbfadapt {

// Benchmark targets. f1-f3 are univariate (Runge, steep tanh front,
// oscillatory cosine power), f4-f6 bivariate (Gaussian mixture, diagonal
// tanh ridge, single narrow bump).
enum class TargetId { F1, F2, F3, F4, F5, F6 };

const char* target_name(TargetId id);
TargetId parse_target(const std::string& name);

int target_dimension(TargetId id);

// Canonical domain: [-1,1] resp. [-1,1]^2.
std::pair<double, double> target_domain(TargetId id);

// Evaluates the target; throws OutOfDomain outside the canonical domain.
double eval_target(TargetId id, const Point& p);

TargetFn target_callable(TargetId id);

}  // namespace rbfadapt
