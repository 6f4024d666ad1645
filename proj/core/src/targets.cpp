#include "rbfadapt/targets.hpp"

#include <cmath>

namespace rbfadapt {

namespace {

inline double sq(double v) { return v * v; }

double f1(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

double f2(double x) { return std::tanh(60.0 * x - 0.01); }

double f3(double x) {
  const double c = std::cos(sq(x + 1.0) - 3.0);
  return 0.375 * sq(sq(c));
}

double f4(double x, double y) {
  return std::exp(-0.1 * (x * x + y * y)) +
         std::exp(-5.0 * (sq(x - 0.5) + sq(y - 0.5))) +
         std::exp(-15.0 * (sq(x + 0.2) + sq(y + 0.4))) +
         std::exp(-9.0 * (sq(x + 0.8) + sq(y - 0.8)));
}

double f5(double x, double y) { return -0.4 * std::tanh(20.0 * x * y) + 0.6; }

double f6(double x, double y) {
  return std::exp(-60.0 * (sq(x - 0.35) + sq(y - 0.25))) + 0.2;
}

}  // namespace

const char* target_name(TargetId id) {
  switch (id) {
    case TargetId::F1: return "f1";
    case TargetId::F2: return "f2";
    case TargetId::F3: return "f3";
    case TargetId::F4: return "f4";
    case TargetId::F5: return "f5";
    case TargetId::F6: return "f6";
  }
  throw Error("unknown target");
}

TargetId parse_target(const std::string& name) {
  if (name == "f1") return TargetId::F1;
  if (name == "f2") return TargetId::F2;
  if (name == "f3") return TargetId::F3;
  if (name == "f4") return TargetId::F4;
  if (name == "f5") return TargetId::F5;
  if (name == "f6") return TargetId::F6;
  throw ConfigError("unknown target '" + name + "' (expected f1..f6)");
}

int target_dimension(TargetId id) {
  switch (id) {
    case TargetId::F1:
    case TargetId::F2:
    case TargetId::F3: return 1;
    default: return 2;
  }
}

std::pair<double, double> target_domain(TargetId) { return {-1.0, 1.0}; }

double eval_target(TargetId id, const Point& p) {
  const auto [a, b] = target_domain(id);
  if (p.x < a || p.x > b || (target_dimension(id) == 2 && (p.y < a || p.y > b)))
    throw OutOfDomain("point outside the canonical domain of " +
                      std::string(target_name(id)));
  switch (id) {
    case TargetId::F1: return f1(p.x);
    case TargetId::F2: return f2(p.x);
    case TargetId::F3: return f3(p.x);
    case TargetId::F4: return f4(p.x, p.y);
    case TargetId::F5: return f5(p.x, p.y);
    case TargetId::F6: return f6(p.x, p.y);
  }
  throw Error("unknown target");
}

TargetFn target_callable(TargetId id) {
  return [id](const Point& p) { return eval_target(id, p); };
}

}  // namespace rbfadapt
