#include "rbfadapt/kernels.hpp"

#include <cmath>

namespace rbfadapt {

const char* family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::GA: return "ga";
    case KernelFamily::IMQ: return "imq";
    case KernelFamily::M6: return "m6";
    case KernelFamily::M4: return "m4";
    case KernelFamily::M2: return "m2";
  }
  throw Error("unknown kernel family");
}

KernelFamily parse_family(const std::string& name) {
  if (name == "ga") return KernelFamily::GA;
  if (name == "imq") return KernelFamily::IMQ;
  if (name == "m6") return KernelFamily::M6;
  if (name == "m4") return KernelFamily::M4;
  if (name == "m2") return KernelFamily::M2;
  throw ConfigError("unknown kernel '" + name + "' (expected ga, imq, m6, m4 or m2)");
}

namespace {

template <KernelFamily F>
inline double eval_scaled(double t) {
  if constexpr (F == KernelFamily::GA) return std::exp(-t * t);
  if constexpr (F == KernelFamily::IMQ) return 1.0 / std::sqrt(1.0 + t * t);
  if constexpr (F == KernelFamily::M6) {
    const double p = t * (t * (t + 6.0) + 15.0) + 15.0;
    return std::exp(-t) * p;
  }
  if constexpr (F == KernelFamily::M4) return std::exp(-t) * (t * (t + 3.0) + 3.0);
  if constexpr (F == KernelFamily::M2) return std::exp(-t) * (t + 1.0);
}

template <KernelFamily F>
void fill_kernel(const SymMatrix& dist, double eps, SymMatrix& out) {
  const int n = dist.size();
  const double diag = eval_scaled<F>(0.0);
  for (int i = 0; i < n; ++i) {
    out.set(i, i, diag);
    for (int j = 0; j < i; ++j) out.set(i, j, eval_scaled<F>(eps * dist(i, j)));
  }
}

}  // namespace

double phi(const KernelSpec& spec, double r) {
  const double t = spec.epsilon * r;
  switch (spec.family) {
    case KernelFamily::GA: return eval_scaled<KernelFamily::GA>(t);
    case KernelFamily::IMQ: return eval_scaled<KernelFamily::IMQ>(t);
    case KernelFamily::M6: return eval_scaled<KernelFamily::M6>(t);
    case KernelFamily::M4: return eval_scaled<KernelFamily::M4>(t);
    case KernelFamily::M2: return eval_scaled<KernelFamily::M2>(t);
  }
  throw Error("unknown kernel family");
}

SymMatrix distance_matrix(const PointSet& nodes, double separation_floor) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) throw DimensionMismatch("node set is empty");
  SymMatrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double r = distance(nodes[i], nodes[j], nodes.dim());
      if (r < separation_floor)
        throw DuplicateNodes("nodes " + std::to_string(j) + " and " + std::to_string(i) +
                             " are closer than the separation floor");
      d.set(i, j, r);
    }
  }
  return d;
}

SymMatrix kernel_matrix_from_distances(const KernelSpec& spec, const SymMatrix& dist) {
  SymMatrix a(dist.size());
  switch (spec.family) {
    case KernelFamily::GA: fill_kernel<KernelFamily::GA>(dist, spec.epsilon, a); break;
    case KernelFamily::IMQ: fill_kernel<KernelFamily::IMQ>(dist, spec.epsilon, a); break;
    case KernelFamily::M6: fill_kernel<KernelFamily::M6>(dist, spec.epsilon, a); break;
    case KernelFamily::M4: fill_kernel<KernelFamily::M4>(dist, spec.epsilon, a); break;
    case KernelFamily::M2: fill_kernel<KernelFamily::M2>(dist, spec.epsilon, a); break;
  }
  return a;
}

SymMatrix kernel_matrix(const KernelSpec& spec, const PointSet& nodes,
                        double separation_floor) {
  return kernel_matrix_from_distances(spec, distance_matrix(nodes, separation_floor));
}

}  // namespace rbfadapt
