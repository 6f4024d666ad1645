#include "rbfadapt/presets.hpp"

namespace rbfadapt {

namespace {

std::vector<PresetRow> kernel_sweep(std::vector<KernelFamily> kernels, double theta) {
  std::vector<PresetRow> rows;
  rows.reserve(kernels.size());
  for (KernelFamily k : kernels) rows.push_back({k, theta});
  return rows;
}

std::vector<PresetRow> theta_sweep(KernelFamily kernel, std::vector<double> thetas) {
  std::vector<PresetRow> rows;
  rows.reserve(thetas.size());
  for (double t : thetas) rows.push_back({kernel, t});
  return rows;
}

const std::vector<KernelFamily> k1d{KernelFamily::IMQ, KernelFamily::M6,
                                    KernelFamily::M4, KernelFamily::M2};
const std::vector<KernelFamily> k2d{KernelFamily::IMQ, KernelFamily::M6,
                                    KernelFamily::M4};

}  // namespace

TablePreset preset(int id) {
  switch (id) {
    case 1:
      return {1, TargetId::F1, 1e-8, 13, kernel_sweep(k1d, 1e-6)};
    case 2:
      return {2, TargetId::F2, 1e-8, 13, kernel_sweep(k1d, 1e-5)};
    case 3:
      return {3, TargetId::F3, 1e-8, 13, kernel_sweep(k1d, 1e-5)};
    case 4:
      return {4, TargetId::F1, 1e-9, 13,
              theta_sweep(KernelFamily::M6, {1e-4, 1e-5, 1e-6, 1e-7})};
    case 5:
      return {5, TargetId::F2, 1e-8, 13,
              theta_sweep(KernelFamily::M6, {1e-3, 1e-4, 1e-5, 1e-6})};
    case 6:
      return {6, TargetId::F3, 1e-8, 13,
              theta_sweep(KernelFamily::M6, {1e-3, 1e-4, 1e-5, 1e-6})};
    case 7:
      return {7, TargetId::F4, 1e-8, 320, kernel_sweep(k2d, 1e-4)};
    case 8:
      return {8, TargetId::F5, 1e-8, 320, kernel_sweep(k2d, 1e-3)};
    case 9:
      return {9, TargetId::F6, 1e-8, 320, kernel_sweep(k2d, 1e-5)};
    case 10:
      return {10, TargetId::F4, 1e-8, 320,
              theta_sweep(KernelFamily::IMQ, {1e-4, 5e-5, 1e-5, 5e-6, 1e-6})};
    case 11:
      return {11, TargetId::F5, 1e-8, 320,
              theta_sweep(KernelFamily::M2, {1e-3, 8e-4, 6e-4, 4e-4, 2e-4, 1e-4})};
    case 12:
      return {12, TargetId::F6, 1e-8, 320,
              theta_sweep(KernelFamily::M6, {1e-3, 5e-4, 1e-4, 5e-5, 1e-5})};
    default:
      throw UnknownPreset("no table preset with id " + std::to_string(id));
  }
}

std::vector<int> preset_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}; }

}  // namespace rbfadapt
