#pragma once

#include <vector>

#include "rbfadapt/kernels.hpp"
#include "rbfadapt/targets.hpp"

namespace rbfadapt {

struct PresetRow {
  KernelFamily kernel;
  double theta_refine;
};

// Canonical experiment: one target, a shared coarsening threshold, the
// initial node count, and one run per row. Presets 1-3 and 7-9 sweep the
// kernel family at a fixed refinement threshold; presets 4-6 and 10-12
// sweep the refinement threshold at a fixed kernel.
struct TablePreset {
  int id;
  TargetId target;
  double theta_coarse;
  int n0;  // initial 1D node count; the fixed 320-node layout for 2D targets
  std::vector<PresetRow> rows;
};

// Throws UnknownPreset for ids outside 1..12.
TablePreset preset(int id);

std::vector<int> preset_ids();

}  // namespace rbfadapt
