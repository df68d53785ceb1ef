// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "asmop/pareto_front.hpp"
#include "asmop/solver.hpp"

namespace asmop {

enum class PlotKind { OmegaVsCost, SampleSizeVsCost };

struct TraceSeries {
  std::string label;
  const std::vector<IterateRecord>* trace = nullptr;
};

/// Self-contained SVG, one polyline per trace (per trace and component for
/// the sample-size kind); the omega axis is log-scaled. Deterministic given
/// inputs. Throws InputError on an empty trace set.
std::string render_plot_svg(const std::vector<TraceSeries>& series, PlotKind kind);

void emit_plot(const std::vector<TraceSeries>& series, PlotKind kind,
               const std::filesystem::path& path);

/// Scatter of a two-objective front.
std::string render_front_svg(const std::vector<FrontEntry>& entries);

void emit_front_plot(const std::vector<FrontEntry>& entries,
                     const std::filesystem::path& path);

}  // namespace asmop
