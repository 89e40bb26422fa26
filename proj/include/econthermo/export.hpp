#pragma once

// Text exports: CSV with shortest round-trip numbers and LF line endings,
// and minimal static SVG diagrams of a cycle.

#include <iosfwd>
#include <string>
#include <vector>

#include "econthermo/catastrophe.hpp"
#include "econthermo/state.hpp"
#include "econthermo/vdw.hpp"

namespace econthermo {

/// Header `Q,P,I,E,G`, one row per sample.
void write_path_csv(std::ostream& out, const ProcessPath& path);

/// Header `Q,P,I`.
void write_isotherm_csv(std::ostream& out, const ProcessPath& path);

/// Header `leg,Q,P,I,E,G`; legs in traversal order.
void write_cycle_trace_csv(std::ostream& out, const CycleReport& report);

/// Header `leg,E,I`.
void write_cycle_ei_csv(std::ostream& out, const CycleReport& report);

void write_surface_csv(std::ostream& out, const std::vector<SurfaceSample>& grid);

/// Header `alpha,beta,root_count`.
void write_bifurcation_csv(std::ostream& out, const std::vector<BifurcationSample>& grid);

/// Labels such as "1-2" for each leg, following the report's orientation.
std::vector<std::string> leg_labels(const CycleReport& report);

enum class Diagram { QP, EI };

/// Static plot: axes, one polyline per leg with a direction arrow, vertices 1-4 labelled.
void write_cycle_svg(std::ostream& out, const CycleReport& report, Diagram diagram);

}  // namespace econthermo
