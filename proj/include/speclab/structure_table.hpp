#pragma once

#include <string>
#include <vector>

#include "speclab/common.hpp"

namespace speclab {

// Schematic structure of the small-t (or near-wall small-x) expansions for a
// cavity with optional Robin data and boundary curvature.  Rows record which
// terms exist and how they classify; the suppressed numerical coefficients
// are intentionally not represented.

enum class TermClass {
    Volume,          // bulk term, proportional to |M|
    Surface,         // boundary-area term
    LocalGeometric,  // built from kappa and/or gamma on the boundary
    ConstantBracket, // constant term of T(t); drops out of E(t)
    Nonlocal,        // new cylinder coefficient, not determined by heat data
};

enum class TableTarget { HeatTrace, CylinderTrace, Energy, LocalDensityNearBoundary };

struct StructureRow {
    // Power of the expansion variable, stored twice (heat rows step by 1/2).
    // For LocalDensityNearBoundary the variable is wall distance x.
    int twice_power = 0;
    bool log = false;
    TermClass cls = TermClass::Volume;
    std::string label; // schematic content, e.g. "kappa^2+gamma^2+kappa*gamma"

    bool operator==(const StructureRow&) const = default;
    double power() const { return 0.5 * twice_power; }
};

struct StructureTable {
    int d = 1;
    bool robin = false;
    bool curvature = false;
    TableTarget target = TableTarget::HeatTrace;
    std::vector<StructureRow> rows;

    bool has_power(double p, bool with_log) const;
    std::string render_text() const;
};

StructureTable structure_table(int d, bool robin, bool curvature, TableTarget target);

std::string term_class_name(TermClass c);
std::string table_target_name(TableTarget t);

} // namespace speclab
