#include "speclab/structure_table.hpp"

#include <algorithm>
#include <sstream>

namespace speclab {

namespace {

// Schematic content of the boundary term of total degree j in (kappa, gamma),
// filtered by which data the cavity actually has.  Empty string = no term.
std::string geom_label(int j, bool robin, bool curvature) {
    if (!robin && !curvature) return "";
    if (robin && !curvature) {
        if (j == 1) return "gamma";
        return "gamma^" + std::to_string(j);
    }
    if (!robin && curvature) {
        if (j == 1) return "kappa";
        if (j == 2) return "kappa^2";
        return "kappa^" + std::to_string(j) + "+...";
    }
    switch (j) {
        case 1: return "kappa+gamma";
        case 2: return "kappa^2+gamma^2+kappa*gamma";
        default: return "kappa^" + std::to_string(j) + "+...+gamma^" + std::to_string(j);
    }
}

// Heat-trace rows for s = 0..4: V, S, then degree-(s-1) boundary terms.
std::vector<StructureRow> heat_rows(int d, bool robin, bool curvature) {
    std::vector<StructureRow> rows;
    rows.push_back({-d, false, TermClass::Volume, "V"});
    rows.push_back({-d + 1, false, TermClass::Surface, "S"});
    for (int s = 2; s <= 4; ++s) {
        const std::string lab = geom_label(s - 1, robin, curvature);
        if (!lab.empty())
            rows.push_back({-d + s, false, TermClass::LocalGeometric, lab});
    }
    return rows;
}

std::vector<StructureRow> cylinder_rows(int d, bool robin, bool curvature) {
    std::vector<StructureRow> rows;
    for (int s = 0; s <= 4; ++s) {
        const int tp = 2 * (s - d);
        std::string lab;
        TermClass cls = TermClass::LocalGeometric;
        if (s == 0) { lab = "V"; cls = TermClass::Volume; }
        else if (s == 1) { lab = "S"; cls = TermClass::Surface; }
        else lab = geom_label(s - 1, robin, curvature);

        const bool is_log_slot = (s - d) > 0 && (s - d) % 2 != 0;
        if (!lab.empty()) {
            if (s == d) {
                rows.push_back({0, false, TermClass::ConstantBracket, lab});
            } else if (is_log_slot) {
                rows.push_back({tp, true, cls, lab});
            } else {
                rows.push_back({tp, false, cls, lab});
            }
        }
        // The new, nonlocal coefficients live at the odd-positive slots and
        // exist whether or not the matching log term vanishes.
        if (is_log_slot)
            rows.push_back({tp, false, TermClass::Nonlocal, s == d + 1 ? "E" : "F"});
    }
    return rows;
}

// Formal -1/2 d/dt of the cylinder table: brackets die, t^p ln t spawns
// t^(p-1) ln t plus a plain t^(p-1), powers shift down, equal-power plain
// rows merge.
std::vector<StructureRow> energy_rows(int d, bool robin, bool curvature) {
    std::vector<StructureRow> out;
    for (const auto& r : cylinder_rows(d, robin, curvature)) {
        if (r.cls == TermClass::ConstantBracket) continue;
        if (r.log) {
            out.push_back({r.twice_power - 2, true, r.cls, r.label});
            out.push_back({r.twice_power - 2, false, r.cls, r.label});
        } else {
            out.push_back({r.twice_power - 2, false, r.cls, r.label});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const StructureRow& a, const StructureRow& b) {
        if (a.twice_power != b.twice_power) return a.twice_power < b.twice_power;
        return a.log && !b.log;
    });
    std::vector<StructureRow> merged;
    for (const auto& r : out) {
        if (!merged.empty() && !r.log && !merged.back().log &&
            merged.back().twice_power == r.twice_power) {
            auto& m = merged.back();
            // Boldface (nonlocal) content first, matching the displays' (E + kappa^d) style.
            if (r.cls == TermClass::Nonlocal) {
                m.label = r.label + "+" + m.label;
                m.cls = TermClass::Nonlocal;
            } else {
                m.label = m.label + "+" + r.label;
                if (m.cls != TermClass::Nonlocal) m.cls = r.cls;
            }
            continue;
        }
        merged.push_back(r);
    }
    return merged;
}

// Near-wall x-expansion of the renormalized density: S/x^{d+1}, boundary
// terms of degree j at x^{j-(d+1)}, a log at degree d+1, then the finite
// (nonlocal) remainder.  The x-independent flat-space divergence is implied
// and not listed as a row.
std::vector<StructureRow> density_rows(int d, bool robin, bool curvature) {
    std::vector<StructureRow> rows;
    rows.push_back({2 * (-(d + 1)), false, TermClass::Surface, "S"});
    for (int j = 1; j <= d; ++j) {
        const std::string lab = geom_label(j, robin, curvature);
        if (!lab.empty())
            rows.push_back({2 * (j - (d + 1)), false, TermClass::LocalGeometric, lab});
    }
    const std::string loglab = geom_label(d + 1, robin, curvature);
    if (!loglab.empty())
        rows.push_back({0, true, TermClass::LocalGeometric, loglab});
    rows.push_back({0, false, TermClass::Nonlocal, "finite"});
    return rows;
}

} // namespace

bool StructureTable::has_power(double p, bool with_log) const {
    for (const auto& r : rows)
        if (r.twice_power == static_cast<int>(2 * p) && r.log == with_log) return true;
    return false;
}

StructureTable structure_table(int d, bool robin, bool curvature, TableTarget target) {
    if (d < 1 || d > 3) throw DomainError("structure tables cover d = 1..3");
    if (d == 1) curvature = false; // no curvature in dimension 1
    StructureTable t;
    t.d = d;
    t.robin = robin;
    t.curvature = curvature;
    t.target = target;
    switch (target) {
        case TableTarget::HeatTrace: t.rows = heat_rows(d, robin, curvature); break;
        case TableTarget::CylinderTrace: t.rows = cylinder_rows(d, robin, curvature); break;
        case TableTarget::Energy: t.rows = energy_rows(d, robin, curvature); break;
        case TableTarget::LocalDensityNearBoundary: t.rows = density_rows(d, robin, curvature); break;
    }
    return t;
}

std::string term_class_name(TermClass c) {
    switch (c) {
        case TermClass::Volume: return "volume";
        case TermClass::Surface: return "surface";
        case TermClass::LocalGeometric: return "local-geometric";
        case TermClass::ConstantBracket: return "constant-bracket";
        case TermClass::Nonlocal: return "nonlocal";
    }
    return "?";
}

std::string table_target_name(TableTarget t) {
    switch (t) {
        case TableTarget::HeatTrace: return "heat-trace";
        case TableTarget::CylinderTrace: return "cylinder-trace";
        case TableTarget::Energy: return "energy";
        case TableTarget::LocalDensityNearBoundary: return "density-near-boundary";
    }
    return "?";
}

namespace {

std::string power_text(const StructureRow& r, bool x_variable) {
    const char* v = x_variable ? "x" : "t";
    std::ostringstream os;
    if (r.twice_power == 0) {
        os << (r.log ? std::string("ln ") + v : std::string("1"));
        return os.str();
    }
    os << v << "^";
    if (r.twice_power % 2 == 0) os << r.twice_power / 2;
    else os << "(" << r.twice_power << "/2)";
    if (r.log) os << " ln " << v;
    return os.str();
}

} // namespace

std::string StructureTable::render_text() const {
    const bool xvar = target == TableTarget::LocalDensityNearBoundary;
    std::ostringstream os;
    os << table_target_name(target) << " structure, d=" << d
       << (robin ? ", robin" : "") << (curvature ? ", curvature" : "") << "\n";
    if (xvar)
        os << "  (x = distance to the wall; the x-independent flat divergence is implied)\n";
    for (const auto& r : rows) {
        std::string p = power_text(r, xvar);
        p.resize(std::max<std::size_t>(p.size(), 12), ' ');
        std::string c = term_class_name(r.cls);
        c.resize(std::max<std::size_t>(c.size(), 18), ' ');
        os << "  " << p << c << r.label << "\n";
    }
    return os.str();
}

} // namespace speclab
