// Lattice geometry: grid points, rectilinear paths stored as corner lists,
// whole representations, and the structural validator.
#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpg {

struct GridPoint {
    int row = 0;
    int col = 0;
    auto operator<=>(const GridPoint&) const = default;
};

// A path on the grid. corners.front()/back() are the endpoints, every
// intermediate corner is a genuine bend (direction alternates there).
struct GridPath {
    std::string vertex;
    std::vector<GridPoint> corners;
};

// A family of interiorly disjoint paths on a rows x cols grid.
struct CpgRepresentation {
    int rows = 0;
    int cols = 0;
    std::vector<GridPath> paths;

    const GridPath* find(const std::string& id) const {
        for (const auto& p : paths)
            if (p.vertex == id) return &p;
        return nullptr;
    }
};

enum class ViolationKind {
    EdgeOverlap,
    InteriorCrossing,
    SelfIntersection,
    OutOfBounds,
    DegeneratePath,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::EdgeOverlap: return "edge-overlap";
        case ViolationKind::InteriorCrossing: return "interior-crossing";
        case ViolationKind::SelfIntersection: return "self-intersection";
        case ViolationKind::OutOfBounds: return "out-of-bounds";
        case ViolationKind::DegeneratePath: return "degenerate-path";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<GridPoint> location;       // offending point, or the two ends of a unit edge
    std::vector<std::string> vertex_ids;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// A unit grid edge, normalized so first < second.
using UnitEdge = std::pair<GridPoint, GridPoint>;

inline UnitEdge unit_edge(GridPoint a, GridPoint b) {
    return a < b ? UnitEdge{a, b} : UnitEdge{b, a};
}

// Structural check for a single corner list. Returns a reason string if the
// corner list is not a well-formed path (zero length, non-axis step, fake
// bend); self-intersection is reported separately by the validator.
inline std::optional<std::string> corner_structure_error(const std::vector<GridPoint>& corners) {
    if (corners.size() < 2) return "fewer than two corners";
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
        const auto& a = corners[i];
        const auto& b = corners[i + 1];
        if (a == b) return "zero-length segment";
        if (a.row != b.row && a.col != b.col) return "segment not axis-aligned";
    }
    for (std::size_t i = 1; i + 1 < corners.size(); ++i) {
        bool prev_horiz = corners[i - 1].row == corners[i].row;
        bool next_horiz = corners[i].row == corners[i + 1].row;
        if (prev_horiz == next_horiz) return "intermediate corner is not a bend";
    }
    return std::nullopt;
}

// Every lattice point of the path in traversal order.
inline std::vector<GridPoint> expand(const GridPath& path) {
    if (auto err = corner_structure_error(path.corners))
        throw std::invalid_argument("degenerate-path '" + path.vertex + "': " + *err);
    std::vector<GridPoint> pts;
    pts.push_back(path.corners.front());
    for (std::size_t i = 0; i + 1 < path.corners.size(); ++i) {
        GridPoint a = path.corners[i];
        GridPoint b = path.corners[i + 1];
        int dr = (b.row > a.row) - (b.row < a.row);
        int dc = (b.col > a.col) - (b.col < a.col);
        while (a != b) {
            a.row += dr;
            a.col += dc;
            pts.push_back(a);
        }
    }
    std::set<GridPoint> seen(pts.begin(), pts.end());
    if (seen.size() != pts.size())
        throw std::invalid_argument("degenerate-path '" + path.vertex + "': self-intersecting");
    return pts;
}

inline int bend_count(const GridPath& path) {
    if (auto err = corner_structure_error(path.corners))
        throw std::invalid_argument("degenerate-path '" + path.vertex + "': " + *err);
    return static_cast<int>(path.corners.size()) - 2;
}

inline int max_bends(const CpgRepresentation& rep) {
    int k = 0;
    for (const auto& p : rep.paths) k = std::max(k, bend_count(p));
    return k;
}

// Checks all representation invariants. Structural problems are data, not
// exceptions; only duplicate vertex ids are rejected outright.
inline ValidationReport validate(const CpgRepresentation& rep) {
    ValidationReport report;
    {
        std::set<std::string> ids;
        for (const auto& p : rep.paths)
            if (!ids.insert(p.vertex).second)
                throw std::invalid_argument("duplicate vertex id '" + p.vertex + "'");
    }

    auto flag = [&](ViolationKind kind, std::vector<GridPoint> loc, std::vector<std::string> ids) {
        report.violations.push_back({kind, std::move(loc), std::move(ids)});
    };

    std::map<UnitEdge, std::string> edge_owner;
    std::map<GridPoint, std::string> interior_owner;

    for (const auto& path : rep.paths) {
        if (auto err = corner_structure_error(path.corners)) {
            flag(ViolationKind::DegeneratePath, path.corners, {path.vertex});
            continue;
        }
        // expand by hand so a self-intersection becomes a violation, not a throw
        std::vector<GridPoint> pts;
        pts.push_back(path.corners.front());
        for (std::size_t i = 0; i + 1 < path.corners.size(); ++i) {
            GridPoint a = path.corners[i];
            GridPoint b = path.corners[i + 1];
            int dr = (b.row > a.row) - (b.row < a.row);
            int dc = (b.col > a.col) - (b.col < a.col);
            while (a != b) {
                a.row += dr;
                a.col += dc;
                pts.push_back(a);
            }
        }
        bool self_ok = true;
        {
            std::set<GridPoint> seen;
            for (const auto& q : pts)
                if (!seen.insert(q).second) {
                    flag(ViolationKind::SelfIntersection, {q}, {path.vertex});
                    self_ok = false;
                    break;
                }
        }
        for (const auto& q : pts) {
            if (q.row < 0 || q.row >= rep.rows || q.col < 0 || q.col >= rep.cols) {
                flag(ViolationKind::OutOfBounds, {q}, {path.vertex});
                break;
            }
        }
        if (!self_ok) continue;

        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            UnitEdge e = unit_edge(pts[i], pts[i + 1]);
            auto [it, fresh] = edge_owner.emplace(e, path.vertex);
            if (!fresh)
                flag(ViolationKind::EdgeOverlap, {e.first, e.second}, {it->second, path.vertex});
        }
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            auto [it, fresh] = interior_owner.emplace(pts[i], path.vertex);
            if (!fresh)
                flag(ViolationKind::InteriorCrossing, {pts[i]}, {it->second, path.vertex});
        }
    }

    report.ok = report.violations.empty();
    return report;
}

// Drops every grid line that carries no path corner and renumbers the rest.
// Contacts sit at corners, so the contact graph is unchanged; idempotent.
inline CpgRepresentation compact(const CpgRepresentation& rep) {
    std::set<int> used_rows, used_cols;
    for (const auto& p : rep.paths)
        for (const auto& c : p.corners) {
            used_rows.insert(c.row);
            used_cols.insert(c.col);
        }
    std::map<int, int> row_of, col_of;
    for (int r : used_rows) row_of.emplace(r, static_cast<int>(row_of.size()));
    for (int c : used_cols) col_of.emplace(c, static_cast<int>(col_of.size()));

    CpgRepresentation out;
    out.rows = static_cast<int>(row_of.size());
    out.cols = static_cast<int>(col_of.size());
    for (const auto& p : rep.paths) {
        GridPath q;
        q.vertex = p.vertex;
        for (const auto& c : p.corners) q.corners.push_back({row_of.at(c.row), col_of.at(c.col)});
        out.paths.push_back(std::move(q));
    }
    return out;
}

}  // namespace cpg
