// Desk-scale exhaustive recognition: find a B_k representation of a small
// graph or refute existence within normalized grid bounds.
//
// The search works over order types, not concrete coordinates: grid lines are
// abstract keys, and each new path coordinate either reuses an existing line
// or inserts a fresh one into a chosen gap. Contacts and overlaps between
// axis-parallel paths depend only on the relative order of lines, so
// enumerating order types within the line bounds is exhaustive. For k = 0 the
// bound of 3n lines per axis is justified by compaction (every 0-bend path
// contributes one carrier and two endpoint lines); for k >= 1 no
// normalization lemma is known and refutations are advisory only.
//
// Paths are placed one vertex at a time; as soon as a segment of the
// candidate path is fully determined it is checked against everything placed,
// so invalid prefixes are cut before their remaining coordinates are
// enumerated. Pruned prefixes admit no valid completion, which keeps the
// first-found representation independent of the pruning.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpg/contact.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

struct SearchStats {
    long long nodes = 0;
};

struct SearchOutcome {
    enum class Tag { Found, UnsatWithinBounds, BudgetExceeded };
    Tag tag = Tag::UnsatWithinBounds;
    std::optional<CpgRepresentation> rep;
    int row_bound = 0;
    int col_bound = 0;
    SearchStats stats;
};

namespace detail {

using Key = std::int64_t;
constexpr Key kSpacing = Key{1} << 50;

struct KeyPoint {
    Key row, col;
    bool operator==(const KeyPoint&) const = default;
    auto operator<=>(const KeyPoint&) const = default;
};

struct Axis {
    std::vector<Key> keys;  // sorted
    // choices: 0..keys.size()-1 reuse, keys.size()..2*keys.size() insert in gap
    std::size_t choice_count() const { return 2 * keys.size() + 1; }

    Key apply(std::size_t choice, bool& inserted) {
        if (choice < keys.size()) {
            inserted = false;
            return keys[choice];
        }
        std::size_t gap = choice - keys.size();  // 0..keys.size()
        Key value;
        if (keys.empty())
            value = 0;
        else if (gap == 0)
            value = keys.front() - kSpacing;
        else if (gap == keys.size())
            value = keys.back() + kSpacing;
        else {
            value = keys[gap - 1] + (keys[gap] - keys[gap - 1]) / 2;
            if (value == keys[gap - 1]) throw std::logic_error("line key space exhausted");
        }
        keys.insert(keys.begin() + static_cast<std::ptrdiff_t>(gap), value);
        inserted = true;
        return value;
    }

    void remove(Key value) {
        auto it = std::lower_bound(keys.begin(), keys.end(), value);
        keys.erase(it);
    }
};

struct Segment {
    bool horizontal;
    Key line;    // row for horizontal, col for vertical
    Key lo, hi;  // perpendicular extent, lo <= hi
};

inline Segment segment_between(const KeyPoint& a, const KeyPoint& b) {
    if (a.row == b.row) return {true, a.row, std::min(a.col, b.col), std::max(a.col, b.col)};
    return {false, a.col, std::min(a.row, b.row), std::max(a.row, b.row)};
}

// Shared geometry of two axis-parallel segments: nothing, one point, or an
// overlap along a line.
struct SegMeet {
    bool overlap = false;
    std::optional<KeyPoint> point;
};

inline SegMeet meet(const Segment& s, const Segment& t) {
    SegMeet m;
    if (s.horizontal == t.horizontal) {
        if (s.line != t.line) return m;
        Key lo = std::max(s.lo, t.lo);
        Key hi = std::min(s.hi, t.hi);
        if (lo > hi) return m;
        if (lo < hi) {
            m.overlap = true;
            return m;
        }
        m.point = s.horizontal ? KeyPoint{s.line, lo} : KeyPoint{lo, s.line};
        return m;
    }
    const Segment& h = s.horizontal ? s : t;
    const Segment& v = s.horizontal ? t : s;
    if (h.lo <= v.line && v.line <= h.hi && v.lo <= h.line && h.line <= v.hi)
        m.point = KeyPoint{h.line, v.line};
    return m;
}

struct PlacedPath {
    std::size_t vertex;  // index into the graph
    std::vector<KeyPoint> corners;
    std::vector<Segment> segments;
};

struct Searcher {
    const IndexedGraph& graph;
    int max_bends_allowed;
    int row_bound, col_bound;
    long long budget;

    Axis rows, cols;
    std::vector<PlacedPath> placed;
    std::vector<std::size_t> order;  // vertex placement order
    SearchStats stats;
    bool budget_hit = false;

    Searcher(const IndexedGraph& g, int k, int bound, long long node_budget)
        : graph(g), max_bends_allowed(k), row_bound(bound), col_bound(bound), budget(node_budget) {
        // place well-connected vertices early
        std::vector<bool> chosen(g.n, false);
        for (std::size_t step = 0; step < g.n; ++step) {
            std::size_t best = g.n;
            int best_placed = -1, best_deg = -1;
            for (std::size_t v = 0; v < g.n; ++v) {
                if (chosen[v]) continue;
                int np = 0;
                for (std::size_t u : order)
                    if (graph.adj[v].test(u)) ++np;
                int deg = static_cast<int>(graph.degree(v));
                if (np > best_placed || (np == best_placed && deg > best_deg)) {
                    best = v;
                    best_placed = np;
                    best_deg = deg;
                }
            }
            chosen[best] = true;
            order.push_back(best);
        }
    }

    bool search(std::size_t depth) {
        if (budget_hit) return false;
        if (depth == order.size()) return true;
        std::size_t vertex = order[depth];
        // bend-hungry instances die slowly in low-bend prefixes, so try the
        // richest shapes first; any fixed order keeps the search deterministic
        for (int bends = max_bends_allowed; bends >= 0; --bends) {
            for (int orient = 0; orient < 2; ++orient) {
                if (depth == 0 && orient == 1) continue;  // transpose symmetry
                std::vector<KeyPoint> corners(static_cast<std::size_t>(bends) + 2);
                if (choose_coord(depth, vertex, bends, orient == 0, 0, corners, 0u)) return true;
                if (budget_hit) return false;
            }
        }
        return false;
    }

    // Checks the newly completed segment `seg_idx` of the candidate against
    // the candidate's own earlier segments and every placed path. Returns
    // false on any violation or on a contact with a non-neighbor; otherwise
    // accumulates the touched placed-path indices into `touched`.
    bool admit_segment(const std::vector<KeyPoint>& corners, int bends, std::size_t seg_idx,
                       std::size_t vertex, std::uint32_t& touched) {
        Segment seg = segment_between(corners[seg_idx], corners[seg_idx + 1]);
        // self-consistency
        for (std::size_t s = 0; s < seg_idx; ++s) {
            Segment prev = segment_between(corners[s], corners[s + 1]);
            auto m = meet(prev, seg);
            if (m.overlap) return false;
            if (m.point) {
                if (s + 1 == seg_idx && *m.point == corners[seg_idx]) continue;
                return false;
            }
        }
        bool seg_has_first = seg_idx == 0;
        bool seg_has_last = seg_idx == static_cast<std::size_t>(bends);
        for (std::size_t pi = 0; pi < placed.size(); ++pi) {
            const auto& other = placed[pi];
            for (const auto& oseg : other.segments) {
                auto m = meet(seg, oseg);
                if (m.overlap) return false;
                if (!m.point) continue;
                const KeyPoint& p = *m.point;
                bool end_ours = (seg_has_first && p == corners.front()) ||
                                (seg_has_last && p == corners[seg_idx + 1]);
                bool end_other =
                    (p == other.corners.front() || p == other.corners.back());
                if (!end_ours && !end_other) return false;  // interior crossing
                if (!graph.adj[vertex].test(other.vertex)) return false;
                touched |= 1u << pi;
            }
        }
        return true;
    }

    // Coordinates alternate:  t = 0 is the carrier line of the first segment,
    // t = 1 the first corner's free coordinate, each further t completes one
    // corner (shared with its successor). Segment s is final once coordinate
    // s + 2 is assigned and is checked right then.
    bool choose_coord(std::size_t depth, std::size_t vertex, int bends, bool first_horizontal,
                      std::size_t t, std::vector<KeyPoint>& corners, std::uint32_t touched) {
        std::size_t total = static_cast<std::size_t>(bends) + 3;
        if (t == total) {
            std::uint32_t want = 0;
            for (std::size_t pi = 0; pi < placed.size(); ++pi)
                if (graph.adj[vertex].test(placed[pi].vertex)) want |= 1u << pi;
            if (touched != want) return false;
            PlacedPath pp{vertex, corners, {}};
            for (std::size_t s = 0; s + 1 < corners.size(); ++s)
                pp.segments.push_back(segment_between(corners[s], corners[s + 1]));
            placed.push_back(std::move(pp));
            bool ok = search(depth + 1);
            if (!ok) placed.pop_back();
            return ok;
        }

        bool axis_is_row;
        if (t == 0)
            axis_is_row = first_horizontal;
        else if (t == 1)
            axis_is_row = !first_horizontal;
        else
            axis_is_row = (t % 2 == 0) ? !first_horizontal : first_horizontal;

        Axis& axis = axis_is_row ? rows : cols;
        int bound = axis_is_row ? row_bound : col_bound;
        std::size_t n_choices = axis.choice_count();
        for (std::size_t choice = 0; choice < n_choices; ++choice) {
            bool inserting = choice >= axis.keys.size();
            if (inserting && static_cast<int>(axis.keys.size()) >= bound) continue;
            if (depth == 0 && !inserting) continue;  // first path uses fresh lines only
            bool inserted = false;
            Key value = axis.apply(choice, inserted);

            ++stats.nodes;
            if (budget >= 0 && stats.nodes > budget) budget_hit = true;

            bool found = false;
            if (!budget_hit && assign_coord(corners, bends, first_horizontal, t, value)) {
                std::uint32_t new_touched = touched;
                bool ok = true;
                if (t >= 2) ok = admit_segment(corners, bends, t - 2, vertex, new_touched);
                if (ok)
                    found = choose_coord(depth, vertex, bends, first_horizontal, t + 1, corners,
                                         new_touched);
            }
            if (!found && inserted) axis.remove(value);
            if (found) return true;
            if (budget_hit) return false;
        }
        return false;
    }

    // Writes coordinate t into the corner list; returns false when it closes
    // a zero-length segment (or breaks the 0-bend canonical order).
    bool assign_coord(std::vector<KeyPoint>& corners, int bends, bool first_horizontal,
                      std::size_t t, Key value) {
        std::size_t m = corners.size();
        if (t == 0) {
            if (first_horizontal)
                corners[0].row = corners[1].row = value;
            else
                corners[0].col = corners[1].col = value;
            return true;
        }
        if (t == 1) {
            if (first_horizontal)
                corners[0].col = value;
            else
                corners[0].row = value;
            return true;
        }
        std::size_t corner = t - 1;  // corner receiving its free coordinate
        bool write_row = first_horizontal ? (corner % 2 == 0) : (corner % 2 == 1);
        if (write_row) {
            corners[corner].row = value;
            if (corner + 1 < m) corners[corner + 1].row = value;
            if (corners[corner - 1].row == value) return false;
        } else {
            corners[corner].col = value;
            if (corner + 1 < m) corners[corner + 1].col = value;
            if (corners[corner - 1].col == value) return false;
        }
        if (bends == 0 && t == 2) {  // canonical endpoint order for straight paths
            if (first_horizontal && corners[1].col <= corners[0].col) return false;
            if (!first_horizontal && corners[1].row <= corners[0].row) return false;
        }
        return true;
    }

    CpgRepresentation materialize() const {
        std::map<Key, int> row_of, col_of;
        for (Key k : rows.keys) row_of.emplace(k, static_cast<int>(row_of.size()));
        for (Key k : cols.keys) col_of.emplace(k, static_cast<int>(col_of.size()));
        CpgRepresentation rep;
        rep.rows = static_cast<int>(row_of.size());
        rep.cols = static_cast<int>(col_of.size());
        for (const auto& p : placed) {
            GridPath gp;
            gp.vertex = graph.labels[p.vertex];
            for (const auto& c : p.corners) gp.corners.push_back({row_of.at(c.row), col_of.at(c.col)});
            rep.paths.push_back(std::move(gp));
        }
        return rep;
    }
};

}  // namespace detail

// Exhaustive search for a representation with at most k bends per path within
// the normalized grid. Found outcomes are validated and re-extracted before
// being returned; UnsatWithinBounds is exhaustive for the stated bounds (a
// full refutation for k = 0, advisory for k >= 1).
inline SearchOutcome recognize_bk(const SimpleGraph& g, int k, long long budget = 200'000'000,
                                  int bound_override = 0) {
    if (k < 0) throw std::invalid_argument("bend bound must be non-negative");
    if (g.vertex_count() > 30) throw std::invalid_argument("size-limit exceeded for search");
    SearchOutcome out;
    int n = static_cast<int>(g.vertex_count());
    int bound = bound_override > 0 ? bound_override : (k == 0) ? 3 * n : (k + 2) * n;
    out.row_bound = bound;
    out.col_bound = bound;
    if (n == 0) {
        out.tag = SearchOutcome::Tag::Found;
        out.rep = CpgRepresentation{};
        return out;
    }

    IndexedGraph ig(g);
    detail::Searcher searcher(ig, k, bound, budget);
    bool found = searcher.search(0);
    out.stats = searcher.stats;
    if (found) {
        CpgRepresentation rep = searcher.materialize();
        if (!validate(rep).ok || contact_graph(rep) != g || max_bends(rep) > k)
            throw std::logic_error("search produced an unsound representation");
        out.tag = SearchOutcome::Tag::Found;
        out.rep = std::move(rep);
    } else if (searcher.budget_hit) {
        out.tag = SearchOutcome::Tag::BudgetExceeded;
    } else {
        out.tag = SearchOutcome::Tag::UnsatWithinBounds;
    }
    return out;
}

inline SearchOutcome recognize_b0(const SimpleGraph& g, long long budget = 200'000'000) {
    return recognize_bk(g, 0, budget);
}

}  // namespace cpg
