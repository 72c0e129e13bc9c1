// The 3-colorability reduction: from an orthogonal embedding of a planar
// max-degree-4 graph G to a 0-bend representation whose contact graph G' is
// 3-colorable iff G is. Vertical paths stand in for vertices and interior
// vertical segments; gadget chains H' H ... H force color propagation along
// each edge.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpg/coloring.hpp"
#include "cpg/contact.hpp"
#include "cpg/embedding.hpp"
#include "cpg/gadgets.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

struct Provenance {
    enum class Kind { Copy, InteriorSegment, GadgetRole };
    Kind kind = Kind::Copy;
    std::string edge_u, edge_v;  // owning edge for segments and gadget roles
    int index = -1;              // segment index or gadget link index
    std::string gadget;          // "H" or "H'"
    std::string role;            // template vertex the G' vertex plays
};

struct GadgetInstance {
    bool is_h = false;                             // false: H' (b,c), true: H (b,a)
    std::string b, other;                          // attachment names in G'
    std::map<std::string, std::string> role_name;  // template role -> G' vertex
};

struct EdgePlan {
    std::string u, v;
    bool direct = false;             // straight vertical edge; paths already touch
    std::vector<std::string> chain;  // u, interior-segment names..., v
    std::vector<GadgetInstance> gadgets;
};

struct ReductionOutput {
    SimpleGraph source;
    SimpleGraph gprime;
    CpgRepresentation rep;
    std::map<std::string, Provenance> provenance;
    std::vector<EdgePlan> plans;
    int scale = 8;
};

namespace detail {

struct CongestedRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerticalPath {
    std::string name;
    int col = 0;       // scaled
    int lo = 0, hi = 0;
    int safe_lo = 0, safe_hi = 0;  // rows where gadget connectors may attach
};

struct Corridor {
    std::size_t edge_index = 0;
    int link = 0;              // joins chain[link], chain[link+1]
    int hug_row = 0;           // scaled row of the hugged horizontal segment
    std::string left_vertex;   // nonempty when the corridor attaches a vertex at its own row
    std::string right_vertex;  // (left = corridor extends east of it, right = west of it)
    std::array<int, 3> rows{};
};

inline GridPath vertical(const std::string& name, int col, int lo, int hi) {
    return {name, {{lo, col}, {hi, col}}};
}

inline GridPath horizontal(const std::string& name, int row, int c1, int c2) {
    return {name, {{row, std::min(c1, c2)}, {row, std::max(c1, c2)}}};
}

inline std::string edge_key(const std::string& u, const std::string& v) { return u + "~" + v; }

// One reduction attempt at a fixed scale. Throws CongestedRegion when the
// fixed-size structures do not fit; the caller retries with a doubled scale.
inline ReductionOutput build_reduction(const OrthogonalEmbedding& emb, int S) {
    if (S % 2 != 0) throw std::invalid_argument("scale must be even");
    ReductionOutput out;
    out.scale = S;
    out.source = emb.abstract_graph();

    for (const auto& [v, p] : emb.vertices)
        if (v.find('~') != std::string::npos || v.find('#') != std::string::npos)
            throw std::invalid_argument("vertex labels may not contain '~' or '#'");

    // per-vertex: the incident polyline leaving north/south, if any
    struct VertexInfo {
        GridPoint at;  // original coordinates
        std::optional<std::size_t> north, south;
    };
    std::map<std::string, VertexInfo> vinfo;
    for (const auto& [v, p] : emb.vertices) vinfo[v] = {p, {}, {}};
    for (std::size_t i = 0; i < emb.edges.size(); ++i) {
        const auto& e = emb.edges[i];
        for (auto [vertex, from_front] : {std::pair{e.u, true}, std::pair{e.v, false}}) {
            Dir d = leave_direction(e.polyline, from_front);
            if (d == Dir::North) vinfo[vertex].north = i;
            if (d == Dir::South) vinfo[vertex].south = i;
        }
    }

    auto is_straight_vertical = [&](const EmbeddedEdge& e) {
        return e.polyline.size() == 2 && e.polyline.front().col == e.polyline.back().col;
    };

    std::map<std::string, VerticalPath> verticals;  // all chain verticals by name

    // vertex paths
    for (const auto& [v, info] : vinfo) {
        VerticalPath vp;
        vp.name = v;
        vp.col = S * info.at.col;
        int r = S * info.at.row;

        auto endpoint_for = [&](std::optional<std::size_t> edge_idx, int sign) -> std::pair<int, int> {
            // returns {endpoint row, safe attach limit}
            if (!edge_idx) return {r + 4 * sign, r + 4 * sign};
            const auto& e = emb.edges[*edge_idx];
            if (is_straight_vertical(e)) {
                int other = S * (e.polyline.front() == info.at ? e.polyline.back().row
                                                               : e.polyline.front().row);
                int mid = (r + other) / 2;
                return {mid, mid - sign};  // midpoint is reserved for the touching partner
            }
            bool from_front = (e.polyline.front() == info.at);
            GridPoint first_bend = from_front ? e.polyline[1] : e.polyline[e.polyline.size() - 2];
            return {S * first_bend.row + sign, S * first_bend.row + sign};
        };

        auto [top, top_safe] = endpoint_for(info.north, +1);
        auto [bot, bot_safe] = endpoint_for(info.south, -1);
        vp.lo = bot;
        vp.hi = top;
        vp.safe_lo = bot_safe;
        vp.safe_hi = top_safe;
        if (vp.lo >= vp.hi) throw CongestedRegion("vertex path has empty extent at '" + v + "'");
        verticals[v] = vp;
    }

    // interior vertical segments and per-edge chains
    struct EdgeGeometry {
        std::vector<std::string> chain;
        std::vector<std::pair<GridPoint, GridPoint>> hsegs;  // traversal order, original coords
        bool direct = false;
    };
    std::vector<EdgeGeometry> geoms(emb.edges.size());

    for (std::size_t i = 0; i < emb.edges.size(); ++i) {
        const auto& e = emb.edges[i];
        EdgeGeometry& geom = geoms[i];
        if (is_straight_vertical(e)) {
            geom.direct = true;
            continue;
        }
        geom.chain.push_back(e.u);
        int seg_count = static_cast<int>(e.polyline.size()) - 1;
        int interior_index = 0;
        for (int s = 0; s < seg_count; ++s) {
            GridPoint a = e.polyline[s];
            GridPoint b = e.polyline[s + 1];
            if (a.row == b.row) {
                geom.hsegs.emplace_back(a, b);
                continue;
            }
            if (s == 0 || s == seg_count - 1) continue;  // contains a polyline endpoint
            std::string name = edge_key(e.u, e.v) + "#s" + std::to_string(interior_index);
            VerticalPath vp;
            vp.name = name;
            vp.col = S * a.col;
            vp.lo = S * std::min(a.row, b.row) - 1;
            vp.hi = S * std::max(a.row, b.row) + 1;
            vp.safe_lo = vp.lo;
            vp.safe_hi = vp.hi;
            verticals[name] = vp;
            geom.chain.push_back(name);
            out.provenance[name] = {Provenance::Kind::InteriorSegment, e.u, e.v, interior_index, "", ""};
            ++interior_index;
        }
        geom.chain.push_back(e.v);
        if (geom.hsegs.size() + 1 != geom.chain.size())
            throw std::logic_error("chain/horizontal-segment mismatch");
        if (geom.chain.size() > 4) throw std::logic_error("chain longer than four");
    }

    // corridors, one per link, hugging the matching horizontal segment
    std::vector<Corridor> corridors;
    for (std::size_t i = 0; i < emb.edges.size(); ++i) {
        const auto& e = emb.edges[i];
        const auto& geom = geoms[i];
        if (geom.direct) continue;
        for (std::size_t j = 0; j + 1 < geom.chain.size(); ++j) {
            Corridor c;
            c.edge_index = i;
            c.link = static_cast<int>(j);
            const auto& [pa, pb] = geom.hsegs[j];
            c.hug_row = S * pa.row;
            {
                const auto& left = verticals.at(geom.chain[j]);
                const auto& right = verticals.at(geom.chain[j + 1]);
                std::set<int> seg_cols{S * pa.col, S * pb.col};
                if (seg_cols != std::set<int>{left.col, right.col})
                    throw std::logic_error("horizontal segment does not join the chain columns");
            }
            // vertex attachments at the vertex's own row create east/west conflicts
            for (auto [vertex, at_link] : {std::pair{e.u, std::size_t{0}},
                                           std::pair{e.v, geom.chain.size() - 2}}) {
                if (j != at_link) continue;
                if (c.hug_row != S * vinfo[vertex].at.row) continue;
                int vcol = S * vinfo[vertex].at.col;
                int other_col = (S * pa.col == vcol) ? S * pb.col : S * pa.col;
                if (other_col > vcol)
                    c.left_vertex = vertex;  // corridor east of the vertex
                else
                    c.right_vertex = vertex;
            }
            corridors.push_back(c);
        }
    }

    // palette assignment: conflicting corridors (east+west of one vertex) take
    // disjoint row triples
    {
        std::map<std::string, std::pair<int, int>> ew;  // vertex -> {east corridor, west corridor}
        for (std::size_t c = 0; c < corridors.size(); ++c) {
            if (!corridors[c].left_vertex.empty()) ew[corridors[c].left_vertex].first = static_cast<int>(c) + 1;
            if (!corridors[c].right_vertex.empty()) ew[corridors[c].right_vertex].second = static_cast<int>(c) + 1;
        }
        std::vector<std::vector<int>> conflict(corridors.size());
        for (const auto& [v, pair] : ew)
            if (pair.first && pair.second) {
                conflict[pair.first - 1].push_back(pair.second - 1);
                conflict[pair.second - 1].push_back(pair.first - 1);
            }

        auto feasible = [&](const Corridor& c, const std::array<int, 3>& rows) {
            const auto& geomc = geoms[c.edge_index];
            const auto& a = verticals.at(geomc.chain[c.link]);
            const auto& b = verticals.at(geomc.chain[c.link + 1]);
            for (int r : rows)
                if (r < a.safe_lo || r > a.safe_hi || r < b.safe_lo || r > b.safe_hi) return false;
            return true;
        };
        auto palette = [&](const Corridor& c, int which) -> std::array<int, 3> {
            int R = c.hug_row;
            if (which == 0) return {R - 1, R, R + 1};
            if (which == 1) return {R + 2, R + 3, R + 4};
            return {R - 4, R - 3, R - 2};
        };

        std::vector<int> side(corridors.size(), -1);  // 0 = palette A, 1 = some B
        for (std::size_t c = 0; c < corridors.size(); ++c) {
            if (side[c] != -1) continue;
            side[c] = 0;
            std::vector<std::size_t> queue{c};
            while (!queue.empty()) {
                auto x = queue.back();
                queue.pop_back();
                for (int y : conflict[x])
                    if (side[y] == -1) {
                        side[y] = 1 - side[x];
                        queue.push_back(static_cast<std::size_t>(y));
                    } else if (side[y] == side[x]) {
                        throw CongestedRegion("corridor conflicts are not two-colorable");
                    }
            }
        }
        for (std::size_t c = 0; c < corridors.size(); ++c) {
            std::array<int, 3> rows{};
            if (side[c] == 0) {
                rows = palette(corridors[c], 0);
                if (!feasible(corridors[c], rows)) throw CongestedRegion("base palette does not fit");
            } else {
                rows = palette(corridors[c], 1);
                if (!feasible(corridors[c], rows)) rows = palette(corridors[c], 2);
                if (!feasible(corridors[c], rows)) throw CongestedRegion("no staggered palette fits");
            }
            corridors[c].rows = rows;
        }
    }

    // paths + gadget instances + G'
    std::vector<GridPath> paths;
    for (const auto& [name, vp] : verticals) paths.push_back(vertical(name, vp.col, vp.lo, vp.hi));
    for (const auto& [v, info] : vinfo) out.provenance[v] = {Provenance::Kind::Copy, "", "", -1, "", ""};

    for (const auto& [v, info] : vinfo) out.gprime.add_vertex(v);
    for (const auto& [name, vp] : verticals) out.gprime.add_vertex(name);

    out.plans.resize(emb.edges.size());
    for (std::size_t i = 0; i < emb.edges.size(); ++i) {
        out.plans[i].u = emb.edges[i].u;
        out.plans[i].v = emb.edges[i].v;
        out.plans[i].direct = geoms[i].direct;
        out.plans[i].chain = geoms[i].chain;
        if (geoms[i].direct) out.gprime.add_edge(emb.edges[i].u, emb.edges[i].v);
    }

    for (const auto& corridor : corridors) {
        const auto& e = emb.edges[corridor.edge_index];
        const auto& geom = geoms[corridor.edge_index];
        const std::string& s = geom.chain[corridor.link];
        const std::string& t = geom.chain[corridor.link + 1];
        int cs = verticals.at(s).col;
        int ct = verticals.at(t).col;
        auto [r1, r2, r3] = corridor.rows;

        GadgetInstance inst;
        inst.is_h = corridor.link >= 1;
        inst.b = s;
        inst.other = t;
        std::string base = edge_key(e.u, e.v) + "#g" + std::to_string(corridor.link) + ".";
        auto fresh = [&](const std::string& role) {
            std::string name = base + role;
            inst.role_name[role] = name;
            out.gprime.add_vertex(name);
            out.provenance[name] = {Provenance::Kind::GadgetRole, e.u, e.v, corridor.link,
                                    inst.is_h ? "H" : "H'", role};
            return name;
        };

        if (!inst.is_h) {
            int cm = (cs + ct) / 2;
            paths.push_back(horizontal(fresh("8"), r1, cs, cm));
            paths.push_back(horizontal(fresh("6"), r2, cs, ct));
            paths.push_back(horizontal(fresh("4"), r3, cs, cm));
            paths.push_back(horizontal(fresh("10"), r1, cm, ct));
            paths.push_back(horizontal(fresh("5"), r3, cm, ct));
            paths.push_back(vertical(fresh("9"), cm, r1, r2));
            paths.push_back(vertical(fresh("7"), cm, r2, r3));
            const SimpleGraph tmpl = gadget_h_prime();
            for (const auto& [x, y] : tmpl.edges()) {
                auto name_of = [&](const std::string& role) -> std::string {
                    if (role == "b") return s;
                    if (role == "c") return t;
                    return inst.role_name.at(role);
                };
                out.gprime.add_edge(name_of(x), name_of(y));
            }
        } else {
            int dir = (ct > cs) ? -1 : +1;  // body sits on the far side of b
            int cm = cs + dir;
            int cc = cs + 2 * dir;
            paths.push_back(horizontal(fresh("3"), r1, cs, ct));
            paths.push_back(horizontal(fresh("2"), r2, cs, ct));
            paths.push_back(horizontal(fresh("1"), r3, cs, ct));
            paths.push_back(horizontal(fresh("8"), r1, cs, cm));
            paths.push_back(horizontal(fresh("6"), r2, cs, cc));
            paths.push_back(horizontal(fresh("4"), r3, cs, cm));
            paths.push_back(vertical(fresh("9"), cm, r1, r2));
            paths.push_back(vertical(fresh("7"), cm, r2, r3));
            paths.push_back(horizontal(fresh("10"), r1, cm, cc));
            paths.push_back(horizontal(fresh("5"), r3, cm, cc));
            paths.push_back(vertical(fresh("c"), cc, r1, r3));
            const SimpleGraph tmpl = gadget_h();
            for (const auto& [x, y] : tmpl.edges()) {
                auto name_of = [&](const std::string& role) -> std::string {
                    if (role == "b") return s;
                    if (role == "a") return t;
                    return inst.role_name.at(role);
                };
                out.gprime.add_edge(name_of(x), name_of(y));
            }
        }
        out.plans[corridor.edge_index].gadgets.push_back(inst);
    }

    // translate to non-negative coordinates
    int min_row = 0, min_col = 0;
    bool first = true;
    for (const auto& p : paths)
        for (const auto& c : p.corners) {
            if (first || c.row < min_row) min_row = c.row;
            if (first || c.col < min_col) min_col = c.col;
            first = false;
        }
    CpgRepresentation rep;
    for (auto& p : paths) {
        for (auto& c : p.corners) {
            c.row -= min_row;
            c.col -= min_col;
            rep.rows = std::max(rep.rows, c.row + 1);
            rep.cols = std::max(rep.cols, c.col + 1);
        }
        rep.paths.push_back(p);
    }
    out.rep = std::move(rep);
    return out;
}

}  // namespace detail

// Runs the construction, checking its own output exactly; doubles the scale
// on congestion until the drawing fits.
inline ReductionOutput reduce_3col(const OrthogonalEmbedding& emb, int initial_scale = 8) {
    validate_embedding(emb);
    std::string last_error;
    for (int S = initial_scale; S <= 8 * initial_scale; S *= 2) {
        ReductionOutput out;
        try {
            out = detail::build_reduction(emb, S);
        } catch (const detail::CongestedRegion& err) {
            last_error = err.what();
            continue;
        }
        if (!validate(out.rep).ok || max_bends(out.rep) != 0 ||
            contact_graph(out.rep) != out.gprime) {
            last_error = "construction self-check failed at scale " + std::to_string(S);
            continue;
        }
        return out;
    }
    throw std::runtime_error("region too small after scaling: " + last_error);
}

// Reads the colors of the vertex copies; Claim 1 guarantees the result is a
// proper 3-coloring of G.
inline Coloring restrict_coloring(const ReductionOutput& out, const Coloring& cprime) {
    for (const auto& [v, c] : cprime)
        if (c < 0 || c > 2) throw std::invalid_argument("expected colors in {0,1,2}");
    if (!verify_coloring(out.gprime, cprime))
        throw std::invalid_argument("improper coloring of G'");
    Coloring c;
    for (const auto& v : out.source.vertices()) c[v] = cprime.at(v);
    if (!verify_coloring(out.source, c))
        throw std::logic_error("restriction is not proper on G; reduction bug");
    return c;
}

// Copies G's colors, propagates c(v) along each chain, and fills every gadget
// interior by per-gadget exhaustive extension.
inline Coloring extend_coloring(const ReductionOutput& out, const Coloring& c) {
    for (const auto& [v, col] : c)
        if (col < 0 || col > 2) throw std::invalid_argument("expected colors in {0,1,2}");
    if (!verify_coloring(out.source, c)) throw std::invalid_argument("improper coloring of G");

    Coloring full;
    for (const auto& v : out.source.vertices()) full[v] = c.at(v);
    for (const auto& plan : out.plans)
        for (std::size_t i = 1; i + 1 < plan.chain.size(); ++i)
            full[plan.chain[i]] = c.at(plan.v);

    for (const auto& plan : out.plans) {
        for (const auto& inst : plan.gadgets) {
            SimpleGraph tmpl = inst.is_h ? gadget_h() : gadget_h_prime();
            SimpleGraph local;
            auto name_of = [&](const std::string& role) -> std::string {
                if (role == "b") return inst.b;
                if (!inst.is_h && role == "c") return inst.other;
                if (inst.is_h && role == "a") return inst.other;
                return inst.role_name.at(role);
            };
            for (const auto& [x, y] : tmpl.edges()) local.add_edge(name_of(x), name_of(y));
            Coloring pre{{inst.b, full.at(inst.b)}, {inst.other, full.at(inst.other)}};
            auto extended = extend_to_k_coloring(local, 3, pre);
            if (!extended)
                throw std::logic_error("gadget interior does not extend; reduction bug");
            for (const auto& [v, col] : *extended) full[v] = col;
        }
    }
    if (!verify_coloring(out.gprime, full))
        throw std::logic_error("extension is not proper on G'; reduction bug");
    return full;
}

}  // namespace cpg
