// Contact analysis: grid-point classification, contact-graph extraction,
// the tau count, and the endpoint weight function with its audit.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"

namespace cpg {

enum class PointTag { TypeI, TypeIIa, TypeIIb, Plain };

inline const char* to_string(PointTag t) {
    switch (t) {
        case PointTag::TypeI: return "type-I";
        case PointTag::TypeIIa: return "type-II.a";
        case PointTag::TypeIIb: return "type-II.b";
        case PointTag::Plain: return "plain";
    }
    return "?";
}

struct PointClass {
    PointTag tag = PointTag::Plain;
    std::vector<std::string> ends;          // sorted vertex ids with an endpoint here
    std::optional<std::string> through;     // vertex whose path interior contains the point
};

namespace detail {

struct PointRecord {
    std::vector<std::string> ends;
    std::optional<std::string> through;
    bool through_straight = false;
};

// One record per lattice point that some path visits. Requires a rep that
// passes validate(); two interiors on one point is flagged as a logic error.
inline std::map<GridPoint, PointRecord> point_index(const CpgRepresentation& rep) {
    std::map<GridPoint, PointRecord> index;
    for (const auto& path : rep.paths) {
        auto pts = expand(path);
        index[pts.front()].ends.push_back(path.vertex);
        if (pts.back() != pts.front()) index[pts.back()].ends.push_back(path.vertex);
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            auto& rec = index[pts[i]];
            if (rec.through)
                throw std::logic_error("point interior to two paths; validate the representation first");
            rec.through = path.vertex;
            bool straight = (pts[i - 1].row == pts[i + 1].row) || (pts[i - 1].col == pts[i + 1].col);
            rec.through_straight = straight;
        }
    }
    for (auto& [p, rec] : index) std::sort(rec.ends.begin(), rec.ends.end());
    return index;
}

inline PointClass classify(const PointRecord& rec) {
    PointClass pc;
    pc.ends = rec.ends;
    pc.through = rec.through;
    if (rec.ends.size() == 4 && !rec.through)
        pc.tag = PointTag::TypeI;
    else if (rec.ends.size() == 2 && rec.through)
        pc.tag = rec.through_straight ? PointTag::TypeIIa : PointTag::TypeIIb;
    else
        pc.tag = PointTag::Plain;
    return pc;
}

}  // namespace detail

inline PointClass classify_point(const CpgRepresentation& rep, GridPoint p) {
    auto index = detail::point_index(rep);
    auto it = index.find(p);
    if (it == index.end()) return {};
    return detail::classify(it->second);
}

// Every point where at least one path endpoint sits, classified.
inline std::map<GridPoint, PointClass> classify_all(const CpgRepresentation& rep) {
    std::map<GridPoint, PointClass> out;
    for (const auto& [p, rec] : detail::point_index(rep))
        if (!rec.ends.empty() || rec.through) out.emplace(p, detail::classify(rec));
    return out;
}

// u ~ v iff the two paths share a grid-point that is an endpoint of at least
// one of them. The paths meeting at any point induce a clique.
inline SimpleGraph contact_graph(const CpgRepresentation& rep) {
    SimpleGraph g;
    for (const auto& path : rep.paths) g.add_vertex(path.vertex);
    for (const auto& [p, rec] : detail::point_index(rep)) {
        std::vector<std::string> members = rec.ends;
        if (rec.through) members.push_back(*rec.through);
        if (rec.ends.empty()) continue;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                g.add_edge(members[i], members[j]);
    }
    return g;
}

inline int tau(const CpgRepresentation& rep, GridPoint p) {
    auto index = detail::point_index(rep);
    auto it = index.find(p);
    if (it == index.end()) return 0;
    int j = static_cast<int>(it->second.ends.size()) + (it->second.through ? 1 : 0);
    return j * (j - 1) / 2;
}

// Exact half-integer, stored doubled so comparisons never touch floats.
struct Half {
    int twice = 0;
    auto operator<=>(const Half&) const = default;
    Half operator+(Half o) const { return {twice + o.twice}; }
    Half& operator+=(Half o) {
        twice += o.twice;
        return *this;
    }
};

// w_u^i = |{P : q_u^i interior to P}| + 1/2 |{P != P_u : q_u^i endpoint of P}|
inline Half endpoint_weight(const CpgRepresentation& rep, const std::string& u, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("endpoint index must be 1 or 2");
    const GridPath* path = rep.find(u);
    if (!path) throw std::invalid_argument("unknown vertex '" + u + "'");
    auto pts = expand(*path);
    GridPoint q = (i == 1) ? pts.front() : pts.back();

    auto index = detail::point_index(rep);
    const auto& rec = index.at(q);
    Half w;
    if (rec.through && *rec.through != u) w.twice += 2;
    for (const auto& e : rec.ends)
        if (e != u) w.twice += 1;
    return w;
}

struct VertexWeights {
    Half w1, w2, w;
};

struct WeightReport {
    std::map<std::string, VertexWeights> weights;
    Half total;
    std::size_t edge_count = 0;
    bool equality = false;  // total == |E|, iff no pair touches twice
    std::vector<std::pair<std::string, std::string>> multi_touch;
};

// Computes all weights and checks the two weight observations exactly;
// any violation is an implementation bug and is surfaced loudly.
inline WeightReport weight_audit(const CpgRepresentation& rep) {
    WeightReport report;
    auto index = detail::point_index(rep);

    for (const auto& path : rep.paths) {
        VertexWeights vw;
        vw.w1 = endpoint_weight(rep, path.vertex, 1);
        vw.w2 = endpoint_weight(rep, path.vertex, 2);
        vw.w = vw.w1 + vw.w2;
        report.total += vw.w;

        // Obs: w_u^i in {0, 1/2, 1, 3/2}, equality 3/2 iff the endpoint is type I or II
        auto pts = expand(path);
        GridPoint ends[2] = {pts.front(), pts.back()};
        Half ws[2] = {vw.w1, vw.w2};
        for (int i = 0; i < 2; ++i) {
            if (ws[i].twice < 0 || ws[i].twice > 3)
                throw std::logic_error("weight observation violated: w outside {0,1/2,1,3/2}");
            auto pc = detail::classify(index.at(ends[i]));
            bool type_one_or_two = pc.tag != PointTag::Plain;
            if ((ws[i].twice == 3) != type_one_or_two)
                throw std::logic_error("weight observation violated: 3/2 iff type I or II");
        }
        report.weights.emplace(path.vertex, vw);
    }

    // contact-point count per pair, for the multi-touch list
    std::map<std::pair<std::string, std::string>, int> touches;
    for (const auto& [p, rec] : index) {
        std::vector<std::string> members = rec.ends;
        if (rec.through) members.push_back(*rec.through);
        if (rec.ends.empty()) continue;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                auto key = members[i] < members[j] ? std::make_pair(members[i], members[j])
                                                   : std::make_pair(members[j], members[i]);
                ++touches[key];
            }
    }
    for (const auto& [pair, count] : touches)
        if (count >= 2) report.multi_touch.push_back(pair);

    report.edge_count = contact_graph(rep).edge_count();
    report.equality = (report.total.twice == static_cast<int>(2 * report.edge_count));

    if (static_cast<int>(2 * report.edge_count) > report.total.twice)
        throw std::logic_error("weight observation violated: |E| > sum of weights");
    if (report.equality != report.multi_touch.empty())
        throw std::logic_error("weight observation violated: equality iff no multi-touch");
    return report;
}

}  // namespace cpg
