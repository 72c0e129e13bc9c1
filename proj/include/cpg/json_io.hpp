// JSON (de)serialization for every external interface. Object keys are
// emitted sorted and all arrays are in canonical order, so identical inputs
// produce byte-identical output.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cpg/certificates.hpp"
#include "cpg/coloring.hpp"
#include "cpg/contact.hpp"
#include "cpg/embedding.hpp"
#include "cpg/geometry.hpp"
#include "cpg/graph.hpp"
#include "cpg/linegraph.hpp"

namespace cpg {

using json = nlohmann::json;

// ---- representations: {"rows":R,"cols":C,"paths":[{"vertex":..,"corners":[[r,c],..]},..]}

inline json to_json(const CpgRepresentation& rep) {
    json j;
    j["rows"] = rep.rows;
    j["cols"] = rep.cols;
    j["paths"] = json::array();
    for (const auto& p : rep.paths) {
        json jp;
        jp["vertex"] = p.vertex;
        jp["corners"] = json::array();
        for (const auto& c : p.corners) jp["corners"].push_back({c.row, c.col});
        j["paths"].push_back(jp);
    }
    return j;
}

inline GridPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("expected [row, col]");
    GridPoint p{j[0].get<int>(), j[1].get<int>()};
    if (p.row < 0 || p.col < 0) throw std::invalid_argument("coordinates must be non-negative");
    return p;
}

inline CpgRepresentation rep_from_json(const json& j) {
    CpgRepresentation rep;
    rep.rows = j.at("rows").get<int>();
    rep.cols = j.at("cols").get<int>();
    for (const auto& jp : j.at("paths")) {
        GridPath p;
        p.vertex = jp.at("vertex").get<std::string>();
        for (const auto& jc : jp.at("corners")) p.corners.push_back(point_from_json(jc));
        rep.paths.push_back(std::move(p));
    }
    return rep;
}

// ---- graphs: {"vertices":[...],"edges":[["u","v"],...]}

inline json to_json(const SimpleGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

inline SimpleGraph graph_from_json(const json& j) {
    SimpleGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
}

// ---- validation reports

inline json to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok;
    j["violations"] = json::array();
    for (const auto& v : report.violations) {
        json jv;
        jv["kind"] = to_string(v.kind);
        jv["location"] = json::array();
        for (const auto& p : v.location) jv["location"].push_back({p.row, p.col});
        jv["vertices"] = v.vertex_ids;
        j["violations"].push_back(jv);
    }
    return j;
}

// ---- weights (doubled integers, exact)

inline json to_json(const WeightReport& report) {
    json j;
    json w = json::object();
    for (const auto& [v, vw] : report.weights) {
        w[v] = {{"twice_w1", vw.w1.twice}, {"twice_w2", vw.w2.twice}, {"twice_w", vw.w.twice}};
    }
    j["weights"] = w;
    j["twice_total"] = report.total.twice;
    j["edge_count"] = report.edge_count;
    j["equality"] = report.equality;
    j["multi_touch"] = json::array();
    for (const auto& [u, v] : report.multi_touch) j["multi_touch"].push_back({u, v});
    return j;
}

// ---- point classes

inline json to_json(const std::map<GridPoint, PointClass>& classes) {
    json j = json::array();
    for (const auto& [p, pc] : classes) {
        json jp;
        jp["point"] = {p.row, p.col};
        jp["class"] = to_string(pc.tag);
        jp["ends"] = pc.ends;
        if (pc.through) jp["through"] = *pc.through;
        j.push_back(jp);
    }
    return j;
}

// ---- colorings: {"colors":{"v":n,...}}

inline json to_json(const Coloring& coloring) {
    json j;
    j["colors"] = json::object();
    for (const auto& [v, c] : coloring) j["colors"][v] = c;
    return j;
}

inline Coloring coloring_from_json(const json& j) {
    Coloring c;
    for (const auto& [v, col] : j.at("colors").items()) c[v] = col.get<int>();
    return c;
}

// ---- certificates

inline json to_json(const Certificate& cert) {
    json j;
    j["claim"] = to_string(cert.claim);
    j["verdict"] = cert.pass ? "pass" : "fail";
    j["witness"] = cert.witness;
    return j;
}

// ---- embeddings: {"vertices":{"u":[x,y],...},"edges":[{"u":..,"v":..,"polyline":[[x,y],..]},..]}
// JSON stores [x, y] with x the column and y the row.

inline json to_json(const OrthogonalEmbedding& emb) {
    json j;
    j["vertices"] = json::object();
    for (const auto& [v, p] : emb.vertices) j["vertices"][v] = {p.col, p.row};
    j["edges"] = json::array();
    for (const auto& e : emb.edges) {
        json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["polyline"] = json::array();
        for (const auto& p : e.polyline) je["polyline"].push_back({p.col, p.row});
        j["edges"].push_back(je);
    }
    return j;
}

inline GridPoint xy_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [x, y]");
    GridPoint p{j[1].get<int>(), j[0].get<int>()};
    if (p.row < 0 || p.col < 0) throw std::invalid_argument("coordinates must be non-negative");
    return p;
}

inline OrthogonalEmbedding embedding_from_json(const json& j) {
    OrthogonalEmbedding emb;
    for (const auto& [v, p] : j.at("vertices").items()) emb.vertices[v] = xy_from_json(p);
    for (const auto& je : j.at("edges")) {
        EmbeddedEdge e;
        e.u = je.at("u").get<std::string>();
        e.v = je.at("v").get<std::string>();
        for (const auto& p : je.at("polyline")) e.polyline.push_back(xy_from_json(p));
        emb.edges.push_back(std::move(e));
    }
    return emb;
}

// ---- rectilinear drawings (same shape as embeddings, single segments)

inline json to_json(const RectilinearDrawing& d) {
    json j;
    j["vertices"] = json::object();
    for (const auto& [v, p] : d.vertices) j["vertices"][v] = {p.col, p.row};
    j["edges"] = json::array();
    for (const auto& [u, v] : d.edges) {
        json je;
        je["u"] = u;
        je["v"] = v;
        je["polyline"] = {{d.vertices.at(u).col, d.vertices.at(u).row},
                          {d.vertices.at(v).col, d.vertices.at(v).row}};
        j["edges"].push_back(je);
    }
    return j;
}

inline RectilinearDrawing drawing_from_json(const json& j) {
    RectilinearDrawing d;
    for (const auto& [v, p] : j.at("vertices").items()) d.vertices[v] = xy_from_json(p);
    for (const auto& je : j.at("edges"))
        d.edges.emplace_back(je.at("u").get<std::string>(), je.at("v").get<std::string>());
    return d;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cpg
