// Command-line front end: JSON in, JSON (or SVG) out.
// Exit codes: 0 pass/found, 1 fail/unsat, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpg/catalog.hpp"
#include "cpg/certificates.hpp"
#include "cpg/coloring.hpp"
#include "cpg/contact.hpp"
#include "cpg/gadgets.hpp"
#include "cpg/geometry.hpp"
#include "cpg/json_io.hpp"
#include "cpg/linegraph.hpp"
#include "cpg/recognition.hpp"
#include "cpg/reduction.hpp"
#include "cpg/svg.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

cpg::json read_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open '" + path + "'");
        in = &file;
    }
    cpg::json j;
    *in >> j;
    return j;
}

cpg::CpgRepresentation read_valid_rep(const std::string& path) {
    auto rep = cpg::rep_from_json(read_json(path));
    auto report = cpg::validate(rep);
    if (!report.ok) {
        std::cout << cpg::dump(cpg::to_json(report));
        throw std::invalid_argument("representation is invalid");
    }
    return rep;
}

void emit(const cpg::json& j) { std::cout << cpg::dump(j); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contact graphs of paths on a grid"};
    app.require_subcommand(1);

    std::string input = "-";
    int kcolors = 3;
    int bends = 0;
    long long budget = 50'000'000;
    int grid_bound = 0;
    int scale = 8;
    std::string claim;
    std::string catalog_action;
    std::string catalog_name;
    cpg::GridPoint point;
    bool have_point = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin");
    };

    auto* c_validate = app.add_subcommand("validate", "check representation invariants");
    add_input(c_validate);
    auto* c_extract = app.add_subcommand("extract", "contact graph of a representation");
    add_input(c_extract);
    auto* c_classify = app.add_subcommand("classify", "classify grid points");
    add_input(c_classify);
    std::vector<int> point_arg;
    c_classify->add_option("--point", point_arg, "classify a single point: row col")->expected(2);
    auto* c_weights = app.add_subcommand("weights", "per-endpoint weights");
    add_input(c_weights);
    auto* c_audit = app.add_subcommand("audit", "weight audit (observations 1 and 2)");
    add_input(c_audit);
    auto* c_color4 = app.add_subcommand("color4", "4-coloring of a 0-bend representation");
    add_input(c_color4);
    auto* c_color6 = app.add_subcommand("color6", "6-coloring of a CPG-consistent graph");
    add_input(c_color6);
    auto* c_kcolor = app.add_subcommand("kcolor", "exact k-colorability oracle");
    add_input(c_kcolor);
    c_kcolor->add_option("-k,--colors", kcolors, "number of colors");
    auto* c_clique = app.add_subcommand("clique", "exact clique number");
    add_input(c_clique);
    auto* c_certify = app.add_subcommand("certify", "structural certificates");
    add_input(c_certify);
    c_certify->add_option("--claim", claim,
                          "degree | k7free | maxplanar | trianglefree | k33minor | fourreg7 | b1degree")
        ->required();
    auto* c_reduce = app.add_subcommand("reduce3col", "3-colorability reduction from an embedding");
    add_input(c_reduce);
    c_reduce->add_option("--scale", scale, "initial grid scale (even)");
    auto* c_recognize = app.add_subcommand("recognize", "exhaustive B_k recognition search");
    add_input(c_recognize);
    c_recognize->add_option("--bends", bends, "bend bound k");
    c_recognize->add_option("--budget", budget, "node budget (negative = unlimited)");
    c_recognize->add_option("--grid-bound", grid_bound, "override lines-per-axis bound");
    auto* c_linegraph = app.add_subcommand("linegraph", "line graph of a graph");
    add_input(c_linegraph);
    auto* c_rect2rep = app.add_subcommand("rect2rep", "representation from a rectilinear drawing");
    add_input(c_rect2rep);
    auto* c_rep2rect = app.add_subcommand("rep2rect", "rectilinear drawing from a 0-bend representation");
    add_input(c_rep2rect);
    auto* c_catalog = app.add_subcommand("catalog", "paper fixtures");
    c_catalog->add_option("action", catalog_action, "list | emit")->required();
    c_catalog->add_option("name", catalog_name, "fixture name (for emit)");
    auto* c_render = app.add_subcommand("render", "SVG rendering of a representation or drawing");
    add_input(c_render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitPass;
    }

    try {
        if (c_validate->parsed()) {
            auto rep = cpg::rep_from_json(read_json(input));
            auto report = cpg::validate(rep);
            emit(cpg::to_json(report));
            return report.ok ? kExitPass : kExitFail;
        }
        if (c_extract->parsed()) {
            emit(cpg::to_json(cpg::contact_graph(read_valid_rep(input))));
            return kExitPass;
        }
        if (c_classify->parsed()) {
            auto rep = read_valid_rep(input);
            if (point_arg.size() == 2) {
                point = {point_arg[0], point_arg[1]};
                have_point = true;
            }
            if (have_point) {
                std::map<cpg::GridPoint, cpg::PointClass> one{
                    {point, cpg::classify_point(rep, point)}};
                emit(cpg::to_json(one));
            } else {
                emit(cpg::to_json(cpg::classify_all(rep)));
            }
            return kExitPass;
        }
        if (c_weights->parsed() || c_audit->parsed()) {
            auto rep = read_valid_rep(input);
            emit(cpg::to_json(cpg::weight_audit(rep)));
            return kExitPass;
        }
        if (c_color4->parsed()) {
            auto rep = read_valid_rep(input);
            auto coloring = cpg::color_b0(rep);
            emit(cpg::to_json(coloring));
            return kExitPass;
        }
        if (c_color6->parsed()) {
            auto g = cpg::graph_from_json(read_json(input));
            emit(cpg::to_json(cpg::color_cpg(g)));
            return kExitPass;
        }
        if (c_kcolor->parsed()) {
            auto g = cpg::graph_from_json(read_json(input));
            auto coloring = cpg::is_k_colorable(g, kcolors);
            if (!coloring) {
                emit({{"colorable", false}, {"k", kcolors}});
                return kExitFail;
            }
            cpg::json j = cpg::to_json(*coloring);
            j["colorable"] = true;
            j["k"] = kcolors;
            emit(j);
            return kExitPass;
        }
        if (c_clique->parsed()) {
            auto g = cpg::graph_from_json(read_json(input));
            auto cert = cpg::k7_check(g);
            emit(cpg::to_json(cert));
            return cert.pass ? kExitPass : kExitFail;
        }
        if (c_certify->parsed()) {
            cpg::Certificate cert;
            if (claim == "fourreg7") {
                cert = cpg::check_4regular_7_lemma();
            } else if (claim == "trianglefree") {
                cert = cpg::trianglefree_hypothesis(read_valid_rep(input));
            } else if (claim == "b1degree") {
                cert = cpg::b1_degree_certificate(read_valid_rep(input));
            } else {
                auto g = cpg::graph_from_json(read_json(input));
                if (claim == "degree")
                    cert = cpg::degree_certificate(g);
                else if (claim == "k7free")
                    cert = cpg::k7_check(g);
                else if (claim == "maxplanar")
                    cert = cpg::maxplanar_deg3_bound(g, std::nullopt, true);
                else if (claim == "k33minor")
                    cert = cpg::k33_certificate(g);
                else
                    throw std::invalid_argument("unknown claim '" + claim + "'");
            }
            emit(cpg::to_json(cert));
            return cert.pass ? kExitPass : kExitFail;
        }
        if (c_reduce->parsed()) {
            auto emb = cpg::embedding_from_json(read_json(input));
            auto out = cpg::reduce_3col(emb, scale);
            cpg::json j;
            j["gprime"] = cpg::to_json(out.gprime);
            j["rep"] = cpg::to_json(out.rep);
            j["scale"] = out.scale;
            cpg::json prov = cpg::json::object();
            for (const auto& [name, p] : out.provenance) {
                cpg::json jp;
                switch (p.kind) {
                    case cpg::Provenance::Kind::Copy: jp["kind"] = "copy"; break;
                    case cpg::Provenance::Kind::InteriorSegment:
                        jp["kind"] = "interior-segment";
                        jp["edge"] = {p.edge_u, p.edge_v};
                        jp["index"] = p.index;
                        break;
                    case cpg::Provenance::Kind::GadgetRole:
                        jp["kind"] = "gadget";
                        jp["edge"] = {p.edge_u, p.edge_v};
                        jp["link"] = p.index;
                        jp["gadget"] = p.gadget;
                        jp["role"] = p.role;
                        break;
                }
                prov[name] = jp;
            }
            j["provenance"] = prov;
            emit(j);
            return kExitPass;
        }
        if (c_recognize->parsed()) {
            auto g = cpg::graph_from_json(read_json(input));
            auto outcome = cpg::recognize_bk(g, bends, budget, grid_bound);
            cpg::json j;
            j["bounds"] = {{"rows", outcome.row_bound}, {"cols", outcome.col_bound}};
            j["nodes"] = outcome.stats.nodes;
            switch (outcome.tag) {
                case cpg::SearchOutcome::Tag::Found:
                    j["outcome"] = "found";
                    j["rep"] = cpg::to_json(*outcome.rep);
                    emit(j);
                    return kExitPass;
                case cpg::SearchOutcome::Tag::UnsatWithinBounds:
                    j["outcome"] = "unsat-within-bounds";
                    emit(j);
                    return kExitFail;
                case cpg::SearchOutcome::Tag::BudgetExceeded:
                    j["outcome"] = "budget-exceeded";
                    emit(j);
                    return kExitFail;
            }
        }
        if (c_linegraph->parsed()) {
            auto g = cpg::graph_from_json(read_json(input));
            emit(cpg::to_json(cpg::line_graph(g)));
            return kExitPass;
        }
        if (c_rect2rep->parsed()) {
            auto d = cpg::drawing_from_json(read_json(input));
            emit(cpg::to_json(cpg::rep_from_rectilinear(d)));
            return kExitPass;
        }
        if (c_rep2rect->parsed()) {
            auto rep = read_valid_rep(input);
            auto recovered = cpg::rectilinear_from_rep(rep);
            cpg::json j;
            j["drawing"] = cpg::to_json(recovered.drawing);
            j["graph"] = cpg::to_json(recovered.graph);
            cpg::json eop = cpg::json::object();
            for (const auto& [p, e] : recovered.edge_of_path) eop[p] = e;
            j["edge_of_path"] = eop;
            emit(j);
            return kExitPass;
        }
        if (c_catalog->parsed()) {
            if (catalog_action == "list") {
                cpg::json j = cpg::json::array();
                for (const auto& e : cpg::fixtures()) {
                    cpg::json je;
                    je["name"] = e.name;
                    je["has_rep"] = e.rep.has_value();
                    je["has_graph"] = e.graph.has_value();
                    je["has_embedding"] = e.embedding.has_value();
                    j.push_back(je);
                }
                emit(j);
                return kExitPass;
            }
            if (catalog_action == "emit") {
                auto e = cpg::fixture(catalog_name);
                if (!e) throw std::invalid_argument("unknown fixture '" + catalog_name + "'");
                cpg::json j;
                j["name"] = e->name;
                if (e->rep) j["rep"] = cpg::to_json(*e->rep);
                if (e->graph) j["graph"] = cpg::to_json(*e->graph);
                if (e->embedding) j["embedding"] = cpg::to_json(*e->embedding);
                if (e->expected_max_bends) j["max_bends"] = *e->expected_max_bends;
                emit(j);
                return kExitPass;
            }
            throw std::invalid_argument("catalog action must be list or emit");
        }
        if (c_render->parsed()) {
            auto j = read_json(input);
            if (j.contains("paths")) {
                auto rep = cpg::rep_from_json(j);
                auto report = cpg::validate(rep);
                if (!report.ok) throw std::invalid_argument("representation is invalid");
                std::cout << cpg::render_svg(rep);
            } else {
                std::cout << cpg::render_svg(cpg::drawing_from_json(j));
            }
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cpg::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
