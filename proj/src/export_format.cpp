#include "annigraph/export_format.hpp"

#include <json.hpp>

namespace annigraph {

std::string dot_graph(const AnnGraph& ag) {
    std::string out = "graph \"" + flavor_name(ag.flavor) + " " + ag.mod->name + "\" {\n";
    for (std::size_t i = 0; i < ag.verts.size(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" +
               ag.mod->labels[static_cast<std::size_t>(ag.verts[i])] + "\"];\n";
    for (int i = 0; i < ag.g.n; ++i)
        ag.g.adj[static_cast<std::size_t>(i)].for_each([&](std::size_t j) {
            if (static_cast<int>(j) > i)
                out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
        });
    out += "}\n";
    return out;
}

std::string json_graph(const AnnGraph& ag) {
    nlohmann::ordered_json j;
    j["module"]["ring"] = ag.mod->ring->finite() ? ag.mod->ring->name : "Z";
    auto factors = nlohmann::ordered_json::array();
    for (const ModuleFactor& f : ag.mod->factors)
        factors.push_back({f.order, f.comp});
    j["module"]["factors"] = std::move(factors);
    j["flavor"] = flavor_name(ag.flavor);
    auto verts = nlohmann::ordered_json::array();
    for (int v : ag.verts) {
        if (!ag.mod->factors.empty()) {
            verts.push_back(ag.mod->coords(v));
        } else {
            verts.push_back(nlohmann::ordered_json::array({v}));
        }
    }
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::ordered_json::array();
    for (int i = 0; i < ag.g.n; ++i)
        ag.g.adj[static_cast<std::size_t>(i)].for_each([&](std::size_t k) {
            if (static_cast<int>(k) > i) edges.push_back({i, static_cast<int>(k)});
        });
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

} // namespace annigraph
