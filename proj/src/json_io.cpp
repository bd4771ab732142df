#include "bookcross/json_io.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace bookcross {

using nlohmann::json;

std::string write_layout_json(const Graph& g, const BookEmbedding& emb,
                              const CrossingReport& report) {
    json j;
    j["order"] = json::array();
    for (int v : emb.order) j["order"].push_back(g.label(v));
    json pages = json::object();
    for (int e = 0; e < g.edge_count(); ++e) pages[std::to_string(e)] = emb.page[e];
    j["page"] = std::move(pages);
    j["crossings"] = report.crossings;
    j["crossed_edges"] = report.crossed_edges();
    return j.dump(2) + "\n";
}

BookEmbedding read_layout_json(const Graph& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad layout JSON: ") + e.what());
    }
    if (!j.contains("order") || !j.contains("page"))
        throw std::invalid_argument("layout JSON needs 'order' and 'page'");

    std::unordered_map<long long, int> by_label;
    for (int v = 0; v < g.vertex_count(); ++v) by_label[g.label(v)] = v;

    BookEmbedding emb;
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& item : j["order"]) {
        if (!item.is_number_integer())
            throw std::invalid_argument("layout order entries must be integers");
        auto it = by_label.find(item.get<long long>());
        if (it == by_label.end())
            throw std::invalid_argument("layout order names an unknown vertex: " + item.dump());
        if (seen[it->second])
            throw std::invalid_argument("layout order repeats a vertex: " + item.dump());
        seen[it->second] = 1;
        emb.order.push_back(it->second);
    }
    if (static_cast<int>(emb.order.size()) != g.vertex_count())
        throw std::invalid_argument("layout order does not cover the graph");

    emb.page.assign(g.edge_count(), 0);
    std::vector<char> have(g.edge_count(), 0);
    for (const auto& [key, value] : j["page"].items()) {
        int e;
        try {
            e = std::stoi(key);
        } catch (...) {
            throw std::invalid_argument("bad edge id in layout page map: " + key);
        }
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("layout page map names an unknown edge: " + key);
        int p = value.get<int>();
        if (p != 0 && p != 1) throw std::invalid_argument("pages must be 0 or 1");
        emb.page[e] = static_cast<uint8_t>(p);
        have[e] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!have[e])
            throw std::invalid_argument("layout page map is missing edge " + std::to_string(e));
    return emb;
}

std::string kernel_dump(const Graph& g, Style style, Objective objective) {
    std::ostringstream out;
    BlockCutForest forest = biconnected_components(g);
    int bridges = 0;
    for (size_t b = 0; b < forest.blocks.size(); ++b) {
        if (forest.blocks[b].size() == 1) {
            ++bridges;
            continue;
        }
        Subgraph sub = subgraph_of_edges(g, forest.blocks[b]);
        Kernel kernel = make_kernel(sub.graph, style, objective);
        long long bound_n, bound_m;
        int k = kernel.source_k;
        if (style == Style::OnePage) {
            bound_n = 5LL * k;
            bound_m = 6LL * k;
        } else if (objective == Objective::Crossings) {
            bound_n = bound_m = 6LL * k * k * k;
        } else {
            bound_n = bound_m = 6LL * k * k;
        }
        out << "# block " << b << ": k=" << k << " ell=" << kernel.ell << " kernel "
            << kernel.graph.vertex_count() << " vertices / " << kernel.graph.edge_count()
            << " edges (bound " << bound_n << "/" << bound_m << ")\n";
        for (int e = 0; e < kernel.graph.edge_count(); ++e) {
            auto [u, v] = kernel.graph.edge(e);
            out << kernel.graph.label(u) << " " << kernel.graph.label(v) << "\n";
        }
        for (const auto& rec : kernel.path_records) {
            int rep = kernel.orig_vertex[rec.rep_kernel_vertex];
            out << "# path shortened beside " << sub.graph.label(rep) << ": removed "
                << rec.removed_vertices.size() << " interior vertices toward "
                << sub.graph.label(rec.far_vertex) << "\n";
        }
    }
    // everything outside the 2-core plays no part in any kernel
    TwoCore core = two_core(g);
    int pruned = g.vertex_count() - core.core.graph.vertex_count();
    if (pruned > 0)
        out << "# pruned forest: " << pruned << " tree vertices (" << bridges
            << " bridge edges kept aside)\n";
    if (forest.blocks.empty()) out << "# no blocks (edgeless input)\n";
    return out.str();
}

} // namespace bookcross
