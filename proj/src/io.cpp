#include "p3hull/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "p3hull/error.hpp"

namespace p3hull {

namespace {

Family family_from_name(const std::string& name) {
    if (name == "gp") return Family::GeneralizedPetersen;
    if (name == "surgery") return Family::Surgery;
    if (name == "ggp") return Family::GGP;
    if (name == "custom") return Family::Custom;
    throw ParseError("unknown graph family '" + name + "'");
}

bool plain_dot_id(const std::string& s) {
    if (s.empty()) return false;
    const bool numeric = std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    const bool word = !std::isdigit(static_cast<unsigned char>(s.front())) &&
                      std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
    return numeric || word;
}

std::string dot_id(const std::string& s) {
    if (plain_dot_id(s)) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::GeneralizedPetersen:
            return "gp";
        case Family::Surgery:
            return "surgery";
        case Family::GGP:
            return "ggp";
        case Family::Custom:
            return "custom";
    }
    return "custom";
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json doc;
    const auto& tag = g.family();
    doc["family"] = family_name(tag.family);
    if (tag.family != Family::Custom) doc["n"] = tag.n;
    if (tag.family == Family::GeneralizedPetersen || tag.family == Family::Surgery) doc["k"] = tag.k;
    if (tag.family == Family::GGP) doc["cycles"] = tag.cycles;
    doc["vertices"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    return doc;
}

Graph graph_from_json(const nlohmann::json& doc) {
    try {
        FamilyTag tag;
        tag.family = family_from_name(doc.value("family", std::string("custom")));
        if (tag.family != Family::Custom) tag.n = doc.at("n").get<int>();
        if (tag.family == Family::GeneralizedPetersen || tag.family == Family::Surgery) {
            tag.k = doc.at("k").get<int>();
            const GPParams p = GPParams::make(tag.n, tag.k);
            return tag.family == Family::Surgery ? build_surgery(p) : build_generalized_petersen(p);
        }
        if (tag.family == Family::GGP)
            return build_ggp(Permutation::from_cycles(tag.n, doc.at("cycles").get<std::vector<std::vector<int>>>()));

        const int count = doc.at("vertices").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<std::string> labels;
        if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
        return Graph::from_edges(count, edges, std::move(labels), tag);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << dot_id(g.label(v)) << ";\n";
    for (const auto& [a, b] : g.edges()) out << "  " << dot_id(g.label(a)) << " -- " << dot_id(g.label(b)) << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json trace_to_json(const InfectionTrace& trace) {
    nlohmann::json doc;
    doc["initial"] = trace.newly_infected.front();
    auto steps = nlohmann::json::array();
    for (std::size_t t = 1; t < trace.newly_infected.size(); ++t)
        steps.push_back({{"t", t}, {"new", trace.newly_infected[t]}});
    doc["steps"] = std::move(steps);
    doc["infecting"] = trace.infects_all();
    doc["time"] = trace.infects_all() ? nlohmann::json(trace.time_to_fixed_point) : nlohmann::json(nullptr);
    return doc;
}

nlohmann::json profile_to_json(const ForestProfile& profile) {
    return {{"components", profile.component_count},
            {"diameters", profile.tree_diameters},
            {"max_diameter", profile.max_diameter},
            {"adjacent_pairs_in_S", profile.removed_adjacent_pairs}};
}

nlohmann::json result_to_json(const SearchResult& result) {
    return {{"optimum", result.optimum},
            {"witness", result.witness.to_indices()},
            {"examined", result.sets_examined},
            {"ms", result.wall_time.count()}};
}

nlohmann::json spectrum_to_json(const DiameterSpectrum& spectrum) {
    return {{"n", spectrum.n}, {"diameters", spectrum.diameters}, {"min_sets_count", spectrum.set_count}};
}

nlohmann::json bounds_to_json(const GGPBounds& bounds) {
    return {{"n", bounds.n},
            {"odd_cycles", bounds.odd_cycle_count},
            {"lower", bounds.lower},
            {"upper", bounds.upper},
            {"exact", bounds.exact ? nlohmann::json(*bounds.exact) : nlohmann::json(nullptr)}};
}

VertexSet parse_vertex_set(const Graph& g, std::string_view text) {
    VertexSet s(static_cast<std::size_t>(g.vertex_count()));
    std::string token;
    const auto flush = [&] {
        if (token.empty()) return;
        Vertex v = g.find_label(token);
        if (v < 0) {
            int index = -1;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
            if (ec != std::errc{} || ptr != token.data() + token.size() || index < 0 || index >= g.vertex_count())
                throw ParseError("unknown vertex '" + token + "'");
            v = index;
        }
        s.insert(v);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            token += ch;
    }
    flush();
    return s;
}

}  // namespace p3hull
