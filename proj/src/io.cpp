#include "gridresolve/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>

#include "gridresolve/errors.hpp"

namespace gridresolve {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

// Whole-token signed integer; anything else, including overflow, is rejected.
bool parse_int(std::string_view s, int& out) {
    s = trim(s);
    if (s.empty()) return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

Vertex parse_pair(std::string_view token, std::string_view context) {
    const auto comma = token.find(',');
    Vertex v{};
    if (comma == std::string_view::npos || !parse_int(token.substr(0, comma), v.x) ||
        !parse_int(token.substr(comma + 1), v.y)) {
        throw InputError("malformed vertex \"" + std::string(token) + "\" in " + std::string(context));
    }
    return v;
}

}  // namespace

Grid parse_grid_spec(std::string_view text) {
    const auto t = trim(text);
    const auto x = t.find_first_of("xX");
    int w = 0;
    int h = 0;
    if (x == std::string_view::npos || !parse_int(t.substr(0, x), w) || !parse_int(t.substr(x + 1), h)) {
        throw InputError("grid spec must look like WxH, got \"" + std::string(text) + "\"");
    }
    return Grid(w, h);
}

VertexSet parse_set_spec(std::string_view text) {
    std::vector<Vertex> out;
    std::string_view rest = text;
    while (true) {
        const auto semi = rest.find(';');
        const auto token = trim(rest.substr(0, semi));
        if (token.size() < 2 || token.front() != '(' || token.back() != ')') {
            throw InputError("set spec must look like (x,y);(x,y), got \"" + std::string(text) + "\"");
        }
        out.push_back(parse_pair(token.substr(1, token.size() - 2), "set spec"));
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
    }
    return VertexSet(std::move(out));
}

std::string format_set(const VertexSet& S) { return to_string(S); }

WeightMap parse_weights(const Grid& g, const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("weights document must be a JSON object");
    const auto schema = doc.find("schema");
    if (schema == doc.end() || !schema->is_string() || schema->get<std::string>() != kSchema) {
        throw InputError(std::string("weights document must carry \"schema\": \"") + kSchema + "\"");
    }
    const auto table = doc.find("weights");
    if (table == doc.end() || !table->is_object()) throw InputError("weights document needs a \"weights\" object");

    std::vector<Weight> weights(static_cast<std::size_t>(g.size()), 0);
    std::vector<bool> seen(weights.size(), false);
    for (const auto& [key, value] : table->items()) {
        const Vertex v = parse_pair(key, "weights key");
        if (!g.contains(v)) throw InputError("weight for " + to_string(v) + " lies outside grid " + to_string(g));
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
            throw InputError("weight for " + to_string(v) + " must be a nonnegative integer");
        }
        const auto i = static_cast<std::size_t>(g.index(v));
        if (seen[i]) throw InputError("duplicate weight for " + to_string(v));
        seen[i] = true;
        weights[i] = value.get<Weight>();
    }
    for (int i = 0; i < g.size(); ++i) {
        if (!seen[static_cast<std::size_t>(i)]) throw InputError("no weight given for " + to_string(g.vertex(i)));
    }
    return WeightMap(g, std::move(weights));
}

WeightMap load_weights(const Grid& g, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open weights file " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("weights file " + path.string() + ": " + e.what());
    }
    return parse_weights(g, doc);
}

Json weights_to_json(const WeightMap& w) {
    Json table = Json::object();
    const auto& g = w.grid();
    for (int i = 0; i < g.size(); ++i) {
        const auto v = g.vertex(i);
        table[std::to_string(v.x) + "," + std::to_string(v.y)] = w.at_index(i);
    }
    return Json{{"schema", kSchema}, {"weights", std::move(table)}};
}

Json to_json(const Grid& g) { return Json{{"width", g.width()}, {"height", g.height()}}; }

Json to_json(const UnresolvedPair& p) { return Json::array({to_string(p.u), to_string(p.v)}); }

Json to_json(const MinimalCatalog& cat, bool include_sets) {
    Json hist = Json::object();
    for (const auto& [k, c] : cat.histogram) hist[std::to_string(k)] = c;
    Json out{{"mode", to_string(cat.mode)},
             {"k_max", cat.k_max},
             {"count", cat.minimals.size()},
             {"histogram", std::move(hist)}};
    if (include_sets) {
        Json sets = Json::array();
        for (const auto& s : cat.minimals) sets.push_back(format_set(s));
        out["minimals"] = std::move(sets);
    }
    return out;
}

Json to_json(const Solution& s) {
    return Json{{"chosen", format_set(s.chosen)},
                {"size", s.chosen.size()},
                {"objective", s.objective},
                {"proof", to_string(s.proof)},
                {"nodes", s.stats.nodes}};
}

Json make_report(std::string_view command, const Grid& g, Json result, double elapsed_ms) {
    Json out{{"schema", kSchema}, {"command", command}, {"grid", to_json(g)}, {"result", std::move(result)}};
    if (elapsed_ms >= 0) out["elapsed_ms"] = elapsed_ms;
    return out;
}

}  // namespace gridresolve
