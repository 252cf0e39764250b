#pragma once

// Text and JSON formats shared by the CLI and the regression fixtures.
//
//   grid spec    "WxH"            e.g. "5x7" is 5 wide, 7 tall
//   set spec     "(x,y);(x,y)"    whitespace around tokens is ignored
//   weights      {"schema":"gridresolve/1","weights":{"x,y":w,...}}

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gridresolve/enumerate.hpp"
#include "gridresolve/grid.hpp"
#include "gridresolve/resolve.hpp"
#include "gridresolve/solver.hpp"
#include "gridresolve/vertex_set.hpp"

namespace gridresolve {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gridresolve/1";

/// Throws InputError on malformed text or dimensions below 2.
Grid parse_grid_spec(std::string_view text);

/// Throws InputError on malformed text, duplicates, or an empty set.
VertexSet parse_set_spec(std::string_view text);

/// Inverse of parse_set_spec.
std::string format_set(const VertexSet& S);

/// Throws InputError for a wrong schema tag, malformed keys, negative or
/// non-integer weights, vertices outside the grid, or any vertex left out.
WeightMap parse_weights(const Grid& g, const nlohmann::json& doc);
WeightMap load_weights(const Grid& g, const std::filesystem::path& path);
Json weights_to_json(const WeightMap& w);

Json to_json(const Grid& g);
Json to_json(const UnresolvedPair& p);
Json to_json(const MinimalCatalog& cat, bool include_sets = true);
Json to_json(const Solution& s);

/// Envelope shared by every command: schema, command, grid, result, elapsed_ms.
/// A negative elapsed time leaves the field out, for byte-stable fixtures.
Json make_report(std::string_view command, const Grid& g, Json result, double elapsed_ms);

}  // namespace gridresolve
