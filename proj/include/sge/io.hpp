#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "sge/graph.hpp"
#include "sge/witness.hpp"

namespace sge {

/// Edge-list text format: first payload line "n m", then m lines "u v"
/// (0-based). Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Standard graph6 encoding. The reader accepts the short form (n <= 62) and
/// the 4-byte long form; the writer emits the short form only.
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

/// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

/// Sniffs the format: a first payload line consisting of two integers is read
/// as an edge list, anything else as a single graph6 line.
Graph read_graph_file(const std::string& path);

/// Witness JSON: {"set":[...],"paths":[{"pair":[u,v],"path":[...]},...]}.
/// Serialization is canonical (sorted keys, canonical witness order), so
/// load/dump round-trips are byte-identical.
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
Witness read_witness_file(const std::string& path);

/// FNV-1a hash of "n:m:u-v,..." over the sorted edge list, hex-encoded.
std::string fingerprint(const Graph& g);

}  // namespace sge
