#include "sge/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace sge {

namespace {

bool payload_line(const std::string& line, std::string& out) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return false;
    if (line[first] == '#') return false;
    const auto last = line.find_last_not_of(" \t\r\n");
    out = line.substr(first, last - first + 1);
    return true;
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
    std::istringstream ss(s);
    std::string tail;
    return (ss >> a >> b) && !(ss >> tail);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line, payload;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (!payload_line(line, payload)) continue;
        long a = 0, b = 0;
        if (!parse_two_ints(payload, a, b))
            throw ParseError("expected two integers, got \"" + payload + "\"");
        if (n < 0) {
            n = a;
            m = b;
            if (n <= 0 || m < 0) throw ParseError("invalid header \"" + payload + "\"");
            continue;
        }
        if (static_cast<long>(edges.size()) == m)
            throw ParseError("more than the declared " + std::to_string(m) + " edges");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) throw ParseError("empty edge-list input");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<int>(n), edges, DuplicatePolicy::Reject);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph6(const std::string& line) {
    size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= line.size()) throw ParseError("empty graph6 line");

    auto byte = [&](size_t i) -> int {
        if (i >= line.size()) throw ParseError("truncated graph6 line");
        const int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte out of range at position " + std::to_string(i));
        return c - 63;
    };

    long n = 0;
    if (byte(pos) < 63) {
        n = byte(pos);
        ++pos;
    } else {
        if (byte(pos + 1) == 63) throw ParseError("graph6 8-byte order form not supported");
        n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    }
    if (n <= 0) throw ParseError("graph6 order must be positive");

    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(line.size() - pos) != nbytes)
        throw ParseError("graph6 body length mismatch: expected " + std::to_string(nbytes) +
                         " bytes, got " + std::to_string(line.size() - pos));

    std::vector<Edge> edges;
    long bit = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++bit)
            if ((byte(pos + static_cast<size_t>(bit / 6)) >> (5 - bit % 6)) & 1)
                edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<int>(n), edges, DuplicatePolicy::Reject);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw ParseError("graph6 writer supports at most 62 vertices");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line, payload;
    while (std::getline(in, line)) {
        if (!payload_line(line, payload)) continue;
        if (payload == ">>graph6<<") continue;
        graphs.push_back(read_graph6(payload));
    }
    return graphs;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    std::istringstream scan(text);
    std::string line, payload;
    while (std::getline(scan, line)) {
        if (!payload_line(line, payload)) continue;
        long a = 0, b = 0;
        if (parse_two_ints(payload, a, b)) return read_edge_list(text);
        return read_graph6(payload);
    }
    throw ParseError("no graph data in " + path);
}

nlohmann::json witness_to_json(const Witness& w) {
    Witness c = w;
    canonicalize(c);
    nlohmann::json j;
    j["set"] = c.set;
    j["paths"] = nlohmann::json::array();
    for (const auto& pp : c.paths)
        j["paths"].push_back({{"pair", {pp.u, pp.v}}, {"path", pp.path}});
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("set") || !j.contains("paths"))
        throw ParseError("witness JSON must have \"set\" and \"paths\"");
    Witness w;
    try {
        w.set = j.at("set").get<std::vector<Vertex>>();
        for (const auto& entry : j.at("paths")) {
            const auto pair = entry.at("pair").get<std::vector<Vertex>>();
            if (pair.size() != 2) throw ParseError("witness pair must have two vertices");
            w.paths.push_back({pair[0], pair[1], entry.at("path").get<Path>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed witness JSON: ") + e.what());
    }
    canonicalize(w);
    return w;
}

Witness read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return witness_from_json(j);
}

std::string fingerprint(const Graph& g) {
    std::ostringstream text;
    text << g.order() << ':' << g.size() << ':';
    for (const auto& [u, v] : g.edges()) text << u << '-' << v << ',';
    uint64_t h = 14695981039346656037ull;
    for (const char c : text.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

}  // namespace sge
