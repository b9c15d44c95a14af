#include "tpk/io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tpk/errors.hpp"

namespace tpk {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return value;
}

Vertex to_vertex(std::string_view tok, long long n, std::size_t line) {
    const long long v = to_int(tok, line);
    if (v < 1 || v > n) {
        throw ParseError(line, "vertex " + std::string(tok) + " out of range 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(v - 1);
}

}  // namespace

Graph parse_graph(std::istream &in) {
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    long long n = 0;
    long long m = 0;
    long long seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = split(line);
        if (tok.empty() || tok[0].front() == '#') {
            continue;
        }
        if (tok[0] == "p") {
            if (header) {
                throw ParseError(lineno, "second header line");
            }
            if (tok.size() != 4 || tok[1] != "tp") {
                throw ParseError(lineno, "header must be 'p tp <n> <m>'");
            }
            n = to_int(tok[2], lineno);
            m = to_int(tok[3], lineno);
            if (n < 0 || m < 0 || n > 100000000) {
                throw ParseError(lineno, "header counts out of range");
            }
            if (m > n * (n - 1) / 2) {
                throw ParseError(lineno, "more edges than vertex pairs");
            }
            g = Graph(static_cast<Vertex>(n));
            header = true;
        } else if (tok[0] == "e") {
            if (!header) {
                throw ParseError(lineno, "edge before header");
            }
            if (tok.size() != 3) {
                throw ParseError(lineno, "edge line must be 'e <u> <v>'");
            }
            const Vertex u = to_vertex(tok[1], n, lineno);
            const Vertex v = to_vertex(tok[2], n, lineno);
            if (u == v) {
                throw ParseError(lineno, "self-loop on vertex " + std::string(tok[1]));
            }
            if (g.has_edge(u, v)) {
                throw ParseError(lineno, "duplicate edge " + std::string(tok[1]) + " " + std::string(tok[2]));
            }
            if (++seen > m) {
                throw ParseError(lineno, "more than " + std::to_string(m) + " edge lines");
            }
            g.add_edge(u, v);
        } else {
            throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!header) {
        throw ParseError(lineno + 1, "missing 'p tp <n> <m>' header");
    }
    if (seen != m) {
        throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen));
    }
    return g;
}

Graph parse_graph_text(const std::string &text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream &out, const Graph &g, bool renumber) {
    const auto &vs = g.vertices();
    std::vector<Vertex> index(static_cast<std::size_t>(g.id_bound()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        index[static_cast<std::size_t>(vs[i])] = renumber ? static_cast<Vertex>(i) : vs[i];
    }
    const bool gaps = vs.size() != static_cast<std::size_t>(g.id_bound());
    if (gaps && renumber) {
        out << "# ids";
        for (Vertex v : vs) {
            out << ' ' << v + 1;
        }
        out << '\n';
    } else if (gaps) {
        out << "# absent";
        for (Vertex v = 0; v < g.id_bound(); ++v) {
            if (index[static_cast<std::size_t>(v)] < 0) {
                out << ' ' << v + 1;
            }
        }
        out << '\n';
    }
    out << "p tp " << (renumber ? vs.size() : static_cast<std::size_t>(g.id_bound())) << ' ' << g.num_edges() << '\n';
    // Both numberings are monotone, so the sorted edge list stays sorted.
    for (const auto &[u, v] : g.edges()) {
        out << "e " << index[static_cast<std::size_t>(u)] + 1 << ' ' << index[static_cast<std::size_t>(v)] + 1 << '\n';
    }
}

std::string graph_to_text(const Graph &g, bool renumber) {
    std::ostringstream out;
    write_graph(out, g, renumber);
    return out.str();
}

EditSet parse_edits(std::istream &in) {
    std::string line;
    std::size_t lineno = 0;
    EditSet f;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = split(line);
        if (tok.empty() || tok[0].front() == '#') {
            continue;
        }
        if (tok.size() != 3 || (tok[0] != "add" && tok[0] != "del")) {
            throw ParseError(lineno, "edit line must be 'add <u> <v>' or 'del <u> <v>'");
        }
        const long long u = to_int(tok[1], lineno);
        const long long v = to_int(tok[2], lineno);
        if (u < 1 || v < 1 || u > INT32_MAX || v > INT32_MAX) {
            throw ParseError(lineno, "vertices are 1-based positive integers");
        }
        try {
            f.insert(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                     tok[0] == "add" ? EditKind::add : EditKind::remove);
        } catch (const InputError &e) {
            throw ParseError(lineno, e.what());
        }
    }
    return f;
}

void write_edits(std::ostream &out, const EditSet &f) {
    for (const auto &e : f) {
        out << (e.kind == EditKind::add ? "add " : "del ") << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
}

void write_trace(std::ostream &out, const ReductionTrace &trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto &s : trace.steps) {
        nlohmann::json removed = nlohmann::json::array();
        for (Vertex v : s.removed) {
            removed.push_back(v + 1);
        }
        nlohmann::json added = nlohmann::json::array();
        for (const auto &[u, v] : s.added_edges) {
            added.push_back({u + 1, v + 1});
        }
        steps.push_back({{"rule", s.rule}, {"removed", removed}, {"added", added}, {"note", s.note}});
    }
    out << nlohmann::json{{"steps", steps}}.dump(2) << '\n';
}

ReductionTrace read_trace(std::istream &in) {
    ReductionTrace trace;
    auto vertex = [](const nlohmann::json &v) {
        const auto x = v.get<std::int64_t>();
        if (x < 1 || x > std::numeric_limits<Vertex>::max()) {
            throw ParseError(0, "trace: vertices are 1-based");
        }
        return static_cast<Vertex>(x - 1);
    };
    try {
        const auto doc = nlohmann::json::parse(in);
        if (!doc.at("steps").is_array()) {
            throw ParseError(0, "trace: 'steps' must be an array");
        }
        for (const auto &s : doc.at("steps")) {
            ReductionStep step;
            step.rule = s.at("rule").get<int>();
            if (step.rule < 1 || step.rule > 5) {
                throw ParseError(0, "rule id out of range");
            }
            std::vector<Vertex> removed;
            for (const auto &v : s.at("removed")) {
                removed.push_back(vertex(v));
            }
            step.removed = VertexSet(std::move(removed));
            for (const auto &e : s.at("added")) {
                step.added_edges.emplace_back(vertex(e.at(0)), vertex(e.at(1)));
            }
            step.note = s.value("note", "");
            trace.steps.push_back(std::move(step));
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("trace: ") + e.what());
    }
    return trace;
}

}  // namespace tpk
