#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace rainbow {

namespace {

// Splits one line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string token;
    for (char ch : line) {
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!token.empty()) out.push_back(std::move(token));
            token.clear();
        } else {
            token.push_back(ch);
        }
    }
    if (!token.empty()) out.push_back(std::move(token));
    return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace

ColouredMultigraph parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    int stage = 0;  // 0 = magic, 1 = colors, 2 = cliques
    std::uint32_t n_colours = 0;
    std::vector<CliqueSpec> cliques;
    std::unordered_set<std::uint64_t> colour_vertex_seen;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (stage == 0) {
            if (tokens.size() != 2 || tokens[0] != "rainbow-instance" || tokens[1] != "v1")
                throw ParseError(lineno, "expected header 'rainbow-instance v1'");
            stage = 1;
            continue;
        }
        if (stage == 1) {
            if (tokens.size() != 2 || tokens[0] != "colors")
                throw ParseError(lineno, "expected 'colors <n>'");
            n_colours = static_cast<std::uint32_t>(parse_uint(tokens[1], lineno, "colour count"));
            stage = 2;
            continue;
        }
        if (tokens[0] != "class" || tokens.size() < 5 || tokens[2] != "clique")
            throw ParseError(lineno, "expected 'class <colour> clique <v1> <v2> ...'");
        CliqueSpec spec;
        spec.colour = static_cast<ColourId>(parse_uint(tokens[1], lineno, "colour"));
        if (spec.colour >= n_colours)
            throw ParseError(lineno, "colour " + tokens[1] + " out of range");
        for (std::size_t i = 3; i < tokens.size(); ++i) {
            const auto v = parse_uint(tokens[i], lineno, "vertex");
            if (v > 0xFFFFFFFFull) throw ParseError(lineno, "vertex id too large");
            spec.vertices.push_back(static_cast<VertexId>(v));
        }
        std::vector<VertexId> sorted = spec.vertices;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw ParseError(lineno, "duplicate vertex " + std::to_string(sorted[i]) +
                                             " in clique");
        for (VertexId v : sorted) {
            const std::uint64_t key =
                (static_cast<std::uint64_t>(spec.colour) << 32) | v;
            if (!colour_vertex_seen.insert(key).second)
                throw ParseError(lineno, "colour " + std::to_string(spec.colour) +
                                             " already covers vertex " + std::to_string(v));
        }
        cliques.push_back(std::move(spec));
    }
    if (stage == 0) throw ParseError(lineno + 1, "missing 'rainbow-instance v1' header");
    if (stage == 1) throw ParseError(lineno + 1, "missing 'colors <n>' line");
    try {
        return ColouredMultigraph::build(n_colours, std::move(cliques));
    } catch (const GraphError& err) {
        throw ParseError(lineno, std::string("instance validation failed: ") + err.what());
    }
}

std::string serialize_instance(const ColouredMultigraph& g) {
    std::string out = "rainbow-instance v1\ncolors " + std::to_string(g.colour_count()) + "\n";
    for (std::uint32_t ci = 0; ci < g.clique_count(); ++ci) {
        out += "class " + std::to_string(g.clique_colour(ci)) + " clique";
        for (VertexId v : g.clique_vertices(ci)) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

RainbowMatching parse_matching(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    RainbowMatching m;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!header) {
            if (tokens.size() != 2 || tokens[0] != "rainbow-matching" || tokens[1] != "v1")
                throw ParseError(lineno, "expected header 'rainbow-matching v1'");
            header = true;
            continue;
        }
        if (tokens.size() != 3)
            throw ParseError(lineno, "expected '<colour> <u> <v>'");
        const auto c = static_cast<ColourId>(parse_uint(tokens[0], lineno, "colour"));
        const auto u = static_cast<VertexId>(parse_uint(tokens[1], lineno, "vertex"));
        const auto v = static_cast<VertexId>(parse_uint(tokens[2], lineno, "vertex"));
        if (m.entries.count(c))
            throw ParseError(lineno, "colour " + std::to_string(c) + " listed twice");
        m.add(c, u, v);
    }
    if (!header) throw ParseError(lineno + 1, "missing 'rainbow-matching v1' header");
    return m;
}

std::string serialize_matching(const RainbowMatching& m) {
    std::string out = "rainbow-matching v1\n";
    for (const auto& [c, edge] : m.entries)
        out += std::to_string(c) + " " + std::to_string(edge.first) + " " +
               std::to_string(edge.second) + "\n";
    return out;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string serialize_trace(const NibbleTrace& trace, bool with_colour_columns) {
    std::string out = "i,p_i,c_i,phi,killed,zapped,e_dev,d_dev";
    if (with_colour_columns)
        for (ColourId c = 0; c < trace.n_colours; ++c) out += ",e_c" + std::to_string(c);
    out += '\n';
    for (const auto& rec : trace.records) {
        out += std::to_string(rec.step);
        out += ',';
        out += format_double(rec.p);
        out += ',';
        out += format_double(rec.c_correction);
        out += ',';
        out += std::to_string(rec.phi);
        out += ',';
        out += std::to_string(rec.killed);
        out += ',';
        out += std::to_string(rec.zapped);
        out += ',';
        out += format_double(rec.e_dev);
        out += ',';
        out += format_double(rec.d_dev);
        if (with_colour_columns)
            for (ColourId c = 0; c < trace.n_colours; ++c) {
                out += ',';
                out += std::to_string(rec.colour_edges[c]);
            }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace rainbow
