#include "turan/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace turan {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Splits the input into token lines, dropping comments ('#' to end of line)
// and blank lines while tracking 1-based line numbers for error reports.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens, int& line_no) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            tokens.clear();
            std::istringstream split(raw);
            std::string tok;
            while (split >> tok) tokens.push_back(tok);
            if (!tokens.empty()) {
                line_no = line_;
                return true;
            }
        }
        return false;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer for ") + what +
                                   ", got '" + tok + "'");
    }
}

// Reads exactly k strictly increasing vertex ids from tokens[from..].
VertexSet parse_edge(const std::vector<std::string>& tokens, std::size_t from,
                     std::size_t count, int line) {
    VertexSet edge;
    int prev = -1;
    for (std::size_t i = 0; i < count; ++i) {
        const int v = parse_int(tokens[from + i], line, "a vertex id");
        if (v < 0 || v >= VertexSet::max_universe)
            throw ParseError(line, "vertex id out of range: " + std::to_string(v));
        if (v <= prev)
            throw ParseError(line, "vertex ids must be strictly increasing");
        edge.add(v);
        prev = v;
    }
    return edge;
}

std::vector<std::string> header(LineReader& reader, const char* magic, int fields,
                                std::vector<int>& values) {
    std::vector<std::string> tokens;
    int line = 0;
    if (!reader.next(tokens, line))
        throw ParseError(reader.line() + 1, std::string("missing '") + magic + "' header");
    if (tokens[0] != magic || static_cast<int>(tokens.size()) != fields + 1)
        throw ParseError(line, std::string("expected '") + magic + "' with " +
                                   std::to_string(fields) + " fields");
    values.clear();
    for (int i = 1; i <= fields; ++i)
        values.push_back(parse_int(tokens[static_cast<std::size_t>(i)], line, "a header field"));
    return tokens;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    LineReader reader(in);
    std::vector<int> hv;
    header(reader, "hg", 3, hv);
    const int k = hv[0], n = hv[1], m = hv[2];
    Hypergraph out = [&] {
        try {
            return Hypergraph(k, n);
        } catch (const std::exception& e) {
            throw ParseError(reader.line(), e.what());
        }
    }();
    std::vector<std::string> tokens;
    int line = 0;
    for (int i = 0; i < m; ++i) {
        if (!reader.next(tokens, line))
            throw ParseError(reader.line() + 1,
                             "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (static_cast<int>(tokens.size()) != k)
            throw ParseError(line, "expected " + std::to_string(k) + " vertex ids");
        const VertexSet e = parse_edge(tokens, 0, static_cast<std::size_t>(k), line);
        try {
            out.add_edge(e);
        } catch (const std::exception& err) {
            throw ParseError(line, err.what());
        }
    }
    if (reader.next(tokens, line)) throw ParseError(line, "trailing content after last edge");
    return out;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "hg " << h.k() << ' ' << h.n() << ' ' << h.edge_count() << '\n';
    for (const VertexSet e : h.edges()) {
        bool first = true;
        for (const int v : e) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<int> hv;
    header(reader, "graph", 2, hv);
    const int n = hv[0], m = hv[1];
    Graph out = [&] {
        try {
            return Graph(n);
        } catch (const std::exception& e) {
            throw ParseError(reader.line(), e.what());
        }
    }();
    std::vector<std::string> tokens;
    int line = 0;
    for (int i = 0; i < m; ++i) {
        if (!reader.next(tokens, line))
            throw ParseError(reader.line() + 1,
                             "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (tokens.size() != 2) throw ParseError(line, "expected 'u v'");
        const int u = parse_int(tokens[0], line, "an endpoint");
        const int v = parse_int(tokens[1], line, "an endpoint");
        if (u >= v) throw ParseError(line, "endpoints must satisfy u < v");
        try {
            out.add_edge(u, v);
        } catch (const std::exception& err) {
            throw ParseError(line, err.what());
        }
    }
    if (reader.next(tokens, line)) throw ParseError(line, "trailing content after last edge");
    return out;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

GrowthSequence read_growth(std::istream& in) {
    LineReader reader(in);
    std::vector<int> hv;
    header(reader, "growth", 2, hv);
    const int k = hv[0], q = hv[1];
    GrowthSequence out = [&] {
        try {
            return GrowthSequence(k);
        } catch (const std::exception& e) {
            throw ParseError(reader.line(), e.what());
        }
    }();
    std::vector<std::string> tokens;
    int line = 0;
    for (int i = 0; i < q; ++i) {
        if (!reader.next(tokens, line))
            throw ParseError(reader.line() + 1,
                             "expected " + std::to_string(q) + " steps, got " + std::to_string(i));
        if (static_cast<int>(tokens.size()) < k)
            throw ParseError(line, "expected " + std::to_string(k) + " vertex ids");
        const VertexSet edge = parse_edge(tokens, 0, static_cast<std::size_t>(k), line);
        VertexSet defining;
        if (static_cast<int>(tokens.size()) > k) {
            if (tokens[static_cast<std::size_t>(k)] != "/")
                throw ParseError(line, "expected '/' before the defining set");
            defining = parse_edge(tokens, static_cast<std::size_t>(k) + 1,
                                  tokens.size() - static_cast<std::size_t>(k) - 1, line);
        }
        out.push(edge, defining);
    }
    if (reader.next(tokens, line)) throw ParseError(line, "trailing content after last step");
    return out;
}

void write_growth(std::ostream& out, const GrowthSequence& seq) {
    out << "growth " << seq.k() << ' ' << seq.edge_count() << '\n';
    for (const GrowthStep& st : seq.steps()) {
        bool first = true;
        for (const int v : st.edge) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        if (!st.defining.empty()) {
            out << " /";
            for (const int v : st.defining) out << ' ' << v;
        }
        out << '\n';
    }
}

void write_embedding(std::ostream& out, const Embedding& emb) {
    out << "embedding " << emb.vertex_map.size() << ' ' << emb.edge_map.size() << '\n';
    for (std::size_t i = 0; i < emb.vertex_map.size(); ++i)
        out << i << ' ' << emb.vertex_map[i] << '\n';
    for (std::size_t i = 0; i < emb.edge_map.size(); ++i)
        out << i << ' ' << emb.edge_map[i] << '\n';
}

void write_kernel_graph(std::ostream& out, const KernelGraph& kg) {
    out << "# kernel-graph s=" << kg.s() << '\n';
    write_graph(out, kg.graph());
}

nlohmann::json certificate_to_json(const SearchCertificate& cert) {
    nlohmann::json witness = nlohmann::json::array();
    for (const VertexSet e : cert.witness.edges()) witness.push_back(e.to_vector());
    return nlohmann::json{
        {"n", cert.n},
        {"k", cert.k},
        {"patterns", cert.pattern_names},
        {"size", cert.size},
        {"witness", witness},
        {"exhaustive", cert.exhaustive},
        {"clique_fastpath", cert.clique_fastpath},
        {"nodes", cert.stats.nodes},
        {"prunes", {{"bound", cert.stats.bound_prunes}, {"symmetry", cert.stats.symmetry_prunes}}},
        {"seconds", cert.stats.seconds},
    };
}

nlohmann::json verify_rows_to_json(const std::vector<VerifyRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const VerifyRow& row : rows) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [name, value] : row.params) params[name] = value;
        out.push_back(nlohmann::json{
            {"formula", row.formula},
            {"params", params},
            {"search", row.search_value},
            {"reference", row.reference_value},
            {"relation", row.relation},
            {"ok", row.ok},
            {"exhaustive", row.exhaustive},
        });
    }
    return out;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_hypergraph(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_graph(in);
}

GrowthSequence load_growth(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_growth(in);
}

}  // namespace turan
