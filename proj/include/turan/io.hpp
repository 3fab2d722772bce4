#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "turan/embed.hpp"
#include "turan/graph.hpp"
#include "turan/growth.hpp"
#include "turan/hypergraph.hpp"
#include "turan/kernel_graph.hpp"
#include "turan/search.hpp"

namespace turan {

/// Parse failure carrying the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Hypergraph text format:
//   hg <k> <n> <m>
// followed by m lines of k strictly increasing 0-based vertex ids.
// '#' starts a comment line anywhere. Writing emits edges in canonical
// order, so write(parse(x)) == normalize(x) byte for byte.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// Graph text format: "graph <n> <m>" then m lines "u v" with u < v.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Growth sequence text format:
//   growth <k> <q>
// then q lines of k vertex ids, optionally "/ a1 a2 ..." for the defining
// set (omitted or empty for a new component).
GrowthSequence read_growth(std::istream& in);
void write_growth(std::ostream& out, const GrowthSequence& seq);

// Embedding: "embedding <pn> <pm>", pn lines "pattern-vertex host-vertex",
// pm lines "pattern-edge host-edge".
void write_embedding(std::ostream& out, const Embedding& emb);

// Kernel graph: the graph format preceded by a "# kernel-graph s=<s>"
// comment so the threshold travels with the file.
void write_kernel_graph(std::ostream& out, const KernelGraph& kg);

nlohmann::json certificate_to_json(const SearchCertificate& cert);
nlohmann::json verify_rows_to_json(const std::vector<VerifyRow>& rows);

Hypergraph load_hypergraph(const std::string& path);
Graph load_graph(const std::string& path);
GrowthSequence load_growth(const std::string& path);

}  // namespace turan
