#ifndef ANNIGRAPH_EXPORT_FORMAT_HPP
#define ANNIGRAPH_EXPORT_FORMAT_HPP

#include <string>

#include "annigraph/graphs.hpp"

namespace annigraph {

// undirected DOT, one vertex line per vertex (labelled by coordinates),
// one edge line per edge in (i, j) order
std::string dot_graph(const AnnGraph& ag);

// {"module": {"ring": ..., "factors": [[order, comp], ...]}, "flavor": ...,
//  "vertices": [coords...], "edges": [[i, j], ...]} with i < j, 2-space
// indentation; byte-stable for a fixed graph
std::string json_graph(const AnnGraph& ag);

} // namespace annigraph

#endif
