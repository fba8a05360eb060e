#pragma once

#include <stdexcept>
#include <string>

#include "gog/graph.hpp"

namespace gog {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
                             ": " + what),
          line(line_),
          column(column_) {}
};

// GOG text format, line-oriented with '#' comments:
//   graph <name>
//   vertex <id> class=<elementary|orbifold|rigid> group=<oracle-spec>
//          [center=<finite|infinite>] [signature=<genus>,<o|n>,<boundary>]
//          [boundary=<word>;<word>;...] [mcg=<finite|infinite|unknown>]
//   edge <id> from=<vid> to=<vid> group=<oracle-spec> [center=<finite|infinite>]
//          emb_from=<word>,... emb_to=<word>,...
// Oracle specs: free(r[;names]) | abelian(d1,...,dk[;names]) |
//   zsemiz(k;matrix[;names]) | presentation(gens;relators).
// Generator names default to <ownerid>_1.. (and <ownerid>_t for the zsemiz
// stable letter) when not spelled out.
GraphOfGroups parse_graph(const std::string& text);

std::string serialize_graph(const GraphOfGroups& g);

GraphOfGroups load_graph_file(const std::string& path);

}  // namespace gog
