#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gog/oracle.hpp"
#include "gog/word.hpp"

namespace gog {

enum class VertexClass { Elementary, Orbifold, Rigid };

const char* vertex_class_name(VertexClass c);

struct OrbifoldSignature {
    long long genus = 0;
    bool orientable = true;
    long long boundary = 0;

    long long euler() const {
        return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
    }
    long long surface_rank() const {
        return orientable ? 2 * genus + boundary - 1 : genus + boundary - 1;
    }
};

struct VertexData {
    std::string id;
    VertexClass vclass = VertexClass::Rigid;
    GroupOracle oracle;
    std::optional<bool> center_flag;  // user-declared center=finite|infinite
    std::optional<OrbifoldSignature> signature;
    std::vector<Word> boundary_words;    // orbifold vertices, one per component
    std::optional<Tri> mcg_flag;         // orbifold override: mcg=finite|infinite|unknown
};

struct EdgeData {
    std::string id;
    int from = -1, to = -1;  // vertex indices
    GroupOracle oracle;      // edge group
    std::vector<Word> emb_from, emb_to;  // images of edge generators
    std::optional<bool> center_flag;
    int letter_sym = -1;  // reserved EdgeLetter symbol (named after the edge id)
};

// Oriented edge given by the underlying edge plus which endpoint is the
// origin: at_to = false means o(e) = from.
struct EdgeEnd {
    int edge = -1;
    bool at_to = false;
    bool operator==(const EdgeEnd&) const = default;
    bool operator<(const EdgeEnd& o) const {
        return edge != o.edge ? edge < o.edge : at_to < o.at_to;
    }
};

class GraphOfGroups {
public:
    std::string name;
    SymbolTable symbols;
    std::vector<VertexData> vertices;
    std::vector<EdgeData> edges;

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    int end_vertex(EdgeEnd e) const {
        return e.at_to ? edges[static_cast<size_t>(e.edge)].to : edges[static_cast<size_t>(e.edge)].from;
    }
    const std::vector<Word>& end_images(EdgeEnd e) const {
        return e.at_to ? edges[static_cast<size_t>(e.edge)].emb_to : edges[static_cast<size_t>(e.edge)].emb_from;
    }
    // All oriented edges with origin v, sorted by (edge id order, from-end first).
    std::vector<EdgeEnd> ends_at(int v) const;
    int degree(int v) const { return static_cast<int>(ends_at(v).size()); }

    bool connected() const;

    // Declared flag if present, else recomputed from the oracle.
    Tri vertex_center_infinite(int v) const;
    Tri edge_center_infinite(int e) const;

    // Edge indices sorted by id; vertex indices sorted by id.
    std::vector<int> edges_sorted() const;
    std::vector<int> vertices_sorted() const;
};

struct EdgePartition {
    std::vector<int> v1, v2, v3;            // vertex indices per class
    std::vector<int> e2, e3;                // edge indices by non-elementary endpoint
    std::vector<int> v1_inf;                // elementary vertices with infinite center
    std::vector<int> e_inf, e2_inf, e3_inf; // edges whose group has infinite center
    bool flags_unknown = false;             // some center flag could not be resolved
};

// Requires every edge to join an Elementary vertex to an Orbifold or Rigid
// one; throws DomainError otherwise.
EdgePartition classify_edges(const GraphOfGroups& g);

struct ValidationEntry {
    std::string check;
    Tri status;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool all_pass_or_unknown() const;
    Tri status_of(const std::string& check) const;
    std::string to_text() const;
};

ValidationReport validate(const GraphOfGroups& g);

// Is the subgroup generated by the end images the whole vertex group?
Tri end_onto(const GraphOfGroups& g, EdgeEnd e);

}  // namespace gog
