#pragma once

#include <variant>

#include "gog/centralizer.hpp"
#include "gog/graph.hpp"

namespace gog {

struct HypothesisError : DomainError {
    using DomainError::DomainError;
};

// The map j of the twist presentation in explicit bases: codomain blocks are
// the centralizers Z_{G_{o(e)}}(G_e) over all oriented edges, domain columns
// the vertex centers Z(G_v) and edge centers Z(G_e). Torsion summands
// contribute extra congruence columns.
struct TwistLattice {
    struct Block {
        EdgeEnd end;
        AbelianDescription desc;
        int offset = 0;  // first row of this block
    };
    struct Column {
        bool is_vertex = false;
        int owner = -1;      // vertex or edge index
        int gen_index = 0;   // basis index inside the owner's center
        std::string label;
    };
    std::vector<Block> blocks;
    std::vector<Column> columns;
    std::vector<std::string> row_labels;
    std::vector<std::pair<int, long long>> torsion_rows;  // (row, modulus)
    IntMat j;           // rows = centralizer generators, cols = center generators
    IntMat full;        // j with the torsion congruence columns appended
    int rows = 0;
    std::vector<std::string> caveats;

    std::string dump() const;
};

// Degradation target when a block is not abelian (or not computable): the
// symbolic presentation of the group of twists.
struct SymbolicTwists {
    std::string reason;
    std::vector<std::string> generators;  // twist symbols per oriented edge
    std::vector<std::string> relations;   // schematic vertex/edge relations
    std::string to_text() const;
};

std::variant<TwistLattice, SymbolicTwists> build_j_matrix(const GraphOfGroups& g);

struct AbelianStructure {
    long long free_rank = 0;
    std::vector<long long> factors;  // invariant factors >= 2
    std::string display() const;
};

// Cokernel of j via Smith normal form. Requires the validated hypotheses
// (minimal, not a mapping torus); throws HypothesisError otherwise.
std::variant<AbelianStructure, SymbolicTwists> twist_group_structure(const GraphOfGroups& g);

struct KernelCheck {
    int kernel_rank = 0;
    int declared_center_rank = 0;
    bool consistent = false;
};

// Rank of ker j against the declared rank of Z(G) (Prop: image of i = ker j).
KernelCheck kernel_check(const GraphOfGroups& g, std::optional<int> declared_rank);

}  // namespace gog
