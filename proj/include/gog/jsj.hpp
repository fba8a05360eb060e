#pragma once

#include "gog/graph.hpp"

namespace gog {

// The two exceptional bounded signatures with finite mapping class group among
// chi < 0 surfaces: the pair of pants and the twice-punctured projective
// plane. Throws on chi >= 0.
bool surface_mcg_infinite(const OrbifoldSignature& s);

// MCG^d is a central extension of MCG by Z^b for a surface with b boundary
// components; for H = Z with k nontrivial peripheral subgroups the relative
// group is Z^(k-1).
long long mcg_boundary_extension_rank(const OrbifoldSignature& s);
long long mcg_boundary_extension_rank_cyclic(long long nontrivial_peripherals);

struct Invariants {
    long long n = 0, r = 0, q = 0, s = 0;
    bool degenerate = false;  // no edges: the splitting is trivial
};

Invariants count_invariants(const GraphOfGroups& g);

// Q: edges of E_3^inf oriented elementary -> rigid, after discarding the
// smallest-id such edge at every infinite-center elementary vertex.
std::vector<int> build_Q(const GraphOfGroups& g);

Tri out_infinite(const GraphOfGroups& g);

struct OutReport {
    Invariants inv;
    std::vector<int> q_edges;
    Tri infinite = Tri::Unknown;
    bool torsion_free = false;
    bool full_product = false;  // every infinite-center elementary vertex meets a rigid vertex
    std::string decomposition;
    std::vector<std::pair<std::string, long long>> orbifold_ranks;  // vertex id -> b_v
    std::vector<std::string> caveats;

    std::string to_text(const GraphOfGroups& g) const;
    std::string to_machine(const GraphOfGroups& g) const;  // JSON
};

OutReport structure_report(const GraphOfGroups& g);

}  // namespace gog
