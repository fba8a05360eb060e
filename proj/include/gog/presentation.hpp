#pragma once

#include <vector>

#include "gog/graph.hpp"

namespace gog {

// Presentation of pi1(graph, maximal subtree): all vertex generators plus one
// stable letter per non-subtree edge; subtree edges contribute identification
// relators, the others HNN relators  t_E emb_from(x) t_E^-1 = emb_to(x).
struct FundamentalPresentation {
    std::vector<int> subtree;        // edge indices in the spanning tree
    std::vector<bool> in_subtree;    // by edge index
    int root = -1;                   // lexicographically smallest vertex id
    std::vector<int> letters;        // non-subtree edge indices, sorted by id
    std::vector<int> generators;     // symbol ids: vertex gens then letters
    std::vector<Word> relators;

    // Subtree structure rooted at `root`.
    std::vector<int> parent;       // parent vertex, -1 at root
    std::vector<int> parent_edge;  // edge to parent, -1 at root
};

// Deterministic spanning tree: breadth-first from the lexicographically
// smallest vertex id, ties broken by edge id order. Returns edge indices.
std::vector<int> maximal_subtree(const GraphOfGroups& g);

FundamentalPresentation fundamental_presentation(const GraphOfGroups& g);

std::string presentation_to_text(const GraphOfGroups& g, const FundamentalPresentation& p);

}  // namespace gog
