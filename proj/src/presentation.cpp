#include "gog/presentation.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace gog {

std::vector<int> maximal_subtree(const GraphOfGroups& g) {
    if (!g.connected()) throw DomainError("maximal_subtree: graph is not connected");
    std::vector<int> vs = g.vertices_sorted();
    int root = vs[0];
    std::vector<bool> visited(g.vertices.size(), false);
    visited[static_cast<size_t>(root)] = true;
    std::vector<int> tree;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.edges_sorted()) {
            const EdgeData& ed = g.edges[static_cast<size_t>(e)];
            int other;
            if (ed.from == v) other = ed.to;
            else if (ed.to == v) other = ed.from;
            else continue;
            if (other == v) continue;  // loops never enter a spanning tree
            if (visited[static_cast<size_t>(other)]) continue;
            visited[static_cast<size_t>(other)] = true;
            tree.push_back(e);
            q.push(other);
        }
    }
    std::sort(tree.begin(), tree.end(), [&](int a, int b) {
        return g.edges[static_cast<size_t>(a)].id < g.edges[static_cast<size_t>(b)].id;
    });
    return tree;
}

FundamentalPresentation fundamental_presentation(const GraphOfGroups& g) {
    FundamentalPresentation p;
    p.subtree = maximal_subtree(g);
    p.in_subtree.assign(g.edges.size(), false);
    for (int e : p.subtree) p.in_subtree[static_cast<size_t>(e)] = true;
    p.root = g.vertices_sorted()[0];

    p.parent.assign(g.vertices.size(), -1);
    p.parent_edge.assign(g.vertices.size(), -1);
    {
        std::vector<bool> visited(g.vertices.size(), false);
        visited[static_cast<size_t>(p.root)] = true;
        std::queue<int> q;
        q.push(p.root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : p.subtree) {
                const EdgeData& ed = g.edges[static_cast<size_t>(e)];
                int other;
                if (ed.from == v) other = ed.to;
                else if (ed.to == v) other = ed.from;
                else continue;
                if (visited[static_cast<size_t>(other)]) continue;
                visited[static_cast<size_t>(other)] = true;
                p.parent[static_cast<size_t>(other)] = v;
                p.parent_edge[static_cast<size_t>(other)] = e;
                q.push(other);
            }
        }
    }

    for (int e : g.edges_sorted())
        if (!p.in_subtree[static_cast<size_t>(e)]) p.letters.push_back(e);

    for (int v : g.vertices_sorted())
        for (int s : g.vertices[static_cast<size_t>(v)].oracle.gens) p.generators.push_back(s);
    for (int e : p.letters) p.generators.push_back(g.edges[static_cast<size_t>(e)].letter_sym);

    // Vertex relators.
    for (int v : g.vertices_sorted())
        for (const Word& r :
             g.vertices[static_cast<size_t>(v)].oracle.defining_relators(g.symbols))
            p.relators.push_back(r);
    // Edge relators.
    for (int e : g.edges_sorted()) {
        const EdgeData& ed = g.edges[static_cast<size_t>(e)];
        for (size_t x = 0; x < ed.oracle.gens.size(); ++x) {
            if (p.in_subtree[static_cast<size_t>(e)]) {
                p.relators.push_back(ed.emb_from[x] * ed.emb_to[x].inverse());
            } else {
                Word t = Word::letter(ed.letter_sym);
                p.relators.push_back(t * ed.emb_from[x] * t.inverse() * ed.emb_to[x].inverse());
            }
        }
    }
    return p;
}

std::string presentation_to_text(const GraphOfGroups& g, const FundamentalPresentation& p) {
    std::ostringstream os;
    os << "presentation of pi1(" << g.name << ")\n";
    os << "subtree:";
    if (p.subtree.empty()) os << " (empty)";
    for (int e : p.subtree) os << ' ' << g.edges[static_cast<size_t>(e)].id;
    os << '\n';
    os << "generators:";
    for (int v : g.vertices_sorted())
        for (int s : g.vertices[static_cast<size_t>(v)].oracle.gens) os << ' ' << g.symbols.name(s);
    os << '\n';
    os << "edge letters:";
    if (p.letters.empty()) os << " (none)";
    for (int e : p.letters) os << ' ' << g.edges[static_cast<size_t>(e)].id;
    os << '\n';
    os << "relators:\n";
    if (p.relators.empty()) os << "  (none)\n";
    for (const Word& r : p.relators) os << "  " << format_word(r, g.symbols) << '\n';
    return os.str();
}

}  // namespace gog
