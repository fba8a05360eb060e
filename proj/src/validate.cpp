#include <algorithm>
#include <sstream>

#include "gog/graph.hpp"

namespace gog {

namespace {

// Combined status over many sub-checks: any No wins, else any Unknown.
struct Agg {
    Tri status = Tri::Yes;
    std::string detail;
    void add(Tri t, const std::string& what) {
        if (t == Tri::Yes) return;
        if (t == Tri::No && status != Tri::No) {
            status = Tri::No;
            detail = what;
        } else if (t == Tri::Unknown && status == Tri::Yes) {
            status = Tri::Unknown;
            detail = what;
        }
    }
};

Tri edge_embedding_ok(const GraphOfGroups& g, int ei, bool to_side, std::string* why) {
    const EdgeData& e = g.edges[static_cast<size_t>(ei)];
    const std::vector<Word>& imgs = to_side ? e.emb_to : e.emb_from;
    const VertexData& v = g.vertices[static_cast<size_t>(to_side ? e.to : e.from)];
    const char* side = to_side ? "to" : "from";
    if (imgs.size() != e.oracle.gens.size()) {
        *why = "edge " + e.id + ": emb_" + side + " must list one word per edge generator";
        return Tri::No;
    }
    Tri all = Tri::Yes;
    // Relators of the edge group must map to relations of the vertex group.
    for (const Word& r : e.oracle.defining_relators(g.symbols)) {
        Word img;
        for (const Letter& l : r.letters()) {
            int gi = -1;
            for (size_t k = 0; k < e.oracle.gens.size(); ++k)
                if (e.oracle.gens[k] == l.sym) gi = static_cast<int>(k);
            img.append(imgs[static_cast<size_t>(gi)].pow(l.exp));
        }
        Tri t = v.oracle.trivial(img);
        if (t != Tri::Yes) {
            *why = "edge " + e.id + " emb_" + side + ": relator image not trivial";
            all = tri_and(all, t == Tri::No ? Tri::No : Tri::Unknown);
            if (t == Tri::No) return Tri::No;
        }
    }
    // Cyclic edge groups: the image must be nontrivial of infinite order.
    if (e.oracle.gens.size() == 1) {
        Tri inf = v.oracle.infinite_order(imgs[0]);
        if (inf != Tri::Yes) {
            *why = "edge " + e.id + " emb_" + side + ": image must have infinite order";
            all = tri_and(all, inf);
        }
    }
    // Abelian edge into abelian vertex: injectivity is a lattice kernel check.
    if (e.oracle.kind == OracleKind::Abelian && v.oracle.kind == OracleKind::Abelian &&
        e.oracle.gens.size() >= 2) {
        bool tf = true;
        for (long long d : e.oracle.moduli)
            if (d >= 2) tf = false;
        if (tf) {
            int k = v.oracle.rank();
            int extra = 0;
            for (long long d : v.oracle.moduli)
                if (d >= 1) ++extra;
            IntMat m(k, static_cast<int>(imgs.size()) + extra);
            for (size_t j = 0; j < imgs.size(); ++j) {
                std::vector<long long> vec = v.oracle.exponent_vector(v.oracle.reduce(imgs[j]));
                for (int i = 0; i < k; ++i) m.at(i, static_cast<int>(j)) = vec[static_cast<size_t>(i)];
            }
            int c = static_cast<int>(imgs.size());
            for (int i = 0; i < k; ++i)
                if (v.oracle.moduli[static_cast<size_t>(i)] >= 1)
                    m.at(i, c++) = v.oracle.moduli[static_cast<size_t>(i)];
            // Kernel intersected with the first |imgs| coordinates must vanish.
            for (const auto& kv : integer_kernel(m)) {
                bool zero = true;
                for (size_t j = 0; j < imgs.size(); ++j)
                    if (kv[j] != 0) zero = false;
                if (!zero) {
                    *why = "edge " + e.id + " emb_" + side + ": not injective";
                    return Tri::No;
                }
            }
        }
    }
    return all;
}

}  // namespace

ValidationReport validate(const GraphOfGroups& g) {
    ValidationReport rep;

    rep.entries.push_back({"connectivity", g.connected() ? Tri::Yes : Tri::No,
                           g.connected() ? "" : "graph is not connected"});

    {
        Agg a;
        std::string why;
        for (size_t e = 0; e < g.edges.size(); ++e) {
            a.add(edge_embedding_ok(g, static_cast<int>(e), false, &why), why);
            a.add(edge_embedding_ok(g, static_cast<int>(e), true, &why), why);
        }
        rep.entries.push_back({"embeddings", a.status, a.detail});
    }

    {
        // Minimality: no terminal vertex group equals its edge-group image.
        Agg a;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            std::vector<EdgeEnd> ends = g.ends_at(static_cast<int>(v));
            if (ends.size() != 1) continue;
            Tri onto = end_onto(g, ends[0]);
            if (onto == Tri::Yes)
                a.add(Tri::No, "terminal vertex " + g.vertices[v].id +
                                   " equals its incident edge-group image");
            else if (onto == Tri::Unknown)
                a.add(Tri::Unknown, "properness undecided at terminal vertex " + g.vertices[v].id);
        }
        rep.entries.push_back({"minimality", a.status, a.detail});
    }

    {
        // Mapping torus: a topological circle with every inclusion onto.
        bool circle = !g.vertices.empty() && g.edges.size() == g.vertices.size() && g.connected();
        if (circle)
            for (size_t v = 0; v < g.vertices.size() && circle; ++v)
                if (g.degree(static_cast<int>(v)) != 2) circle = false;
        Tri status = Tri::Yes;  // pass = not a mapping torus
        std::string detail = "no";
        if (circle) {
            Tri all_onto = Tri::Yes;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                all_onto = tri_and(all_onto, end_onto(g, {static_cast<int>(e), false}));
                all_onto = tri_and(all_onto, end_onto(g, {static_cast<int>(e), true}));
            }
            if (all_onto == Tri::Yes) {
                status = Tri::No;
                detail = "yes: circle with all edge-to-vertex inclusions onto";
            } else if (all_onto == Tri::Unknown) {
                status = Tri::Unknown;
                detail = "circle; ontoness undecided";
            }
        }
        rep.entries.push_back({"mapping-torus", status, detail});
    }

    {
        Agg a;
        for (const VertexData& v : g.vertices) {
            if (v.vclass != VertexClass::Orbifold) continue;
            if (!v.signature) {
                a.add(Tri::No, "orbifold vertex " + v.id + " lacks a signature");
                continue;
            }
            const OrbifoldSignature& s = *v.signature;
            if (s.boundary < 1)
                a.add(Tri::No, "orbifold vertex " + v.id + " must have boundary");
            if (s.euler() >= 0)
                a.add(Tri::No, "orbifold vertex " + v.id + " has non-negative Euler characteristic");
            if (v.oracle.kind != OracleKind::Free ||
                v.oracle.rank() != static_cast<int>(s.surface_rank())) {
                a.add(Tri::No, "orbifold vertex " + v.id + " oracle must be free of rank " +
                                   std::to_string(s.surface_rank()));
                continue;
            }
            if (static_cast<long long>(v.boundary_words.size()) != s.boundary) {
                a.add(Tri::No, "orbifold vertex " + v.id + ": boundary word count mismatch");
                continue;
            }
            for (const Word& b : v.boundary_words)
                if (v.oracle.reduce(b).empty())
                    a.add(Tri::No, "orbifold vertex " + v.id + ": trivial boundary word");
            if (s.orientable) {
                // Product of boundary words in order = product of commutators of
                // the standard generators.
                Word prod;
                for (const Word& b : v.boundary_words) prod.append(b);
                Word comm;
                for (long long i = 0; i < s.genus; ++i)
                    comm.append(commutator(Word::letter(v.oracle.gens[static_cast<size_t>(2 * i)]),
                                           Word::letter(v.oracle.gens[static_cast<size_t>(2 * i + 1)])));
                if (v.oracle.equal(prod, comm) != Tri::Yes)
                    a.add(Tri::No, "orbifold vertex " + v.id +
                                       ": boundary product does not match the surface relator");
            }
        }
        rep.entries.push_back({"orbifold-signatures", a.status, a.detail});
    }

    {
        // Declared center flags must match recomputed ones on exact oracles;
        // presentation oracles on elementary vertices and edges need a flag.
        Agg a;
        for (const VertexData& v : g.vertices) {
            Tri computed = v.oracle.center_infinite();
            if (v.center_flag && computed != Tri::Unknown) {
                bool declared = *v.center_flag;
                if ((computed == Tri::Yes) != declared)
                    a.add(Tri::No, "vertex " + v.id + ": declared center=" +
                                       (declared ? "infinite" : "finite") +
                                       " contradicts the oracle");
            }
            if (v.vclass == VertexClass::Elementary && computed == Tri::Unknown && !v.center_flag)
                a.add(Tri::Unknown, "vertex " + v.id + ": center flag required");
        }
        for (const EdgeData& e : g.edges) {
            Tri computed = e.oracle.center_infinite();
            if (e.center_flag && computed != Tri::Unknown) {
                bool declared = *e.center_flag;
                if ((computed == Tri::Yes) != declared)
                    a.add(Tri::No, "edge " + e.id + ": declared center flag contradicts the oracle");
            }
            if (computed == Tri::Unknown && !e.center_flag)
                a.add(Tri::Unknown, "edge " + e.id + ": center flag required");
        }
        rep.entries.push_back({"center-flags", a.status, a.detail});
    }

    {
        // JSJ coherence: an infinite-center elementary vertex only meets edges
        // whose group has infinite center (finite-index images inherit it).
        Agg a;
        bool shaped = true;
        for (const EdgeData& e : g.edges) {
            bool fe = g.vertices[static_cast<size_t>(e.from)].vclass == VertexClass::Elementary;
            bool te = g.vertices[static_cast<size_t>(e.to)].vclass == VertexClass::Elementary;
            if (fe == te) shaped = false;
        }
        if (!shaped) {
            rep.entries.push_back({"jsj-coherence", Tri::Yes, "not JSJ-shaped; skipped"});
        } else {
            for (size_t v = 0; v < g.vertices.size(); ++v) {
                if (g.vertices[v].vclass != VertexClass::Elementary) continue;
                if (g.vertex_center_infinite(static_cast<int>(v)) != Tri::Yes) continue;
                for (const EdgeEnd& e : g.ends_at(static_cast<int>(v))) {
                    Tri t = g.edge_center_infinite(e.edge);
                    if (t == Tri::No)
                        a.add(Tri::No, "edge " + g.edges[static_cast<size_t>(e.edge)].id +
                                           " has finite center at infinite-center vertex " +
                                           g.vertices[v].id);
                    else if (t == Tri::Unknown)
                        a.add(Tri::Unknown, "edge center flag unresolved");
                }
            }
            rep.entries.push_back({"jsj-coherence", a.status, a.detail});
        }
    }

    return rep;
}

}  // namespace gog
