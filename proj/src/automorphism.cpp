#include "gog/automorphism.hpp"

#include <algorithm>
#include <queue>

namespace gog {

namespace {

// Substitute images of vertex generators into a word over one vertex group.
Word substitute_vertex(const std::vector<int>& gens, const std::vector<Word>& images,
                       const Word& w) {
    Word out;
    for (const Letter& l : w.letters()) {
        int gi = -1;
        for (size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == l.sym) gi = static_cast<int>(k);
        if (gi < 0) throw DomainError("substitution: foreign generator");
        out.append(images[static_cast<size_t>(gi)].pow(l.exp));
    }
    return out;
}

void audit_relators(const GraphOfGroups& g, const FundamentalPresentation& p,
                    const Automorphism& a) {
    for (const Word& r : p.relators) {
        Word img;
        for (const Letter& l : r.letters()) img.append(a.image_of(l.sym).pow(l.exp));
        if (word_trivial(g, p, img) == Tri::No)
            throw DomainError("relator audit failed: construction does not preserve relations");
    }
}

// Certify that z lies in the centralizer of the edge image at `end`.
void require_centralizing(const GraphOfGroups& g, EdgeEnd end, const Word& z) {
    const VertexData& v = g.vertices[static_cast<size_t>(g.end_vertex(end))];
    for (const Word& w : g.end_images(end)) {
        Tri t = v.oracle.commute(z, w);
        if (t == Tri::No)
            throw DomainError("twist element does not centralize the edge image at vertex " +
                              v.id);
        if (t == Tri::Unknown)
            throw DomainError("cannot certify the centralizing condition at vertex " + v.id);
    }
}

struct ExtensionBuild {
    std::vector<Word> conj;       // c_v per vertex, rooted at the data vertex
    std::map<int, Word> images;
};

ExtensionBuild build_extension(const GraphOfGroups& g, const FundamentalPresentation& p,
                               const VertexAutomorphismData& data) {
    ExtensionBuild b;
    b.conj.assign(g.vertices.size(), Word());
    // Propagate corrections along the subtree, rooted at the extension vertex:
    // crossing D from a to b multiplies by g(a-end) g(b-end)^-1.
    {
        std::vector<bool> seen(g.vertices.size(), false);
        seen[static_cast<size_t>(data.vertex)] = true;
        std::queue<int> q;
        q.push(data.vertex);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int e : p.subtree) {
                const EdgeData& ed = g.edges[static_cast<size_t>(e)];
                int other;
                if (ed.from == a) other = ed.to;
                else if (ed.to == a) other = ed.from;
                else continue;
                if (seen[static_cast<size_t>(other)]) continue;
                seen[static_cast<size_t>(other)] = true;
                EdgeEnd a_end{e, ed.to == a};
                EdgeEnd b_end{e, ed.to == other};
                Word ga = g.end_vertex(a_end) == data.vertex && data.conjugators.count(a_end)
                              ? data.conjugators.at(a_end)
                              : Word();
                Word gb = g.end_vertex(b_end) == data.vertex && data.conjugators.count(b_end)
                              ? data.conjugators.at(b_end)
                              : Word();
                b.conj[static_cast<size_t>(other)] =
                    b.conj[static_cast<size_t>(a)] * ga * gb.inverse();
                q.push(other);
            }
        }
    }

    for (size_t v = 0; v < g.vertices.size(); ++v) {
        const VertexData& vd = g.vertices[v];
        const Word& c = b.conj[v];
        for (size_t i = 0; i < vd.oracle.gens.size(); ++i) {
            int sym = vd.oracle.gens[i];
            Word base = static_cast<int>(v) == data.vertex
                            ? data.beta[i]
                            : Word::letter(sym);
            b.images[sym] = c.empty() ? base : c * base * c.inverse();
        }
    }
    for (int e : p.letters) {
        const EdgeData& ed = g.edges[static_cast<size_t>(e)];
        EdgeEnd from_end{e, false}, to_end{e, true};
        Word gf = g.end_vertex(from_end) == data.vertex && data.conjugators.count(from_end)
                      ? data.conjugators.at(from_end)
                      : Word();
        Word gt = g.end_vertex(to_end) == data.vertex && data.conjugators.count(to_end)
                      ? data.conjugators.at(to_end)
                      : Word();
        b.images[ed.letter_sym] = b.conj[static_cast<size_t>(ed.to)] * gt *
                                  Word::letter(ed.letter_sym) * gf.inverse() *
                                  b.conj[static_cast<size_t>(ed.from)].inverse();
    }
    return b;
}

}  // namespace

const Word& Automorphism::image_of(int sym) const {
    auto it = images.find(sym);
    if (it == images.end()) throw DomainError("automorphism: no image for generator");
    return it->second;
}

bool Automorphism::is_identity_on_generators() const {
    for (const auto& [sym, w] : images)
        if (!(w == Word::letter(sym))) return false;
    return true;
}

Automorphism identity_automorphism(const GraphOfGroups& g, const FundamentalPresentation& p) {
    Automorphism a;
    for (int sym : p.generators) a.images[sym] = Word::letter(sym);
    a.prov = InnerProv{Word()};
    a.vertex_conj.assign(g.vertices.size(), Word());
    return a;
}

Automorphism inner_automorphism(const GraphOfGroups& g, const FundamentalPresentation& p,
                                const Word& m) {
    Automorphism a;
    for (int sym : p.generators) a.images[sym] = m * Word::letter(sym) * m.inverse();
    a.prov = InnerProv{m};
    a.vertex_conj.assign(g.vertices.size(), m);
    return a;
}

Automorphism twist(const GraphOfGroups& g, const FundamentalPresentation& p, EdgeEnd end,
                   const Word& z) {
    require_centralizing(g, end, z);
    VertexAutomorphismData data;
    data.vertex = g.end_vertex(end);
    const VertexData& vd = g.vertices[static_cast<size_t>(data.vertex)];
    for (int sym : vd.oracle.gens) data.beta.push_back(Word::letter(sym));
    data.conjugators[end] = z;
    ExtensionBuild b = build_extension(g, p, data);
    Automorphism a;
    a.images = std::move(b.images);
    a.vertex_conj = std::move(b.conj);
    a.prov = TwistProv{end, z};
    audit_relators(g, p, a);
    return a;
}

Automorphism bitwist(const GraphOfGroups& g, const FundamentalPresentation& p, int edge,
                     const Word& z_from, const Word& z_to) {
    const EdgeData& ed = g.edges[static_cast<size_t>(edge)];
    EdgeEnd from_end{edge, false}, to_end{edge, true};

    // Both elements must normalize the edge image and act on the edge group in
    // the same way.
    std::vector<Word> action_from, action_to;
    for (size_t i = 0; i < ed.oracle.gens.size(); ++i) {
        MemberResult mf =
            edge_member(g, from_end, conjugate(z_from, g.end_images(from_end)[i]));
        MemberResult mt = edge_member(g, to_end, conjugate(z_to, g.end_images(to_end)[i]));
        if (mf.in == Tri::No || mt.in == Tri::No)
            throw DomainError("bitwist element does not normalize the edge image of " + ed.id);
        if (mf.in == Tri::Unknown || mt.in == Tri::Unknown)
            throw DomainError("cannot certify the normalizing condition for edge " + ed.id);
        action_from.push_back(mf.edge_elt);
        action_to.push_back(mt.edge_elt);
    }
    for (size_t i = 0; i < action_from.size(); ++i) {
        Tri same = ed.oracle.equal(action_from[i], action_to[i]);
        if (same == Tri::No)
            throw DomainError("bitwist elements act differently on the edge group of " + ed.id);
        if (same == Tri::Unknown)
            throw DomainError("cannot certify the same-action condition for edge " + ed.id);
    }

    Automorphism a;
    a.vertex_conj.assign(g.vertices.size(), Word());
    if (!p.in_subtree[static_cast<size_t>(edge)]) {
        for (int sym : p.generators) a.images[sym] = Word::letter(sym);
        a.images[ed.letter_sym] =
            z_to * Word::letter(ed.letter_sym) * z_from.inverse();
    } else {
        // Conjugation by z_from on the from-side of the split subtree and by
        // z_to on the other side.
        std::vector<bool> from_side(g.vertices.size(), false);
        {
            std::vector<bool> seen(g.vertices.size(), false);
            std::queue<int> q;
            q.push(ed.from);
            seen[static_cast<size_t>(ed.from)] = true;
            from_side[static_cast<size_t>(ed.from)] = true;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int e2 : p.subtree) {
                    if (e2 == edge) continue;
                    const EdgeData& e2d = g.edges[static_cast<size_t>(e2)];
                    int other;
                    if (e2d.from == v) other = e2d.to;
                    else if (e2d.to == v) other = e2d.from;
                    else continue;
                    if (seen[static_cast<size_t>(other)]) continue;
                    seen[static_cast<size_t>(other)] = true;
                    from_side[static_cast<size_t>(other)] = true;
                    q.push(other);
                }
            }
        }
        for (size_t v = 0; v < g.vertices.size(); ++v)
            a.vertex_conj[v] = from_side[v] ? z_from : z_to;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            const Word& c = a.vertex_conj[v];
            for (int sym : g.vertices[v].oracle.gens)
                a.images[sym] = c * Word::letter(sym) * c.inverse();
        }
        for (int e2 : p.letters) {
            const EdgeData& e2d = g.edges[static_cast<size_t>(e2)];
            a.images[e2d.letter_sym] = a.vertex_conj[static_cast<size_t>(e2d.to)] *
                                       Word::letter(e2d.letter_sym) *
                                       a.vertex_conj[static_cast<size_t>(e2d.from)].inverse();
        }
    }
    a.prov = BitwistProv{edge, z_from, z_to};
    audit_relators(g, p, a);
    return a;
}

Automorphism extend_vertex_automorphism(const GraphOfGroups& g, const FundamentalPresentation& p,
                                        const VertexAutomorphismData& data) {
    const VertexData& vd = g.vertices[static_cast<size_t>(data.vertex)];
    if (data.beta.size() != vd.oracle.gens.size())
        throw DomainError("extension: beta must map every generator of " + vd.id);
    for (const auto& [end, w] : data.conjugators) {
        (void)w;
        if (g.end_vertex(end) != data.vertex)
            throw DomainError("extension: conjugator given for an edge end not at " + vd.id);
    }
    // beta must define an endomorphism of G_v ...
    for (const Word& r : vd.oracle.defining_relators(g.symbols)) {
        Word img = substitute_vertex(vd.oracle.gens, data.beta, r);
        if (vd.oracle.trivial(img) == Tri::No)
            throw DomainError("extension: beta does not preserve the relations of " + vd.id);
    }
    // ... acting on each incident edge image as conjugation by g_e.
    for (const EdgeEnd& end : g.ends_at(data.vertex)) {
        auto it = data.conjugators.find(end);
        Word ge = it == data.conjugators.end() ? Word() : it->second;
        for (const Word& img : g.end_images(end)) {
            Word lhs = substitute_vertex(vd.oracle.gens, data.beta, img);
            Tri t = vd.oracle.equal(lhs, conjugate(ge, img));
            if (t == Tri::No)
                throw DomainError("extension: beta(alpha_e(x)) != g_e alpha_e(x) g_e^-1 at edge " +
                                  g.edges[static_cast<size_t>(end.edge)].id);
            if (t == Tri::Unknown)
                throw DomainError("extension: cannot certify the compatibility condition at " +
                                  vd.id);
        }
    }
    ExtensionBuild b = build_extension(g, p, data);
    Automorphism a;
    a.images = std::move(b.images);
    a.vertex_conj = std::move(b.conj);
    a.prov = ExtensionProv{data};
    audit_relators(g, p, a);
    return a;
}

Word apply(const GraphOfGroups& g, const FundamentalPresentation& p, const Automorphism& a,
           const Word& w) {
    Word img;
    for (const Letter& l : w.letters()) img.append(a.image_of(l.sym).pow(l.exp));
    return normal_form(g, p, img);
}

Automorphism compose(const GraphOfGroups& g, const FundamentalPresentation& p,
                     const Automorphism& a, const Automorphism& b) {
    Automorphism c;
    for (const auto& [sym, w] : b.images) {
        Word img;
        for (const Letter& l : w.letters()) img.append(a.image_of(l.sym).pow(l.exp));
        c.images[sym] = normal_form(g, p, img);
    }
    c.vertex_conj.assign(g.vertices.size(), Word());
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        Word img;
        for (const Letter& l : b.vertex_conj[v].letters()) img.append(a.image_of(l.sym).pow(l.exp));
        c.vertex_conj[v] = normal_form(g, p, img * a.vertex_conj[v]);
    }
    c.prov = CompositeProv{std::make_shared<Automorphism>(a), std::make_shared<Automorphism>(b)};
    return c;
}

Automorphism inverse_by_provenance(const GraphOfGroups& g, const FundamentalPresentation& p,
                                   const Automorphism& a) {
    if (const auto* t = std::get_if<TwistProv>(&a.prov))
        return twist(g, p, t->end, t->z.inverse());
    if (const auto* bw = std::get_if<BitwistProv>(&a.prov))
        return bitwist(g, p, bw->edge, bw->z_from.inverse(), bw->z_to.inverse());
    if (const auto* in = std::get_if<InnerProv>(&a.prov))
        return inner_automorphism(g, p, in->m.inverse());
    if (const auto* ex = std::get_if<ExtensionProv>(&a.prov)) {
        if (!ex->data.beta_inverse)
            throw DomainError("extension inverse requires a supplied beta inverse");
        const VertexData& vd = g.vertices[static_cast<size_t>(ex->data.vertex)];
        VertexAutomorphismData inv;
        inv.vertex = ex->data.vertex;
        inv.beta = *ex->data.beta_inverse;
        inv.beta_inverse = ex->data.beta;
        for (const auto& [end, ge] : ex->data.conjugators)
            inv.conjugators[end] =
                substitute_vertex(vd.oracle.gens, *ex->data.beta_inverse, ge.inverse());
        return extend_vertex_automorphism(g, p, inv);
    }
    const auto& comp = std::get<CompositeProv>(a.prov);
    return compose(g, p, inverse_by_provenance(g, p, *comp.second),
                   inverse_by_provenance(g, p, *comp.first));
}

Tri is_inner_with_witness(const GraphOfGroups& g, const FundamentalPresentation& p,
                          const Automorphism& a, const Word& m) {
    Tri all = Tri::Yes;
    for (int sym : p.generators) {
        Tri t = words_equal(g, p, a.image_of(sym), m * Word::letter(sym) * m.inverse());
        if (t == Tri::No) return Tri::No;
        all = tri_and(all, t);
    }
    return all;
}

InnerSearch is_inner_bounded(const GraphOfGroups& g, const FundamentalPresentation& p,
                             const Automorphism& a, long long max_len) {
    InnerSearch out;
    std::vector<Word> frontier{Word()};
    for (long long depth = 0; depth <= max_len; ++depth) {
        for (const Word& m : frontier)
            if (is_inner_with_witness(g, p, a, m) == Tri::Yes) {
                out.found = Tri::Yes;
                out.witness = m;
                return out;
            }
        if (depth == max_len) break;
        std::vector<Word> next;
        for (const Word& m : frontier)
            for (int sym : p.generators)
                for (int s : {1, -1}) {
                    Word w = m * Word::letter(sym, s);
                    if (w.length() == m.length() + 1) next.push_back(w);
                }
        frontier = std::move(next);
    }
    out.found = Tri::Unknown;
    return out;
}

Tri out_equal(const GraphOfGroups& g, const FundamentalPresentation& p, const Automorphism& a,
              const Automorphism& b, long long max_len) {
    auto differ_by = [&](const Word& m) {
        Tri all = Tri::Yes;
        for (int sym : p.generators) {
            Tri t = words_equal(g, p, a.image_of(sym),
                                m * b.image_of(sym) * m.inverse());
            if (t == Tri::No) return Tri::No;
            all = tri_and(all, t);
        }
        return all;
    };
    if (differ_by(Word()) == Tri::Yes) return Tri::Yes;
    std::vector<Word> frontier{Word()};
    for (long long depth = 0; depth < max_len; ++depth) {
        std::vector<Word> next;
        for (const Word& m : frontier)
            for (int sym : p.generators)
                for (int s : {1, -1}) {
                    Word w = m * Word::letter(sym, s);
                    if (w.length() == m.length() + 1) next.push_back(w);
                }
        for (const Word& m : next)
            if (differ_by(m) == Tri::Yes) return Tri::Yes;
        frontier = std::move(next);
    }
    return Tri::Unknown;
}

bool check_vertex_relation(const GraphOfGroups& g, const FundamentalPresentation& p, int vertex,
                           const Word& z) {
    const VertexData& vd = g.vertices[static_cast<size_t>(vertex)];
    for (int sym : vd.oracle.gens) {
        Tri t = vd.oracle.commute(z, Word::letter(sym));
        if (t != Tri::Yes)
            throw DomainError("cannot certify that the element is central in " + vd.id);
    }
    Automorphism acc = identity_automorphism(g, p);
    for (const EdgeEnd& end : g.ends_at(vertex)) acc = compose(g, p, twist(g, p, end, z), acc);
    return is_inner_with_witness(g, p, acc, z) == Tri::Yes;
}

bool check_edge_relation(const GraphOfGroups& g, const FundamentalPresentation& p, int edge,
                         const Word& z) {
    const EdgeData& ed = g.edges[static_cast<size_t>(edge)];
    for (int sym : ed.oracle.gens) {
        Tri t = ed.oracle.commute(z, Word::letter(sym));
        if (t != Tri::Yes)
            throw DomainError("cannot certify that the element is central in edge group " + ed.id);
    }
    Word wf, wt;
    for (const Letter& l : z.letters()) {
        int gi = -1;
        for (size_t k = 0; k < ed.oracle.gens.size(); ++k)
            if (ed.oracle.gens[k] == l.sym) gi = static_cast<int>(k);
        wf.append(ed.emb_from[static_cast<size_t>(gi)].pow(l.exp));
        wt.append(ed.emb_to[static_cast<size_t>(gi)].pow(l.exp));
    }
    Automorphism comp = compose(g, p, twist(g, p, {edge, true}, wt), twist(g, p, {edge, false}, wf));
    // Around a subtree edge the two images coincide in G and the composite is
    // global conjugation; around a stable letter it is the identity.
    Word witness = p.in_subtree[static_cast<size_t>(edge)] ? wf : Word();
    return is_inner_with_witness(g, p, comp, witness) == Tri::Yes;
}

RhoResult rho_restriction(const GraphOfGroups& g, const FundamentalPresentation& p,
                          const Automorphism& a, int vertex) {
    RhoResult out;
    const VertexData& vd = g.vertices[static_cast<size_t>(vertex)];
    std::vector<Word> candidates;
    if (!a.vertex_conj.empty()) {
        candidates.push_back(a.vertex_conj[static_cast<size_t>(vertex)]);
    } else {
        // No provenance: try the identity, then a common literal conjugator
        // read off the first image's normal form.
        candidates.push_back(Word());
        if (!vd.oracle.gens.empty()) {
            Word w0 = normal_form(g, p, a.image_of(vd.oracle.gens[0]));
            Word prefix;
            for (const Letter& l : w0.letters()) {
                long long n = l.exp > 0 ? l.exp : -l.exp;
                for (long long i = 0; i < n; ++i) {
                    prefix.append(l.sym, l.exp > 0 ? 1 : -1);
                    candidates.push_back(prefix);
                }
            }
        }
    }
    for (const Word& m : candidates) {
        std::vector<Word> images;
        bool good = true;
        for (int sym : vd.oracle.gens) {
            Word w = normal_form(g, p, m.inverse() * a.image_of(sym) * m);
            for (const Letter& l : w.letters()) {
                const SymbolInfo& si = g.symbols.info(l.sym);
                if (si.kind != SymKind::VertexGen || si.owner != vertex) {
                    good = false;
                    break;
                }
            }
            if (!good) break;
            images.push_back(w);
        }
        if (good) {
            out.ok = Tri::Yes;
            out.images = images;
            out.conjugator = m;
            return out;
        }
    }
    out.ok = Tri::Unknown;
    out.reason = "images do not lie in a recognized conjugate of the vertex group";
    return out;
}

}  // namespace gog
