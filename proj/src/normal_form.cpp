#include "gog/normal_form.hpp"

#include <algorithm>

namespace gog {

MemberResult edge_member(const GraphOfGroups& g, EdgeEnd end, const Word& u) {
    const EdgeData& ed = g.edges[static_cast<size_t>(end.edge)];
    const VertexData& vd = g.vertices[static_cast<size_t>(g.end_vertex(end))];
    MemberResult r;
    GroupOracle::Member m = vd.oracle.member_of_subgroup(g.end_images(end), u);
    r.in = m.in;
    if (m.in == Tri::Yes) {
        Word elt;
        for (size_t i = 0; i < ed.oracle.gens.size(); ++i)
            if (m.coords[i] != 0) elt.append(ed.oracle.gens[i], m.coords[i]);
        r.edge_elt = ed.oracle.reduce(elt);
    }
    return r;
}

TransportResult edge_transport(const GraphOfGroups& g, EdgeEnd end, const Word& u) {
    TransportResult t;
    MemberResult m = edge_member(g, end, u);
    t.in = m.in;
    if (m.in != Tri::Yes) return t;
    const EdgeData& ed = g.edges[static_cast<size_t>(end.edge)];
    EdgeEnd other{end.edge, !end.at_to};
    const std::vector<Word>& imgs = g.end_images(other);
    Word out;
    for (const Letter& l : m.edge_elt.letters()) {
        int gi = -1;
        for (size_t k = 0; k < ed.oracle.gens.size(); ++k)
            if (ed.oracle.gens[k] == l.sym) gi = static_cast<int>(k);
        out.append(imgs[static_cast<size_t>(gi)].pow(l.exp));
    }
    const VertexData& vd = g.vertices[static_cast<size_t>(g.end_vertex(other))];
    t.word = vd.oracle.reduce(out);
    return t;
}

namespace {

// A loop at the root in the path group: alternating vertex syllables and
// s_E^(+-1) crossings, every edge of the graph carrying a letter. A crossing
// with sign +1 runs from to(E) into from(E), matching the defining relation
// s_E emb_from(x) s_E^-1 = emb_to(x).
struct PathWord {
    std::vector<Word> syllables;                // size = crossings.size() + 1
    std::vector<std::pair<int, int>> crossings;  // (edge index, +-1)
    std::vector<int> at;                         // vertex per syllable
};

struct Lifter {
    const GraphOfGroups& g;
    const FundamentalPresentation& p;
    PathWord pw;
    int cur;

    explicit Lifter(const GraphOfGroups& g_, const FundamentalPresentation& p_)
        : g(g_), p(p_), cur(p_.root) {
        pw.syllables.emplace_back();
        pw.at.push_back(cur);
    }

    void cross(int edge, int sign) {
        const EdgeData& ed = g.edges[static_cast<size_t>(edge)];
        pw.crossings.push_back({edge, sign});
        cur = sign > 0 ? ed.from : ed.to;
        pw.syllables.emplace_back();
        pw.at.push_back(cur);
    }

    // Cross one subtree edge from vertex a toward vertex b.
    void step(int a, int b, int edge) {
        const EdgeData& ed = g.edges[static_cast<size_t>(edge)];
        if (ed.to == a && ed.from == b) cross(edge, +1);
        else if (ed.from == a && ed.to == b) cross(edge, -1);
        else throw DomainError("internal: bad subtree step");
    }

    void navigate(int target) {
        if (cur == target) return;
        // Paths to the root, then strip the common tail.
        auto chain = [&](int v) {
            std::vector<int> c{v};
            while (p.parent[static_cast<size_t>(c.back())] >= 0)
                c.push_back(p.parent[static_cast<size_t>(c.back())]);
            return c;
        };
        std::vector<int> up = chain(cur), down = chain(target);
        size_t i = up.size(), j = down.size();
        while (i > 1 && j > 1 && up[i - 2] == down[j - 2]) {
            --i;
            --j;
        }
        for (size_t k = 0; k + 1 < i; ++k)
            step(up[k], up[k + 1], p.parent_edge[static_cast<size_t>(up[k])]);
        for (size_t k = j - 1; k >= 1; --k)
            step(down[k], down[k - 1], p.parent_edge[static_cast<size_t>(down[k - 1])]);
        if (cur != target) throw DomainError("internal: navigation failed");
    }

    void letter(int sym, long long exp) {
        const SymbolInfo& si = g.symbols.info(sym);
        if (si.kind == SymKind::VertexGen) {
            navigate(si.owner);
            pw.syllables.back().append(sym, exp);
            return;
        }
        if (si.kind == SymKind::EdgeLetter) {
            int e = si.owner;
            if (p.in_subtree[static_cast<size_t>(e)])
                throw DomainError("word uses letter of subtree edge '" +
                                  g.edges[static_cast<size_t>(e)].id + "'");
            const EdgeData& ed = g.edges[static_cast<size_t>(e)];
            long long n = exp > 0 ? exp : -exp;
            for (long long k = 0; k < n; ++k) {
                if (exp > 0) {
                    navigate(ed.to);
                    cross(e, +1);
                } else {
                    navigate(ed.from);
                    cross(e, -1);
                }
            }
            return;
        }
        throw DomainError("edge-group generator '" + si.name +
                          "' is not a generator of the fundamental group");
    }
};

void reduce_syllables(const GraphOfGroups& g, PathWord& pw) {
    for (size_t i = 0; i < pw.syllables.size(); ++i)
        pw.syllables[i] =
            g.vertices[static_cast<size_t>(pw.at[i])].oracle.reduce(pw.syllables[i]);
}

}  // namespace

NormalFormResult normal_form_full(const GraphOfGroups& g, const FundamentalPresentation& p,
                                  const Word& w) {
    Lifter lift(g, p);
    for (const Letter& l : w.letters()) lift.letter(l.sym, l.exp);
    lift.navigate(p.root);
    PathWord pw = std::move(lift.pw);

    NormalFormResult res;
    reduce_syllables(g, pw);
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i + 1 < pw.crossings.size(); ++i) {
            auto [e1, s1] = pw.crossings[i];
            auto [e2, s2] = pw.crossings[i + 1];
            if (e1 != e2 || s1 != -s2) continue;
            // s_E u s_E^-1 with u at the from-end, or the mirror image.
            EdgeEnd end{e1, s1 < 0};
            TransportResult tr = edge_transport(g, end, pw.syllables[i + 1]);
            if (tr.in == Tri::Unknown) {
                res.approximate = true;
                continue;
            }
            if (tr.in == Tri::No) continue;
            Word merged = pw.syllables[i];
            merged.append(tr.word);
            merged.append(pw.syllables[i + 2]);
            merged = g.vertices[static_cast<size_t>(pw.at[i])].oracle.reduce(merged);
            pw.syllables.erase(pw.syllables.begin() + static_cast<long>(i) + 1,
                               pw.syllables.begin() + static_cast<long>(i) + 3);
            pw.at.erase(pw.at.begin() + static_cast<long>(i) + 1,
                        pw.at.begin() + static_cast<long>(i) + 3);
            pw.crossings.erase(pw.crossings.begin() + static_cast<long>(i),
                               pw.crossings.begin() + static_cast<long>(i) + 2);
            pw.syllables[i] = merged;
            progress = true;
            break;
        }
    }

    // Project back to presentation generators: subtree crossings vanish.
    Word out;
    for (size_t i = 0; i < pw.syllables.size(); ++i) {
        out.append(pw.syllables[i]);
        if (i < pw.crossings.size()) {
            auto [e, s] = pw.crossings[i];
            if (!p.in_subtree[static_cast<size_t>(e)])
                out.append(g.edges[static_cast<size_t>(e)].letter_sym, s);
        }
    }
    res.word = out;

    if (pw.crossings.empty()) {
        res.trivial = g.vertices[static_cast<size_t>(pw.at[0])].oracle.trivial(pw.syllables[0]);
        if (res.trivial == Tri::Yes) res.word = Word();
    } else {
        res.trivial = res.approximate ? Tri::Unknown : Tri::No;
    }
    return res;
}

Word normal_form(const GraphOfGroups& g, const FundamentalPresentation& p, const Word& w) {
    return normal_form_full(g, p, w).word;
}

Tri word_trivial(const GraphOfGroups& g, const FundamentalPresentation& p, const Word& w) {
    return normal_form_full(g, p, w).trivial;
}

Tri words_equal(const GraphOfGroups& g, const FundamentalPresentation& p, const Word& a,
                const Word& b) {
    if (a == b) return Tri::Yes;
    return word_trivial(g, p, a * b.inverse());
}

Word parse_presentation_word(const std::string& text, const GraphOfGroups& g,
                             const FundamentalPresentation& p) {
    return parse_word(text, g.symbols, [&](int sym) -> std::string {
        const SymbolInfo& si = g.symbols.info(sym);
        if (si.kind == SymKind::VertexGen) return "";
        if (si.kind == SymKind::EdgeLetter) {
            if (!p.in_subtree[static_cast<size_t>(si.owner)]) return "";
            return "is a subtree edge; it carries no stable letter";
        }
        return "is an edge-group generator, not a generator of the fundamental group";
    });
}

}  // namespace gog
