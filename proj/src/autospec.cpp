#include "gog/autospec.hpp"

#include <vector>

namespace gog {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Word vertex_word(const std::string& text, const GraphOfGroups& g, int vertex) {
    return parse_word(strip(text), g.symbols, [&](int sym) -> std::string {
        const SymbolInfo& si = g.symbols.info(sym);
        if (si.kind == SymKind::VertexGen && si.owner == vertex) return "";
        return "is not a generator of vertex " + g.vertices[static_cast<size_t>(vertex)].id;
    });
}

EdgeEnd parse_end(const std::string& text, const GraphOfGroups& g, bool* explicit_end) {
    std::string s = strip(text);
    EdgeEnd end;
    *explicit_end = false;
    std::string edge_id = s;
    auto at = s.find('@');
    if (at != std::string::npos) {
        edge_id = s.substr(0, at);
        std::string side = s.substr(at + 1);
        if (side == "from") end.at_to = false;
        else if (side == "to") end.at_to = true;
        else throw DomainError("edge end must be @from or @to in '" + s + "'");
        *explicit_end = true;
    }
    end.edge = g.edge_index(strip(edge_id));
    if (end.edge < 0) throw DomainError("unknown edge '" + edge_id + "'");
    return end;
}

Automorphism one_factor(const std::string& text, const GraphOfGroups& g,
                        const FundamentalPresentation& p) {
    std::string s = strip(text);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw DomainError("bad autospec factor '" + s + "'");
    std::string head = strip(s.substr(0, open));
    std::string inner = s.substr(open + 1, s.size() - open - 2);

    if (head == "twist") {
        std::vector<std::string> args = split_top(inner, ',');
        if (args.size() != 2) throw DomainError("twist(<edge>@<from|to>, <word>)");
        bool explicit_end = false;
        EdgeEnd end = parse_end(args[0], g, &explicit_end);
        if (!explicit_end) throw DomainError("twist needs an explicit end: <edge>@from or @to");
        Word z = vertex_word(args[1], g, g.end_vertex(end));
        return twist(g, p, end, z);
    }
    if (head == "bitwist") {
        std::vector<std::string> args = split_top(inner, ',');
        if (args.size() != 3) throw DomainError("bitwist(<edge>, <word@from>, <word@to>)");
        bool dummy = false;
        EdgeEnd end = parse_end(args[0], g, &dummy);
        const EdgeData& ed = g.edges[static_cast<size_t>(end.edge)];
        Word zf = vertex_word(args[1], g, ed.from);
        Word zt = vertex_word(args[2], g, ed.to);
        return bitwist(g, p, end.edge, zf, zt);
    }
    if (head == "inner") {
        Word m = parse_presentation_word(strip(inner), g, p);
        return inner_automorphism(g, p, m);
    }
    if (head == "extend") {
        std::vector<std::string> sections = split_top(inner, ';');
        if (sections.size() != 3)
            throw DomainError("extend(<vertex>; <gen>-><word>,...; <edge>:<word>,...)");
        VertexAutomorphismData data;
        data.vertex = g.vertex_index(strip(sections[0]));
        if (data.vertex < 0) throw DomainError("unknown vertex '" + strip(sections[0]) + "'");
        const VertexData& vd = g.vertices[static_cast<size_t>(data.vertex)];
        for (int sym : vd.oracle.gens) data.beta.push_back(Word::letter(sym));
        for (const std::string& item : split_top(sections[1], ',')) {
            if (strip(item).empty()) continue;
            auto arrow = item.find("->");
            if (arrow == std::string::npos)
                throw DomainError("gen image must be written <gen>-><word>");
            std::string gen = strip(item.substr(0, arrow));
            auto sym = g.symbols.find(gen);
            if (!sym) throw DomainError("unknown generator '" + gen + "'");
            int gi = -1;
            for (size_t k = 0; k < vd.oracle.gens.size(); ++k)
                if (vd.oracle.gens[k] == *sym) gi = static_cast<int>(k);
            if (gi < 0)
                throw DomainError("generator '" + gen + "' does not belong to vertex " + vd.id);
            data.beta[static_cast<size_t>(gi)] = vertex_word(item.substr(arrow + 2), g, data.vertex);
        }
        for (const std::string& item : split_top(sections[2], ',')) {
            if (strip(item).empty()) continue;
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw DomainError("edge conjugator must be written <edge>:<word>");
            bool explicit_end = false;
            EdgeEnd end = parse_end(item.substr(0, colon), g, &explicit_end);
            if (!explicit_end) {
                const EdgeData& ed = g.edges[static_cast<size_t>(end.edge)];
                bool at_from = ed.from == data.vertex;
                bool at_to = ed.to == data.vertex;
                if (at_from && at_to)
                    throw DomainError("edge '" + ed.id + "' is a loop; use @from or @to");
                if (!at_from && !at_to)
                    throw DomainError("edge '" + ed.id + "' is not incident to " + vd.id);
                end.at_to = at_to;
            }
            data.conjugators[end] = vertex_word(item.substr(colon + 1), g, data.vertex);
        }
        return extend_vertex_automorphism(g, p, data);
    }
    throw DomainError("unknown autospec head '" + head + "'");
}

}  // namespace

Automorphism parse_autospec(const std::string& text, const GraphOfGroups& g,
                            const FundamentalPresentation& p) {
    std::vector<std::string> nonempty;
    for (const std::string& f : split_top(text, ';'))
        if (!strip(f).empty()) nonempty.push_back(f);
    if (nonempty.empty()) return identity_automorphism(g, p);
    // Left-to-right: the first factor acts first.
    Automorphism acc = one_factor(nonempty[0], g, p);
    for (size_t i = 1; i < nonempty.size(); ++i)
        acc = compose(g, p, one_factor(nonempty[i], g, p), acc);
    return acc;
}

}  // namespace gog
