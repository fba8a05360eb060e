#include "gog/parse.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gog {

namespace {

struct RawLine {
    int number = 0;
    std::vector<std::string> tokens;
    std::vector<int> columns;  // 1-based start column per token
};

std::vector<RawLine> tokenize(const std::string& text) {
    std::vector<RawLine> out;
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        RawLine rl;
        rl.number = no;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            size_t j = i;
            while (j < line.size() && !isspace(static_cast<unsigned char>(line[j]))) ++j;
            rl.tokens.push_back(line.substr(i, j - i));
            rl.columns.push_back(static_cast<int>(i) + 1);
            i = j;
        }
        if (!rl.tokens.empty()) out.push_back(std::move(rl));
    }
    return out;
}

// key=value attributes; a token without '=' continues the previous value
// (words may contain spaces).
std::map<std::string, std::string> parse_attrs(const RawLine& rl, size_t start) {
    std::map<std::string, std::string> attrs;
    std::string current;
    for (size_t i = start; i < rl.tokens.size(); ++i) {
        const std::string& tok = rl.tokens[i];
        auto eq = tok.find('=');
        if (eq != std::string::npos && eq > 0) {
            current = tok.substr(0, eq);
            if (attrs.count(current))
                throw ParseError(rl.number, rl.columns[i], "duplicate attribute '" + current + "'");
            attrs[current] = tok.substr(eq + 1);
        } else {
            if (current.empty())
                throw ParseError(rl.number, rl.columns[i], "stray token '" + tok + "'");
            std::string& v = attrs[current];
            if (!v.empty()) v += ' ';
            v += tok;
        }
    }
    return attrs;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
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

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long long parse_int(const std::string& s, const RawLine& rl) {
    try {
        size_t used = 0;
        long long v = std::stoll(strip(s), &used);
        if (used != strip(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(rl.number, 1, "bad integer '" + s + "'");
    }
}

std::vector<std::string> default_names(const std::string& owner, int count, bool zsemiz) {
    std::vector<std::string> names;
    int lattice = zsemiz ? count - 1 : count;
    for (int i = 1; i <= lattice; ++i) names.push_back(owner + "_" + std::to_string(i));
    if (zsemiz) names.push_back(owner + "_t");
    return names;
}

struct OracleSpec {
    std::string head;                 // free | abelian | zsemiz | presentation
    std::vector<std::string> parts;   // ';'-separated argument sections
};

OracleSpec parse_oracle_spec(const std::string& spec, const RawLine& rl) {
    std::string s = strip(spec);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError(rl.number, 1, "bad oracle spec '" + spec + "'");
    OracleSpec os;
    os.head = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    for (const std::string& part : split_list(inner, ';')) os.parts.push_back(part);
    return os;
}

// Builds the oracle and interns its generators.
GroupOracle build_oracle(const std::string& spec, const RawLine& rl, SymbolTable& table,
                         SymKind symkind, int owner, const std::string& owner_id) {
    OracleSpec os = parse_oracle_spec(spec, rl);
    auto intern_names = [&](const std::vector<std::string>& names) {
        std::vector<int> ids;
        for (const std::string& n : names) {
            try {
                ids.push_back(table.intern(strip(n), symkind, owner));
            } catch (const DomainError& e) {
                throw ParseError(rl.number, 1, e.what());
            }
        }
        return ids;
    };
    auto names_from_part = [&](const std::string& part, int count, bool zsemiz) {
        std::vector<std::string> names;
        for (const std::string& n : split_list(part, ','))
            if (!strip(n).empty()) names.push_back(strip(n));
        if (static_cast<int>(names.size()) != count)
            throw ParseError(rl.number, 1,
                             "oracle spec for '" + owner_id + "' names " +
                                 std::to_string(names.size()) + " generators, expected " +
                                 std::to_string(count));
        (void)zsemiz;
        return names;
    };

    try {
        if (os.head == "free") {
            if (os.parts.empty() || os.parts.size() > 2)
                throw ParseError(rl.number, 1, "free(<rank>[;<names>])");
            int rank = static_cast<int>(parse_int(os.parts[0], rl));
            if (rank < 0) throw ParseError(rl.number, 1, "free rank must be >= 0");
            std::vector<std::string> names = os.parts.size() == 2
                                                 ? names_from_part(os.parts[1], rank, false)
                                                 : default_names(owner_id, rank, false);
            return make_free_oracle(intern_names(names));
        }
        if (os.head == "abelian") {
            if (os.parts.empty() || os.parts.size() > 2)
                throw ParseError(rl.number, 1, "abelian(<d1>,...[;<names>])");
            std::vector<long long> moduli;
            for (const std::string& d : split_list(os.parts[0], ','))
                if (!strip(d).empty()) moduli.push_back(parse_int(d, rl));
            int k = static_cast<int>(moduli.size());
            std::vector<std::string> names = os.parts.size() == 2
                                                 ? names_from_part(os.parts[1], k, false)
                                                 : default_names(owner_id, k, false);
            return make_abelian_oracle(intern_names(names), moduli);
        }
        if (os.head == "zsemiz") {
            if (os.parts.size() < 2 || os.parts.size() > 3)
                throw ParseError(rl.number, 1, "zsemiz(<k>;<matrix>[;<names>])");
            int k = static_cast<int>(parse_int(os.parts[0], rl));
            if (k < 1) throw ParseError(rl.number, 1, "zsemiz needs k >= 1");
            std::string mtx = os.parts[1];
            for (char& c : mtx)
                if (c == '[' || c == ']') c = ' ';
            std::vector<long long> entries;
            for (const std::string& v : split_list(mtx, ','))
                if (!strip(v).empty()) entries.push_back(parse_int(v, rl));
            if (static_cast<int>(entries.size()) != k * k)
                throw ParseError(rl.number, 1, "zsemiz matrix needs k*k entries");
            IntMat m(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m.at(i, j) = entries[static_cast<size_t>(i * k + j)];
            std::vector<std::string> names = os.parts.size() == 3
                                                 ? names_from_part(os.parts[2], k + 1, true)
                                                 : default_names(owner_id, k + 1, true);
            return make_zsemiz_oracle(intern_names(names), m);
        }
        if (os.head == "presentation") {
            if (os.parts.size() != 2)
                throw ParseError(rl.number, 1, "presentation(<gens>;<relators>)");
            std::vector<std::string> names;
            for (const std::string& n : split_list(os.parts[0], ','))
                if (!strip(n).empty()) names.push_back(strip(n));
            if (names.empty())
                throw ParseError(rl.number, 1, "presentation oracle needs generators");
            std::vector<int> ids = intern_names(names);
            std::set<int> own(ids.begin(), ids.end());
            std::vector<Word> relators;
            for (const std::string& r : split_list(os.parts[1], ',')) {
                if (strip(r).empty()) continue;
                relators.push_back(parse_word(strip(r), table, [&](int sym) {
                    return own.count(sym) ? std::string()
                                          : "does not belong to group of " + owner_id;
                }));
            }
            return make_presentation_oracle(ids, relators);
        }
    } catch (const DomainError& e) {
        throw ParseError(rl.number, 1, e.what());
    }
    throw ParseError(rl.number, 1, "unknown oracle spec '" + os.head + "'");
}

std::optional<bool> parse_center_attr(const std::map<std::string, std::string>& attrs,
                                      const RawLine& rl) {
    auto it = attrs.find("center");
    if (it == attrs.end()) return std::nullopt;
    if (it->second == "finite") return false;
    if (it->second == "infinite") return true;
    throw ParseError(rl.number, 1, "center must be finite or infinite");
}

}  // namespace

GraphOfGroups parse_graph(const std::string& text) {
    std::vector<RawLine> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    GraphOfGroups g;

    const RawLine& head = lines[0];
    if (head.tokens[0] != "graph" || head.tokens.size() != 2)
        throw ParseError(head.number, head.columns[0], "expected 'graph <name>'");
    g.name = head.tokens[1];

    struct PendingEdge {
        RawLine line;
        std::map<std::string, std::string> attrs;
    };
    struct PendingBoundary {
        RawLine line;
        std::string text;
        int vertex;
    };
    std::vector<PendingEdge> pending_edges;
    std::vector<PendingBoundary> pending_boundaries;

    for (size_t li = 1; li < lines.size(); ++li) {
        const RawLine& rl = lines[li];
        const std::string& kw = rl.tokens[0];
        if (kw == "vertex") {
            if (rl.tokens.size() < 2) throw ParseError(rl.number, 1, "vertex needs an id");
            VertexData v;
            v.id = rl.tokens[1];
            if (g.vertex_index(v.id) >= 0)
                throw ParseError(rl.number, rl.columns[1], "duplicate vertex id '" + v.id + "'");
            auto attrs = parse_attrs(rl, 2);
            auto cls = attrs.find("class");
            if (cls == attrs.end()) throw ParseError(rl.number, 1, "vertex needs class=");
            if (cls->second == "elementary") v.vclass = VertexClass::Elementary;
            else if (cls->second == "orbifold") v.vclass = VertexClass::Orbifold;
            else if (cls->second == "rigid") v.vclass = VertexClass::Rigid;
            else throw ParseError(rl.number, 1, "unknown vertex class '" + cls->second + "'");
            auto grp = attrs.find("group");
            if (grp == attrs.end()) throw ParseError(rl.number, 1, "vertex needs group=");
            int vidx = static_cast<int>(g.vertices.size());
            v.oracle = build_oracle(grp->second, rl, g.symbols, SymKind::VertexGen, vidx, v.id);
            v.center_flag = parse_center_attr(attrs, rl);
            if (auto sig = attrs.find("signature"); sig != attrs.end()) {
                std::vector<std::string> parts = split_list(sig->second, ',');
                if (parts.size() != 3)
                    throw ParseError(rl.number, 1, "signature=<genus>,<o|n>,<boundary>");
                OrbifoldSignature s;
                s.genus = parse_int(parts[0], rl);
                std::string ori = strip(parts[1]);
                if (ori == "o") s.orientable = true;
                else if (ori == "n") s.orientable = false;
                else throw ParseError(rl.number, 1, "signature orientability must be o or n");
                s.boundary = parse_int(parts[2], rl);
                v.signature = s;
            }
            if (auto mcg = attrs.find("mcg"); mcg != attrs.end()) {
                if (mcg->second == "finite") v.mcg_flag = Tri::No;
                else if (mcg->second == "infinite") v.mcg_flag = Tri::Yes;
                else if (mcg->second == "unknown") v.mcg_flag = Tri::Unknown;
                else throw ParseError(rl.number, 1, "mcg must be finite, infinite or unknown");
            }
            if (auto b = attrs.find("boundary"); b != attrs.end())
                pending_boundaries.push_back({rl, b->second, vidx});
            if (v.vclass == VertexClass::Orbifold && !v.signature)
                throw ParseError(rl.number, 1, "orbifold vertex needs signature=");
            g.vertices.push_back(std::move(v));
        } else if (kw == "edge") {
            if (rl.tokens.size() < 2) throw ParseError(rl.number, 1, "edge needs an id");
            PendingEdge pe;
            pe.line = rl;
            pe.attrs = parse_attrs(rl, 2);
            pending_edges.push_back(std::move(pe));
        } else {
            throw ParseError(rl.number, rl.columns[0], "unknown directive '" + kw + "'");
        }
    }

    // Edges second so they may reference vertices in any order.
    for (const PendingEdge& pe : pending_edges) {
        const RawLine& rl = pe.line;
        EdgeData e;
        e.id = rl.tokens[1];
        if (g.edge_index(e.id) >= 0)
            throw ParseError(rl.number, rl.columns[1], "duplicate edge id '" + e.id + "'");
        auto need = [&](const char* key) -> const std::string& {
            auto it = pe.attrs.find(key);
            if (it == pe.attrs.end())
                throw ParseError(rl.number, 1, std::string("edge needs ") + key + "=");
            return it->second;
        };
        e.from = g.vertex_index(need("from"));
        if (e.from < 0)
            throw ParseError(rl.number, 1,
                             "edge '" + e.id + "' references missing vertex '" +
                                 pe.attrs.at("from") + "'");
        e.to = g.vertex_index(need("to"));
        if (e.to < 0)
            throw ParseError(rl.number, 1,
                             "edge '" + e.id + "' references missing vertex '" + pe.attrs.at("to") +
                                 "'");
        int eidx = static_cast<int>(g.edges.size());
        e.oracle = build_oracle(need("group"), rl, g.symbols, SymKind::EdgeGen, eidx, e.id);
        e.center_flag = parse_center_attr(pe.attrs, rl);
        try {
            e.letter_sym = g.symbols.intern(e.id, SymKind::EdgeLetter, eidx);
        } catch (const DomainError&) {
            throw ParseError(rl.number, rl.columns[1],
                             "edge id '" + e.id + "' collides with a generator name");
        }

        auto parse_emb = [&](const char* key, int vtx) {
            std::vector<Word> words;
            auto it = pe.attrs.find(key);
            if (it == pe.attrs.end()) {
                if (!e.oracle.gens.empty())
                    throw ParseError(rl.number, 1, std::string("edge needs ") + key + "=");
                return words;
            }
            for (const std::string& wtext : split_list(it->second, ',')) {
                if (strip(wtext).empty()) continue;
                try {
                    words.push_back(parse_word(strip(wtext), g.symbols, [&](int sym) {
                        const SymbolInfo& si = g.symbols.info(sym);
                        if (si.kind == SymKind::VertexGen && si.owner == vtx) return std::string();
                        return "is not a generator of vertex " +
                               g.vertices[static_cast<size_t>(vtx)].id;
                    }));
                } catch (const DomainError& err) {
                    throw ParseError(rl.number, 1, err.what());
                }
            }
            if (words.size() != e.oracle.gens.size())
                throw ParseError(rl.number, 1,
                                 std::string(key) + " must list one word per edge generator");
            return words;
        };
        e.emb_from = parse_emb("emb_from", e.from);
        e.emb_to = parse_emb("emb_to", e.to);
        g.edges.push_back(std::move(e));
    }

    for (const PendingBoundary& pb : pending_boundaries) {
        for (const std::string& wtext : split_list(pb.text, ';')) {
            if (strip(wtext).empty()) continue;
            try {
                g.vertices[static_cast<size_t>(pb.vertex)].boundary_words.push_back(
                    parse_word(strip(wtext), g.symbols, [&](int sym) {
                        const SymbolInfo& si = g.symbols.info(sym);
                        if (si.kind == SymKind::VertexGen && si.owner == pb.vertex)
                            return std::string();
                        return "is not a generator of vertex " +
                               g.vertices[static_cast<size_t>(pb.vertex)].id;
                    }));
            } catch (const DomainError& err) {
                throw ParseError(pb.line.number, 1, err.what());
            }
        }
    }

    if (g.vertices.empty()) throw ParseError(1, 1, "graph needs at least one vertex");
    return g;
}

namespace {

std::string oracle_spec_string(const GroupOracle& o, const SymbolTable& t) {
    std::ostringstream os;
    auto names = [&](size_t from = 0) {
        std::ostringstream ns;
        for (size_t i = from; i < o.gens.size(); ++i) {
            if (i > from) ns << ',';
            ns << t.name(o.gens[i]);
        }
        return ns.str();
    };
    switch (o.kind) {
        case OracleKind::Free:
            os << "free(" << o.gens.size();
            if (!o.gens.empty()) os << ';' << names();
            os << ')';
            break;
        case OracleKind::Abelian: {
            os << "abelian(";
            for (size_t i = 0; i < o.moduli.size(); ++i) {
                if (i) os << ',';
                os << o.moduli[i];
            }
            if (!o.gens.empty()) os << ';' << names();
            os << ')';
            break;
        }
        case OracleKind::ZSemiZ: {
            os << "zsemiz(" << o.matrix.rows() << ';';
            for (int i = 0; i < o.matrix.rows(); ++i)
                for (int j = 0; j < o.matrix.cols(); ++j) {
                    if (i || j) os << ',';
                    os << o.matrix.at(i, j);
                }
            os << ';' << names() << ')';
            break;
        }
        case OracleKind::Presentation: {
            os << "presentation(" << names() << ';';
            for (size_t i = 0; i < o.relators.size(); ++i) {
                if (i) os << ',';
                os << format_word(o.relators[i], t);
            }
            os << ')';
            break;
        }
    }
    return os.str();
}

}  // namespace

std::string serialize_graph(const GraphOfGroups& g) {
    std::ostringstream os;
    os << "graph " << g.name << '\n';
    for (const VertexData& v : g.vertices) {
        os << "vertex " << v.id << " class=" << vertex_class_name(v.vclass)
           << " group=" << oracle_spec_string(v.oracle, g.symbols);
        if (v.center_flag) os << " center=" << (*v.center_flag ? "infinite" : "finite");
        if (v.signature)
            os << " signature=" << v.signature->genus << ',' << (v.signature->orientable ? 'o' : 'n')
               << ',' << v.signature->boundary;
        if (!v.boundary_words.empty()) {
            os << " boundary=";
            for (size_t i = 0; i < v.boundary_words.size(); ++i) {
                if (i) os << ';';
                os << format_word(v.boundary_words[i], g.symbols);
            }
        }
        if (v.mcg_flag)
            os << " mcg="
               << (*v.mcg_flag == Tri::Yes ? "infinite"
                                           : *v.mcg_flag == Tri::No ? "finite" : "unknown");
        os << '\n';
    }
    for (const EdgeData& e : g.edges) {
        os << "edge " << e.id << " from=" << g.vertices[static_cast<size_t>(e.from)].id
           << " to=" << g.vertices[static_cast<size_t>(e.to)].id
           << " group=" << oracle_spec_string(e.oracle, g.symbols);
        if (e.center_flag) os << " center=" << (*e.center_flag ? "infinite" : "finite");
        if (!e.emb_from.empty()) {
            os << " emb_from=";
            for (size_t i = 0; i < e.emb_from.size(); ++i) {
                if (i) os << ',';
                os << format_word(e.emb_from[i], g.symbols);
            }
            os << " emb_to=";
            for (size_t i = 0; i < e.emb_to.size(); ++i) {
                if (i) os << ',';
                os << format_word(e.emb_to[i], g.symbols);
            }
        }
        os << '\n';
    }
    return os.str();
}

GraphOfGroups load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

}  // namespace gog
