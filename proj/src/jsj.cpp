#include "gog/jsj.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace gog {

bool surface_mcg_infinite(const OrbifoldSignature& s) {
    if (s.euler() >= 0) throw DomainError("surface_mcg_infinite: chi must be negative");
    if (s.boundary < 1) throw DomainError("surface_mcg_infinite: boundary required");
    if (s.orientable && s.genus == 0 && s.boundary == 3) return false;       // pair of pants
    if (!s.orientable && s.genus == 1 && s.boundary == 2) return false;      // 2x-punctured RP^2
    return true;
}

long long mcg_boundary_extension_rank(const OrbifoldSignature& s) {
    if (s.boundary < 1) throw DomainError("extension rank: boundary required");
    return s.boundary;
}

long long mcg_boundary_extension_rank_cyclic(long long nontrivial_peripherals) {
    if (nontrivial_peripherals < 1)
        throw DomainError("extension rank: at least one nontrivial peripheral subgroup required");
    return nontrivial_peripherals - 1;
}

namespace {

Tri orbifold_mcg_infinite(const VertexData& v) {
    if (v.mcg_flag) return *v.mcg_flag;
    if (!v.signature) return Tri::Unknown;
    return surface_mcg_infinite(*v.signature) ? Tri::Yes : Tri::No;
}

bool vertex_only_orbifold_neighbors(const GraphOfGroups& g, int v) {
    for (const EdgeEnd& end : g.ends_at(v)) {
        int other = g.end_vertex({end.edge, !end.at_to});
        if (g.vertices[static_cast<size_t>(other)].vclass != VertexClass::Orbifold) return false;
    }
    return true;
}

}  // namespace

Invariants count_invariants(const GraphOfGroups& g) {
    EdgePartition part = classify_edges(g);
    Invariants inv;
    if (g.edges.empty()) {
        inv.degenerate = true;
        return inv;
    }
    inv.n = static_cast<long long>(part.e_inf.size()) - static_cast<long long>(part.v1_inf.size());
    for (int v : part.v1_inf)
        if (vertex_only_orbifold_neighbors(g, v)) ++inv.r;
    inv.q = static_cast<long long>(part.e3_inf.size()) -
            static_cast<long long>(part.v1_inf.size()) + inv.r;
    inv.s = static_cast<long long>(part.e2_inf.size()) - inv.r;
    return inv;
}

std::vector<int> build_Q(const GraphOfGroups& g) {
    EdgePartition part = classify_edges(g);
    std::vector<int> q = part.e3_inf;  // already in edge-id order
    for (int v : part.v1_inf) {
        // Discard the smallest-id incident edge of E_3^inf, if any.
        for (size_t i = 0; i < q.size(); ++i) {
            const EdgeData& ed = g.edges[static_cast<size_t>(q[i])];
            if (ed.from == v || ed.to == v) {
                q.erase(q.begin() + static_cast<long>(i));
                break;
            }
        }
    }
    return q;
}

Tri out_infinite(const GraphOfGroups& g) {
    Invariants inv = count_invariants(g);
    if (!inv.degenerate && inv.n > 0) return Tri::Yes;
    EdgePartition part = classify_edges(g);
    Tri any_orb = Tri::No;
    for (int v : part.v2) {
        Tri t = orbifold_mcg_infinite(g.vertices[static_cast<size_t>(v)]);
        if (t == Tri::Yes) return Tri::Yes;
        if (t == Tri::Unknown) any_orb = Tri::Unknown;
    }
    if (part.flags_unknown) return Tri::Unknown;
    return any_orb == Tri::No ? Tri::No : Tri::Unknown;
}

OutReport structure_report(const GraphOfGroups& g) {
    EdgePartition part = classify_edges(g);
    OutReport rep;
    rep.inv = count_invariants(g);
    rep.q_edges = build_Q(g);
    rep.infinite = out_infinite(g);

    rep.torsion_free = true;
    for (const VertexData& v : g.vertices)
        if (v.oracle.torsion_free() != Tri::Yes) rep.torsion_free = false;
    for (const EdgeData& e : g.edges)
        if (e.oracle.torsion_free() != Tri::Yes) rep.torsion_free = false;
    // Finite-center elementary pieces force torsion in a JSJ input.
    for (int v : part.v1)
        if (g.vertex_center_infinite(v) != Tri::Yes) rep.torsion_free = false;

    rep.full_product = true;
    for (int v : part.v1_inf) {
        bool meets_rigid = false;
        for (const EdgeEnd& end : g.ends_at(v)) {
            int other = g.end_vertex({end.edge, !end.at_to});
            if (g.vertices[static_cast<size_t>(other)].vclass == VertexClass::Rigid)
                meets_rigid = true;
        }
        if (!meets_rigid) rep.full_product = false;
    }

    for (int v : part.v2) {
        const VertexData& vd = g.vertices[static_cast<size_t>(v)];
        rep.orbifold_ranks.push_back(
            {vd.id, vd.signature ? mcg_boundary_extension_rank(*vd.signature) : 0});
    }

    {
        std::ostringstream os;
        if (rep.inv.degenerate) {
            os << "trivial splitting (no edges); Out(G) = Out of the single vertex group";
        } else {
            os << "virtually Z^" << rep.inv.q << " x M; M = ";
            if (part.v2.empty())
                os << "trivial product (V2 empty)";
            else
                os << "(prod MCG^d over " << part.v2.size() << " orbifold vertices) / Z^"
                   << rep.inv.r;
            os << "; Z_s rank " << rep.inv.s;
        }
        rep.decomposition = os.str();
    }

    if (rep.inv.degenerate)
        rep.caveats.push_back("degenerate: one-vertex graph, invariants set to zero");
    if (!rep.torsion_free) {
        rep.caveats.push_back("torsion present or undetermined: ranks are virtual, extensions "
                              "need not be central");
    } else {
        rep.caveats.push_back("torsion-free input: Z_r = Z^r, Z_s = Z^s and the extensions are "
                              "central");
    }
    if (part.flags_unknown) rep.caveats.push_back("some center flags are unresolved");
    if (rep.full_product && !rep.inv.degenerate && rep.inv.r == 0)
        rep.caveats.push_back(
            "every infinite-center elementary vertex meets a rigid vertex: M is the full "
            "product of the MCG^d");
    return rep;
}

std::string OutReport::to_text(const GraphOfGroups& g) const {
    std::ostringstream os;
    os << "graph: " << g.name << '\n';
    os << "n=" << inv.n << " r=" << inv.r << " q=" << inv.q << " s=" << inv.s << '\n';
    os << "Q:";
    if (q_edges.empty()) os << " (none)";
    for (int e : q_edges) os << ' ' << g.edges[static_cast<size_t>(e)].id;
    os << '\n';
    os << "out_infinite: " << tri_name(infinite) << '\n';
    os << "decomposition: " << decomposition << '\n';
    if (!orbifold_ranks.empty()) {
        os << "orbifold vertices:";
        for (const auto& [id, b] : orbifold_ranks)
            os << ' ' << id << " (MCG^d extension rank " << b << ")";
        os << '\n';
    }
    os << "caveats:";
    if (caveats.empty()) os << " (none)";
    os << '\n';
    for (const std::string& c : caveats) os << "  - " << c << '\n';
    return os.str();
}

std::string OutReport::to_machine(const GraphOfGroups& g) const {
    nlohmann::json j;
    j["graph"] = g.name;
    j["n"] = inv.n;
    j["r"] = inv.r;
    j["q"] = inv.q;
    j["s"] = inv.s;
    j["out_infinite"] = tri_name(infinite);
    std::vector<std::string> qe;
    for (int e : q_edges) qe.push_back(g.edges[static_cast<size_t>(e)].id);
    j["Q"] = qe;
    j["decomposition"] = decomposition;
    j["torsion_free"] = torsion_free;
    j["full_product"] = full_product;
    nlohmann::json orb = nlohmann::json::object();
    for (const auto& [id, b] : orbifold_ranks) orb[id] = b;
    j["orbifold_extension_ranks"] = orb;
    j["caveats"] = caveats;
    return j.dump(2) + "\n";
}

}  // namespace gog
