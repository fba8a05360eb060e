#include "gog/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace gog {

const char* vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::Elementary: return "elementary";
        case VertexClass::Orbifold: return "orbifold";
        case VertexClass::Rigid: return "rigid";
    }
    return "?";
}

int GraphOfGroups::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

int GraphOfGroups::edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<EdgeEnd> GraphOfGroups::ends_at(int v) const {
    std::vector<EdgeEnd> out;
    for (int e : edges_sorted()) {
        if (edges[static_cast<size_t>(e)].from == v) out.push_back({e, false});
        if (edges[static_cast<size_t>(e)].to == v) out.push_back({e, true});
    }
    return out;
}

bool GraphOfGroups::connected() const {
    if (vertices.empty()) return false;
    std::vector<bool> seen(vertices.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    size_t n = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const EdgeData& e : edges) {
            int other = -1;
            if (e.from == v) other = e.to;
            else if (e.to == v) other = e.from;
            else continue;
            if (!seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = true;
                ++n;
                q.push(other);
            }
        }
    }
    return n == vertices.size();
}

Tri GraphOfGroups::vertex_center_infinite(int v) const {
    const VertexData& vd = vertices[static_cast<size_t>(v)];
    if (vd.center_flag) return *vd.center_flag ? Tri::Yes : Tri::No;
    return vd.oracle.center_infinite();
}

Tri GraphOfGroups::edge_center_infinite(int e) const {
    const EdgeData& ed = edges[static_cast<size_t>(e)];
    if (ed.center_flag) return *ed.center_flag ? Tri::Yes : Tri::No;
    return ed.oracle.center_infinite();
}

std::vector<int> GraphOfGroups::edges_sorted() const {
    std::vector<int> idx(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return edges[static_cast<size_t>(a)].id < edges[static_cast<size_t>(b)].id;
    });
    return idx;
}

std::vector<int> GraphOfGroups::vertices_sorted() const {
    std::vector<int> idx(vertices.size());
    for (size_t i = 0; i < vertices.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return vertices[static_cast<size_t>(a)].id < vertices[static_cast<size_t>(b)].id;
    });
    return idx;
}

EdgePartition classify_edges(const GraphOfGroups& g) {
    EdgePartition p;
    for (int v : g.vertices_sorted()) {
        switch (g.vertices[static_cast<size_t>(v)].vclass) {
            case VertexClass::Elementary: p.v1.push_back(v); break;
            case VertexClass::Orbifold: p.v2.push_back(v); break;
            case VertexClass::Rigid: p.v3.push_back(v); break;
        }
    }
    for (int e : g.edges_sorted()) {
        const EdgeData& ed = g.edges[static_cast<size_t>(e)];
        VertexClass cf = g.vertices[static_cast<size_t>(ed.from)].vclass;
        VertexClass ct = g.vertices[static_cast<size_t>(ed.to)].vclass;
        bool felem = cf == VertexClass::Elementary;
        bool telem = ct == VertexClass::Elementary;
        if (felem == telem)
            throw DomainError("graph is not JSJ-shaped: edge '" + ed.id +
                              "' must join an elementary vertex to an orbifold or rigid vertex");
        VertexClass other = felem ? ct : cf;
        (other == VertexClass::Orbifold ? p.e2 : p.e3).push_back(e);
    }
    for (int v : p.v1) {
        Tri t = g.vertex_center_infinite(v);
        if (t == Tri::Unknown) p.flags_unknown = true;
        if (t == Tri::Yes) p.v1_inf.push_back(v);
    }
    for (int e : g.edges_sorted()) {
        Tri t = g.edge_center_infinite(e);
        if (t == Tri::Unknown) p.flags_unknown = true;
        if (t != Tri::Yes) continue;
        p.e_inf.push_back(e);
        if (std::count(p.e2.begin(), p.e2.end(), e)) p.e2_inf.push_back(e);
        else p.e3_inf.push_back(e);
    }
    return p;
}

bool ValidationReport::all_pass_or_unknown() const {
    for (const ValidationEntry& e : entries)
        if (e.status == Tri::No) return false;
    return true;
}

Tri ValidationReport::status_of(const std::string& check) const {
    for (const ValidationEntry& e : entries)
        if (e.check == check) return e.status;
    return Tri::Unknown;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (const ValidationEntry& e : entries) {
        os << e.check << ": "
           << (e.status == Tri::Yes ? "pass" : e.status == Tri::No ? "FAIL" : "unknown");
        if (!e.detail.empty()) os << " (" << e.detail << ")";
        os << '\n';
    }
    return os.str();
}

Tri end_onto(const GraphOfGroups& g, EdgeEnd e) {
    const VertexData& v = g.vertices[static_cast<size_t>(g.end_vertex(e))];
    return v.oracle.generates_whole(g.end_images(e));
}

}  // namespace gog
