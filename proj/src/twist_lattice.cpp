#include "gog/twist_lattice.hpp"

#include <algorithm>
#include <sstream>

namespace gog {

namespace {

bool jsj_shaped(const GraphOfGroups& g) {
    for (const EdgeData& e : g.edges) {
        bool fe = g.vertices[static_cast<size_t>(e.from)].vclass == VertexClass::Elementary;
        bool te = g.vertices[static_cast<size_t>(e.to)].vclass == VertexClass::Elementary;
        if (fe == te) return false;
    }
    return true;
}

std::string end_label(const GraphOfGroups& g, EdgeEnd end) {
    return g.edges[static_cast<size_t>(end.edge)].id + (end.at_to ? "@to" : "@from");
}

SymbolicTwists symbolic(const GraphOfGroups& g, const std::string& reason) {
    SymbolicTwists s;
    s.reason = reason;
    for (int e : g.edges_sorted()) {
        s.generators.push_back("D[" + end_label(g, {e, false}) + "]");
        s.generators.push_back("D[" + end_label(g, {e, true}) + "]");
    }
    for (int v : g.vertices_sorted()) {
        std::ostringstream os;
        os << "vertex " << g.vertices[static_cast<size_t>(v)].id << ": prod of twists by z over";
        for (const EdgeEnd& end : g.ends_at(v)) os << ' ' << end_label(g, end);
        os << " is inner, z in Z(G_" << g.vertices[static_cast<size_t>(v)].id << ")";
        s.relations.push_back(os.str());
    }
    for (int e : g.edges_sorted()) {
        std::ostringstream os;
        os << "edge " << g.edges[static_cast<size_t>(e)].id << ": twists by the images of z at "
           << end_label(g, {e, false}) << " and " << end_label(g, {e, true})
           << " compose to an inner automorphism, z in Z(G_e)";
        s.relations.push_back(os.str());
    }
    return s;
}

}  // namespace

std::string SymbolicTwists::to_text() const {
    std::ostringstream os;
    os << "T (symbolic presentation; structure unavailable: " << reason << ")\n";
    os << "generators:";
    for (const std::string& gsym : generators) os << ' ' << gsym;
    os << "\nrelations:\n";
    for (const std::string& r : relations) os << "  " << r << '\n';
    return os.str();
}

std::string AbelianStructure::display() const {
    if (free_rank == 0 && factors.empty()) return "trivial";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (long long f : factors) {
        if (!first) os << " x ";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

std::variant<TwistLattice, SymbolicTwists> build_j_matrix(const GraphOfGroups& g) {
    TwistLattice lat;
    const bool jsj = jsj_shaped(g);

    // Codomain blocks: one per oriented edge, edges in id order, @from then @to.
    for (int e : g.edges_sorted()) {
        for (bool at_to : {false, true}) {
            EdgeEnd end{e, at_to};
            CentralizerResult c = centralizer_of_edge_image(g, end, jsj);
            if (!c.desc) return symbolic(g, c.reason);
            TwistLattice::Block b;
            b.end = end;
            b.desc = std::move(*c.desc);
            b.offset = lat.rows;
            int n = b.desc.free_rank + static_cast<int>(b.desc.factors.size());
            for (int i = 0; i < n; ++i) {
                lat.row_labels.push_back(end_label(g, end) + "/" + std::to_string(i));
                if (i >= b.desc.free_rank)
                    lat.torsion_rows.push_back(
                        {lat.rows + i,
                         b.desc.factors[static_cast<size_t>(i - b.desc.free_rank)]});
            }
            lat.rows += n;
            lat.blocks.push_back(std::move(b));
        }
    }

    // Domain columns: vertex centers then edge centers, ids sorted.
    std::vector<std::vector<Int>> cols;

    auto log_into_block = [&](const TwistLattice::Block& b, const Word& w,
                              std::vector<Int>& col) -> bool {
        auto coords = b.desc.log(w);
        if (!coords) return false;
        for (size_t i = 0; i < coords->size(); ++i)
            col[static_cast<size_t>(b.offset) + i] += (*coords)[i];
        return true;
    };

    for (int v : g.vertices_sorted()) {
        const VertexData& vd = g.vertices[static_cast<size_t>(v)];
        auto center = vd.oracle.center(g.symbols);
        if (!center) {
            // A rigid or orbifold vertex of a JSJ graph has finite center; its
            // column contributes nothing to the free rank.
            if (jsj && vd.vclass != VertexClass::Elementary) {
                lat.caveats.push_back("center of " + vd.id +
                                      " not computed (finite by JSJ shape); its torsion "
                                      "contribution to T is omitted");
                continue;
            }
            return symbolic(g, "center of vertex " + vd.id + " not computable");
        }
        for (size_t bi = 0; bi < center->basis.size(); ++bi) {
            std::vector<Int> col(static_cast<size_t>(lat.rows), 0);
            bool ok = true;
            for (const TwistLattice::Block& b : lat.blocks) {
                if (g.end_vertex(b.end) != v) continue;
                if (!log_into_block(b, center->basis[bi], col)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                return symbolic(g, "discrete log failed for a center generator of vertex " +
                                       vd.id);
            TwistLattice::Column c;
            c.is_vertex = true;
            c.owner = v;
            c.gen_index = static_cast<int>(bi);
            c.label = "v:" + vd.id + "/" + std::to_string(bi);
            lat.columns.push_back(c);
            cols.push_back(std::move(col));
        }
    }
    for (int e : g.edges_sorted()) {
        const EdgeData& ed = g.edges[static_cast<size_t>(e)];
        auto center = ed.oracle.center(g.symbols);
        if (!center)
            return symbolic(g, "center of edge group " + ed.id + " not computable");
        for (size_t bi = 0; bi < center->basis.size(); ++bi) {
            std::vector<Int> col(static_cast<size_t>(lat.rows), 0);
            bool ok = true;
            for (bool at_to : {false, true}) {
                EdgeEnd end{e, at_to};
                // Image of the edge-center generator under the embedding.
                Word img;
                for (const Letter& l : center->basis[bi].letters()) {
                    int gi = -1;
                    for (size_t k = 0; k < ed.oracle.gens.size(); ++k)
                        if (ed.oracle.gens[k] == l.sym) gi = static_cast<int>(k);
                    img.append(g.end_images(end)[static_cast<size_t>(gi)].pow(l.exp));
                }
                for (const TwistLattice::Block& b : lat.blocks) {
                    if (!(b.end == end)) continue;
                    if (!log_into_block(b, img, col)) ok = false;
                }
                if (!ok) break;
            }
            if (!ok)
                return symbolic(g, "discrete log failed for a center generator of edge " + ed.id);
            TwistLattice::Column c;
            c.is_vertex = false;
            c.owner = e;
            c.gen_index = static_cast<int>(bi);
            c.label = "e:" + ed.id + "/" + std::to_string(bi);
            lat.columns.push_back(c);
            cols.push_back(std::move(col));
        }
    }

    lat.j = IntMat(lat.rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < lat.rows; ++i) lat.j.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];

    lat.full = IntMat(lat.rows, static_cast<int>(cols.size() + lat.torsion_rows.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < lat.rows; ++i) lat.full.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
    for (size_t k = 0; k < lat.torsion_rows.size(); ++k)
        lat.full.at(lat.torsion_rows[k].first, static_cast<int>(cols.size() + k)) =
            lat.torsion_rows[k].second;
    return lat;
}

std::string TwistLattice::dump() const {
    std::ostringstream os;
    os << "j-matrix: " << rows << " rows (centralizer generators), " << columns.size()
       << " columns (center generators)";
    if (!torsion_rows.empty()) os << ", " << torsion_rows.size() << " torsion constraints";
    os << '\n';
    os << "columns:";
    for (const Column& c : columns) os << ' ' << c.label;
    os << '\n';
    for (int i = 0; i < rows; ++i) {
        os << row_labels[static_cast<size_t>(i)] << ":";
        for (int j = 0; j < this->j.cols(); ++j) os << ' ' << this->j.at(i, j);
        os << '\n';
    }
    for (const auto& [row, mod] : torsion_rows)
        os << "torsion: " << row_labels[static_cast<size_t>(row)] << " mod " << mod << '\n';
    return os.str();
}

std::variant<AbelianStructure, SymbolicTwists> twist_group_structure(const GraphOfGroups& g) {
    ValidationReport rep = validate(g);
    if (rep.status_of("minimality") != Tri::Yes)
        throw HypothesisError(
            "twist group unavailable: the graph is not (certified) minimal; collapse the "
            "offending terminal edge first");
    if (rep.status_of("mapping-torus") != Tri::Yes)
        throw HypothesisError(
            "twist group unavailable: mapping tori are excluded from the twist presentation");

    auto built = build_j_matrix(g);
    if (std::holds_alternative<SymbolicTwists>(built))
        return std::get<SymbolicTwists>(std::move(built));
    const TwistLattice& lat = std::get<TwistLattice>(built);

    SmithResult snf = smith_normal_form(lat.full);
    AbelianStructure st;
    st.free_rank = lat.rows - snf.rank;
    for (int i = 0; i < snf.rank; ++i) {
        long long d = to_ll(snf.diagonal[static_cast<size_t>(i)]);
        if (d >= 2) st.factors.push_back(d);
    }
    std::sort(st.factors.begin(), st.factors.end());
    return st;
}

KernelCheck kernel_check(const GraphOfGroups& g, std::optional<int> declared_rank) {
    ValidationReport rep = validate(g);
    if (rep.status_of("mapping-torus") != Tri::Yes)
        throw HypothesisError("kernel check unavailable: mapping torus");
    if (rep.status_of("minimality") != Tri::Yes)
        throw HypothesisError("kernel check unavailable: graph not certified minimal");

    auto built = build_j_matrix(g);
    if (std::holds_alternative<SymbolicTwists>(built))
        throw DomainError("kernel check unavailable: " +
                          std::get<SymbolicTwists>(built).reason);
    const TwistLattice& lat = std::get<TwistLattice>(built);

    // Free rank of the domain and rank of j over Q restricted to free rows.
    int domain_free = 0;
    for (int v : g.vertices_sorted()) {
        const VertexData& vd = g.vertices[static_cast<size_t>(v)];
        auto c = vd.oracle.center(g.symbols);
        if (c) domain_free += c->free_rank;
    }
    for (int e : g.edges_sorted()) {
        auto c = g.edges[static_cast<size_t>(e)].oracle.center(g.symbols);
        if (c) domain_free += c->free_rank;
    }
    std::vector<int> free_rows;
    {
        std::vector<bool> torsion(static_cast<size_t>(lat.rows), false);
        for (const auto& [row, mod] : lat.torsion_rows) {
            (void)mod;
            torsion[static_cast<size_t>(row)] = true;
        }
        for (int i = 0; i < lat.rows; ++i)
            if (!torsion[static_cast<size_t>(i)]) free_rows.push_back(i);
    }
    IntMat sub(static_cast<int>(free_rows.size()), lat.j.cols());
    for (size_t i = 0; i < free_rows.size(); ++i)
        for (int j = 0; j < lat.j.cols(); ++j)
            sub.at(static_cast<int>(i), j) = lat.j.at(free_rows[i], j);

    KernelCheck kc;
    kc.kernel_rank = domain_free - rank_over_q(sub);
    int declared = 0;
    if (declared_rank) {
        declared = *declared_rank;
    } else if (g.edges.empty() && g.vertices.size() == 1) {
        auto c = g.vertices[0].oracle.center(g.symbols);
        if (!c) throw DomainError("kernel check: declare the rank of Z(G) with --zg-rank");
        declared = c->free_rank;
    } else {
        declared = 0;  // one-ended hyperbolic inputs have trivial center
    }
    kc.declared_center_rank = declared;
    kc.consistent = kc.kernel_rank == declared;
    return kc;
}

}  // namespace gog
