#include "gog/centralizer.hpp"

#include <algorithm>
#include <numeric>

namespace gog {

namespace {

CentralizerResult whole_group(const GraphOfGroups& g, const VertexData& v) {
    CentralizerResult r;
    switch (v.oracle.kind) {
        case OracleKind::Abelian:
            r.desc = v.oracle.center(g.symbols);
            return r;
        case OracleKind::Free:
            if (v.oracle.rank() <= 1) {
                r.desc = v.oracle.center(g.symbols);
                return r;
            }
            r.reason = "non-abelian centralizer: trivial edge group at free vertex " + v.id;
            return r;
        case OracleKind::ZSemiZ: {
            if (v.oracle.matrix == IntMat::identity(v.oracle.matrix.rows())) {
                r.desc = v.oracle.center(g.symbols);
                return r;
            }
            r.reason = "non-abelian centralizer: trivial edge group at zsemiz vertex " + v.id;
            return r;
        }
        case OracleKind::Presentation:
            r.reason = "centralizer unknown: trivial edge group at presentation vertex " + v.id;
            return r;
    }
    return r;
}

CentralizerResult zsemiz_centralizer(const VertexData& v,
                                     const Word& image) {
    CentralizerResult r;
    const GroupOracle& o = v.oracle;
    const int k = o.matrix.rows();
    ZzElt w = o.zz_normal(image);

    if (w.t == 0) {
        // Centralizer of a lattice element: { (y, n) : M^n x = x }.
        // Finite orbits of M are bounded by the finite-order lcm bound.
        long long bound = 1;
        {
            long long limit = 2LL * k * k + 1;
            std::vector<long long> phi(static_cast<size_t>(limit) + 1);
            for (long long i = 0; i <= limit; ++i) phi[static_cast<size_t>(i)] = i;
            for (long long i = 2; i <= limit; ++i)
                if (phi[static_cast<size_t>(i)] == i)
                    for (long long j = i; j <= limit; j += i)
                        phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / i;
            for (long long d = 1; d <= limit; ++d)
                if (phi[static_cast<size_t>(d)] <= k) bound = std::lcm(bound, d);
        }
        std::optional<long long> n0;
        {
            std::vector<Int> cur = w.vec;
            for (long long n = 1; n <= bound; ++n) {
                std::vector<Int> next(static_cast<size_t>(k), 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        next[static_cast<size_t>(i)] += o.matrix.at(i, j) * cur[static_cast<size_t>(j)];
                cur = next;
                if (cur == w.vec) {
                    n0 = n;
                    break;
                }
            }
        }
        if (!n0) {
            // Only the lattice commutes with x.
            AbelianDescription d;
            d.free_rank = k;
            for (int i = 0; i < k; ++i) d.basis.push_back(Word::letter(o.gens[static_cast<size_t>(i)]));
            GroupOracle oc = o;
            d.log = [oc](const Word& u) -> std::optional<std::vector<long long>> {
                ZzElt e = oc.zz_normal(u);
                if (e.t != 0) return std::nullopt;
                std::vector<long long> out;
                for (const Int& x : e.vec) out.push_back(to_ll(x));
                return out;
            };
            r.desc = d;
            return r;
        }
        IntMat mp = o.zz_matrix_power(*n0);
        if (!(mp == IntMat::identity(k))) {
            r.reason = "non-abelian centralizer at zsemiz vertex " + v.id;
            return r;
        }
        AbelianDescription d;
        d.free_rank = k + 1;
        for (int i = 0; i < k; ++i) d.basis.push_back(Word::letter(o.gens[static_cast<size_t>(i)]));
        d.basis.push_back(Word::letter(o.gens.back(), *n0));
        GroupOracle oc = o;
        long long period = *n0;
        d.log = [oc, period](const Word& u) -> std::optional<std::vector<long long>> {
            ZzElt e = oc.zz_normal(u);
            if (e.t % period != 0) return std::nullopt;
            std::vector<long long> out;
            for (const Int& x : e.vec) out.push_back(to_ll(x));
            out.push_back(e.t / period);
            return out;
        };
        r.desc = d;
        return r;
    }

    // w = (x, m), m != 0.  Lattice part: K = ker(I - M^m); t-degrees n with
    // (I - M^m) y = (I - M^n) x solvable form a subgroup containing m.
    IntMat im(k, k);
    IntMat pm = o.zz_matrix_power(w.t);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) im.at(i, j) = (i == j ? 1 : 0) - pm.at(i, j);
    std::vector<std::vector<Int>> kernel = integer_kernel(im);

    long long n1 = 0;
    std::vector<Int> y1;
    long long mabs = w.t > 0 ? w.t : -w.t;
    for (long long n = 1; n <= mabs; ++n) {
        IntMat pn = o.zz_matrix_power(n);
        std::vector<Int> rhs(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            rhs[static_cast<size_t>(i)] = w.vec[static_cast<size_t>(i)];
            for (int j = 0; j < k; ++j)
                rhs[static_cast<size_t>(i)] -= pn.at(i, j) * w.vec[static_cast<size_t>(j)];
        }
        auto sol = solve_integer(im, rhs);
        if (sol) {
            n1 = n;
            y1 = *sol;
            break;
        }
    }
    if (n1 == 0) {
        r.reason = "internal: centralizer t-degree not found at vertex " + v.id;
        return r;
    }
    // Abelian iff M^{n1} fixes K pointwise.
    IntMat pn1 = o.zz_matrix_power(n1);
    for (const auto& kv : kernel)
        for (int i = 0; i < k; ++i) {
            Int acc = 0;
            for (int j = 0; j < k; ++j) acc += pn1.at(i, j) * kv[static_cast<size_t>(j)];
            if (acc != kv[static_cast<size_t>(i)]) {
                r.reason = "non-abelian centralizer at zsemiz vertex " + v.id;
                return r;
            }
        }

    AbelianDescription d;
    d.free_rank = static_cast<int>(kernel.size()) + 1;
    for (const auto& kv : kernel) {
        Word bw;
        for (int i = 0; i < k; ++i)
            if (kv[static_cast<size_t>(i)] != 0)
                bw.append(o.gens[static_cast<size_t>(i)], to_ll(kv[static_cast<size_t>(i)]));
        d.basis.push_back(bw);
    }
    ZzElt gen;
    gen.vec = y1;
    gen.t = n1;
    d.basis.push_back(o.zz_word(gen));
    IntMat kmat(k, static_cast<int>(kernel.size()));
    for (size_t j = 0; j < kernel.size(); ++j)
        for (int i = 0; i < k; ++i) kmat.at(i, static_cast<int>(j)) = kernel[j][static_cast<size_t>(i)];
    GroupOracle oc = o;
    Word genw = o.zz_word(gen);
    d.log = [oc, kmat, genw, n1](const Word& u) -> std::optional<std::vector<long long>> {
        ZzElt e = oc.zz_normal(u);
        if (e.t % n1 != 0) return std::nullopt;
        long long c = e.t / n1;
        Word rem = u * genw.pow(-c);
        ZzElt re = oc.zz_normal(rem);
        if (re.t != 0) return std::nullopt;
        auto sol = solve_integer(kmat, re.vec);
        if (!sol) return std::nullopt;
        std::vector<long long> out;
        for (const Int& x : *sol) out.push_back(to_ll(x));
        out.push_back(c);
        return out;
    };
    r.desc = d;
    return r;
}

}  // namespace

CentralizerResult centralizer_of_edge_image(const GraphOfGroups& g, EdgeEnd end,
                                            bool jsj_asserted) {
    CentralizerResult r;
    const EdgeData& ed = g.edges[static_cast<size_t>(end.edge)];
    const VertexData& v = g.vertices[static_cast<size_t>(g.end_vertex(end))];
    const std::vector<Word>& imgs = g.end_images(end);

    if (ed.oracle.gens.empty()) return whole_group(g, v);
    if (ed.oracle.gens.size() > 1) {
        r.reason = "unsupported: non-cyclic edge group " + ed.id;
        return r;
    }

    const Word& image = imgs[0];
    switch (v.oracle.kind) {
        case OracleKind::Free: {
            Word red = v.oracle.reduce(image);
            if (red.empty()) {
                r.reason = "edge image trivial at vertex " + v.id;
                return r;
            }
            RootPower rp = free_primitive_root(red);
            AbelianDescription d;
            d.free_rank = 1;
            d.basis = {rp.root};
            GroupOracle oc = v.oracle;
            Word root = rp.root;
            d.log = [oc, root](const Word& u) -> std::optional<std::vector<long long>> {
                auto j = oc.cyclic_log(root, u);
                if (!j) return std::nullopt;
                return std::vector<long long>{*j};
            };
            r.desc = d;
            return r;
        }
        case OracleKind::Abelian:
            r.desc = v.oracle.center(g.symbols);
            return r;
        case OracleKind::ZSemiZ:
            return zsemiz_centralizer(v, image);
        case OracleKind::Presentation: {
            bool maximal_elementary =
                jsj_asserted && (v.vclass == VertexClass::Rigid || v.vclass == VertexClass::Orbifold);
            if (!maximal_elementary) {
                r.reason = "centralizer unknown at presentation vertex " + v.id;
                return r;
            }
            // Z_{G_v}(G_e) = Z(G_e), carried through the embedding.
            AbelianDescription d;
            long long order = 0;  // 0 = infinite cyclic
            if (ed.oracle.kind == OracleKind::Abelian && ed.oracle.moduli[0] >= 2)
                order = ed.oracle.moduli[0];
            if (order == 0) {
                d.free_rank = 1;
            } else {
                d.factors = {order};
            }
            d.basis = {image};
            GroupOracle oc = v.oracle;
            Word base = image;
            d.log = [oc, base, order](const Word& u) -> std::optional<std::vector<long long>> {
                auto j = oc.cyclic_log(base, u);
                if (!j) return std::nullopt;
                long long c = *j;
                if (order > 0) {
                    c %= order;
                    if (c < 0) c += order;
                }
                return std::vector<long long>{c};
            };
            r.desc = d;
            return r;
        }
    }
    r.reason = "unsupported oracle";
    return r;
}

}  // namespace gog
