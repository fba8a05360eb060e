#pragma once

#include <map>
#include <memory>
#include <variant>

#include "gog/normal_form.hpp"

namespace gog {

struct TwistProv {
    EdgeEnd end;
    Word z;
};

struct BitwistProv {
    int edge;
    Word z_from, z_to;
};

// beta on the vertex generators plus one conjugating element per incident
// oriented edge; the extension is normalized so that it equals beta on G_v
// itself.
struct VertexAutomorphismData {
    int vertex = -1;
    std::vector<Word> beta;                 // image per vertex generator
    std::map<EdgeEnd, Word> conjugators;    // g_e, defaulting to 1
    std::optional<std::vector<Word>> beta_inverse;
};

struct ExtensionProv {
    VertexAutomorphismData data;
};

struct InnerProv {
    Word m;
};

struct Automorphism;
struct CompositeProv {
    std::shared_ptr<const Automorphism> first, second;  // first o second
};

using Provenance = std::variant<TwistProv, BitwistProv, ExtensionProv, InnerProv, CompositeProv>;

// An automorphism of pi1(graph, subtree) given by generator images. Every
// constructor audits the presentation relators.
struct Automorphism {
    std::map<int, Word> images;  // presentation generator -> image word
    Provenance prov = InnerProv{Word()};
    // Conjugator c_v per vertex: the automorphism maps G_v into c_v G_v c_v^-1
    // (exact for the constructions here; drives rho restrictions).
    std::vector<Word> vertex_conj;

    const Word& image_of(int sym) const;
    bool is_identity_on_generators() const;
};

Automorphism identity_automorphism(const GraphOfGroups& g, const FundamentalPresentation& p);
Automorphism inner_automorphism(const GraphOfGroups& g, const FundamentalPresentation& p,
                                const Word& m);

// Twist by z around the oriented edge `end` (near its origin); z must
// centralize the edge-group image there.
Automorphism twist(const GraphOfGroups& g, const FundamentalPresentation& p, EdgeEnd end,
                   const Word& z);

// Bitwist by z (at the from-end) and z' (at the to-end); both must normalize
// the edge image and induce the same automorphism of the edge group.
Automorphism bitwist(const GraphOfGroups& g, const FundamentalPresentation& p, int edge,
                     const Word& z_from, const Word& z_to);

Automorphism extend_vertex_automorphism(const GraphOfGroups& g, const FundamentalPresentation& p,
                                        const VertexAutomorphismData& data);

Word apply(const GraphOfGroups& g, const FundamentalPresentation& p, const Automorphism& a,
           const Word& w);

// compose(a, b) applies b first: apply(compose(a,b), w) = apply(a, apply(b, w)).
Automorphism compose(const GraphOfGroups& g, const FundamentalPresentation& p,
                     const Automorphism& a, const Automorphism& b);

// Inverse from construction data; throws for composites of non-invertible
// provenance or extensions without a supplied beta inverse.
Automorphism inverse_by_provenance(const GraphOfGroups& g, const FundamentalPresentation& p,
                                   const Automorphism& a);

Tri is_inner_with_witness(const GraphOfGroups& g, const FundamentalPresentation& p,
                          const Automorphism& a, const Word& m);

// Bounded existential search over witness words of length <= max_len.
struct InnerSearch {
    Tri found = Tri::Unknown;
    Word witness;
};
InnerSearch is_inner_bounded(const GraphOfGroups& g, const FundamentalPresentation& p,
                             const Automorphism& a, long long max_len = 6);

// Equality in Out: differ by an inner automorphism (witness check + bounded search).
Tri out_equal(const GraphOfGroups& g, const FundamentalPresentation& p, const Automorphism& a,
              const Automorphism& b, long long max_len = 6);

// Prop 3.1 relations: both return the composite's innerness with the
// prescribed witness; a false return on valid input is a bug.
bool check_vertex_relation(const GraphOfGroups& g, const FundamentalPresentation& p, int vertex,
                           const Word& z);
bool check_edge_relation(const GraphOfGroups& g, const FundamentalPresentation& p, int edge,
                         const Word& z);

struct RhoResult {
    Tri ok = Tri::Unknown;
    std::vector<Word> images;  // per vertex generator, words in G_v
    Word conjugator;           // m with i_m^-1 a mapping G_v to itself
    std::string reason;
};

RhoResult rho_restriction(const GraphOfGroups& g, const FundamentalPresentation& p,
                          const Automorphism& a, int vertex);

}  // namespace gog
