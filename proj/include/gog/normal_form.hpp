#pragma once

#include <optional>

#include "gog/presentation.hpp"

namespace gog {

// Membership of a vertex-group word in the edge-group image at one end.
// edge_elt is the edge-group element realizing it (valid when in == Yes).
struct MemberResult {
    Tri in = Tri::Unknown;
    Word edge_elt;
};

MemberResult edge_member(const GraphOfGroups& g, EdgeEnd end, const Word& u);

// emb_other(emb_end^-1(u)): carries u across the edge; Yes/No/Unknown as for
// membership, with the transported word on Yes.
struct TransportResult {
    Tri in = Tri::Unknown;
    Word word;
};

TransportResult edge_transport(const GraphOfGroups& g, EdgeEnd end, const Word& u);

struct NormalFormResult {
    Word word;        // pinch-free presentation word equal to the input
    Tri trivial;      // identity verdict (Britton)
    bool approximate = false;  // a membership query came back unknown
};

// Pinch reduction over the maximal subtree. Words are over the presentation
// generators (vertex generators and stable letters of non-subtree edges).
NormalFormResult normal_form_full(const GraphOfGroups& g, const FundamentalPresentation& p,
                                  const Word& w);

Word normal_form(const GraphOfGroups& g, const FundamentalPresentation& p, const Word& w);

Tri word_trivial(const GraphOfGroups& g, const FundamentalPresentation& p, const Word& w);

Tri words_equal(const GraphOfGroups& g, const FundamentalPresentation& p, const Word& a,
                const Word& b);

// Word over presentation generators from text (edge letters = edge ids).
Word parse_presentation_word(const std::string& text, const GraphOfGroups& g,
                             const FundamentalPresentation& p);

}  // namespace gog
