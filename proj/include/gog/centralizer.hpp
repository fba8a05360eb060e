#pragma once

#include "gog/graph.hpp"

namespace gog {

struct CentralizerResult {
    std::optional<AbelianDescription> desc;
    std::string reason;  // set when desc is empty
};

// Z_{G_v}(G_e) for the oriented edge `end` (v = origin), as an abelian group
// with an exact discrete log. Falls back to Z(G_e) carried through the
// embedding at rigid/orbifold vertices when `jsj_asserted` (maximal
// elementary edge groups per the JSJ shape); reports a reason otherwise.
CentralizerResult centralizer_of_edge_image(const GraphOfGroups& g, EdgeEnd end,
                                            bool jsj_asserted);

}  // namespace gog
