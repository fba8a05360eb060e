#pragma once

#include "gog/automorphism.hpp"

namespace gog {

// Mini-language for building automorphisms on the command line:
//   twist(<edge>@<from|to>, <word>)
//   bitwist(<edge>, <word-at-from>, <word-at-to>)
//   extend(<vertex>; <gen>-><word>, ...; <edge>[@from|@to]:<word>, ...)
//   inner(<word>)
// composed left-to-right with ';' (the leftmost factor is applied first).
Automorphism parse_autospec(const std::string& text, const GraphOfGroups& g,
                            const FundamentalPresentation& p);

}  // namespace gog
