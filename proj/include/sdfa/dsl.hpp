#pragma once

#include <string>
#include <vector>

#include "sdfa/ring.hpp"

namespace sdfa {

// Ring-spec grammar (whitespace allowed between tokens):
//
//   ring  := zn(N)
//          | prod(ring, ring [, ring ...])
//          | gf(P, [c0,c1,...])          irreducible monic, low-to-high
//          | polyq(P, [c0,c1,...])       monic, low-to-high
//          | idealize(ring; mod=0)       M = R
//          | idealize(ring; mod=[g,..])  M = R / (g,..)
//          | amalg(ring, ring, hom=NAME, j=[g,..])   NAME in {id, mod}
//
//   ideal := ideal(ring; gens=[e,..])
//
// Elements are written in the documented per-construction encoding: a plain
// integer index, or tuple sugar (e1,..,ek) for product / idealization /
// amalgamation rings. Errors carry the byte position.

RingPtr parse_ring_spec(const std::string& text);

struct ParsedIdeal {
    RingPtr ring;
    Ideal ideal;
};
// Accepts either "ideal(<ring>;gens=[...])" or a bare ring spec (yielding
// the zero ideal).
ParsedIdeal parse_ideal_spec(const std::string& text);

// One element in the ring's encoding ("7" or "(0,0,1)").
int parse_element(const std::string& text, const RingPtr& ring);

// "[e1,e2,...]", "(e)", "e1,e2" or "" for the empty list.
std::vector<int> parse_element_list(const std::string& text, const RingPtr& ring);

}  // namespace sdfa
