#pragma once

#include "strand/diagram.hpp"
#include "strand/treepair.hpp"
#include "strand/word.hpp"

namespace strand {

// Reduced diagrams of the generators.
const StrandDiagram& x0_diagram();
const StrandDiagram& x1_diagram();
const StrandDiagram& generator_diagram(uint32_t gen, int sign);

// Multiplies generator diagrams in word order (reducing as it goes).
// The empty word gives the trivial (1,1)-diagram.
StrandDiagram word_to_diagram(const Word& w);
StrandDiagram word_to_diagram(const std::string& text);

// A word over {x0, x1} evaluating to d (generally non-geodesic).
// word_to_diagram(element_to_word(d)) == d.
Word element_to_word(const StrandDiagram& d);

// d^k for a (1,1)-diagram (k may be negative).
StrandDiagram element_power(const StrandDiagram& d, int k);

// reduce(u^-1 . f . u)
StrandDiagram conjugate(const StrandDiagram& f, const StrandDiagram& u);

}  // namespace strand
