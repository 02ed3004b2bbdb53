#pragma once

#include <string>
#include <vector>

#include "strand/diagram.hpp"

namespace strand {

// Rooted binary tree; carets (interior nodes) stored by index, leaves
// implicit.  A tree with no carets is a single leaf.
struct Tree {
  struct Caret {
    int left = -1;   // child caret index, or -1 for a leaf
    int right = -1;
  };
  std::vector<Caret> carets;
  int root = -1;  // -1: single leaf

  int caret_count() const { return static_cast<int>(carets.size()); }
  int leaf_count() const { return caret_count() + 1; }
};

// Builds a caret over two subtrees (either may be a single leaf).
Tree tree_leaf();
Tree tree_caret(const Tree& left, const Tree& right);
Tree tree_right_vine(int leaves);
Tree tree_left_vine(int leaves);

// Depth of each leaf, left to right.
std::vector<int> leaf_depths(const Tree& t);

// Caret indices in infix order (left subtree, caret, right subtree).
std::vector<int> carets_infix(const Tree& t);

// Structural equality.
bool trees_equal(const Tree& a, const Tree& b);

std::string tree_to_text(const Tree& t);  // e.g. "((..).)"

struct TreePair {
  Tree domain;  // split tree, read off the top of the diagram
  Tree range;   // merge tree, read off the bottom
};

// True when no caret is an exposed pair in both trees at the same leaf span
// (equivalently, the associated diagram is reduced).
bool treepair_reduced(const TreePair& t);

// Mutually inverse bijections between reduced (1,1)-diagrams and reduced
// tree pairs.  diagram_to_treepair requires a reduced (1,1)-diagram.
TreePair diagram_to_treepair(const StrandDiagram& d);
StrandDiagram treepair_to_diagram(const TreePair& t);

}  // namespace strand
