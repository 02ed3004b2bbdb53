#include "strand/thompson.hpp"

#include <algorithm>
#include <functional>

namespace strand {

const StrandDiagram& x0_diagram() {
  // Domain tree ((..).), range tree (.(..)): the map doubles near 0.
  static const StrandDiagram d = treepair_to_diagram(
      {tree_caret(tree_caret(tree_leaf(), tree_leaf()), tree_leaf()),
       tree_caret(tree_leaf(), tree_caret(tree_leaf(), tree_leaf()))});
  return d;
}

const StrandDiagram& x1_diagram() {
  // x0 nested under a passive left strand.
  static const StrandDiagram d = treepair_to_diagram(
      {tree_caret(tree_leaf(),
                  tree_caret(tree_caret(tree_leaf(), tree_leaf()), tree_leaf())),
       tree_caret(tree_leaf(),
                  tree_caret(tree_leaf(), tree_caret(tree_leaf(), tree_leaf())))});
  return d;
}

const StrandDiagram& generator_diagram(uint32_t gen, int sign) {
  static const StrandDiagram x0i = inverse(x0_diagram());
  static const StrandDiagram x1i = inverse(x1_diagram());
  if (gen > 1) throw ArityError("generator index not normalized");
  if (gen == 0) return sign > 0 ? x0_diagram() : x0i;
  return sign > 0 ? x1_diagram() : x1i;
}

StrandDiagram word_to_diagram(const Word& w) {
  StrandDiagram d = make_trivial(1);
  for (const Letter& l : w.letters) d = multiply(d, generator_diagram(l.gen, l.sign));
  return d;
}

StrandDiagram word_to_diagram(const std::string& text) {
  return word_to_diagram(parse_word(text));
}

namespace {

bool is_right_vine(const Tree& t) {
  int c = t.root;
  while (c >= 0) {
    if (t.carets[c].left >= 0) return false;
    c = t.carets[c].right;
  }
  return true;
}

// Removes the caret over leaves (k, k+1); both children must be leaves.
Tree remove_caret_at(const Tree& t, int target_leaf) {
  Tree out;
  int leaf = 0;
  std::vector<int> remap(t.carets.size(), -1);
  // Rebuild skipping the exposed caret whose left leaf index == target_leaf.
  std::function<int(int)> go = [&](int caret) -> int {
    if (caret < 0) {
      ++leaf;
      return -1;
    }
    const auto& c = t.carets[caret];
    if (c.left < 0 && c.right < 0 && leaf == target_leaf) {
      leaf += 2;
      return -1;  // caret collapses to a leaf
    }
    int l = go(c.left);
    int r = go(c.right);
    out.carets.push_back({l, r});
    return static_cast<int>(out.carets.size()) - 1;
  };
  out.root = go(t.root);
  return out;
}

// Word for the positive element whose reduced pair is (T, right vine).
// Inverse of the insertion rule: appending x_k grafts a caret at leaf k
// (valid while k <= leaves-2 before the graft).  Letters are recovered by
// repeatedly deleting an exposed caret at position k <= leaves-3, rightmost
// first, until a right vine remains.
Word positive_word(Tree t) {
  std::vector<Letter> rev;
  while (!is_right_vine(t)) {
    int m = t.leaf_count();
    // locate exposed carets and their left-leaf positions
    int best = -1;
    {
      int leaf = 0;
      std::function<void(int)> scan = [&](int caret) {
        if (caret < 0) {
          ++leaf;
          return;
        }
        const auto& c = t.carets[caret];
        if (c.left < 0 && c.right < 0) {
          if (leaf <= m - 3 && leaf > best) best = leaf;
          leaf += 2;
          return;
        }
        scan(c.left);
        scan(c.right);
      };
      scan(t.root);
    }
    if (best < 0) throw InternalError("no removable caret in a non-vine tree");
    rev.push_back({static_cast<uint32_t>(best), 1});
    t = remove_caret_at(t, best);
  }
  Word w;
  w.letters.assign(rev.rbegin(), rev.rend());
  return w;
}

}  // namespace

Word element_to_word(const StrandDiagram& d) {
  TreePair tp = diagram_to_treepair(d);
  Word w;
  // f = pos(domain) . pos(range)^-1
  Word wd = positive_word(tp.domain);
  Word wr = positive_word(tp.range);
  w.append(wd);
  w.append(wr.inverse());
  // letters use x_k sugar; renormalize over {x0, x1}
  return parse_word(word_to_text(w));
}

StrandDiagram element_power(const StrandDiagram& d, int k) {
  if (d.source_count() != 1 || d.sink_count() != 1)
    throw ArityError("element power needs a (1,1)-diagram");
  StrandDiagram base = k >= 0 ? d : inverse(d);
  int count = k >= 0 ? k : -k;
  StrandDiagram acc = make_trivial(1);
  for (int i = 0; i < count; ++i) acc = multiply(acc, base);
  return acc;
}

StrandDiagram conjugate(const StrandDiagram& f, const StrandDiagram& u) {
  return multiply(multiply(inverse(u), f), u);
}

}  // namespace strand
