// Independent oracle for multiplication in F via tree pairs: common
// refinement plus common-caret reduction, with no use of the strand-diagram
// rewriting path.  Test-only.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "strand/treepair.hpp"
#include "strand/word.hpp"

namespace oracle {

using strand::Tree;
using strand::TreePair;
using strand::Word;

struct Pair {
  Tree d, r;  // domain, range
};

inline Tree leaf() { return strand::tree_leaf(); }

inline Tree caret(const Tree& l, const Tree& r) { return strand::tree_caret(l, r); }

// Replaces leaf i of t by grafts[i].
inline Tree graft_leaves(const Tree& t, const std::vector<Tree>& grafts) {
  size_t next = 0;
  std::function<Tree(int)> go = [&](int c) -> Tree {
    if (c < 0) return grafts[next++];
    Tree l = go(t.carets[c].left);
    Tree r = go(t.carets[c].right);
    return caret(l, r);
  };
  Tree out = go(t.root);
  return out;
}

// Computes per-leaf grafts gx, gy with x . gx == y . gy (the common
// refinement of the two subdivisions).
inline void refine(const Tree& x, int cx, const Tree& y, int cy,
                   std::vector<Tree>& gx, std::vector<Tree>& gy) {
  auto subtree = [](const Tree& t, int c) {
    std::function<Tree(int)> copy = [&](int k) -> Tree {
      if (k < 0) return leaf();
      return caret(copy(t.carets[k].left), copy(t.carets[k].right));
    };
    return copy(c);
  };
  if (cx < 0) {
    gx.push_back(subtree(y, cy));
    std::function<void(int)> leaves = [&](int k) {
      if (k < 0) {
        gy.push_back(leaf());
        return;
      }
      leaves(y.carets[k].left);
      leaves(y.carets[k].right);
    };
    leaves(cy);
    return;
  }
  if (cy < 0) {
    gy.push_back(subtree(x, cx));
    std::function<void(int)> leaves = [&](int k) {
      if (k < 0) {
        gx.push_back(leaf());
        return;
      }
      leaves(x.carets[k].left);
      leaves(x.carets[k].right);
    };
    leaves(cx);
    return;
  }
  refine(x, x.carets[cx].left, y, y.carets[cy].left, gx, gy);
  refine(x, x.carets[cx].right, y, y.carets[cy].right, gx, gy);
}

// Removes carets exposed at the same leaf span in both trees, repeatedly.
inline void reduce_pair(Pair& p) {
  for (;;) {
    auto exposed = [](const Tree& t) {
      std::vector<int> out;
      int at = 0;
      std::function<void(int)> go = [&](int c) {
        if (c < 0) {
          ++at;
          return;
        }
        if (t.carets[c].left < 0 && t.carets[c].right < 0) {
          out.push_back(at);
          at += 2;
          return;
        }
        go(t.carets[c].left);
        go(t.carets[c].right);
      };
      go(t.root);
      return out;
    };
    auto ed = exposed(p.d);
    auto er = exposed(p.r);
    int common = -1;
    for (int a : ed)
      for (int b : er)
        if (a == b) common = a;
    if (common < 0) return;
    auto remove_at = [](const Tree& t, int target) {
      Tree out;
      int at = 0;
      std::function<int(int)> go = [&](int c) -> int {
        if (c < 0) {
          ++at;
          return -1;
        }
        const auto& k = t.carets[c];
        if (k.left < 0 && k.right < 0 && at == target) {
          at += 2;
          return -1;
        }
        int l = go(k.left);
        int r = go(k.right);
        out.carets.push_back({l, r});
        return static_cast<int>(out.carets.size()) - 1;
      };
      out.root = go(t.root);
      return out;
    };
    p.d = remove_at(p.d, common);
    p.r = remove_at(p.r, common);
  }
}

inline Pair multiply(const Pair& a, const Pair& b) {
  std::vector<Tree> gmidA, gmidB;
  refine(a.r, a.r.root, b.d, b.d.root, gmidA, gmidB);
  Pair out{graft_leaves(a.d, gmidA), graft_leaves(b.r, gmidB)};
  reduce_pair(out);
  return out;
}

inline Pair identity() { return Pair{leaf(), leaf()}; }

inline Pair inverse(const Pair& p) { return Pair{p.r, p.d}; }

inline Pair generator(uint32_t gen, int sign) {
  Pair x0{caret(caret(leaf(), leaf()), leaf()), caret(leaf(), caret(leaf(), leaf()))};
  Pair x1{caret(leaf(), x0.d), caret(leaf(), x0.r)};
  Pair g = gen == 0 ? x0 : x1;
  return sign > 0 ? g : inverse(g);
}

inline Pair from_word(const Word& w) {
  Pair acc = identity();
  for (const auto& l : w.letters) acc = multiply(acc, generator(l.gen, l.sign));
  return acc;
}

inline Pair from_treepair(const TreePair& t) { return Pair{t.domain, t.range}; }

inline bool pair_equal(const Pair& a, const Pair& b) {
  return strand::trees_equal(a.d, b.d) && strand::trees_equal(a.r, b.r);
}

}  // namespace oracle
