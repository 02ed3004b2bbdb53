#include "strand/treepair.hpp"

#include <functional>
#include <sstream>

namespace strand {

Tree tree_leaf() { return Tree{}; }

namespace {

// Appends src's carets into dst, returning the new index of src's root
// (or -1 when src is a leaf).
int graft(Tree& dst, const Tree& src) {
  if (src.root < 0) return -1;
  int off = dst.caret_count();
  for (const auto& c : src.carets) {
    Tree::Caret nc;
    nc.left = c.left < 0 ? -1 : c.left + off;
    nc.right = c.right < 0 ? -1 : c.right + off;
    dst.carets.push_back(nc);
  }
  return src.root + off;
}

}  // namespace

Tree tree_caret(const Tree& left, const Tree& right) {
  Tree t;
  int l = graft(t, left);
  int r = graft(t, right);
  t.carets.push_back({l, r});
  t.root = t.caret_count() - 1;
  return t;
}

Tree tree_right_vine(int leaves) {
  if (leaves < 1) throw ArityError("vine needs at least one leaf");
  Tree t = tree_leaf();
  for (int i = 1; i < leaves; ++i) t = tree_caret(tree_leaf(), t);
  return t;
}

Tree tree_left_vine(int leaves) {
  if (leaves < 1) throw ArityError("vine needs at least one leaf");
  Tree t = tree_leaf();
  for (int i = 1; i < leaves; ++i) t = tree_caret(t, tree_leaf());
  return t;
}

std::vector<int> leaf_depths(const Tree& t) {
  std::vector<int> out;
  std::function<void(int, int)> go = [&](int caret, int depth) {
    if (caret < 0) {
      out.push_back(depth);
      return;
    }
    go(t.carets[caret].left, depth + 1);
    go(t.carets[caret].right, depth + 1);
  };
  go(t.root, 0);
  return out;
}

std::vector<int> carets_infix(const Tree& t) {
  std::vector<int> out;
  std::function<void(int)> go = [&](int caret) {
    if (caret < 0) return;
    go(t.carets[caret].left);
    out.push_back(caret);
    go(t.carets[caret].right);
  };
  go(t.root);
  return out;
}

bool trees_equal(const Tree& a, const Tree& b) {
  std::function<bool(int, int)> eq = [&](int x, int y) {
    if ((x < 0) != (y < 0)) return false;
    if (x < 0) return true;
    return eq(a.carets[x].left, b.carets[y].left) &&
           eq(a.carets[x].right, b.carets[y].right);
  };
  return eq(a.root, b.root);
}

std::string tree_to_text(const Tree& t) {
  std::ostringstream os;
  std::function<void(int)> go = [&](int caret) {
    if (caret < 0) {
      os << '.';
      return;
    }
    os << '(';
    go(t.carets[caret].left);
    go(t.carets[caret].right);
    os << ')';
  };
  go(t.root);
  return os.str();
}

bool treepair_reduced(const TreePair& t) {
  // A common caret is one whose two leaves are siblings at the same leaf
  // position in both trees.  Compare leaf index spans of exposed carets.
  auto exposed = [](const Tree& tr) {
    std::vector<char> out(tr.leaf_count(), 0);
    int leaf = 0;
    std::function<void(int)> go = [&](int caret) {
      if (caret < 0) {
        ++leaf;
        return;
      }
      if (tr.carets[caret].left < 0 && tr.carets[caret].right < 0)
        out[leaf] = 1;  // caret over leaves (leaf, leaf+1)
      go(tr.carets[caret].left);
      go(tr.carets[caret].right);
    };
    go(tr.root);
    return out;
  };
  if (t.domain.leaf_count() != t.range.leaf_count())
    throw ArityError("tree pair with unequal leaf counts");
  auto a = exposed(t.domain), b = exposed(t.range);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

TreePair diagram_to_treepair(const StrandDiagram& d) {
  if (d.source_count() != 1 || d.sink_count() != 1)
    throw ArityError("tree pair extraction needs a (1,1)-diagram");
  TreePair out;

  // Domain: descend through splits from the source.
  std::function<Tree(PortRef)> down = [&](PortRef p) -> Tree {
    if (d.kind(p.node) != NodeKind::Split) return tree_leaf();
    return tree_caret(down(d.peer(p.node, 1)), down(d.peer(p.node, 2)));
  };
  out.domain = down(d.peer(d.sources()[0], 0));

  // Range: ascend through merges from the sink.
  std::function<Tree(PortRef)> up = [&](PortRef p) -> Tree {
    if (d.kind(p.node) != NodeKind::Merge) return tree_leaf();
    return tree_caret(up(d.peer(p.node, 0)), up(d.peer(p.node, 1)));
  };
  out.range = up(d.peer(d.sinks()[0], 0));

  if (out.domain.leaf_count() != out.range.leaf_count())
    throw InternalError(
        "diagram is not a split-tree over a merge-tree (not reduced?)");
  return out;
}

StrandDiagram treepair_to_diagram(const TreePair& t) {
  if (t.domain.leaf_count() != t.range.leaf_count())
    throw ArityError("tree pair with unequal leaf counts");
  StrandDiagram d;
  int32_t src = d.add_node(NodeKind::Source);
  int32_t snk = d.add_node(NodeKind::Sink);
  d.sources().push_back(src);
  d.sinks().push_back(snk);

  std::vector<PortRef> mid_top, mid_bottom;
  std::function<void(int, PortRef)> build_splits = [&](int caret, PortRef parent) {
    if (caret < 0) {
      mid_top.push_back(parent);
      return;
    }
    int32_t s = d.add_node(NodeKind::Split);
    d.connect(parent, {s, 0});
    build_splits(t.domain.carets[caret].left, {s, 1});
    build_splits(t.domain.carets[caret].right, {s, 2});
  };
  std::function<void(int, PortRef)> build_merges = [&](int caret, PortRef parent) {
    if (caret < 0) {
      mid_bottom.push_back(parent);
      return;
    }
    int32_t m = d.add_node(NodeKind::Merge);
    d.connect(parent, {m, 2});
    build_merges(t.range.carets[caret].left, {m, 0});
    build_merges(t.range.carets[caret].right, {m, 1});
  };

  // Wire the source's strand through both trees.  The recursion leaves the
  // pending port unwired until the matching mid strand is connected.
  if (t.domain.root < 0 && t.range.root < 0) {
    d.connect({src, 0}, {snk, 0});
    return d;
  }
  std::vector<PortRef> pending_top, pending_bottom;
  build_splits(t.domain.root, {src, 0});
  build_merges(t.range.root, {snk, 0});
  if (mid_top.size() != mid_bottom.size())
    throw InternalError("mid strand mismatch");
  for (size_t i = 0; i < mid_top.size(); ++i) {
    // build_* already connected parent ports; mid strands connect here.
    d.connect(mid_top[i], mid_bottom[i]);
  }
  return d;
}

}  // namespace strand
