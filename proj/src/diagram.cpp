#include "strand/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace strand {

int StrandDiagram::norm() const {
  int n = 0;
  for (const auto& nd : nodes_)
    if (nd.alive && (nd.kind == NodeKind::Merge || nd.kind == NodeKind::Split))
      ++n;
  return n;
}

void StrandDiagram::compact() {
  std::vector<int32_t> remap(nodes_.size(), -1);
  std::vector<Node> fresh;
  fresh.reserve(nodes_.size());
  for (int32_t i = 0; i < static_cast<int32_t>(nodes_.size()); ++i) {
    if (!nodes_[i].alive) continue;
    remap[i] = static_cast<int32_t>(fresh.size());
    fresh.push_back(nodes_[i]);
  }
  for (auto& nd : fresh)
    for (int s = 0; s < port_count(nd.kind); ++s) {
      nd.port[s].node = remap[nd.port[s].node];
    }
  for (auto& s : sources_) s = remap[s];
  for (auto& s : sinks_) s = remap[s];
  nodes_ = std::move(fresh);
}

StrandDiagram make_trivial(int m) {
  if (m < 1) throw ArityError("trivial diagram needs at least one strand");
  StrandDiagram d;
  for (int i = 0; i < m; ++i) {
    int32_t src = d.add_node(NodeKind::Source);
    int32_t snk = d.add_node(NodeKind::Sink);
    d.connect({src, 0}, {snk, 0});
    d.sources().push_back(src);
    d.sinks().push_back(snk);
  }
  return d;
}

StrandDiagram make_single_merge(int m, int j) {
  if (m < 2 || j < 1 || j > m - 1)
    throw ArityError("single merge: need 1 <= j <= m-1, m >= 2");
  StrandDiagram d;
  int32_t mg = d.add_node(NodeKind::Merge);
  for (int i = 1; i <= m; ++i) {
    int32_t src = d.add_node(NodeKind::Source);
    d.sources().push_back(src);
    if (i == j) {
      d.connect({src, 0}, {mg, 0});
    } else if (i == j + 1) {
      d.connect({src, 0}, {mg, 1});
    }
  }
  for (int i = 1; i <= m - 1; ++i) {
    int32_t snk = d.add_node(NodeKind::Sink);
    d.sinks().push_back(snk);
    if (i == j) {
      d.connect({mg, 2}, {snk, 0});
    }
  }
  // passive strands
  int out = 1;
  for (int i = 1; i <= m; ++i) {
    if (i == j || i == j + 1) continue;
    if (out == j) ++out;
    d.connect({d.sources()[i - 1], 0}, {d.sinks()[out - 1], 0});
    ++out;
  }
  return d;
}

StrandDiagram make_single_split(int m, int j) {
  if (m < 1 || j < 1 || j > m)
    throw ArityError("single split: need 1 <= j <= m");
  return inverse(make_single_merge(m + 1, j));
}

StrandDiagram concat(const StrandDiagram& f, const StrandDiagram& g) {
  if (f.sink_count() != g.source_count())
    throw ArityError("concat: sink count of top != source count of bottom");
  StrandDiagram d = f;
  int32_t off = d.node_slots();
  // copy g's nodes
  for (int32_t i = 0; i < g.node_slots(); ++i) {
    NodeKind k = g.kind(i);
    int32_t id = d.add_node(k);
    if (!g.alive(i)) d.kill(id);
  }
  for (int32_t i = 0; i < g.node_slots(); ++i) {
    if (!g.alive(i)) continue;
    for (int s = 0; s < port_count(g.kind(i)); ++s) {
      PortRef q = g.peer(i, s);
      d.at({off + i, static_cast<int8_t>(s)}) = {off + q.node, q.slot};
    }
  }
  // splice sink t of f to source t of g, erasing the bivalent joints
  for (int t = 0; t < f.sink_count(); ++t) {
    int32_t snk = f.sinks()[t];
    int32_t src = g.sources()[t] + off;
    PortRef top = d.peer(snk, 0);
    PortRef bottom = d.peer(src, 0);
    d.connect(top, bottom);
    d.kill(snk);
    d.kill(src);
  }
  d.sinks().clear();
  for (int32_t s : g.sinks()) d.sinks().push_back(s + off);
  d.compact();
  return d;
}

StrandDiagram direct_sum(const StrandDiagram& f, const StrandDiagram& g) {
  StrandDiagram d = f;
  int32_t off = d.node_slots();
  for (int32_t i = 0; i < g.node_slots(); ++i) {
    NodeKind k = g.kind(i);
    int32_t id = d.add_node(k);
    if (!g.alive(i)) d.kill(id);
  }
  for (int32_t i = 0; i < g.node_slots(); ++i) {
    if (!g.alive(i)) continue;
    for (int s = 0; s < port_count(g.kind(i)); ++s) {
      PortRef q = g.peer(i, s);
      d.at({off + i, static_cast<int8_t>(s)}) = {off + q.node, q.slot};
    }
  }
  for (int32_t s : g.sources()) d.sources().push_back(s + off);
  for (int32_t s : g.sinks()) d.sinks().push_back(s + off);
  d.compact();
  return d;
}

StrandDiagram inverse(const StrandDiagram& f) {
  StrandDiagram d;
  // same node ids; kinds flipped, ports remapped
  for (int32_t i = 0; i < f.node_slots(); ++i) {
    NodeKind k = f.kind(i);
    NodeKind fk = k;
    switch (k) {
      case NodeKind::Source: fk = NodeKind::Sink; break;
      case NodeKind::Sink: fk = NodeKind::Source; break;
      case NodeKind::Merge: fk = NodeKind::Split; break;
      case NodeKind::Split: fk = NodeKind::Merge; break;
    }
    int32_t id = d.add_node(fk);
    if (!f.alive(i)) d.kill(id);
  }
  // slot map under the flip: split(in,outL,outR) <-> merge(inL,inR,out):
  //   merge slot 0 (inL)  -> split slot 1 (outL)
  //   merge slot 1 (inR)  -> split slot 2 (outR)
  //   merge slot 2 (out)  -> split slot 0 (in)
  //   split slot 0 (in)   -> merge slot 2 (out)
  //   split slot 1 (outL) -> merge slot 0 (inL)
  //   split slot 2 (outR) -> merge slot 1 (inR)
  auto flip_slot = [](NodeKind orig_kind, int slot) -> int8_t {
    if (orig_kind == NodeKind::Merge) return slot == 2 ? 0 : (slot == 0 ? 1 : 2);
    if (orig_kind == NodeKind::Split) return slot == 0 ? 2 : (slot == 1 ? 0 : 1);
    return 0;
  };
  for (int32_t i = 0; i < f.node_slots(); ++i) {
    if (!f.alive(i)) continue;
    for (int s = 0; s < port_count(f.kind(i)); ++s) {
      PortRef q = f.peer(i, s);
      d.at({i, flip_slot(f.kind(i), s)}) = {q.node, flip_slot(f.kind(q.node), q.slot)};
    }
  }
  d.sources() = f.sinks();
  d.sinks() = f.sources();
  d.compact();
  return d;
}

namespace {

// Shared reduction engine.  pop_index selects which worklist entry to take;
// index 0 with a sorted worklist gives the deterministic lowest-id order.
template <typename PopIndex>
StrandDiagram reduce_impl(const StrandDiagram& input, PopIndex pop_index) {
  StrandDiagram d = input;
  std::vector<int32_t> work;
  std::vector<char> queued(d.node_slots(), 0);
  for (int32_t i = 0; i < d.node_slots(); ++i)
    if (d.alive(i)) {
      work.push_back(i);
      queued[i] = 1;
    }
  auto enqueue = [&](int32_t v) {
    if (v < 0 || !d.alive(v)) return;
    if (!queued[v]) {
      queued[v] = 1;
      work.insert(std::lower_bound(work.begin(), work.end(), v), v);
    }
  };
  while (!work.empty()) {
    size_t idx = pop_index(work.size());
    int32_t v = work[idx];
    work.erase(work.begin() + idx);
    queued[v] = 0;
    if (!d.alive(v)) continue;
    NodeKind k = d.kind(v);
    if (k == NodeKind::Split) {
      // R1: both outputs of v feed matching inputs of one merge
      PortRef l = d.peer(v, 1), r = d.peer(v, 2);
      if (l.node == r.node && d.kind(l.node) == NodeKind::Merge && l.slot == 0 &&
          r.slot == 1) {
        int32_t m = l.node;
        PortRef a = d.peer(v, 0);
        PortRef c = d.peer(m, 2);
        d.kill(v);
        d.kill(m);
        d.connect(a, c);
        enqueue(a.node);
        enqueue(c.node);
        for (int s = 0; s < port_count(d.kind(a.node)); ++s)
          enqueue(d.peer(a.node, s).node);
        for (int s = 0; s < port_count(d.kind(c.node)); ++s)
          enqueue(d.peer(c.node, s).node);
      }
    } else if (k == NodeKind::Merge) {
      // R2: output of v feeds a split
      PortRef o = d.peer(v, 2);
      if (d.kind(o.node) == NodeKind::Split && o.slot == 0) {
        int32_t s = o.node;
        PortRef aL = d.peer(v, 0), aR = d.peer(v, 1);
        PortRef cL = d.peer(s, 1), cR = d.peer(s, 2);
        d.kill(v);
        d.kill(s);
        d.connect(aL, cL);
        d.connect(aR, cR);
        for (PortRef p : {aL, aR, cL, cR}) {
          enqueue(p.node);
          for (int t = 0; t < port_count(d.kind(p.node)); ++t)
            enqueue(d.peer(p.node, t).node);
        }
      }
    }
  }
  d.compact();
  return d;
}

}  // namespace

StrandDiagram reduce(const StrandDiagram& f) {
  return reduce_impl(f, [](size_t) { return size_t{0}; });
}

StrandDiagram reduce_random_order(const StrandDiagram& f, std::mt19937_64& rng) {
  return reduce_impl(f, [&rng](size_t n) { return static_cast<size_t>(rng() % n); });
}

StrandDiagram multiply(const StrandDiagram& f, const StrandDiagram& g) {
  return reduce(concat(f, g));
}

// ---------------------------------------------------------------------------
// Canonical traversal.
//
// Walk each strand from the sources in boundary order, descending through
// splits left-then-right.  Merges are walked through on first arrival and
// emitted as back references afterwards.  The token stream reconstructs the
// diagram, so equal keys give isomorphic diagrams.

namespace {

void put_varint(std::string& out, uint32_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>(0x80 | (v & 0x7f)));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

struct Walker {
  const StrandDiagram& d;
  std::string key;
  std::vector<int32_t> order;          // nodes in first-visit order
  std::vector<int32_t> visit_idx;      // node -> visit index
  std::vector<int32_t> merge_idx;      // node -> merge arrival number
  std::vector<int32_t> sink_visit_seq; // visit order of sinks
  int32_t next_merge = 0;

  explicit Walker(const StrandDiagram& dd)
      : d(dd), visit_idx(dd.node_slots(), -1), merge_idx(dd.node_slots(), -1) {}

  void see(int32_t v) {
    visit_idx[v] = static_cast<int32_t>(order.size());
    order.push_back(v);
  }

  void walk_from(PortRef entry) {
    std::vector<PortRef> stack;
    PortRef cur = entry;
    for (;;) {
      int32_t v = cur.node;
      switch (d.kind(v)) {
        case NodeKind::Sink:
          key.push_back(0x01);
          see(v);
          sink_visit_seq.push_back(v);
          if (stack.empty()) return;
          cur = stack.back();
          stack.pop_back();
          continue;
        case NodeKind::Split:
          if (visit_idx[v] >= 0)
            throw InternalError("canonical walk revisited a split (cycle)");
          key.push_back(0x02);
          see(v);
          stack.push_back(d.peer(v, 2));
          cur = d.peer(v, 1);
          continue;
        case NodeKind::Merge:
          if (visit_idx[v] < 0) {
            key.push_back(0x03);
            key.push_back(static_cast<char>(cur.slot));  // arrival port (0=L,1=R)
            see(v);
            merge_idx[v] = next_merge++;
            cur = d.peer(v, 2);
            continue;
          }
          key.push_back(0x04);
          key.push_back(static_cast<char>(cur.slot));
          put_varint(key, static_cast<uint32_t>(merge_idx[v]));
          if (stack.empty()) return;
          cur = stack.back();
          stack.pop_back();
          continue;
        case NodeKind::Source:
          throw InternalError("canonical walk reached a source from below");
      }
    }
  }

  void run() {
    put_varint(key, static_cast<uint32_t>(d.sources().size()));
    put_varint(key, static_cast<uint32_t>(d.sinks().size()));
    for (int32_t s : d.sources()) {
      key.push_back(0x05);
      see(s);
      walk_from(d.peer(s, 0));
    }
    // bind sink boundary order to visitation order
    key.push_back(0x00);
    std::vector<int32_t> pos(d.node_slots(), -1);
    for (size_t i = 0; i < sink_visit_seq.size(); ++i)
      pos[sink_visit_seq[i]] = static_cast<int32_t>(i);
    for (int32_t s : d.sinks()) {
      if (pos[s] < 0) throw InternalError("sink not reached by canonical walk");
      put_varint(key, static_cast<uint32_t>(pos[s]));
    }
  }
};

}  // namespace

std::string canonical_key(const StrandDiagram& f) {
  Walker w(f);
  w.run();
  return w.key;
}

std::vector<int32_t> canonical_order(const StrandDiagram& f) {
  Walker w(f);
  w.run();
  return w.order;
}

bool diagrams_equal(const StrandDiagram& f, const StrandDiagram& g) {
  return canonical_key(f) == canonical_key(g);
}

// ---------------------------------------------------------------------------
// Validation

std::optional<Violation> validate(const StrandDiagram& f) {
  if (f.source_count() == 0 || f.sink_count() == 0)
    return Violation{"degenerate shape: diagrams need at least one source and one sink"};
  int32_t n = f.node_slots();
  std::vector<char> is_source(n, 0), is_sink(n, 0);
  for (int32_t s : f.sources()) {
    if (!f.alive(s) || f.kind(s) != NodeKind::Source)
      return Violation{"source list entry is not a live source node", s};
    if (is_source[s]) return Violation{"duplicate source list entry", s};
    is_source[s] = 1;
  }
  for (int32_t s : f.sinks()) {
    if (!f.alive(s) || f.kind(s) != NodeKind::Sink)
      return Violation{"sink list entry is not a live sink node", s};
    if (is_sink[s]) return Violation{"duplicate sink list entry", s};
    is_sink[s] = 1;
  }
  int merges = 0, splits = 0;
  for (int32_t v = 0; v < n; ++v) {
    if (!f.alive(v)) continue;
    NodeKind k = f.kind(v);
    if (k == NodeKind::Source && !is_source[v])
      return Violation{"stray source node not in boundary order", v};
    if (k == NodeKind::Sink && !is_sink[v])
      return Violation{"stray sink node not in boundary order", v};
    if (k == NodeKind::Merge) ++merges;
    if (k == NodeKind::Split) ++splits;
    for (int s = 0; s < port_count(k); ++s) {
      PortRef q = f.peer(v, s);
      if (!q.valid() || !f.alive(q.node))
        return Violation{"unwired or dangling port", v};
      if (q.slot < 0 || q.slot >= port_count(f.kind(q.node)))
        return Violation{"port wired to an invalid slot", v};
      if (f.peer(q.node, q.slot) != PortRef{v, static_cast<int8_t>(s)})
        return Violation{"asymmetric port wiring", v};
      if (is_out_slot(k, s) == is_out_slot(f.kind(q.node), q.slot))
        return Violation{"edge joins two ports of the same polarity", v};
    }
  }
  if (splits - merges != f.sink_count() - f.source_count())
    return Violation{"split/merge count does not balance boundary counts"};
  // acyclicity (Kahn over out-edges)
  std::vector<int> indeg(n, 0);
  std::vector<int32_t> topo;
  for (int32_t v = 0; v < n; ++v) {
    if (!f.alive(v)) continue;
    NodeKind k = f.kind(v);
    indeg[v] = (k == NodeKind::Source) ? 0 : (k == NodeKind::Merge ? 2 : 1);
  }
  for (int32_t s : f.sources()) topo.push_back(s);
  size_t head = 0;
  int seen = 0;
  while (head < topo.size()) {
    int32_t v = topo[head++];
    ++seen;
    NodeKind k = f.kind(v);
    for (int s = 0; s < port_count(k); ++s) {
      if (!is_out_slot(k, s)) continue;
      PortRef q = f.peer(v, s);
      if (--indeg[q.node] == 0) topo.push_back(q.node);
    }
  }
  int live = 0;
  for (int32_t v = 0; v < n; ++v)
    if (f.alive(v)) ++live;
  if (seen != live) {
    for (int32_t v = 0; v < n; ++v)
      if (f.alive(v) && indeg[v] > 0 && f.kind(v) != NodeKind::Source)
        return Violation{"cycle or node unreachable from the sources", v};
    return Violation{"cycle detected"};
  }
  // every node reaches a sink (out-degree is always >= 1 except sinks, and the
  // graph is finite and acyclic, so reachability from sources suffices).
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Source: return "source";
    case NodeKind::Sink: return "sink";
    case NodeKind::Merge: return "merge";
    case NodeKind::Split: return "split";
  }
  return "?";
}

const char* out_port_name(NodeKind k, int slot) {
  if (k == NodeKind::Split) return slot == 1 ? "left" : "right";
  return "out";
}

const char* in_port_name(NodeKind k, int slot) {
  if (k == NodeKind::Merge) return slot == 0 ? "left" : "right";
  return "in";
}

}  // namespace

std::string to_json_text(const StrandDiagram& f) {
  using nlohmann::ordered_json;
  std::vector<int32_t> order = canonical_order(f);
  std::vector<int32_t> id(f.node_slots(), -1);
  for (size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<int32_t>(i);

  ordered_json j;
  j["sources"] = ordered_json::array();
  for (int32_t s : f.sources()) j["sources"].push_back(id[s]);
  j["sinks"] = ordered_json::array();
  for (int32_t s : f.sinks()) j["sinks"].push_back(id[s]);
  j["nodes"] = ordered_json::array();
  for (int32_t v : order)
    j["nodes"].push_back({{"id", id[v]}, {"kind", kind_name(f.kind(v))}});
  j["edges"] = ordered_json::array();
  // edges sorted by renumbered (from, from_slot)
  std::vector<std::tuple<int32_t, int, int32_t, int>> edges;
  for (int32_t v : order) {
    NodeKind k = f.kind(v);
    for (int s = 0; s < port_count(k); ++s) {
      if (!is_out_slot(k, s)) continue;
      PortRef q = f.peer(v, s);
      edges.emplace_back(id[v], s, id[q.node], q.slot);
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<NodeKind> kind_of(order.size());
  for (size_t i = 0; i < order.size(); ++i) kind_of[i] = f.kind(order[i]);
  for (auto& [a, as, b, bs] : edges) {
    j["edges"].push_back({{"from", a},
                          {"from_port", out_port_name(kind_of[a], as)},
                          {"to", b},
                          {"to_port", in_port_name(kind_of[b], bs)}});
  }
  return j.dump(2) + "\n";
}

StrandDiagram diagram_from_json_text(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(Violation{std::string("json parse error: ") + e.what()});
  }
  StrandDiagram d;
  std::map<int64_t, int32_t> ids;
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw ValidationError(Violation{"missing nodes array"});
  for (auto& nj : j["nodes"]) {
    int64_t ext = nj.at("id").get<int64_t>();
    std::string ks = nj.at("kind").get<std::string>();
    NodeKind k;
    if (ks == "source") k = NodeKind::Source;
    else if (ks == "sink") k = NodeKind::Sink;
    else if (ks == "merge") k = NodeKind::Merge;
    else if (ks == "split") k = NodeKind::Split;
    else throw ValidationError(Violation{"unknown node kind: " + ks});
    if (ids.count(ext)) throw ValidationError(Violation{"duplicate node id"});
    ids[ext] = d.add_node(k);
  }
  auto lookup = [&](int64_t ext) -> int32_t {
    auto it = ids.find(ext);
    if (it == ids.end())
      throw ValidationError(Violation{"edge references unknown node id"});
    return it->second;
  };
  auto out_slot = [&](int32_t v, const std::string& p) -> int {
    NodeKind k = d.kind(v);
    if (k == NodeKind::Split) {
      if (p == "left") return 1;
      if (p == "right") return 2;
    } else if ((k == NodeKind::Source || k == NodeKind::Merge) && p == "out") {
      return k == NodeKind::Source ? 0 : 2;
    }
    throw ValidationError(
        Violation{"degree error: port '" + p + "' is not an output of this node kind", v});
  };
  auto in_slot = [&](int32_t v, const std::string& p) -> int {
    NodeKind k = d.kind(v);
    if (k == NodeKind::Merge) {
      if (p == "left") return 0;
      if (p == "right") return 1;
    } else if ((k == NodeKind::Sink || k == NodeKind::Split) && p == "in") {
      return 0;
    }
    throw ValidationError(
        Violation{"degree error: port '" + p + "' is not an input of this node kind", v});
  };
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ValidationError(Violation{"missing edges array"});
  for (auto& ej : j["edges"]) {
    int32_t a = lookup(ej.at("from").get<int64_t>());
    int32_t b = lookup(ej.at("to").get<int64_t>());
    int as = out_slot(a, ej.at("from_port").get<std::string>());
    int bs = in_slot(b, ej.at("to_port").get<std::string>());
    if (d.peer(a, as).valid())
      throw ValidationError(Violation{"degree error: output port used twice", a});
    if (d.peer(b, bs).valid())
      throw ValidationError(Violation{"degree error: input port used twice", b});
    d.connect({a, static_cast<int8_t>(as)}, {b, static_cast<int8_t>(bs)});
  }
  for (auto& sj : j.at("sources")) d.sources().push_back(lookup(sj.get<int64_t>()));
  for (auto& sj : j.at("sinks")) d.sinks().push_back(lookup(sj.get<int64_t>()));
  if (auto v = validate(d)) throw ValidationError(*v);
  return d;
}

std::string to_dot(const StrandDiagram& f, const std::string& name) {
  std::ostringstream os;
  std::vector<int32_t> order = canonical_order(f);
  std::vector<int32_t> id(f.node_slots(), -1);
  for (size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<int32_t>(i);
  os << "digraph " << name << " {\n  rankdir=TB;\n";
  os << "  { rank=source;";
  for (int32_t s : f.sources()) os << " n" << id[s] << ";";
  os << " }\n  { rank=sink;";
  for (int32_t s : f.sinks()) os << " n" << id[s] << ";";
  os << " }\n";
  for (int32_t v : order) {
    os << "  n" << id[v];
    switch (f.kind(v)) {
      case NodeKind::Source: os << " [shape=circle, label=\"\", width=0.12]"; break;
      case NodeKind::Sink: os << " [shape=doublecircle, label=\"\", width=0.08]"; break;
      case NodeKind::Split: os << " [shape=triangle, label=\"\"]"; break;
      case NodeKind::Merge: os << " [shape=invtriangle, label=\"\"]"; break;
    }
    os << ";\n";
  }
  std::vector<std::tuple<int32_t, int, int32_t, int>> edges;
  for (int32_t v : order) {
    NodeKind k = f.kind(v);
    for (int s = 0; s < port_count(k); ++s) {
      if (!is_out_slot(k, s)) continue;
      PortRef q = f.peer(v, s);
      edges.emplace_back(id[v], s, id[q.node], q.slot);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (auto& [a, as, b, bs] : edges) {
    os << "  n" << a << " -> n" << b;
    NodeKind ka = f.kind(order[a]);
    if (ka == NodeKind::Split) os << " [taillabel=\"" << (as == 1 ? "L" : "R") << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace strand
