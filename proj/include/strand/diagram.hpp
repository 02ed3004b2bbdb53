#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace strand {

// ---------------------------------------------------------------------------
// Errors

struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Invariant violation report produced by validate().
struct Violation {
  std::string what;
  int32_t node = -1;
};

struct ValidationError : std::runtime_error {
  Violation violation;
  explicit ValidationError(Violation v)
      : std::runtime_error(v.what), violation(std::move(v)) {}
};

#define STRAND_CHECK(cond, msg)                  \
  do {                                           \
    if (!(cond)) throw ::strand::InternalError(msg); \
  } while (0)

// ---------------------------------------------------------------------------
// Core graph representation.
//
// A strand diagram is a planar directed acyclic graph drawn in a rectangle:
// sources on the top edge, sinks on the bottom edge, interior nodes are
// merges (two ordered inputs, one output) and splits (one input, two ordered
// outputs).  Every port carries exactly one edge, so edges are stored
// implicitly as symmetric port-to-port links.
//
// Port slots:
//   source: 0 = out
//   sink:   0 = in
//   split:  0 = in,      1 = left out, 2 = right out
//   merge:  0 = left in, 1 = right in, 2 = out

enum class NodeKind : uint8_t { Source, Sink, Merge, Split };

struct PortRef {
  int32_t node = -1;
  int8_t slot = -1;

  bool operator==(const PortRef&) const = default;
  bool valid() const { return node >= 0; }
};

inline bool is_out_slot(NodeKind k, int slot) {
  switch (k) {
    case NodeKind::Source: return slot == 0;
    case NodeKind::Sink: return false;
    case NodeKind::Split: return slot == 1 || slot == 2;
    case NodeKind::Merge: return slot == 2;
  }
  return false;
}

inline int port_count(NodeKind k) {
  return (k == NodeKind::Source || k == NodeKind::Sink) ? 1 : 3;
}

class StrandDiagram {
 public:
  struct Node {
    NodeKind kind = NodeKind::Source;
    bool alive = false;
    PortRef port[3];
  };

  StrandDiagram() = default;

  int32_t add_node(NodeKind k) {
    nodes_.push_back(Node{k, true, {}});
    return static_cast<int32_t>(nodes_.size() - 1);
  }

  void connect(PortRef a, PortRef b) {
    at(a) = b;
    at(b) = a;
  }

  PortRef& at(PortRef p) { return nodes_[p.node].port[p.slot]; }
  const PortRef& at(PortRef p) const { return nodes_[p.node].port[p.slot]; }
  PortRef peer(int32_t node, int slot) const { return nodes_[node].port[slot]; }

  NodeKind kind(int32_t node) const { return nodes_[node].kind; }
  bool alive(int32_t node) const {
    return node >= 0 && node < static_cast<int32_t>(nodes_.size()) &&
           nodes_[node].alive;
  }
  void kill(int32_t node) { nodes_[node].alive = false; }

  int32_t node_slots() const { return static_cast<int32_t>(nodes_.size()); }

  const std::vector<int32_t>& sources() const { return sources_; }
  const std::vector<int32_t>& sinks() const { return sinks_; }
  std::vector<int32_t>& sources() { return sources_; }
  std::vector<int32_t>& sinks() { return sinks_; }

  int source_count() const { return static_cast<int>(sources_.size()); }
  int sink_count() const { return static_cast<int>(sinks_.size()); }

  // Number of interior nodes (merges plus splits).
  int norm() const;

  // Renumbers alive nodes densely, preserving relative order of ids.
  void compact();

 private:
  std::vector<Node> nodes_;
  std::vector<int32_t> sources_;
  std::vector<int32_t> sinks_;
};

// ---------------------------------------------------------------------------
// Groupoid operations.  All operations are pure: they take diagrams by value
// or const reference and return fresh diagrams.

// The (m,m)-diagram with m parallel strands and no interior nodes.
StrandDiagram make_trivial(int m);

// Single-merge (m, m-1)-diagram: one merge joining strands j and j+1
// (1-based j, 1 <= j <= m-1).
StrandDiagram make_single_merge(int m, int j);

// Single-split (m, m+1)-diagram: one split on strand j (1-based).
StrandDiagram make_single_split(int m, int j);

// Concatenation f.g with f on top; sinks(f) must equal sources(g) in count.
// The result is not reduced in general.
StrandDiagram concat(const StrandDiagram& f, const StrandDiagram& g);

// f placed to the left of g.
StrandDiagram direct_sum(const StrandDiagram& f, const StrandDiagram& g);

// Vertical flip: sources <-> sinks, merges <-> splits, left/right preserved.
StrandDiagram inverse(const StrandDiagram& f);

// Applies the two local moves to a fixed point:
//   R1: a split whose left/right outputs are the left/right inputs of one
//       merge collapses to a single edge;
//   R2: a merge whose output feeds a split becomes two parallel edges.
// Deterministic worklist order (lowest node id first); the result is the
// unique reduced form.
StrandDiagram reduce(const StrandDiagram& f);

// reduce() with a caller-supplied worklist order, for confluence testing.
StrandDiagram reduce_random_order(const StrandDiagram& f, std::mt19937_64& rng);

// reduce(concat(f, g)).
StrandDiagram multiply(const StrandDiagram& f, const StrandDiagram& g);

inline int norm(const StrandDiagram& f) { return f.norm(); }

// Canonical traversal key: equal keys <=> isomorphism respecting boundary
// order and left/right ports.  Valid on any diagram; on reduced diagrams it
// is the canonical form used for equality and BFS state dedup.
std::string canonical_key(const StrandDiagram& f);

// Both inputs must be reduced.
bool diagrams_equal(const StrandDiagram& f, const StrandDiagram& g);

// Checks every structural invariant; returns the first violation found.
std::optional<Violation> validate(const StrandDiagram& f);

// Canonical node numbering (first-visit order of the canonical traversal).
// Used by serialization so that node ids never carry meaning.
std::vector<int32_t> canonical_order(const StrandDiagram& f);

// JSON serialization (schema documented in README).  to_json_text emits
// canonically renumbered output; round trips are byte-identical.
std::string to_json_text(const StrandDiagram& f);
StrandDiagram diagram_from_json_text(const std::string& text);

// DOT export: splits as triangles, merges as inverted triangles.
std::string to_dot(const StrandDiagram& f, const std::string& name = "strand");

}  // namespace strand
