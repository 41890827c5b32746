#pragma once

#include <string>
#include <vector>

#include "aggnet/errors.hpp"

namespace aggnet {

// Nodes are labeled 1..N, matching the usual numbering of reference
// topologies such as the 14-node NSFNET.
using NodeId = int;

struct Link {
  NodeId src = 0;
  NodeId dst = 0;
  bool operator==(const Link&) const = default;
};

// Directed fiber graph. Built from an undirected edge list; every edge line
// contributes both directed links, so the link set is symmetric. Immutable
// after parsing and safe to share across threads.
class Topology {
 public:
  // Text grammar (line based, '#' starts a comment):
  //   nodes N
  //   link U V        one per undirected edge, 1 <= U,V <= N
  static Topology parse(const std::string& text);
  static Topology load(const std::string& path);

  int node_count() const { return node_count_; }
  const std::vector<Link>& links() const { return links_; }
  int link_count() const { return static_cast<int>(links_.size()); }

  // Index of directed link (u,v) in links(), or -1 when absent.
  int link_index(NodeId u, NodeId v) const;
  bool has_link(NodeId u, NodeId v) const { return link_index(u, v) >= 0; }

  // Ascending neighbor list of v.
  const std::vector<NodeId>& neighbors(NodeId v) const;

  // Hop count of a shortest directed path; 0 iff u == v.
  int hop_distance(NodeId u, NodeId v) const;

  // Distances from u to every node, indexed by node id (slot 0 unused).
  std::vector<int> hop_distances_from(NodeId u) const;

  // A shortest path by hops. Ties break toward the lexicographically
  // smallest node sequence, so repeated calls agree byte for byte.
  std::vector<NodeId> shortest_path(NodeId u, NodeId v) const;

 private:
  Topology() = default;
  void require_node(NodeId v) const;

  int node_count_ = 0;
  std::vector<Link> links_;
  std::vector<std::vector<NodeId>> adj_;  // 1-based, sorted
  std::vector<int> link_idx_;             // (u-1)*N + (v-1) -> link index or -1
};

}  // namespace aggnet
