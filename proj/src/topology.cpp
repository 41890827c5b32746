#include "aggnet/topology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace aggnet {

namespace {

// Strips an inline comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Topology Topology::parse(const std::string& text) {
  Topology t;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_nodes = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;

    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;

    if (!have_nodes) {
      int n = 0;
      if (keyword != "nodes" || !(fields >> n) || !(fields >> std::ws).eof())
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'nodes N' before any link");
      if (n < 1)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": node count must be at least 1");
      t.node_count_ = n;
      t.adj_.assign(n + 1, {});
      t.link_idx_.assign(static_cast<size_t>(n) * n, -1);
      have_nodes = true;
      continue;
    }

    NodeId u = 0, v = 0;
    if (keyword != "link" || !(fields >> u >> v) || !(fields >> std::ws).eof())
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'link U V', got '" + line + "'");
    if (u < 1 || u > t.node_count_ || v < 1 || v > t.node_count_)
      throw ValidationError("line " + std::to_string(line_no) + ": node id out of range 1.." +
                            std::to_string(t.node_count_));
    if (u == v)
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop on node " +
                            std::to_string(u));
    if (t.has_link(u, v))
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge " +
                            std::to_string(u) + "-" + std::to_string(v));

    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      t.link_idx_[static_cast<size_t>(a - 1) * t.node_count_ + (b - 1)] =
          static_cast<int>(t.links_.size());
      t.links_.push_back(Link{a, b});
      t.adj_[a].push_back(b);
    }
  }

  if (!have_nodes) throw ParseError("empty topology: no 'nodes N' line");

  for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity over the (symmetric) link set.
  std::vector<char> seen(t.node_count_ + 1, 0);
  std::deque<NodeId> queue{1};
  seen[1] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : t.adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != t.node_count_)
    throw ValidationError("topology is disconnected (" + std::to_string(reached) + " of " +
                          std::to_string(t.node_count_) + " nodes reachable from node 1)");
  return t;
}

Topology Topology::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open topology file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Topology::require_node(NodeId v) const {
  if (v < 1 || v > node_count_)
    throw ValidationError("unknown node id " + std::to_string(v));
}

int Topology::link_index(NodeId u, NodeId v) const {
  require_node(u);
  require_node(v);
  return link_idx_[static_cast<size_t>(u - 1) * node_count_ + (v - 1)];
}

const std::vector<NodeId>& Topology::neighbors(NodeId v) const {
  require_node(v);
  return adj_[v];
}

std::vector<int> Topology::hop_distances_from(NodeId u) const {
  require_node(u);
  std::vector<int> dist(node_count_ + 1, -1);
  dist[u] = 0;
  std::deque<NodeId> queue{u};
  while (!queue.empty()) {
    const NodeId a = queue.front();
    queue.pop_front();
    for (NodeId b : adj_[a])
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
  }
  return dist;
}

int Topology::hop_distance(NodeId u, NodeId v) const {
  require_node(v);
  return hop_distances_from(u)[v];
}

std::vector<NodeId> Topology::shortest_path(NodeId u, NodeId v) const {
  require_node(u);
  // Distances to v; the link set is symmetric, so the BFS from v serves.
  const std::vector<int> dist = hop_distances_from(v);
  std::vector<NodeId> path{u};
  NodeId cur = u;
  while (cur != v) {
    // Smallest feasible next hop gives the lexicographically smallest path.
    NodeId next = 0;
    for (NodeId w : adj_[cur])
      if (dist[w] == dist[cur] - 1) {
        next = w;
        break;
      }
    path.push_back(next);
    cur = next;
  }
  return path;
}

}  // namespace aggnet
