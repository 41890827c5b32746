#include "aggnet/traffic.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace aggnet {

namespace {

std::string clean_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void check_pair(NodeId src, NodeId dst, const std::string& where) {
  if (src < 1 || dst < 1)
    throw ValidationError(where + ": node ids must be positive");
  if (src == dst)
    throw ValidationError(where + ": demand source equals destination (" +
                          std::to_string(src) + ")");
}

constexpr std::uint64_t kSourceStream = 0x736f757263657331ULL;
constexpr std::uint64_t kDestStream = 0x64657374696e6f31ULL;

SplitMix64 make_stream(std::uint64_t seed, std::uint64_t sample, std::uint64_t tag) {
  SplitMix64 mixer(seed);
  std::uint64_t s = mixer.next();
  s ^= tag;
  SplitMix64 mixer2(s);
  s = mixer2.next() + 0x9e3779b97f4a7c15ULL * (sample + 1);
  return SplitMix64(s);
}

// Removes and returns k uniform draws from pool (partial Fisher-Yates).
std::vector<NodeId> draw_without_replacement(std::vector<NodeId>& pool, int k,
                                             SplitMix64& rng) {
  std::vector<NodeId> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<size_t>(rng.below(pool.size()));
    out.push_back(pool[j]);
    pool.erase(pool.begin() + j);
  }
  return out;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t value = next();
  while (value >= limit) value = next();
  return value % n;
}

DemandSet::DemandSet(const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  std::set<std::pair<NodeId, NodeId>> seen;
  demands_.reserve(pairs.size());
  for (const auto& [src, dst] : pairs) {
    const std::string where = "demand " + std::to_string(src) + "->" + std::to_string(dst);
    check_pair(src, dst, where);
    if (!seen.insert({src, dst}).second)
      throw ValidationError(where + ": duplicate demand pair");
    demands_.push_back(Demand{static_cast<int>(demands_.size()), src, dst});
  }
}

DemandSet DemandSet::parse(const std::string& text) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string keyword;
    NodeId src = 0, dst = 0;
    fields >> keyword;
    if (keyword != "demand" || !(fields >> src >> dst) || !(fields >> std::ws).eof())
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'demand S D', got '" + line + "'");
    check_pair(src, dst, "line " + std::to_string(line_no));
    pairs.emplace_back(src, dst);
  }
  return DemandSet(pairs);
}

DemandSet DemandSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open demand file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string DemandSet::serialize() const {
  std::ostringstream out;
  for (const Demand& d : demands_)
    out << "demand " << d.src << " " << d.dst << "\n";
  return out.str();
}

void ScenarioConfig::validate(const Topology& t) const {
  if (num_sources < 1 || num_destinations < 1 || num_samples < 1)
    throw ValidationError("scenario counts must be at least 1");
  if (num_sources + num_destinations > t.node_count())
    throw ValidationError("scenario needs " + std::to_string(num_sources + num_destinations) +
                          " distinct nodes but the topology has " +
                          std::to_string(t.node_count()));
}

DemandSet generate_two_to_many(const Topology& t, const ScenarioConfig& cfg,
                               int sample_index) {
  cfg.validate(t);

  std::vector<NodeId> pool(t.node_count());
  std::iota(pool.begin(), pool.end(), 1);

  SplitMix64 src_rng = make_stream(cfg.seed, cfg.fixed_sources ? 0 : sample_index,
                                   kSourceStream);
  const std::vector<NodeId> sources =
      draw_without_replacement(pool, cfg.num_sources, src_rng);

  // Destinations come from the remaining nodes, so the sets stay disjoint.
  SplitMix64 dst_rng = make_stream(cfg.seed, sample_index, kDestStream);
  const std::vector<NodeId> dests =
      draw_without_replacement(pool, cfg.num_destinations, dst_rng);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(sources.size() * dests.size());
  for (NodeId s : sources)
    for (NodeId d : dests) pairs.emplace_back(s, d);
  return DemandSet(pairs);
}

DemandSet parse_demands(const std::string& text) { return DemandSet::parse(text); }

std::string serialize_demands(const DemandSet& ds) { return ds.serialize(); }

}  // namespace aggnet
