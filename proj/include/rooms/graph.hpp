#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rooms/core.hpp"

// Explicit analysis of the configuration graph: build, strongly/weakly
// connected components, degrees, BFS, and verification of the connectivity
// laws.  Vertices are the dense indices from encode_index.
//
// Every algorithm exists in two interchangeable forms with identical
// results: over a materialized ExplicitGraph, or edge-regenerating over an
// Instance.  The second form stores O(V) state no matter how large the
// out-degrees get; report-producing entry points pick it automatically for
// graphs whose edge lists would dominate memory.

namespace rooms {

struct ExplicitGraph {
  Instance inst;
  std::uint64_t num_vertices = 0;
  // CSR adjacency: successors of v are targets[offsets[v] .. offsets[v+1]),
  // in the canonical successor-enumeration order.
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> targets;
};

ExplicitGraph build_graph(const Instance& inst,
                          std::uint64_t max_vertices = kDefaultMaxVertices);

struct SccReport {
  std::uint64_t vertices = 0;
  std::uint32_t count = 0;
  // vertex -> component id; ids are ordered by the smallest vertex index
  // each component contains.
  std::vector<std::uint32_t> component;
  std::vector<std::uint64_t> sizes;  // indexed by component id
  std::uint64_t giant_size = 0;
  std::uint64_t singleton_count = 0;
  bool strongly_connected() const { return count == 1; }
};

SccReport scc_decompose(const ExplicitGraph& g);
SccReport scc_decompose(const Instance& inst,
                        std::uint64_t max_vertices = kDefaultMaxVertices);

struct WeakReport {
  std::uint64_t vertices = 0;
  std::uint32_t count = 0;
  std::vector<std::uint64_t> sizes;  // ordered by smallest contained vertex
  bool weakly_connected() const { return count == 1; }
};

WeakReport weak_components(const ExplicitGraph& g);
WeakReport weak_components(const Instance& inst,
                           std::uint64_t max_vertices = kDefaultMaxVertices);

std::vector<std::uint32_t> in_degrees(const ExplicitGraph& g);
std::vector<std::uint32_t> in_degrees(
    const Instance& inst, std::uint64_t max_vertices = kDefaultMaxVertices);

// Shortest-path layer.  Distances regenerate edges on the fly; memory is
// O(V) regardless of edge count.
std::optional<std::uint64_t> bfs_distance(
    const Instance& inst, const Config& from, const Config& to,
    std::uint64_t max_vertices = kDefaultMaxVertices);
std::optional<Path> bfs_path(const Instance& inst, const Config& from,
                             const Config& to,
                             std::uint64_t max_vertices = kDefaultMaxVertices);
// dist[v] = hops from `from`, or -1 when unreachable.
std::vector<std::int32_t> bfs_all_distances(
    const Instance& inst, const Config& from,
    std::uint64_t max_vertices = kDefaultMaxVertices);

struct TheoremReport {
  Instance inst;
  std::uint64_t vertices = 0;

  // measured
  bool strongly_connected = false;
  bool weakly_connected = false;
  std::uint32_t scc_count = 0;
  std::uint64_t giant_size = 0;
  std::uint64_t singleton_sccs = 0;
  std::uint64_t zero_in_degree = 0;
  std::uint64_t concentrated_vertices = 0;

  // predicted
  bool predicted_strong = false;      // M >= N+1
  bool size_laws_apply = false;       // 3 <= M <= N
  std::uint64_t predicted_giant = 0;  // M^N - M^(N-M+1), when laws apply
  std::uint64_t predicted_singletons = 0;  // M^(N-M+1), when laws apply

  // verdicts
  bool verdict_strong = false;
  bool verdict_zero_in_degree = false;  // M <= N: set == concentrated set;
                                        // M > N: no such vertex at all
  bool verdict_weakly_connected = true;     // when laws apply
  bool verdict_giant = true;                // when laws apply
  bool verdict_singletons = true;           // when laws apply
  bool verdict_singletons_concentrated = true;  // when laws apply
  bool all_pass = false;
};

TheoremReport verify_theorems(
    const Instance& inst, std::uint64_t max_vertices = kDefaultMaxVertices);

// Graphviz digraph; spread vertices are circles, concentrated ones boxes,
// all others diamonds, each also carrying a class attribute.
void export_dot(const Instance& inst, std::ostream& os,
                std::uint64_t max_vertices = kDefaultMaxVertices);
// One JSON object per vertex:
// {"id":..,"config":"..","scc":..,"in_deg":..,"out_deg":..,"class":".."}
void export_jsonl(const Instance& inst, std::ostream& os,
                  std::uint64_t max_vertices = kDefaultMaxVertices);

}  // namespace rooms
