#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core model of the room-switching process: N people, totally ordered by
// rank 1..N, live in rooms 1..M.  A configuration assigns each person a room.
// In one synchronous step the highest-ranked occupant of every nonempty room
// must move to some other room (each mover picks its target independently);
// everyone else stays.  Configurations are the vertices of a directed graph
// whose edges are exactly these steps.
//
// All functions here are pure and thread-safe.

namespace rooms {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed text input (bad tokens, wrong entry count).
struct ParseError : Error {
  using Error::Error;
};
// A numeric value outside its allowed range (room/person/vertex index).
struct RangeError : Error {
  using Error::Error;
};
// M^N exceeds the configured explicit-mode bound (or uint64 arithmetic).
struct OverflowError : Error {
  using Error::Error;
};
// Permutation-domain misuse: mismatched domains, too-small domain, bad pin,
// unsupported size.
struct DomainError : Error {
  using Error::Error;
};
// Permutations of three objects with odd parity have no derangement
// factorization.
struct NotFactorableError : Error {
  using Error::Error;
};
// A planner routine was called outside its contract (e.g. asking for a
// predecessor of a concentrated configuration when M <= N).
struct PreconditionError : Error {
  using Error::Error;
};

// Default cap on M^N for anything that materializes per-vertex state.
inline constexpr std::uint64_t kDefaultMaxVertices = 1ull << 22;

struct Instance {
  int people;  // N >= 1
  int rooms;   // M >= 2; with one room the forced mover has nowhere to go

  Instance(int n, int m) : people(n), rooms(m) {
    if (n < 1) throw RangeError("instance needs at least one person");
    if (m < 2) throw RangeError("instance needs at least two rooms");
  }
};

// rooms_of[k-1] is the room of person k, always in [1, M].
using Config = std::vector<int>;
// Rooms of persons 1..max(N-M,0), the people too low-ranked to matter for
// spread/concentrated classification.
using LowProfile = std::vector<int>;
// A walk in the configuration graph: path[i] -> path[i+1] must be an edge.
using Path = std::vector<Config>;

// {K..H} intersected with the positive integers; empty when H < max(K,1).
std::vector<int> interval(int k, int h);

// First person of the top segment: persons top_first(f)..N are the min(M,N)
// highest-ranked people.
int top_first(int people, int m);

// M^N when it is at most cap, otherwise nullopt.
std::optional<std::uint64_t> try_vertex_count(const Instance& inst,
                                              std::uint64_t cap);
// M^N, throwing OverflowError when it exceeds max_vertices.
std::uint64_t vertex_count(const Instance& inst,
                           std::uint64_t max_vertices = kDefaultMaxVertices);

// Throws RangeError/ParseError unless f has the instance's size and every
// entry is a room in [1, M].
void check_config(const Config& f, const Instance& inst);

// The forced movers of f: the highest-ranked occupant of every nonempty
// room, ascending by person.  One entry per occupied room.
std::vector<int> movers(const Config& f);

int occupied_rooms(const Config& f);

// Edge predicate: g is reachable from f in one step iff exactly the movers
// of f changed rooms.  Both configs must belong to the same instance.
bool is_edge(const Config& f, const Config& g);

// Number of one-step successors of f: (M-1)^occupied_rooms(f).
// Throws OverflowError if that does not fit in 64 bits.
std::uint64_t out_degree(const Config& f, int m);

// Lazy enumeration of the successors of f in lexicographic order of the
// movers' target tuples (movers ascending by person).  No materialization:
// the range holds one configuration that is advanced in place.
class SuccessorRange {
 public:
  SuccessorRange(Config f, int m);

  class iterator {
   public:
    using value_type = Config;
    const Config& operator*() const { return cur_; }
    iterator& operator++();
    bool operator!=(std::nullptr_t) const { return !done_; }

   private:
    friend class SuccessorRange;
    iterator(const SuccessorRange* owner, bool done);
    const SuccessorRange* owner_;
    Config cur_;
    std::vector<int> digits_;  // one target counter in [0, M-2] per mover
    bool done_;
  };

  iterator begin() const { return iterator(this, false); }
  std::nullptr_t end() const { return nullptr; }

 private:
  friend class iterator;
  Config base_;
  std::vector<int> movers_;
  int m_;
};

inline SuccessorRange successors(Config f, int m) {
  return SuccessorRange(std::move(f), m);
}

// Spread: the top min(M,N) people occupy pairwise distinct rooms.
bool is_spread(const Config& f, int m);
// Concentrated: the top min(M,N) people share one room.  When M <= N these
// configurations have no incoming edge.
bool is_concentrated(const Config& f, int m);

// Rooms of persons 1..max(N-M,0); empty when M >= N.
LowProfile low_profile(const Config& f, int m);

enum class ConfigClass { Spread, Concentrated, Other };
// Spread wins the (only for N = 1 possible) tie with Concentrated.
ConfigClass classify(const Config& f, int m);

// Dense vertex id of f in [0, M^N): person 1 is the least significant
// base-M digit.  Guarded by max_vertices.
std::uint64_t encode_index(const Config& f, const Instance& inst,
                           std::uint64_t max_vertices = kDefaultMaxVertices);
Config decode_index(std::uint64_t v, const Instance& inst,
                    std::uint64_t max_vertices = kDefaultMaxVertices);

// Comma-separated integers, whitespace around tokens ignored.
// ParseError on anything else.
std::vector<int> parse_int_list(const std::string& text);

// Text form "1,1,2,3": rooms of persons 1..N, 1-based, comma-separated.
Config parse_config(const std::string& text, const Instance& inst);
std::string format_config(const Config& f);

struct PathCheck {
  bool ok = true;
  // Index i of the first pair (path[i], path[i+1]) that is not an edge;
  // meaningful only when !ok.
  std::size_t first_bad = 0;
};

// A path is valid when nonempty and every consecutive pair is an edge.
PathCheck validate_path(const Path& path);

}  // namespace rooms
