#include "rooms/core.hpp"

#include <algorithm>
#include <charconv>

namespace rooms {

std::vector<int> interval(int k, int h) {
  std::vector<int> out;
  for (int x = std::max(k, 1); x <= h; ++x) out.push_back(x);
  return out;
}

int top_first(int people, int m) { return std::max(people - m, 0) + 1; }

std::optional<std::uint64_t> try_vertex_count(const Instance& inst,
                                              std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < inst.people; ++i) {
    if (v > cap / static_cast<std::uint64_t>(inst.rooms)) return std::nullopt;
    v *= static_cast<std::uint64_t>(inst.rooms);
  }
  if (v > cap) return std::nullopt;
  return v;
}

std::uint64_t vertex_count(const Instance& inst, std::uint64_t max_vertices) {
  auto v = try_vertex_count(inst, max_vertices);
  if (!v)
    throw OverflowError("M^N exceeds the explicit-mode bound (" +
                        std::to_string(max_vertices) + " vertices)");
  return *v;
}

void check_config(const Config& f, const Instance& inst) {
  if (static_cast<int>(f.size()) != inst.people)
    throw ParseError("configuration has " + std::to_string(f.size()) +
                     " entries, expected " + std::to_string(inst.people));
  for (int r : f)
    if (r < 1 || r > inst.rooms)
      throw RangeError("room " + std::to_string(r) + " outside [1, " +
                       std::to_string(inst.rooms) + "]");
}

std::vector<int> movers(const Config& f) {
  // Ascending scan leaves the highest-ranked occupant per room.
  std::vector<int> max_in_room;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > static_cast<int>(max_in_room.size()))
      max_in_room.resize(f[i], 0);
    max_in_room[f[i] - 1] = static_cast<int>(i) + 1;
  }
  std::vector<int> out;
  for (int p : max_in_room)
    if (p != 0) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

int occupied_rooms(const Config& f) {
  return static_cast<int>(movers(f).size());
}

bool is_edge(const Config& f, const Config& g) {
  if (f.size() != g.size()) return false;
  std::vector<bool> must_move(f.size(), false);
  for (int p : movers(f)) must_move[p - 1] = true;
  for (std::size_t i = 0; i < f.size(); ++i)
    if ((f[i] != g[i]) != must_move[i]) return false;
  return true;
}

std::uint64_t out_degree(const Config& f, int m) {
  std::uint64_t d = 1;
  const auto base = static_cast<std::uint64_t>(m - 1);
  for (int i = 0; i < occupied_rooms(f); ++i) {
    if (base != 0 && d > UINT64_MAX / base)
      throw OverflowError("out-degree does not fit in 64 bits");
    d *= base;
  }
  return d;
}

namespace {
// d-th allowed target (d in [0, M-2]) for a mover currently in room r:
// rooms 1..M except r, ascending.
inline int nth_target(int d, int r) { return d + 1 < r ? d + 1 : d + 2; }
}  // namespace

SuccessorRange::SuccessorRange(Config f, int m)
    : base_(std::move(f)), movers_(movers(base_)), m_(m) {}

SuccessorRange::iterator::iterator(const SuccessorRange* owner, bool done)
    : owner_(owner), cur_(owner->base_), digits_(owner->movers_.size(), 0),
      done_(done) {
  if (!done_)
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      int p = owner_->movers_[i];
      cur_[p - 1] = nth_target(0, owner_->base_[p - 1]);
    }
}

SuccessorRange::iterator& SuccessorRange::iterator::operator++() {
  // Lexicographic order on target tuples: the last mover's digit is the
  // fastest-changing one.
  for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
    int p = owner_->movers_[i];
    int r = owner_->base_[p - 1];
    if (++digits_[i] < owner_->m_ - 1) {
      cur_[p - 1] = nth_target(digits_[i], r);
      return *this;
    }
    digits_[i] = 0;
    cur_[p - 1] = nth_target(0, r);
  }
  done_ = true;
  return *this;
}

bool is_spread(const Config& f, int m) {
  int first = top_first(static_cast<int>(f.size()), m);
  std::vector<bool> seen(m, false);
  for (int p = first; p <= static_cast<int>(f.size()); ++p) {
    if (seen[f[p - 1] - 1]) return false;
    seen[f[p - 1] - 1] = true;
  }
  return true;
}

bool is_concentrated(const Config& f, int m) {
  int first = top_first(static_cast<int>(f.size()), m);
  for (int p = first; p <= static_cast<int>(f.size()); ++p)
    if (f[p - 1] != f[first - 1]) return false;
  return true;
}

LowProfile low_profile(const Config& f, int m) {
  int lows = std::max(static_cast<int>(f.size()) - m, 0);
  return LowProfile(f.begin(), f.begin() + lows);
}

ConfigClass classify(const Config& f, int m) {
  if (is_spread(f, m)) return ConfigClass::Spread;
  if (is_concentrated(f, m)) return ConfigClass::Concentrated;
  return ConfigClass::Other;
}

std::uint64_t encode_index(const Config& f, const Instance& inst,
                           std::uint64_t max_vertices) {
  vertex_count(inst, max_vertices);
  check_config(f, inst);
  std::uint64_t v = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    v = v * static_cast<std::uint64_t>(inst.rooms) +
        static_cast<std::uint64_t>(f[i] - 1);
  return v;
}

Config decode_index(std::uint64_t v, const Instance& inst,
                    std::uint64_t max_vertices) {
  std::uint64_t total = vertex_count(inst, max_vertices);
  if (v >= total)
    throw RangeError("vertex index " + std::to_string(v) + " outside [0, " +
                     std::to_string(total) + ")");
  Config f(inst.people);
  for (int i = 0; i < inst.people; ++i) {
    f[i] = static_cast<int>(v % static_cast<std::uint64_t>(inst.rooms)) + 1;
    v /= static_cast<std::uint64_t>(inst.rooms);
  }
  return f;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(',', pos);
    std::string tok = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw ParseError("empty entry in list \"" + text + "\"");
    tok = tok.substr(b, e - b + 1);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("bad integer token \"" + tok + "\"");
    out.push_back(value);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

Config parse_config(const std::string& text, const Instance& inst) {
  Config f = parse_int_list(text);
  check_config(f, inst);
  return f;
}

std::string format_config(const Config& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f[i]);
  }
  return out;
}

PathCheck validate_path(const Path& path) {
  if (path.empty()) return {false, 0};
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!is_edge(path[i], path[i + 1])) return {false, i};
  return {true, 0};
}

}  // namespace rooms
