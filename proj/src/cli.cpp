#include "rooms/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rooms/core.hpp"
#include "rooms/graph.hpp"
#include "rooms/perm.hpp"
#include "rooms/planner.hpp"
#include "rooms/rng.hpp"
#include "rooms/walk.hpp"

namespace rooms {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t plan_bound(int n, int m) {
  std::uint64_t np = n > m ? static_cast<std::uint64_t>(n - m) : 0;
  return 2 * np * (np + 2) + static_cast<std::uint64_t>(n) + 6;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int parse_int_token(const std::string& text, const char* what) {
  auto v = parse_int_list(text);
  if (v.size() != 1)
    throw ParseError(std::string(what) + ": expected one integer, got \"" +
                     text + "\"");
  return v[0];
}

struct Grid {
  int n1, n2, m1, m2;
};

// "N1..N2xM1..M2"; either side may be a single value.
Grid parse_grid(const std::string& text) {
  auto xpos = text.find('x');
  if (xpos == std::string::npos || text.find('x', xpos + 1) != std::string::npos)
    throw ParseError("grid must look like \"N1..N2xM1..M2\", got \"" + text +
                     "\"");
  auto range = [](const std::string& part) {
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      int v = parse_int_token(part, "grid");
      return std::pair<int, int>{v, v};
    }
    return std::pair<int, int>{
        parse_int_token(part.substr(0, dots), "grid"),
        parse_int_token(part.substr(dots + 2), "grid")};
  };
  auto [n1, n2] = range(text.substr(0, xpos));
  auto [m1, m2] = range(text.substr(xpos + 1));
  if (n2 < n1 || m2 < m1) throw ParseError("grid is empty: \"" + text + "\"");
  return {n1, n2, m1, m2};
}

int cmd_analyze(int n, int m, const std::string& dot_file,
                const std::string& jsonl_file, std::uint64_t maxv,
                std::ostream& out, std::ostream& err) {
  Instance inst(n, m);
  TheoremReport r = verify_theorems(inst, maxv);
  if (!dot_file.empty()) {
    std::ofstream os(dot_file);
    if (!os) {
      err << "error: cannot write " << dot_file << "\n";
      return 2;
    }
    export_dot(inst, os, maxv);
  }
  if (!jsonl_file.empty()) {
    std::ofstream os(jsonl_file);
    if (!os) {
      err << "error: cannot write " << jsonl_file << "\n";
      return 2;
    }
    export_jsonl(inst, os, maxv);
  }

  json j;
  j["people"] = n;
  j["rooms"] = m;
  j["vertices"] = r.vertices;
  j["measured"] = {{"strongly_connected", r.strongly_connected},
                   {"weakly_connected", r.weakly_connected},
                   {"scc_count", r.scc_count},
                   {"giant_size", r.giant_size},
                   {"singleton_sccs", r.singleton_sccs},
                   {"zero_in_degree", r.zero_in_degree},
                   {"concentrated", r.concentrated_vertices}};
  j["predicted"] = {{"strongly_connected", r.predicted_strong},
                    {"size_laws_apply", r.size_laws_apply},
                    {"giant_size", r.predicted_giant},
                    {"singleton_sccs", r.predicted_singletons}};
  j["verdicts"] = {{"strongly_connected", r.verdict_strong},
                   {"zero_in_degree", r.verdict_zero_in_degree},
                   {"weakly_connected", r.verdict_weakly_connected},
                   {"giant_size", r.verdict_giant},
                   {"singleton_sccs", r.verdict_singletons},
                   {"singletons_concentrated", r.verdict_singletons_concentrated},
                   {"all", r.all_pass}};
  emit(out, j);
  return r.all_pass ? 0 : 1;
}

int cmd_path(int n, int m, const std::string& from, const std::string& to,
             bool compare_bfs, std::uint64_t maxv, std::ostream& out) {
  Instance inst(n, m);
  Config f = parse_config(from, inst);
  Config g = parse_config(to, inst);
  PlanOutcome outcome = plan_path(f, g, m);

  json j;
  j["people"] = n;
  j["rooms"] = m;
  j["from"] = format_config(f);
  j["to"] = format_config(g);
  j["bound"] = plan_bound(n, m);
  int rc;
  if (outcome.reachable()) {
    const Path& p = *outcome.path;
    bool valid = validate_path(p).ok && p.front() == f && p.back() == g &&
                 p.size() - 1 <= plan_bound(n, m);
    j["reachable"] = true;
    j["length"] = p.size() - 1;
    j["valid"] = valid;
    json arr = json::array();
    for (const Config& c : p) arr.push_back(format_config(c));
    j["path"] = arr;
    rc = valid ? 0 : 1;
  } else {
    j["reachable"] = false;
    j["reason"] = outcome.reason == UnreachableReason::TargetConcentrated
                      ? "target-concentrated"
                      : "orbit-miss";
    rc = 3;
  }
  if (compare_bfs) {
    auto d = bfs_distance(inst, f, g, maxv);
    bool agree = d.has_value() == outcome.reachable();
    bool not_shorter =
        !d || !outcome.reachable() || outcome.path->size() - 1 >= *d;
    json b;
    b["distance"] = d ? json(*d) : json(nullptr);
    b["matches_reachability"] = agree;
    b["planned_at_least_distance"] = not_shorter;
    j["bfs"] = b;
    if (!agree || !not_shorter) rc = 1;
  }
  emit(out, j);
  return rc;
}

int cmd_walk(int n, int m, const std::string& start_text, std::uint64_t steps,
             std::uint64_t walkers, std::uint64_t seed, bool occupancy,
             std::uint64_t top, std::uint64_t maxv, std::ostream& out) {
  Instance inst(n, m);
  WalkConfig wc{inst, parse_config(start_text, inst), steps, walkers,
                seed, occupancy ? WalkMode::Occupancy : WalkMode::PerState,
                maxv};
  WalkStats st = run_walk(wc);

  json j;
  j["people"] = n;
  j["rooms"] = m;
  j["start"] = format_config(wc.start);
  j["steps"] = steps;
  j["walkers"] = walkers;
  j["seed"] = seed;
  j["mode"] = occupancy ? "occupancy" : "per-state";
  j["total_visits"] = st.total_visits;
  j["spread_visits"] = st.spread_visits;
  j["concentrated_visits"] = st.concentrated_visits;
  const double tot = st.total_visits ? static_cast<double>(st.total_visits) : 1;
  j["spread_share"] = static_cast<double>(st.spread_visits) / tot;
  j["concentrated_share"] = static_cast<double>(st.concentrated_visits) / tot;
  if (occupancy) {
    json o = json::object();
    for (const auto& [key, visits] : st.occupancy_visits) o[key] = visits;
    j["occupancy"] = o;
  } else {
    std::vector<std::uint64_t> order;
    for (std::uint64_t v = 0; v < st.state_visits.size(); ++v)
      if (st.state_visits[v]) order.push_back(v);
    j["distinct_states"] = order.size();
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
      if (st.state_visits[a] != st.state_visits[b])
        return st.state_visits[a] > st.state_visits[b];
      return a < b;
    });
    if (order.size() > top) order.resize(top);
    json arr = json::array();
    for (std::uint64_t v : order) {
      json e;
      e["config"] = format_config(decode_index(v, inst, maxv));
      e["visits"] = st.state_visits[v];
      e["freq"] = static_cast<double>(st.state_visits[v]) / tot;
      arr.push_back(e);
    }
    j["top_states"] = arr;
  }
  emit(out, j);
  return 0;
}

int cmd_derange(const std::string& perm_text, std::ostream& out) {
  Perm p = parse_perm(perm_text);
  json j;
  j["perm"] = format_perm(p);
  j["size"] = p.size();
  try {
    DerangementFactorization fac = factor_into_derangements(p);
    bool verified = compose_all(fac, p.size()) == p;
    for (const Perm& d : fac.factors) verified = verified && is_derangement(d);
    j["factorable"] = true;
    json arr = json::array();
    for (const Perm& d : fac.factors) arr.push_back(format_perm(d));
    j["factors"] = arr;
    j["count"] = fac.factors.size();
    j["verified"] = verified;
    emit(out, j);
    return verified ? 0 : 1;
  } catch (const NotFactorableError& e) {
    j["factorable"] = false;
    j["reason"] = e.what();
    emit(out, j);
    return 3;
  }
}

int cmd_oracle(const std::string& grid_text, std::uint64_t pairs,
               std::uint64_t seed, std::uint64_t maxv, std::ostream& out) {
  constexpr std::uint64_t kAllPairsLimit = 1000;
  Grid grid = parse_grid(grid_text);

  json instances = json::array();
  std::map<int, std::uint64_t> longest_by_people;
  std::uint64_t checked_total = 0, failures = 0, icounter = 0;
  for (int n = grid.n1; n <= grid.n2; ++n) {
    for (int m = grid.m1; m <= grid.m2; ++m, ++icounter) {
      Instance inst(n, m);
      const std::uint64_t verts = vertex_count(inst, maxv);
      const std::uint64_t bound = plan_bound(n, m);
      SplitMix64 rng = stream_rng(seed, icounter);

      std::uint64_t checked = 0, bad = 0, longest = 0;
      auto check_pair = [&](const Config& f, const Config& g,
                            std::int32_t dist) {
        PlanOutcome o = plan_path(f, g, m);
        bool ok;
        if (o.reachable()) {
          const Path& p = *o.path;
          const std::uint64_t len = p.size() - 1;
          ok = dist >= 0 && validate_path(p).ok && p.front() == f &&
               p.back() == g && len <= bound &&
               len >= static_cast<std::uint64_t>(dist);
          longest = std::max(longest, len);
        } else {
          ok = dist < 0;
        }
        ++checked;
        if (!ok) ++bad;
      };

      const bool all_pairs = verts <= kAllPairsLimit;
      if (all_pairs) {
        for (std::uint64_t s = 0; s < verts; ++s) {
          Config f = decode_index(s, inst, maxv);
          auto dist = bfs_all_distances(inst, f, maxv);
          for (std::uint64_t t = 0; t < verts; ++t)
            check_pair(f, decode_index(t, inst, maxv), dist[t]);
        }
      } else {
        const std::uint64_t want = std::max<std::uint64_t>(pairs, 1);
        const std::uint64_t nsources =
            std::min<std::uint64_t>(verts, (want + 19) / 20);
        std::set<std::uint64_t> sources;
        while (sources.size() < nsources)
          sources.insert(bounded(rng, verts));
        for (std::uint64_t s : sources) {
          Config f = decode_index(s, inst, maxv);
          auto dist = bfs_all_distances(inst, f, maxv);
          for (int t = 0; t < 20 && checked < want; ++t) {
            std::uint64_t v = bounded(rng, verts);
            check_pair(f, decode_index(v, inst, maxv), dist[v]);
          }
        }
      }

      json e;
      e["people"] = n;
      e["rooms"] = m;
      e["vertices"] = verts;
      e["mode"] = all_pairs ? "all-pairs" : "sampled";
      e["checked"] = checked;
      e["mismatches"] = bad;
      e["max_length"] = longest;
      e["bound"] = bound;
      e["ok"] = bad == 0;
      instances.push_back(e);

      auto it = longest_by_people.find(n);
      if (it == longest_by_people.end())
        longest_by_people.emplace(n, longest);
      else
        it->second = std::max(it->second, longest);
      checked_total += checked;
      failures += bad;
    }
  }

  json curve = json::array();
  for (auto [n, len] : longest_by_people) {
    json e;
    e["people"] = n;
    e["max_length"] = len;
    e["bound"] = plan_bound(n, grid.m1);
    curve.push_back(e);
  }

  json j;
  j["grid"] = grid_text;
  j["pairs_requested"] = pairs;
  j["seed"] = seed;
  j["instances"] = instances;
  j["max_length_by_people"] = curve;
  j["checked"] = checked_total;
  j["failures"] = failures;
  j["ok"] = failures == 0;
  emit(out, j);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "room-switching configuration graphs: explicit analysis, constructive "
      "path planning and seeded random walks"};
  app.name("rooms");
  app.require_subcommand(1);

  int n = 0, m = 0;
  std::uint64_t maxv = kDefaultMaxVertices;

  auto* analyze = app.add_subcommand(
      "analyze", "Decompose the graph and verify the connectivity laws");
  std::string dot_file, jsonl_file;
  analyze->add_option("-n,--people", n, "number of people")->required();
  analyze->add_option("-m,--rooms", m, "number of rooms")->required();
  analyze->add_option("--dot", dot_file, "write a Graphviz digraph here");
  analyze->add_option("--jsonl", jsonl_file,
                      "write one JSON object per vertex here");
  analyze->add_option("--max-vertices", maxv, "bound on M^N for this run");

  auto* path = app.add_subcommand(
      "path", "Plan a route between two configurations");
  std::string from_text, to_text;
  bool compare_bfs = false;
  path->add_option("-n,--people", n, "number of people")->required();
  path->add_option("-m,--rooms", m, "number of rooms")->required();
  path->add_option("--from", from_text, "start configuration, e.g. 1,1,2")
      ->required();
  path->add_option("--to", to_text, "target configuration")->required();
  path->add_flag("--compare-bfs", compare_bfs,
                 "cross-check against breadth-first search");
  path->add_option("--max-vertices", maxv, "bound on M^N for --compare-bfs");

  auto* walk = app.add_subcommand(
      "walk", "Run seeded uniform random walks and tally visits");
  std::string start_text;
  std::uint64_t steps = 0, walkers = 1, seed = 0, top = 10;
  bool occupancy = false;
  walk->add_option("-n,--people", n, "number of people")->required();
  walk->add_option("-m,--rooms", m, "number of rooms")->required();
  walk->add_option("--start", start_text, "start configuration")->required();
  walk->add_option("--steps", steps, "moves per walker")->required();
  walk->add_option("--walkers", walkers, "independent walkers");
  walk->add_option("--seed", seed, "random seed");
  walk->add_flag("--occupancy", occupancy,
                 "tally room-size profiles instead of states");
  walk->add_option("--top", top, "report this many most-visited states");
  walk->add_option("--max-vertices", maxv, "per-state table bound on M^N");

  auto* derange = app.add_subcommand(
      "derange", "Factor a permutation into derangements");
  std::string perm_text;
  derange->add_option("--perm", perm_text, "image list, e.g. 2,1,4,3")
      ->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Check planned routes against breadth-first search");
  std::string grid_text;
  std::uint64_t pairs = 200;
  oracle->add_option("--grid", grid_text, "instances, e.g. 2..5x2..4")
      ->required();
  oracle->add_option("--pairs", pairs, "pairs per instance when sampling");
  oracle->add_option("--seed", seed, "random seed for pair sampling");
  oracle->add_option("--max-vertices", maxv, "bound on M^N per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs[0]->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(n, m, dot_file, jsonl_file, maxv, out, err);
    if (app.got_subcommand(path))
      return cmd_path(n, m, from_text, to_text, compare_bfs, maxv, out);
    if (app.got_subcommand(walk))
      return cmd_walk(n, m, start_text, steps, walkers, seed, occupancy, top,
                      maxv, out);
    if (app.got_subcommand(derange)) return cmd_derange(perm_text, out);
    if (app.got_subcommand(oracle))
      return cmd_oracle(grid_text, pairs, seed, maxv, out);
  } catch (const NotFactorableError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace rooms
