#include "cesaro/sofic_image.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

struct Nfa {
  int vertices = 0;
  std::vector<ShiftSpace::Edge> edges;
};

// States are directed 2r-edge paths of the input presentation; consuming one
// more edge spells a full (2r+1)-window whose image symbol labels the
// transition.  Admissibility is inherited from the presentation, so the
// label sequences of bi-infinite paths are exactly the points of F(space).
Nfa relabeled_path_automaton(const LocalRule& rule, const ShiftSpace& sp,
                             const Caps& caps) {
  const int r = rule.radius();
  std::vector<std::vector<int>> out_edges(sp.vertex_count);
  for (int i = 0; i < (int)sp.edges.size(); ++i)
    out_edges[sp.edges[i].src].push_back(i);

  std::map<std::vector<int>, int> path_index;  // edge-id sequence -> state
  std::vector<std::vector<int>> paths;
  auto intern = [&](const std::vector<int>& p) {
    auto [it, fresh] = path_index.emplace(p, (int)paths.size());
    if (fresh) {
      paths.push_back(p);
      if (paths.size() > caps.sofic_states)
        fail(ErrorKind::CapExceeded, "sofic_states: path automaton too large");
    }
    return it->second;
  };

  // Enumerate all 2r-edge paths depth-first.
  std::vector<int> acc;
  auto grow = [&](auto&& self, int at, int depth) -> void {
    if (depth == 2 * r) { intern(acc); return; }
    for (int ei : out_edges[at]) {
      acc.push_back(ei);
      self(self, sp.edges[ei].dst, depth + 1);
      acc.pop_back();
    }
  };
  for (int v = 0; v < sp.vertex_count; ++v) {
    if (r == 0) {
      // Zero-radius paths carry no edges; anchor them at the vertex itself.
      intern({-1 - v});
      continue;
    }
    acc.clear();
    grow(grow, v, 0);
  }

  Nfa nfa;
  nfa.vertices = (int)paths.size();
  Word window(2 * r + 1);
  for (int s = 0; s < (int)paths.size(); ++s) {
    const auto& p = paths[s];
    int tail = r == 0 ? -1 - p[0] : sp.edges[p.back()].dst;
    for (int ei : out_edges[tail]) {
      std::vector<int> next;
      if (r > 0) {
        next.assign(p.begin() + 1, p.end());
        next.push_back(ei);
      } else {
        next = {-1 - sp.edges[ei].dst};
      }
      for (int j = 0; j < 2 * r; ++j) window[j] = sp.edges[p[j]].label;
      window[2 * r] = sp.edges[ei].label;
      nfa.edges.push_back({s, intern(next), rule.local(window)});
    }
  }
  return nfa;
}

}  // namespace

ShiftSpace image_sofic(const LocalRule& rule, const ShiftSpace& space,
                       const Caps& caps) {
  if (!(space.alphabet == rule.alphabet()))
    fail(ErrorKind::BadParam, "space alphabet differs from the rule's");
  Nfa nfa = relabeled_path_automaton(rule, space, caps);
  const int base = rule.alphabet().size();

  std::vector<std::vector<std::vector<int>>> adj(
      base, std::vector<std::vector<int>>(nfa.vertices));
  for (const auto& e : nfa.edges) adj[e.label][e.src].push_back(e.dst);

  // Subset construction seeded with the all-states set.  Follow-sets of long
  // pasts stabilize inside these subsets, so after trimming the subset graph
  // presents exactly the image language.
  std::map<std::vector<int>, int> subset_index;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, fresh] = subset_index.emplace(s, (int)subsets.size());
    if (fresh) {
      subsets.push_back(std::move(s));
      if (subsets.size() > caps.sofic_states)
        fail(ErrorKind::CapExceeded, "sofic_states: subset construction too large");
    }
    return it->second;
  };

  std::vector<int> all(nfa.vertices);
  for (int i = 0; i < nfa.vertices; ++i) all[i] = i;
  int start = intern(all);
  (void)start;

  ShiftSpace out;
  out.alphabet = rule.alphabet();
  out.kind = ShiftSpace::Kind::Sofic;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (int a = 0; a < base; ++a) {
      std::vector<int> target;
      for (int v : subsets[s])
        for (int d : adj[a][v]) target.push_back(d);
      if (target.empty()) continue;
      out.edges.push_back({(int)s, intern(std::move(target)), a});
    }
  }
  out.vertex_count = (int)subsets.size();
  out.vertex_names.resize(out.vertex_count);
  trim_presentation(out);
  if (out.vertex_count == 0)
    fail(ErrorKind::Internal, "image of a nonempty subshift cannot be empty");
  return out;
}

ShiftSpace image_sofic(const LocalRule& rule, const Caps& caps) {
  return image_sofic(rule, rule.domain(), caps);
}

std::vector<ShiftSpace> limit_set_approx(const LocalRule& rule, int n,
                                         const Caps& caps) {
  if (n < 0) fail(ErrorKind::BadParam, "negative iteration count");
  std::vector<ShiftSpace> chain = {rule.domain()};
  for (int i = 0; i < n; ++i) {
    ShiftSpace next = image_sofic(rule, chain.back(), caps);
    // The chain must be descending; verify the inclusion on short words.
    for (int len = 1; len <= 6; ++len) {
      auto smaller = language_words(next, len);
      auto larger = language_words(chain.back(), len);
      if (!std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end()))
        fail(ErrorKind::Internal, "image language escaped its predecessor");
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace cesaro
