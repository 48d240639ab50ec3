#include "cesaro/shift_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

// [label][src] -> successor vertices.
std::vector<std::vector<std::vector<int>>> label_adjacency(const ShiftSpace& sp) {
  std::vector<std::vector<std::vector<int>>> adj(
      sp.alphabet.size(), std::vector<std::vector<int>>(sp.vertex_count));
  for (const auto& e : sp.edges) adj[e.label][e.src].push_back(e.dst);
  return adj;
}

void sort_edges(std::vector<ShiftSpace::Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
  });
}

bool occurs(const Word& needle, const Word& hay) {
  if (needle.empty() || needle.size() > hay.size()) return needle.empty();
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
  return false;
}

}  // namespace

// Removes vertices with no incoming or no outgoing edge until stable, so that
// every surviving vertex lies on a bi-infinite path.
void trim_presentation(ShiftSpace& sp) {
  std::vector<char> alive(sp.vertex_count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> out(sp.vertex_count, 0), in(sp.vertex_count, 0);
    for (const auto& e : sp.edges)
      if (alive[e.src] && alive[e.dst]) { ++out[e.src]; ++in[e.dst]; }
    for (int v = 0; v < sp.vertex_count; ++v)
      if (alive[v] && (out[v] == 0 || in[v] == 0)) { alive[v] = 0; changed = true; }
  }
  std::vector<int> remap(sp.vertex_count, -1);
  int next = 0;
  for (int v = 0; v < sp.vertex_count; ++v)
    if (alive[v]) remap[v] = next++;
  std::vector<ShiftSpace::Edge> kept;
  for (const auto& e : sp.edges)
    if (alive[e.src] && alive[e.dst])
      kept.push_back({remap[e.src], remap[e.dst], e.label});
  std::vector<std::string> names;
  for (int v = 0; v < sp.vertex_count; ++v)
    if (alive[v] && v < (int)sp.vertex_names.size())
      names.push_back(sp.vertex_names[v]);
  sp.vertex_count = next;
  sp.edges = std::move(kept);
  sp.vertex_names = std::move(names);
  sort_edges(sp.edges);
}

ShiftSpace full_shift(const Alphabet& alphabet) {
  ShiftSpace sp;
  sp.alphabet = alphabet;
  sp.kind = ShiftSpace::Kind::Full;
  sp.vertex_count = 1;
  for (int a = 0; a < alphabet.size(); ++a) sp.edges.push_back({0, 0, a});
  sp.vertex_names = {""};
  return sp;
}

ShiftSpace build_sft(const Alphabet& alphabet, const std::vector<Word>& forbidden) {
  for (const auto& e : forbidden)
    if (e.empty()) fail(ErrorKind::Parse, "empty forbidden word");
  int memory = 0;
  for (const auto& e : forbidden) memory = std::max(memory, (int)e.size() - 1);

  ShiftSpace sp;
  sp.alphabet = alphabet;
  sp.kind = ShiftSpace::Kind::Sft;
  sp.forbidden = forbidden;

  // Vertices are the length-`memory` words free of forbidden factors; an edge
  // u -a-> suffix(u.a) exists when u.a is also free of them.  Every forbidden
  // word fits inside some window of length memory+1, so label sequences of
  // bi-infinite paths are exactly the points of the SFT.
  const int base = alphabet.size();
  std::vector<Word> vertices;
  for (const auto& w : all_words(base, memory)) {
    bool ok = true;
    for (const auto& e : forbidden)
      if (occurs(e, w)) { ok = false; break; }
    if (ok) vertices.push_back(w);
  }
  std::vector<std::int64_t> code_to_vertex((std::size_t)1, -1);
  {
    std::size_t total = 1;
    for (int i = 0; i < memory; ++i) total *= (std::size_t)base;
    code_to_vertex.assign(total, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      code_to_vertex[encode_word(vertices[i], base)] = (std::int64_t)i;
  }
  sp.vertex_count = (int)vertices.size();
  for (int v = 0; v < sp.vertex_count; ++v) {
    for (int a = 0; a < base; ++a) {
      Word ext = vertices[v];
      ext.push_back(a);
      bool ok = true;
      for (const auto& e : forbidden)
        if (occurs(e, ext)) { ok = false; break; }
      if (!ok) continue;
      Word suffix(ext.end() - memory, ext.end());
      std::int64_t dst = code_to_vertex[encode_word(suffix, base)];
      if (dst < 0) continue;
      sp.edges.push_back({v, (int)dst, a});
    }
    sp.vertex_names.push_back(alphabet.word_to_string(vertices[v]));
  }
  sort_edges(sp.edges);
  trim_presentation(sp);
  if (sp.vertex_count == 0)
    fail(ErrorKind::EmptyLanguage, "forbidden list leaves no bi-infinite point");
  return sp;
}

std::vector<Word> language_words(const ShiftSpace& space, int length) {
  if (length < 0) fail(ErrorKind::BadParam, "negative word length");
  auto adj = label_adjacency(space);
  std::vector<Word> out;
  Word prefix;
  std::vector<char> current(space.vertex_count, 1);

  // Depth-first in symbol order; the reachable-vertex set prunes dead
  // prefixes, so each admissible word is produced exactly once, in lex order.
  auto rec = [&](auto&& self, const std::vector<char>& reach, int depth) -> void {
    if (depth == length) { out.push_back(prefix); return; }
    for (int a = 0; a < space.alphabet.size(); ++a) {
      std::vector<char> next(space.vertex_count, 0);
      bool nonempty = false;
      for (int v = 0; v < space.vertex_count; ++v)
        if (reach[v])
          for (int w : adj[a][v]) { next[w] = 1; nonempty = true; }
      if (!nonempty) continue;
      prefix.push_back(a);
      self(self, next, depth + 1);
      prefix.pop_back();
    }
  };
  rec(rec, current, 0);
  return out;
}

bool contains(const ShiftSpace& space, const Word& w) {
  for (int s : w)
    if (s < 0 || s >= space.alphabet.size()) return false;
  if (space.is_full()) return true;
  auto adj = label_adjacency(space);
  std::vector<char> reach(space.vertex_count, 1);
  for (int s : w) {
    std::vector<char> next(space.vertex_count, 0);
    bool nonempty = false;
    for (int v = 0; v < space.vertex_count; ++v)
      if (reach[v])
        for (int d : adj[s][v]) { next[d] = 1; nonempty = true; }
    if (!nonempty) return false;
    reach = std::move(next);
  }
  return true;
}

namespace {

// Kosaraju-style strong connectivity check on the (unlabeled) digraph.
bool strongly_connected(const ShiftSpace& sp) {
  if (sp.vertex_count == 0) return false;
  auto reachable = [&](bool reversed) {
    std::vector<std::vector<int>> adj(sp.vertex_count);
    for (const auto& e : sp.edges)
      reversed ? adj[e.dst].push_back(e.src) : adj[e.src].push_back(e.dst);
    std::vector<char> seen(sp.vertex_count, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    return std::count(seen.begin(), seen.end(), (char)1) == sp.vertex_count;
  };
  return reachable(false) && reachable(true);
}

}  // namespace

bool is_transitive(const ShiftSpace& space) { return strongly_connected(space); }

bool is_mixing(const ShiftSpace& space) {
  if (!strongly_connected(space)) return false;
  // Period of a strongly connected digraph: gcd over edges of
  // dist(root,u) + 1 - dist(root,v); mixing iff the period is 1.
  std::vector<int> dist(space.vertex_count, -1);
  std::vector<int> queue = {0};
  dist[0] = 0;
  std::vector<std::vector<int>> adj(space.vertex_count);
  for (const auto& e : space.edges) adj[e.src].push_back(e.dst);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : adj[v])
      if (dist[w] < 0) { dist[w] = dist[v] + 1; queue.push_back(w); }
  }
  int g = 0;
  for (const auto& e : space.edges)
    g = std::gcd(g, std::abs(dist[e.src] + 1 - dist[e.dst]));
  return g == 1;
}

bool admits_periodic(const ShiftSpace& space, const Word& generator) {
  if (generator.empty()) fail(ErrorKind::BadParam, "empty generator");
  for (int s : generator)
    if (s < 0 || s >= space.alphabet.size()) return false;
  if (space.is_full()) return true;
  auto adj = label_adjacency(space);
  const int n = space.vertex_count;
  // reach[v][w] = path labeled by the generator from v to w; a diagonal hit
  // yields the required cyclic path.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) reach[v][v] = 1;
  for (int s : generator) {
    std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (reach[v][w])
          for (int d : adj[s][w]) next[v][d] = 1;
    reach = std::move(next);
  }
  for (int v = 0; v < n; ++v)
    if (reach[v][v]) return true;
  return false;
}

}  // namespace cesaro
