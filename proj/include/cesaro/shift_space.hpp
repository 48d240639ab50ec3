#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesaro/alphabet.hpp"

namespace cesaro {

// A subshift given by a labeled directed multigraph presentation.  The
// presentation is kept trimmed: every vertex lies on a bi-infinite path, so
// the language of the graph is exactly the language of the subshift.
//
// SFTs built from a forbidden-word list use the higher-block presentation on
// memory length max|e|-1; the full shift is the single vertex with one loop
// per symbol.  Sofic spaces arise as images of block maps.
struct ShiftSpace {
  enum class Kind { Full, Sft, Sofic };

  struct Edge {
    int src, dst, label;
    bool operator==(const Edge&) const = default;
  };

  Alphabet alphabet;
  Kind kind = Kind::Full;
  int vertex_count = 0;
  std::vector<Edge> edges;            // sorted by (src, label, dst)
  std::vector<Word> forbidden;        // provenance, SFT kind only
  std::vector<std::string> vertex_names;

  bool is_full() const { return kind == Kind::Full; }

  // Per-vertex, per-label successor lists (built lazily by ops that need
  // them; kept out of the struct to leave it aggregate-initializable).
};

ShiftSpace full_shift(const Alphabet& alphabet);

// Higher-block SFT from a forbidden-word list.  Raises EmptyLanguage when
// trimming removes every vertex.
ShiftSpace build_sft(const Alphabet& alphabet, const std::vector<Word>& forbidden);

// All words of the given length in the language, lexicographically sorted.
std::vector<Word> language_words(const ShiftSpace& space, int length);

// Membership of a finite word in the language.
bool contains(const ShiftSpace& space, const Word& w);

// Transitivity = the trimmed presentation is one strongly connected
// component.  Mixing additionally requires gcd of cycle lengths 1.
bool is_transitive(const ShiftSpace& space);
bool is_mixing(const ShiftSpace& space);

// Whether the periodic point with this generator lies in the space, i.e.
// some vertex carries a cyclic path labeled by the generator.
bool admits_periodic(const ShiftSpace& space, const Word& generator);

// Restores the trimmed invariant after graph surgery (used by image
// constructions); deletes vertices off every bi-infinite path.
void trim_presentation(ShiftSpace& space);

}  // namespace cesaro
