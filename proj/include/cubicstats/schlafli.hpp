#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cubicstats::schlafli {

inline constexpr int kNumLines = 27;

// The 27 lines carry the blow-up labeling: E1..E6 are the exceptional curves,
// L(i,j) the transforms of lines through two of the six points, C1..C6 the
// transforms of conics through five of them. Canonical index order is
// E1..E6, then L(i,j) lexicographic, then C1..C6.
struct LineLabel {
  enum Kind { E, L, C } kind;
  int i;  // 1-based
  int j;  // second index for L, else 0

  static LineLabel from_index(int idx);
  int index() const;
  std::string name() const;  // "E1", "L12", "C3"
};

// Line-intersection graph on the 27 labels; strongly regular (27,10,1,5).
class IncidenceGraph {
 public:
  static IncidenceGraph schlafli_graph();

  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1u; }
  uint32_t neighbors(int a) const { return adj_[a]; }
  int degree(int a) const;
  int common_neighbors(int a, int b) const;

 private:
  std::array<uint32_t, kNumLines> adj_{};
};

using Tritangent = std::array<uint8_t, 3>;  // ascending indices, pairwise adjacent

// Unordered pair of disjoint 6-cocliques, cross-adjacent except at equal
// positions. Stored with each side ascending and a < b lexicographically;
// positions are aligned so a[i] is the unique non-neighbor of b[i].
struct DoubleSix {
  std::array<uint8_t, 6> a;
  std::array<uint8_t, 6> b;
};

// All pairwise-adjacent triples, in lexicographic order. Exactly 45.
std::vector<Tritangent> enumerate_tritangents(const IncidenceGraph& g);

// All double sixes, lexicographically ordered. Exactly 36.
std::vector<DoubleSix> enumerate_double_sixes(const IncidenceGraph& g);

// Maximal cocliques (size 6) of the graph; there are 72, two per double six.
std::vector<std::array<uint8_t, 6>> enumerate_six_cocliques(const IncidenceGraph& g);

}  // namespace cubicstats::schlafli
