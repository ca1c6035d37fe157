#include "cubicstats/schlafli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cubicstats::schlafli {

namespace {

// L(i,j) with 1 <= i < j <= 6 packed into 0..14 lexicographically.
int pair_index(int i, int j) {
  int idx = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw std::runtime_error("bad pair");
}

}  // namespace

LineLabel LineLabel::from_index(int idx) {
  if (idx < 0 || idx >= kNumLines) throw std::runtime_error("line index out of range");
  if (idx < 6) return {E, idx + 1, 0};
  if (idx >= 21) return {C, idx - 21 + 1, 0};
  int k = idx - 6;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (k-- == 0) return {L, a, b};
  throw std::runtime_error("unreachable");
}

int LineLabel::index() const {
  switch (kind) {
    case E: return i - 1;
    case L: return 6 + pair_index(i, j);
    case C: return 21 + i - 1;
  }
  throw std::runtime_error("bad label");
}

std::string LineLabel::name() const {
  switch (kind) {
    case E: return "E" + std::to_string(i);
    case L: return "L" + std::to_string(i) + std::to_string(j);
    case C: return "C" + std::to_string(i);
  }
  return {};
}

IncidenceGraph IncidenceGraph::schlafli_graph() {
  IncidenceGraph g;
  auto meets = [](const LineLabel& x, const LineLabel& y) {
    if (x.kind == LineLabel::E && y.kind == LineLabel::E) return false;
    if (x.kind == LineLabel::C && y.kind == LineLabel::C) return false;
    if (x.kind == LineLabel::E && y.kind == LineLabel::C) return x.i != y.i;
    if (x.kind == LineLabel::E && y.kind == LineLabel::L) return x.i == y.i || x.i == y.j;
    if (x.kind == LineLabel::C && y.kind == LineLabel::L) return x.i == y.i || x.i == y.j;
    // both L: meet iff index pairs are disjoint
    return x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
  };
  for (int a = 0; a < kNumLines; ++a)
    for (int b = a + 1; b < kNumLines; ++b) {
      LineLabel la = LineLabel::from_index(a);
      LineLabel lb = LineLabel::from_index(b);
      bool adj = la.kind <= lb.kind ? meets(la, lb) : meets(lb, la);
      if (adj) {
        g.adj_[a] |= 1u << b;
        g.adj_[b] |= 1u << a;
      }
    }
  return g;
}

int IncidenceGraph::degree(int a) const { return std::popcount(adj_[a]); }

int IncidenceGraph::common_neighbors(int a, int b) const {
  return std::popcount(adj_[a] & adj_[b]);
}

std::vector<Tritangent> enumerate_tritangents(const IncidenceGraph& g) {
  std::vector<Tritangent> out;
  for (int a = 0; a < kNumLines; ++a)
    for (int b = a + 1; b < kNumLines; ++b) {
      if (!g.adjacent(a, b)) continue;
      uint32_t common = g.neighbors(a) & g.neighbors(b);
      for (int c = b + 1; c < kNumLines; ++c)
        if ((common >> c) & 1u) out.push_back({(uint8_t)a, (uint8_t)b, (uint8_t)c});
    }
  return out;
}

std::vector<std::array<uint8_t, 6>> enumerate_six_cocliques(const IncidenceGraph& g) {
  std::vector<std::array<uint8_t, 6>> out;
  std::array<uint8_t, 6> cur{};
  auto rec = [&](auto&& self, int depth, int start, uint32_t excluded) -> void {
    if (depth == 6) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < kNumLines; ++v) {
      if ((excluded >> v) & 1u) continue;
      cur[depth] = (uint8_t)v;
      self(self, depth + 1, v + 1, excluded | g.neighbors(v) | (1u << v));
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::vector<DoubleSix> enumerate_double_sixes(const IncidenceGraph& g) {
  auto cocliques = enumerate_six_cocliques(g);
  std::vector<DoubleSix> out;
  for (const auto& a : cocliques) {
    uint32_t amask = 0;
    for (uint8_t v : a) amask |= 1u << v;
    // partner b[i]: adjacent to every a[j], j != i, and not to a[i]
    std::array<uint8_t, 6> b{};
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      uint32_t cand = ~amask;
      for (int j = 0; j < 6; ++j)
        cand &= j == i ? ~g.neighbors(a[j]) : g.neighbors(a[j]);
      cand &= (1u << kNumLines) - 1;
      if (std::popcount(cand) != 1) { ok = false; break; }
      b[i] = (uint8_t)std::countr_zero(cand);
    }
    if (!ok) continue;
    // keep each pair once, with the lexicographically smaller side first
    std::array<uint8_t, 6> bs = b;
    std::sort(bs.begin(), bs.end());
    if (a < bs) {
      // re-align b so that b[i] pairs with ascending a (a is already ascending)
      out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DoubleSix& x, const DoubleSix& y) { return x.a < y.a; });
  return out;
}

}  // namespace cubicstats::schlafli
