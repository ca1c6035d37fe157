#include "cubicstats/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "cubicstats/poly.hpp"

namespace cubicstats::weyl {

using schlafli::IncidenceGraph;
using schlafli::kNumLines;
using schlafli::LineLabel;

Perm identity_perm() {
  Perm p;
  for (int i = 0; i < kNumLines; ++i) p[i] = (uint8_t)i;
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r;
  for (int i = 0; i < kNumLines; ++i) r[i] = f[g[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  for (int i = 0; i < kNumLines; ++i) r[p[i]] = (uint8_t)i;
  return r;
}

int perm_order(const Perm& p) {
  int ord = 1;
  std::array<bool, kNumLines> seen{};
  for (int i = 0; i < kNumLines; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = p[j];
      ++len;
    } while (j != i);
    ord = (int)std::lcm(ord, len);
  }
  return ord;
}

long long pairing(const PicardVec& a, const PicardVec& b) {
  long long s = (long long)a[0] * b[0];
  for (int i = 1; i < 7; ++i) s -= (long long)a[i] * b[i];
  return s;
}

PicardVec line_to_picard(int line) {
  LineLabel l = LineLabel::from_index(line);
  PicardVec v{};
  switch (l.kind) {
    case LineLabel::E:
      v[l.i] = 1;
      break;
    case LineLabel::L:
      v[0] = 1;
      v[l.i] = -1;
      v[l.j] = -1;
      break;
    case LineLabel::C:
      v[0] = 2;
      for (int k = 1; k <= 6; ++k)
        if (k != l.i) v[k] = -1;
      break;
  }
  return v;
}

namespace {

PicardVec mat_apply(const Mat7& m, const PicardVec& v) {
  PicardVec r{};
  for (int i = 0; i < 7; ++i) {
    long long s = 0;
    for (int j = 0; j < 7; ++j) s += m[i][j] * v[j];
    r[i] = (int)s;
  }
  return r;
}

}  // namespace

Mat7 matrix_on_picard(const Perm& g) {
  // e_i = class of E_i for i >= 1, and e_0 = class of L(1,2) + e_1 + e_2.
  std::array<PicardVec, 7> image_of_basis;
  for (int i = 1; i <= 6; ++i)
    image_of_basis[i] = line_to_picard(g[LineLabel{LineLabel::E, i, 0}.index()]);
  PicardVec wl = line_to_picard(g[LineLabel{LineLabel::L, 1, 2}.index()]);
  for (int r = 0; r < 7; ++r)
    image_of_basis[0][r] = wl[r] + image_of_basis[1][r] + image_of_basis[2][r];

  Mat7 m{};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) m[r][c] = image_of_basis[c][r];

  // the map must send every line class to the image line class and fix K
  for (int l = 0; l < kNumLines; ++l)
    if (mat_apply(m, line_to_picard(l)) != line_to_picard(g[l]))
      throw std::runtime_error("matrix_on_picard: no consistent linear extension");
  if (mat_apply(m, kCanonicalClass) != kCanonicalClass)
    throw std::runtime_error("matrix_on_picard: canonical class not fixed");
  return m;
}

long long trace(const Mat7& m) {
  long long t = 0;
  for (int i = 0; i < 7; ++i) t += m[i][i];
  return t;
}

namespace {

Mat7 mat_mul(const Mat7& a, const Mat7& b) {
  Mat7 r{};
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      long long aik = a[i][k];
      if (!aik) continue;
      for (int j = 0; j < 7; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

}  // namespace

long long det(const Mat7& m) {
  // fraction-free Gaussian elimination (Bareiss)
  std::array<std::array<long long, 7>, 7> a;
  for (int i = 0; i < 7; ++i) a[i] = m[i];
  long long prev = 1, sign = 1;
  for (int k = 0; k < 6; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < 7; ++r)
        if (a[r][k] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < 7; ++i)
      for (int j = k + 1; j < 7; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[6][6];
}

std::array<long long, 8> char_poly(const Mat7& m) {
  // Faddeev-LeVerrier; all divisions are exact for an integer matrix
  std::array<long long, 8> c{};
  c[7] = 1;
  Mat7 n = m;
  long long ck = -trace(n);
  c[6] = ck;
  for (int k = 2; k <= 7; ++k) {
    Mat7 shifted = n;
    for (int i = 0; i < 7; ++i) shifted[i][i] += ck;
    n = mat_mul(m, shifted);
    long long t = trace(n);
    if (t % k != 0) throw std::runtime_error("char_poly: non-integral coefficient");
    ck = -t / k;
    c[7 - k] = ck;
  }
  return c;
}

std::array<long long, 7> char_poly_v6(const Perm& g) {
  auto cp7 = char_poly(matrix_on_picard(g));
  // synthetic division by (x - 1); the canonical class contributes the root 1
  std::array<long long, 7> q{};
  long long carry = cp7[7];
  for (int k = 6; k >= 0; --k) {
    q[k] = carry;
    carry = cp7[k] + carry;
  }
  if (carry != 0) throw std::runtime_error("char_poly_v6: (x-1) does not divide");
  return q;
}

namespace {

struct Cyclotomic {
  int m;
  QPoly poly;
};

const std::vector<Cyclotomic>& cyclotomics() {
  static const std::vector<Cyclotomic> polys = [] {
    std::vector<Cyclotomic> v;
    auto add = [&](int m, std::vector<long long> c) { v.push_back({m, QPoly(std::move(c))}); };
    add(1, {-1, 1});
    add(2, {1, 1});
    add(3, {1, 1, 1});
    add(4, {1, 0, 1});
    add(5, {1, 1, 1, 1, 1});
    add(6, {1, -1, 1});
    add(8, {1, 0, 0, 0, 1});
    add(9, {1, 0, 0, 1, 0, 0, 1});
    add(10, {1, -1, 1, -1, 1});
    add(12, {1, 0, -1, 0, 1});
    return v;
  }();
  return polys;
}

int mobius(int n) {
  static const int mu[13] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  if (n < 1 || n > 12) throw std::runtime_error("mobius: out of table");
  return mu[n];
}

}  // namespace

std::vector<CycleTypePart> virtual_cycle_type(const std::array<long long, 7>& cp, int order) {
  QPoly p(std::vector<long long>(cp.begin(), cp.end()));
  std::array<int, 13> mult{};  // multiplicity of each cyclotomic factor
  for (const auto& cyc : cyclotomics()) {
    for (;;) {
      bool divides = true;
      QPoly q;
      try {
        q = p.div_exact(cyc.poly);
      } catch (const std::exception&) {
        divides = false;
      }
      if (!divides) break;
      p = q;
      ++mult[cyc.m];
      if (p.degree() == 0) break;
    }
  }
  if (!(p == QPoly(1)))
    throw std::runtime_error("virtual_cycle_type: non-cyclotomic factor remains");

  std::vector<CycleTypePart> parts;
  long long check = 0;
  for (int d = 1; d <= order; ++d) {
    if (order % d != 0) continue;
    int id = 0;
    for (int m = d; m <= order; m += d)
      if (order % m == 0) id += mobius(m / d) * mult[m];
    if (id != 0) parts.push_back({d, id});
    check += (long long)d * id;
  }
  if (check != 6) throw std::runtime_error("virtual_cycle_type: sum d*i_d != 6");

  // the virtual product must reconstruct the characteristic polynomial
  QPoly pos(1), neg(1);
  for (const auto& part : parts) {
    QPoly xd = QPoly::monomial(part.d) - QPoly(1);
    for (int k = 0; k < std::abs(part.mult); ++k) (part.mult > 0 ? pos : neg) *= xd;
  }
  QPoly orig(std::vector<long long>(cp.begin(), cp.end()));
  if (pos != orig * neg)
    throw std::runtime_error("virtual_cycle_type: reconstruction failed");
  return parts;
}

std::string cycle_type_name(const std::vector<CycleTypePart>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i].d);
    if (parts[i].mult != 1) s += "^" + std::to_string(parts[i].mult);
  }
  return s + ")";
}

Perm relabeling_perm(const std::array<int, 6>& sigma) {
  Perm p;
  for (int idx = 0; idx < kNumLines; ++idx) {
    LineLabel l = LineLabel::from_index(idx);
    LineLabel img = l;
    switch (l.kind) {
      case LineLabel::E:
      case LineLabel::C:
        img.i = sigma[l.i - 1];
        break;
      case LineLabel::L:
        img.i = std::min(sigma[l.i - 1], sigma[l.j - 1]);
        img.j = std::max(sigma[l.i - 1], sigma[l.j - 1]);
        break;
    }
    p[idx] = (uint8_t)img.index();
  }
  return p;
}

Perm ec_swap_perm() {
  Perm p = identity_perm();
  for (int i = 1; i <= 6; ++i) {
    int e = LineLabel{LineLabel::E, i, 0}.index();
    int c = LineLabel{LineLabel::C, i, 0}.index();
    p[e] = (uint8_t)c;
    p[c] = (uint8_t)e;
  }
  return p;
}

namespace {

// Rows of the class table in canonical order: the 15 classes inside the
// index-2 simple subgroup first, then the 10 outside.
struct ClassRow {
  const char* name;
  const char* atlas;
  int order;
  long long size;
  bool even;
};

constexpr ClassRow kClassRows[kNumClasses] = {
    {"(1^6)", "1A", 1, 1, true},
    {"(1^2,2^2)", "2B", 2, 270, true},
    {"(1^-2,2^4)", "2A", 2, 45, true},
    {"(1^3,3)", "3D", 3, 240, true},
    {"(1^-3,3^3)", "3A,3B", 3, 80, true},
    {"(3^2)", "3C", 3, 480, true},
    {"(1^2,2^-2,4^2)", "4A", 4, 540, true},
    {"(2,4)", "4B", 4, 3240, true},
    {"(1,5)", "5A", 5, 5184, true},
    {"(1,2,3^-1,6)", "6C,6D", 6, 1440, true},
    {"(1^-1,2^2,3)", "6F", 6, 2160, true},
    {"(1^-2,2,6)", "6E", 6, 1440, true},
    {"(1,2^-2,3^-1,6^2)", "6A,6B", 6, 720, true},
    {"(3^-1,9)", "9A,9B", 9, 5760, true},
    {"(1^-1,2,3,4^-1,6^-1,12)", "12A,12B", 12, 4320, true},
    {"(1^4,2)", "2C", 2, 36, false},
    {"(2^3)", "2D", 2, 540, false},
    {"(1^2,4)", "4D", 4, 1620, false},
    {"(1^-2,2^2,4)", "4C", 4, 540, false},
    {"(1,2,3)", "6G", 6, 1440, false},
    {"(1^-2,2,3^2)", "6H", 6, 1440, false},
    {"(6)", "6I", 6, 4320, false},
    {"(2,4^-1,8)", "8A", 8, 6480, false},
    {"(1^-1,2,5)", "10A", 10, 5184, false},
    {"(1,2^-1,3^-1,4,6)", "12C", 12, 4320, false},
};

// Enumerates every adjacency-preserving permutation of the graph by
// depth-first extension with bitmask pruning. Vertices are assigned in
// natural order; after the six pairwise-skew E's the rest is nearly forced.
std::vector<Perm> all_automorphisms(const IncidenceGraph& g) {
  std::vector<Perm> out;
  constexpr uint32_t kFull = (1u << kNumLines) - 1;
  Perm img{};
  auto rec = [&](auto&& self, int v, uint32_t used) -> void {
    if (v == kNumLines) {
      out.push_back(img);
      return;
    }
    uint32_t cand = kFull & ~used;
    for (int u = 0; u < v && cand; ++u)
      cand &= g.adjacent(u, v) ? g.neighbors(img[u]) : ~g.neighbors(img[u]);
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      img[v] = (uint8_t)w;
      self(self, v + 1, used | (1u << w));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Group::Group() {
  graph_ = IncidenceGraph::schlafli_graph();
  tritangents_ = schlafli::enumerate_tritangents(graph_);
  double_sixes_ = schlafli::enumerate_double_sixes(graph_);
  build_elements();
  build_classes();
}

const Group& Group::shared() {
  static const Group g;
  return g;
}

void Group::build_elements() {
  Perm transposition = relabeling_perm({2, 1, 3, 4, 5, 6});
  Perm cycle = relabeling_perm({2, 3, 4, 5, 6, 1});
  Perm swap = ec_swap_perm();
  std::vector<Perm> seed = {transposition, cycle, swap};

  auto closure = [](const std::vector<Perm>& gens) {
    std::unordered_map<Perm, uint32_t, PermHash> seen;
    std::deque<Perm> queue;
    Perm id = identity_perm();
    seen.emplace(id, 0);
    queue.push_back(id);
    while (!queue.empty()) {
      Perm x = queue.front();
      queue.pop_front();
      for (const Perm& gp : gens) {
        Perm y = compose(x, gp);
        if (seen.emplace(y, (uint32_t)seen.size()).second) queue.push_back(y);
      }
      if (seen.size() > (size_t)kGroupOrder)
        throw std::runtime_error("closure exceeded expected group order");
    }
    return seen;
  };

  auto seeded = closure(seed);
  if ((long long)seeded.size() == kGroupOrder) {
    elements_.reserve(seeded.size());
    for (const auto& [p, _] : seeded) elements_.push_back(p);
    std::sort(elements_.begin(), elements_.end());
    generators_ = seed;
  } else {
    // relabelings and the E<->C swap only reach a proper subgroup; fall back
    // to the full automorphism search
    elements_ = all_automorphisms(graph_);
    for (const Perm& p : elements_)
      if (!seeded.count(p)) { generators_ = seed; generators_.push_back(p); break; }
    if (generators_.empty()) throw std::runtime_error("no extra generator found");
    if (closure(generators_).size() != elements_.size())
      throw std::runtime_error("generator set does not generate the full group");
  }

  if ((long long)elements_.size() != kGroupOrder)
    throw std::runtime_error("automorphism group order is " +
                             std::to_string(elements_.size()) + ", expected 51840");

  index_.reserve(elements_.size() * 2);
  for (uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

int Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : (int)it->second;
}

uint64_t Group::poly_key(const std::array<long long, 7>& cp) {
  uint64_t h = 1469598103934665603ull;
  for (long long c : cp) h = (h ^ (uint64_t)c) * 1099511628211ull;
  return h;
}

void Group::build_classes() {
  const size_t n = elements_.size();
  std::vector<Perm> gen_inv;
  for (const Perm& gp : generators_) gen_inv.push_back(inverse(gp));

  class_of_.assign(n, -1);
  std::vector<ConjugacyClass> found;
  for (size_t start = 0; start < n; ++start) {
    if (class_of_[start] >= 0) continue;
    int cls = (int)found.size();
    std::deque<uint32_t> queue;
    class_of_[start] = cls;
    queue.push_back((uint32_t)start);
    long long size = 0;
    while (!queue.empty()) {
      uint32_t x = queue.front();
      queue.pop_front();
      ++size;
      for (size_t gi = 0; gi < generators_.size(); ++gi) {
        Perm y = compose(generators_[gi], compose(elements_[x], gen_inv[gi]));
        int yi = index_of(y);
        if (yi < 0) throw std::runtime_error("conjugate left the group");
        if (class_of_[yi] < 0) {
          class_of_[yi] = cls;
          queue.push_back((uint32_t)yi);
        }
      }
    }
    ConjugacyClass c;
    c.rep = elements_[start];
    c.size = size;
    found.push_back(std::move(c));
  }
  if ((int)found.size() != kNumClasses)
    throw std::runtime_error("expected 25 conjugacy classes, found " +
                             std::to_string(found.size()));

  for (auto& c : found) {
    c.order = perm_order(c.rep);
    Mat7 m = matrix_on_picard(c.rep);
    c.trace_v6 = trace(m) - 1;
    c.even = det(m) == 1;
    c.v6_char_poly = char_poly_v6(c.rep);
    c.cycle_type = virtual_cycle_type(c.v6_char_poly, c.order);
    c.name = cycle_type_name(c.cycle_type);
    c.fixed_lines = 0;
    for (int i = 0; i < kNumLines; ++i)
      if (c.rep[i] == i) ++c.fixed_lines;
    c.fixed_tritangents = 0;
    for (const auto& t : tritangents_) {
      std::array<uint8_t, 3> im = {c.rep[t[0]], c.rep[t[1]], c.rep[t[2]]};
      std::sort(im.begin(), im.end());
      if (im == t) ++c.fixed_tritangents;
    }
    c.fixed_double_sixes = 0;
    for (const auto& ds : double_sixes_) {
      std::array<uint8_t, 6> ia, ib;
      for (int i = 0; i < 6; ++i) { ia[i] = c.rep[ds.a[i]]; ib[i] = c.rep[ds.b[i]]; }
      std::sort(ia.begin(), ia.end());
      std::sort(ib.begin(), ib.end());
      std::array<uint8_t, 6> sa = ds.a, sb = ds.b;
      std::sort(sb.begin(), sb.end());
      if ((ia == sa && ib == sb) || (ia == sb && ib == sa)) ++c.fixed_double_sixes;
    }
  }

  // align to the canonical class-table order, keyed by the virtual cycle type
  std::vector<int> canonical_of(found.size(), -1);
  classes_.assign(kNumClasses, {});
  for (int row = 0; row < kNumClasses; ++row) {
    const ClassRow& want = kClassRows[row];
    int hit = -1;
    for (size_t i = 0; i < found.size(); ++i)
      if (found[i].name == want.name) {
        if (hit >= 0) throw std::runtime_error("ambiguous class match for " + found[i].name);
        hit = (int)i;
      }
    if (hit < 0) throw std::runtime_error(std::string("no computed class named ") + want.name);
    ConjugacyClass& c = found[hit];
    if (c.order != want.order || c.size != want.size || c.even != want.even)
      throw std::runtime_error(std::string("class data mismatch for ") + want.name);
    c.index = row;
    c.atlas_name = want.atlas;
    canonical_of[hit] = row;
    classes_[row] = c;
  }
  for (auto& ci : class_of_) ci = canonical_of[ci];

  for (int i = 0; i < kNumClasses; ++i) {
    class_by_name_[classes_[i].name] = i;
    class_by_poly_[poly_key(classes_[i].v6_char_poly)] = i;
  }
  if (class_by_poly_.size() != kNumClasses)
    throw std::runtime_error("characteristic polynomials are not distinct");

  for (auto& c : classes_) {
    c.power_map.assign(c.order + 1, 0);
    Perm p = identity_perm();
    for (int k = 0; k <= c.order; ++k) {
      c.power_map[k] = class_of_[index_of(p)];
      p = compose(p, c.rep);
    }
  }
}

const ConjugacyClass& Group::class_by_name(const std::string& name) const {
  auto it = class_by_name_.find(name);
  if (it == class_by_name_.end()) throw std::runtime_error("unknown class " + name);
  return classes_[it->second];
}

int Group::identify_class(const Perm& g) const {
  auto cp = char_poly_v6(g);
  auto it = class_by_poly_.find(poly_key(cp));
  if (it == class_by_poly_.end() || classes_[it->second].v6_char_poly != cp)
    throw std::runtime_error("identify_class: no class with this characteristic polynomial");
  return it->second;
}

long long Group::fixed_points(int class_index, MarkedSet set) const {
  const ConjugacyClass& c = classes_.at(class_index);
  switch (set) {
    case MarkedSet::Lines: return c.fixed_lines;
    case MarkedSet::Tritangents: return c.fixed_tritangents;
    case MarkedSet::DoubleSixes: return c.fixed_double_sixes;
  }
  throw std::runtime_error("bad marked set");
}

std::vector<Perm> Group::subgroup_closure(const std::vector<Perm>& gens) const {
  for (const Perm& gp : gens)
    if (!contains(gp)) throw std::runtime_error("subgroup generator is not a group element");
  std::unordered_map<Perm, uint32_t, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = identity_perm();
  seen.emplace(id, 0);
  queue.push_back(id);
  std::vector<Perm> out = {id};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const Perm& gp : gens) {
      Perm y = compose(x, gp);
      if (seen.emplace(y, (uint32_t)seen.size()).second) {
        queue.push_back(y);
        out.push_back(y);
      }
    }
  }
  return out;
}

std::array<long long, kNumClasses> Group::subgroup_class_counts(
    const std::vector<Perm>& gens) const {
  auto sub = subgroup_closure(gens);
  std::array<long long, kNumClasses> counts{};
  for (const Perm& h : sub) ++counts[class_of_[index_of(h)]];
  return counts;
}

long long Group::coset_fixed_points(int class_index, const std::vector<Perm>& gens) const {
  auto sub = subgroup_closure(gens);
  long long in_class = 0;
  for (const Perm& h : sub)
    if (class_of_[index_of(h)] == class_index) ++in_class;
  // #Fix(g on G/H) = |C_G(g)| * |H ∩ c| / |H|
  long long centralizer = kGroupOrder / classes_[class_index].size;
  long long num = centralizer * in_class;
  if (num % (long long)sub.size() != 0)
    throw std::runtime_error("coset_fixed_points: non-integral count");
  return num / (long long)sub.size();
}

std::vector<Perm> Group::line_stabilizer(int line) const {
  std::vector<Perm> out;
  for (const Perm& p : elements_)
    if (p[line] == line) out.push_back(p);
  return out;
}

}  // namespace cubicstats::weyl
