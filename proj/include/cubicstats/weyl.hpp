#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubicstats/schlafli.hpp"

namespace cubicstats::weyl {

inline constexpr long long kGroupOrder = 51840;
inline constexpr int kNumClasses = 25;

// Permutation of the 27 canonical line labels, stored as images.
using Perm = std::array<uint8_t, schlafli::kNumLines>;

Perm identity_perm();
Perm compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm inverse(const Perm& p);
int perm_order(const Perm& p);

// Integer vector in the rank-7 Picard lattice, coefficients of e0,e1..e6.
// The pairing has signature (1,6): <e0,e0> = 1, <ei,ei> = -1.
using PicardVec = std::array<int, 7>;

inline constexpr PicardVec kCanonicalClass = {-3, 1, 1, 1, 1, 1, 1};

long long pairing(const PicardVec& a, const PicardVec& b);
PicardVec line_to_picard(int line);

using Mat7 = std::array<std::array<long long, 7>, 7>;

// The unique lattice map sending each line class to its image line class.
// Fixes the canonical class and preserves the pairing; both are asserted.
Mat7 matrix_on_picard(const Perm& g);
long long trace(const Mat7& m);
long long det(const Mat7& m);
// Characteristic polynomial coefficients of det(xI - M), degree 7, c[0..7].
std::array<long long, 8> char_poly(const Mat7& m);

// Degree-6 characteristic polynomial of the action on the orthogonal
// complement of the canonical class, c[0..6]; distinguishes all 25 classes.
std::array<long long, 7> char_poly_v6(const Perm& g);

struct CycleTypePart {
  int d;
  int mult;  // may be negative
  bool operator==(const CycleTypePart&) const = default;
};

// Decomposes a degree-6 characteristic polynomial as a virtual sum of
// regular representations of cyclic groups: product over d of (x^d-1)^{i_d}.
std::vector<CycleTypePart> virtual_cycle_type(const std::array<long long, 7>& cp, int order);
std::string cycle_type_name(const std::vector<CycleTypePart>& parts);

struct ConjugacyClass {
  int index = 0;                 // canonical position, 0..24
  std::string name;              // "(1^-2,2^4)"
  std::string atlas_name;        // "2A"
  std::vector<CycleTypePart> cycle_type;
  int order = 0;
  long long size = 0;
  Perm rep{};                    // lexicographically least member
  std::array<long long, 7> v6_char_poly{};
  long long trace_v6 = 0;
  bool even = false;
  std::vector<int> power_map;    // power_map[k] = class index of rep^k, k = 0..order
  long long fixed_lines = 0;
  long long fixed_tritangents = 0;
  long long fixed_double_sixes = 0;
};

enum class MarkedSet { Lines, Tritangents, DoubleSixes };

class Group {
 public:
  // Builds the full automorphism group of the Schlafli graph and its class
  // data. Throws if the order is not 51840 or the class count is not 25.
  Group();

  static const Group& shared();

  const schlafli::IncidenceGraph& graph() const { return graph_; }
  long long order() const { return (long long)elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  // Small generating set (index relabelings, the E<->C swap, one extra).
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int index_of(const Perm& p) const;
  int class_of_element(int element_index) const { return class_of_[element_index]; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const ConjugacyClass& class_by_name(const std::string& name) const;

  // Identification through the degree-6 characteristic polynomial.
  int identify_class(const Perm& g) const;

  long long fixed_points(int class_index, MarkedSet set) const;

  // Closure of a generator list; throws if a generator is outside the group.
  std::vector<Perm> subgroup_closure(const std::vector<Perm>& gens) const;
  // Number of members of each conjugacy class inside the generated subgroup.
  std::array<long long, kNumClasses> subgroup_class_counts(const std::vector<Perm>& gens) const;
  // Fixed cosets of a class representative acting on left cosets of the
  // generated subgroup.
  long long coset_fixed_points(int class_index, const std::vector<Perm>& gens) const;

  // Elements fixing a given line; used for marking by a single line.
  std::vector<Perm> line_stabilizer(int line) const;

  const std::vector<schlafli::Tritangent>& tritangents() const { return tritangents_; }
  const std::vector<schlafli::DoubleSix>& double_sixes() const { return double_sixes_; }

 private:
  struct PermHash {
    size_t operator()(const Perm& p) const {
      uint64_t h = 1469598103934665603ull;
      for (uint8_t v : p) h = (h ^ v) * 1099511628211ull;
      return (size_t)h;
    }
  };

  void build_elements();
  void build_classes();

  schlafli::IncidenceGraph graph_;
  std::vector<schlafli::Tritangent> tritangents_;
  std::vector<schlafli::DoubleSix> double_sixes_;
  std::vector<Perm> elements_;  // sorted lexicographically
  std::vector<Perm> generators_;
  std::unordered_map<Perm, uint32_t, PermHash> index_;
  std::vector<int> class_of_;   // per element
  std::vector<ConjugacyClass> classes_;
  std::unordered_map<std::string, int> class_by_name_;
  std::unordered_map<uint64_t, int> class_by_poly_;  // hashed char poly -> class

  static uint64_t poly_key(const std::array<long long, 7>& cp);
};

// Index relabeling sigma acting as E(i)->E(s(i)), L(i,j)->L(s(i),s(j)),
// C(i)->C(s(i)); sigma is given as images of 1..6.
Perm relabeling_perm(const std::array<int, 6>& sigma);
// The involution swapping E(i) and C(i) and fixing every L(i,j).
Perm ec_swap_perm();

}  // namespace cubicstats::weyl
