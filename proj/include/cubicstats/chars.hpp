#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cubicstats/rational.hpp"
#include "cubicstats/weyl.hpp"

namespace cubicstats::chars {

// A rational-valued function on the 25 conjugacy classes, indexed canonically.
using ClassFunction = std::array<Rational, weyl::kNumClasses>;

ClassFunction cf_zero();
ClassFunction cf_constant(Rational v);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);  // pointwise
ClassFunction cf_scale(const ClassFunction& a, Rational s);

struct Irreducible {
  std::string name;  // "V15_1", "V30'", "U80"
  bool primed = false;
  int dim = 0;
  ClassFunction chi;
};

// The 25 irreducible characters. The ten primed rows are the sign twists of
// their partners (negated on the ten odd classes); the five U rows vanish on
// odd classes.
class CharacterTable {
 public:
  explicit CharacterTable(const weyl::Group& group);

  static const CharacterTable& shared();

  const weyl::Group& group() const { return group_; }
  const std::vector<Irreducible>& irreps() const { return irreps_; }
  const Irreducible& irrep(int i) const { return irreps_.at(i); }
  const Irreducible& by_name(const std::string& name) const;
  int index_of(const std::string& name) const;

  Rational inner(const ClassFunction& f, const ClassFunction& g) const;

  // Multiplicity list (irrep index, multiplicity) of a virtual character;
  // throws when some inner product is not an integer. Zero multiplicities
  // are omitted; the residual is checked to vanish.
  std::vector<std::pair<int, long long>> decompose(const ClassFunction& f) const;
  std::string decomposition_name(const ClassFunction& f) const;  // e.g. "V1 + V6 + V20"

  // Dimension of the subspace invariant under the subgroup generated by gens.
  Rational invariant_dim(const ClassFunction& f, const std::vector<weyl::Perm>& gens) const;

  ClassFunction indicator(int class_index) const;
  ClassFunction permutation_character(weyl::MarkedSet set) const;

  // All consistency checks; returns human-readable failure descriptions.
  static std::vector<std::string> check(const std::vector<Irreducible>& irreps,
                                        const weyl::Group& group);

 private:
  const weyl::Group& group_;
  std::vector<Irreducible> irreps_;
};

}  // namespace cubicstats::chars
