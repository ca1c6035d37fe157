#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicstats/bigint.hpp"
#include "cubicstats/chars.hpp"
#include "cubicstats/poly.hpp"
#include "cubicstats/weyl.hpp"

namespace cubicstats::counting {

enum class Flavor { Product, Sym, PConf, UConf };

struct CountRow {
  std::string key;                    // class name, trace value, fixed count or count polynomial
  std::optional<long long> weight;    // class size when the row is per-class
  QPoly poly;
};

// Per-class counting polynomials and the distributions derived from them.
// Everything is exact; the degree-4 polynomials are normalized so that the
// count of surfaces is #PGL(4,F_q) * (#c/#W) * poly(q).
class Engine {
 public:
  Engine(const weyl::Group& group, const chars::CharacterTable& table);

  static const Engine& shared();

  const weyl::Group& group() const { return group_; }
  const chars::CharacterTable& table() const { return table_; }

  // Graded character of the cohomology of the line-marked moduli space
  // modulo PGL4, degrees 0..4.
  const std::vector<chars::ClassFunction>& moduli_cohomology() const { return h_moduli_; }

  const QPoly& class_count_poly(int c) const { return count_poly_[c]; }
  static QPoly pgl4_order_poly();
  BigInt absolute_count(int c, long long q) const;  // throws if negative or fractional

  std::vector<CountRow> table1() const;  // one row per class
  std::vector<CountRow> table2() const;  // keyed by the trace t
  std::vector<CountRow> table3() const;  // keyed by the fixed tritangent count
  std::vector<CountRow> table4() const;  // keyed by the pair count polynomial

  // Number of points over F_{q^k} as a polynomial: q^{2k} + t_k q^k + 1.
  QPoly point_count_poly(int c, int k) const;
  long long surface_point_count(int c, int k, long long q) const;
  long long trace_t(int c, int k = 1) const;  // t_k = 1 + trace on V6 of the k-th power

  // Number of closed points of degree d, as a rational polynomial in q.
  RPoly closed_points_poly(int c, int d) const;
  long long closed_point_count(int c, int d, long long q) const;

  QPoly config_count_poly(int c, Flavor flavor, int n) const;
  long long config_count(int c, Flavor flavor, int n, long long q) const;

  // Prime powers at which the class polynomial vanishes.
  std::vector<long long> exceptions(int c) const;

  // Graded characters of the cohomology of the n-fold symmetric power (or
  // n-fold product) of a surface, degrees 0..4n.
  std::vector<chars::ClassFunction> graded_sym_character(int n) const;
  std::vector<chars::ClassFunction> graded_product_character(int n) const;

  // Graded character of the cohomology of the unordered two-point
  // configuration space, computed from the two-point complex whose
  // degree-3 generator maps to the diagonal class. Verified against the
  // known decomposition; throws on mismatch.
  std::vector<chars::ClassFunction> uconf2_cohomology() const;

  // Invariant dimensions per total degree of (marked moduli cohomology)
  // tensor (fiber cohomology), for the subgroup generated by gens.
  std::vector<long long> marked_cohomology(const std::vector<weyl::Perm>& gens,
                                           Flavor flavor, int n) const;

  // Distribution of the number of rational elements of a marked set, rows
  // keyed by the fixed count (optionally scaled by a fiber count
  // polynomial when a flavor is given).
  std::vector<CountRow> marking_distribution(weyl::MarkedSet set,
                                             std::optional<Flavor> flavor = std::nullopt,
                                             int n = 0) const;
  std::vector<CountRow> marking_distribution(const std::vector<weyl::Perm>& subgroup_gens,
                                             std::optional<Flavor> flavor = std::nullopt,
                                             int n = 0) const;

 private:
  std::vector<CountRow> distribution_rows(const std::vector<long long>& fixed_counts,
                                          std::optional<Flavor> flavor, int n) const;
  RPoly flavor_count_rpoly(int c, Flavor flavor, int n) const;

  const weyl::Group& group_;
  const chars::CharacterTable& table_;
  std::vector<chars::ClassFunction> h_moduli_;  // degrees 0..4
  std::vector<QPoly> count_poly_;               // per class
};

// Prime powers up to the given bound, ascending.
std::vector<long long> prime_powers_upto(long long bound);

}  // namespace cubicstats::counting
