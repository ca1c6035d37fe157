#include "cubicstats/chars.hpp"

#include <stdexcept>

namespace cubicstats::chars {

using weyl::kNumClasses;

ClassFunction cf_zero() { return ClassFunction{}; }

ClassFunction cf_constant(Rational v) {
  ClassFunction f;
  f.fill(v);
  return f;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r;
  for (int i = 0; i < kNumClasses; ++i) r[i] = a[i] + b[i];
  return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r;
  for (int i = 0; i < kNumClasses; ++i) r[i] = a[i] - b[i];
  return r;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r;
  for (int i = 0; i < kNumClasses; ++i) r[i] = a[i] * b[i];
  return r;
}

ClassFunction cf_scale(const ClassFunction& a, Rational s) {
  ClassFunction r;
  for (int i = 0; i < kNumClasses; ++i) r[i] = a[i] * s;
  return r;
}

namespace {

// The fifteen stored character rows; classes in canonical order. Blank
// entries of the U rows on odd classes are zeros.
struct StoredRow {
  const char* name;
  bool has_primed_twin;
  int values[kNumClasses];
};

constexpr StoredRow kStoredRows[15] = {
    {"V1", true, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                  1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {"V6", true, {6, 2, -2, 3, -3, 0, 2, 0, 1, 1, -1, -2, 1, 0, -1,
                  4, 0, 2, -2, 1, -2, 0, 0, -1, 1}},
    {"V15_1", true, {15, -1, -1, 3, 6, 0, 3, -1, 0, -1, -1, 2, 2, 0, 0,
                     5, -3, 1, 1, -1, 2, 0, -1, 0, 1}},
    {"V15_2", true, {15, 3, 7, 0, -3, 3, -1, 1, 0, -2, 0, 1, 1, 0, -1,
                     5, 1, -1, 3, 2, -1, 1, -1, 0, 0}},
    {"V20", true, {20, 4, 4, 5, 2, -1, 0, 0, 0, 1, 1, 1, -2, -1, 0,
                   10, 2, 2, 2, 1, 1, -1, 0, 0, -1}},
    {"V24", true, {24, 0, 8, 0, 6, 3, 0, 0, -1, 2, 0, -1, 2, 0, 0,
                   4, 4, 0, 0, -2, 1, 1, 0, -1, 0}},
    {"V30", true, {30, 2, -10, 3, 3, 3, -2, 0, 0, -1, -1, -1, -1, 0, 1,
                   10, -2, 0, -4, 1, 1, 1, 0, 0, -1}},
    {"V60", true, {60, 4, -4, -3, 6, -3, 0, 0, 0, -1, 1, -1, 2, 0, 0,
                   10, 2, -2, -2, 1, 1, -1, 0, 0, 1}},
    {"V64", true, {64, 0, 0, 4, -8, -2, 0, 0, -1, 0, 0, 0, 0, 1, 0,
                   16, 0, 0, 0, -2, -2, 0, 0, 1, 0}},
    {"V81", true, {81, -3, 9, 0, 0, 0, -3, -1, 1, 0, 0, 0, 0, 0, 0,
                   9, -3, -1, 3, 0, 0, 0, 1, -1, 0}},
    {"U10", false, {10, 2, -6, -2, 1, 4, 2, -2, 0, 0, 2, 0, -3, 1, -1,
                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"U20", false, {20, -4, 4, 2, -7, 2, 4, 0, 0, -2, 2, -2, 1, -1, 1,
                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"U60", false, {60, 4, 12, -6, -3, 0, 4, 0, 0, 0, -2, 0, -3, 0, 1,
                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"U80", false, {80, 0, -16, -4, -10, 2, 0, 0, 0, 2, 0, 2, 2, -1, 0,
                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"U90", false, {90, -6, -6, 0, 9, 0, 2, 2, 0, 0, 0, 0, -3, 0, -1,
                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

}  // namespace

CharacterTable::CharacterTable(const weyl::Group& group) : group_(group) {
  for (const StoredRow& row : kStoredRows) {
    Irreducible v;
    v.name = row.name;
    v.primed = false;
    v.dim = row.values[0];
    for (int c = 0; c < kNumClasses; ++c) v.chi[c] = Rational(row.values[c]);
    irreps_.push_back(v);
    if (row.has_primed_twin) {
      Irreducible vp = v;
      vp.name = std::string(row.name) + "'";
      vp.primed = true;
      for (int c = 0; c < kNumClasses; ++c)
        if (!group.classes()[c].even) vp.chi[c] = -vp.chi[c];
      irreps_.push_back(vp);
    }
  }
  auto failures = check(irreps_, group_);
  if (!failures.empty())
    throw std::runtime_error("character table verification failed: " + failures.front());
}

const CharacterTable& CharacterTable::shared() {
  static const CharacterTable t(weyl::Group::shared());
  return t;
}

const Irreducible& CharacterTable::by_name(const std::string& name) const {
  return irreps_.at(index_of(name));
}

int CharacterTable::index_of(const std::string& name) const {
  for (size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].name == name) return (int)i;
  throw std::runtime_error("unknown irreducible " + name);
}

Rational CharacterTable::inner(const ClassFunction& f, const ClassFunction& g) const {
  Rational s(0);
  for (int c = 0; c < kNumClasses; ++c)
    s += f[c] * g[c] * Rational(group_.classes()[c].size);
  return s / Rational(weyl::kGroupOrder);
}

std::vector<std::pair<int, long long>> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<std::pair<int, long long>> out;
  ClassFunction residual = f;
  for (size_t i = 0; i < irreps_.size(); ++i) {
    Rational m = inner(f, irreps_[i].chi);
    if (!m.is_integer())
      throw std::runtime_error("decompose: not a virtual character, <f," +
                               irreps_[i].name + "> = " + m.str());
    if (m.is_zero()) continue;
    out.emplace_back((int)i, m.as_integer());
    residual = residual - cf_scale(irreps_[i].chi, m);
  }
  for (int c = 0; c < kNumClasses; ++c)
    if (!residual[c].is_zero())
      throw std::runtime_error("decompose: nonzero residual; not a class function span");
  return out;
}

std::string CharacterTable::decomposition_name(const ClassFunction& f) const {
  auto parts = decompose(f);
  if (parts.empty()) return "0";
  std::string s;
  for (auto [i, m] : parts) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += irreps_[i].name;
  }
  return s;
}

Rational CharacterTable::invariant_dim(const ClassFunction& f,
                                       const std::vector<weyl::Perm>& gens) const {
  auto counts = group_.subgroup_class_counts(gens);
  long long order = 0;
  Rational s(0);
  for (int c = 0; c < kNumClasses; ++c) {
    order += counts[c];
    s += f[c] * Rational(counts[c]);
  }
  return s / Rational(order);
}

ClassFunction CharacterTable::indicator(int class_index) const {
  ClassFunction f = cf_zero();
  f[class_index] = Rational(1);
  return f;
}

ClassFunction CharacterTable::permutation_character(weyl::MarkedSet set) const {
  ClassFunction f;
  for (int c = 0; c < kNumClasses; ++c) f[c] = Rational(group_.fixed_points(c, set));
  return f;
}

std::vector<std::string> CharacterTable::check(const std::vector<Irreducible>& irreps,
                                               const weyl::Group& group) {
  std::vector<std::string> failures;
  const auto& classes = group.classes();
  auto inner = [&](const ClassFunction& f, const ClassFunction& g) {
    Rational s(0);
    for (int c = 0; c < kNumClasses; ++c)
      s += f[c] * g[c] * Rational(classes[c].size);
    return s / Rational(weyl::kGroupOrder);
  };

  if (irreps.size() != kNumClasses) {
    failures.push_back("expected 25 irreducibles");
    return failures;
  }

  long long dim_sq = 0;
  for (const auto& v : irreps) dim_sq += (long long)v.dim * v.dim;
  if (dim_sq != weyl::kGroupOrder)
    failures.push_back("sum of squared dimensions is " + std::to_string(dim_sq));

  for (size_t i = 0; i < irreps.size(); ++i)
    for (size_t j = i; j < irreps.size(); ++j) {
      Rational p = inner(irreps[i].chi, irreps[j].chi);
      Rational want(i == j ? 1 : 0);
      if (p != want)
        failures.push_back("row orthogonality <" + irreps[i].name + "," +
                           irreps[j].name + "> = " + p.str());
    }

  for (int c = 0; c < kNumClasses; ++c)
    for (int d = c; d < kNumClasses; ++d) {
      Rational s(0);
      for (const auto& v : irreps) s += v.chi[c] * v.chi[d];
      Rational want = c == d ? Rational(weyl::kGroupOrder, classes[c].size) : Rational(0);
      if (s != want)
        failures.push_back("column orthogonality (" + classes[c].name + "," +
                           classes[d].name + ") = " + s.str());
    }

  for (const auto& v : irreps) {
    if (v.name[0] != 'U') continue;
    for (int c = 0; c < kNumClasses; ++c)
      if (!classes[c].even && !v.chi[c].is_zero())
        failures.push_back(v.name + " does not vanish on odd class " + classes[c].name);
  }

  // the stored V6 row must agree with the traces computed from the lattice
  for (const auto& v : irreps) {
    if (v.name != "V6") continue;
    for (int c = 0; c < kNumClasses; ++c)
      if (v.chi[c] != Rational(classes[c].trace_v6))
        failures.push_back("V6 row disagrees with computed trace on " + classes[c].name);
  }

  return failures;
}

}  // namespace cubicstats::chars
