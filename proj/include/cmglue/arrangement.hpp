#pragma once

#include <map>

#include "cmglue/hermitian.hpp"

namespace cmglue {

// canonical representative of the hyperplane H_r: the torsion multiple whose
// first nonzero coordinate has the lexicographically minimal coefficient tuple
CVec canonical_root(const HermitianLattice& L, const CVec& r);

// all short roots (h(r,r) = 1) with power-basis coefficients in
// [-bound, bound], one canonical representative per hyperplane, lex ordered
std::vector<CVec> enumerate_short_roots(const HermitianLattice& L, int bound);

struct Reflection {
  CVec root;
  long exponent = 0;  // in Z/m
  CMat matrix;
  bool identity_warning = false;  // set when exponent == 0
};

// the zeta^i-reflection x -> x - (1 - zeta^i) h(x,r) r, zeta the torsion
// generator of order m
Reflection reflection(const HermitianLattice& L, const CVec& r, long i);

enum class RootRelation {
  equal,
  orthogonal_intersecting,
  intersecting_nonorthogonal,
  disjoint_or_boundary,
};

const char* relation_name(RootRelation rel);

RootRelation hyperplane_relation(const HermitianLattice& L, const CVec& r, const CVec& t);

struct StarReport {
  std::map<RootRelation, long> counts;  // unordered pairs per relation
  std::vector<std::pair<int, int>> violations;
  bool pass = false;
};

// Condition (*): every distinct intersecting pair must be orthogonal
StarReport verify_condition_star(const HermitianLattice& L, const std::vector<CVec>& roots);

struct ReflectionGroup {
  long m = 0;
  std::vector<CVec> roots;
  // the m^k products prod_i h_{r_i}^{j_i}, exponent tuples in lex order
  std::vector<CMat> elements;
  long order() const { return static_cast<long>(elements.size()); }
};

ReflectionGroup reflection_group(const HermitianLattice& L, const std::vector<CVec>& roots);

// sampled check of: x fixed by phi (projectively, over K) iff x lies on every
// H_{r_i}; identity phi passes trivially
bool fixed_locus_check(const HermitianLattice& L, const CMat& phi,
                       const std::vector<CVec>& roots, const std::vector<CVec>& samples);

}  // namespace cmglue
