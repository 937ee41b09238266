#pragma once

#include <complex>
#include <map>

#include "cmglue/arrangement.hpp"
#include "cmglue/involutions.hpp"

namespace cmglue {

// local coordinate model of a gluing point: a conjugate node pairs, b real
// nodes, k = 2a + b hyperplanes through the center of B^n
struct LocalModel {
  int n = 0, m = 0, a = 0, b = 0;
  LocalModel(int n_, int m_, int a_, int b_);  // validates
  int k() const { return 2 * a + b; }
};

// semilinear monomial map t_s -> zeta_m^{exps[s]} * conj(t_{perm[s]})
struct LocalInvolution {
  int n = 0, m = 0;
  std::vector<int> label;  // (Z/m)^{a+b}
  std::vector<int> perm;
  std::vector<int> exps;

  bool squares_to_identity() const;
  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& t) const;
};

// linear monomial map t_s -> zeta_m^{exps[s]} * t_{perm[s]}
struct MonomialMap {
  int n = 0;
  int m = 0;
  std::vector<int> perm;
  std::vector<int> exps;
};

// a o b (apply b first); semilinear o semilinear = linear
MonomialMap compose(const LocalInvolution& a, const LocalInvolution& b);

std::vector<LocalInvolution> involutions_at_center(const LocalModel& model);

struct ComponentReport {
  long copies = 0;
  std::map<int, long> intersection_dims;  // dim -> number of unordered pairs
};

ComponentReport components_mod_Bf(const LocalModel& model);

// real dimension of Fix(a) n Fix(b) in C^n = R^{2n}, by numeric rank
int fixed_intersection_dim_bruteforce(const LocalInvolution& a, const LocalInvolution& b);

// unique orbit representative zeta_{2^{e+1}}^eps * r under <zeta_m>, m = 2^e k
std::pair<int, double> tg_representative(std::complex<double> t, int m);

struct EqRelReport {
  long labels = 0;
  bool reflexive = false, symmetric = false, transitive = false;
  bool pass = false;
};

EqRelReport equivalence_relation_bruteforce(const LocalModel& model);

struct LabeledPoint {
  CVec x;
  AntiUnitaryInvolution alpha;
};

// (x, alpha) ~ (y, beta): same K-line and beta o alpha in G(incident_roots);
// incident_roots must be the maximal orthogonal hyperplane set through x,
// checked against the bound-2 short-root enumeration
bool glue_equivalent(const LabeledPoint& p, const LabeledPoint& q,
                     const std::vector<CVec>& incident_roots);

// Lemma (intersection).2 at sampled common fixed points; vacuous true when no
// sample is fixed by both
bool shared_locus_check(const AntiUnitaryInvolution& a, const AntiUnitaryInvolution& b,
                        const std::vector<CVec>& samples);

// cached enumerate_short_roots(quintic_std, 2)
const std::vector<CVec>& short_roots_bound2();

}  // namespace cmglue
