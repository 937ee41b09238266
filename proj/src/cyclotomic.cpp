#include "cmglue/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cmglue {

namespace {

// dense integer polynomials, ascending coefficients
using IPoly = std::vector<Int>;

IPoly poly_trim(IPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

// exact division, both monic up to content; throws if not exact
IPoly poly_div_exact(IPoly num, const IPoly& den) {
  IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Int(0));
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    size_t shift = num.size() - den.size();
    Int lead = num.back();
    if (lead % den.back() != 0) throw std::runtime_error("poly_div_exact: not divisible");
    Int c = lead / den.back();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    num = poly_trim(num);
    if (num.size() == 1 && num[0] == 0) break;
  }
  if (!(num.size() == 1 && num[0] == 0)) throw std::runtime_error("poly_div_exact: remainder");
  return q;
}

IPoly cyclotomic_poly(long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  IPoly p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(std::move(p), cyclotomic_poly(d));
  return p;
}

long euler_phi(long n) {
  long r = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++r;
  return r;
}

bool squarefree(long v) {
  for (long d = 2; d * d <= v; ++d)
    if (v % (d * d) == 0) return false;
  return true;
}

// registry of interned fields
std::map<std::pair<int, long>, std::unique_ptr<FieldDescriptor>>& field_registry() {
  static std::map<std::pair<int, long>, std::unique_ptr<FieldDescriptor>> reg;
  return reg;
}

std::vector<Rat> reduce_poly(std::vector<Rat> c, const std::vector<Int>& red) {
  const size_t deg = red.size();
  for (size_t p = c.size(); p-- > deg;) {
    Rat top = c[p];
    if (top == 0) continue;
    c[p] = 0;
    for (size_t i = 0; i < deg; ++i) c[p - deg + i] += top * Rat(red[i]);
  }
  c.resize(deg);
  return c;
}

}  // namespace

FieldDescriptor* FieldDescriptor::build_cyclotomic(long n) {
  if (n < 3) throw std::runtime_error("cyclotomic: need n >= 3");
  auto* f = new FieldDescriptor();
  f->kind = Kind::Cyclotomic;
  f->n = n;
  f->degree = static_cast<int>(euler_phi(n));
  if (f->degree % 2 != 0) throw std::runtime_error("cyclotomic: degree must be even");
  f->torsion_order = (n % 2 == 0) ? n : 2 * n;

  IPoly phi = cyclotomic_poly(n);
  f->red.assign(f->degree, Int(0));
  for (int i = 0; i < f->degree; ++i) f->red[i] = -phi[i];

  // zeta^t in the power basis, t in [0, n)
  f->zeta_powers.resize(n);
  std::vector<Rat> cur(f->degree, Rat(0));
  cur[0] = 1;
  for (long t = 0; t < n; ++t) {
    auto& col = f->zeta_powers[t];
    col.resize(f->degree);
    for (int i = 0; i < f->degree; ++i) {
      if (denominator(cur[i]) != 1) throw std::runtime_error("zeta power not integral");
      col[i] = numerator(cur[i]);
    }
    // multiply by zeta
    std::vector<Rat> next(f->degree + 1, Rat(0));
    for (int i = 0; i < f->degree; ++i) next[i + 1] = cur[i];
    cur = reduce_poly(std::move(next), f->red);
  }

  f->conj_cols.resize(f->degree);
  for (int j = 0; j < f->degree; ++j) f->conj_cols[j] = f->zeta_powers[(n - j) % n];

  for (long k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) f->units.push_back(k);
  const double tau = 6.283185307179586476925286766559;
  for (long k : f->units)
    f->roots.push_back(std::polar(1.0, tau * static_cast<double>(k) / static_cast<double>(n)));
  return f;
}

FieldDescriptor* FieldDescriptor::build_imaginary_quadratic(long disc) {
  if (disc >= 0) throw std::runtime_error("imaginary_quadratic: discriminant must be negative");
  long r = ((disc % 4) + 4) % 4;
  bool fundamental = false;
  if (r == 1) fundamental = squarefree(-disc);
  else if (r == 0) {
    long m = disc / 4, mr = ((m % 4) + 4) % 4;
    fundamental = squarefree(-m) && (mr == 2 || mr == 3);
  }
  if (!fundamental) throw std::runtime_error("imaginary_quadratic: not a fundamental discriminant");

  auto* f = new FieldDescriptor();
  f->kind = Kind::ImaginaryQuadratic;
  f->disc = disc;
  f->degree = 2;
  f->torsion_order = (disc == -3) ? 6 : (disc == -4) ? 4 : 2;
  double s = std::sqrt(static_cast<double>(-disc));
  if (r == 0) {
    // omega = sqrt(disc)/2, omega^2 = disc/4
    f->red = {Int(disc / 4), Int(0)};
    f->conj_cols = {{Int(1), Int(0)}, {Int(0), Int(-1)}};
    f->roots = {{0.0, s / 2}, {0.0, -s / 2}};
  } else {
    // omega = (1 + sqrt(disc))/2, omega^2 = omega + (disc-1)/4
    f->red = {Int((disc - 1) / 4), Int(1)};
    f->conj_cols = {{Int(1), Int(0)}, {Int(1), Int(-1)}};
    f->roots = {{0.5, s / 2}, {0.5, -s / 2}};
  }
  f->units = {0, 1};
  return f;
}

const FieldDescriptor& FieldDescriptor::cyclotomic(long n) {
  auto key = std::make_pair(0, n);
  auto& reg = field_registry();
  auto it = reg.find(key);
  if (it == reg.end()) {
    std::unique_ptr<FieldDescriptor> f(build_cyclotomic(n));
    it = reg.emplace(key, std::move(f)).first;
    // CM type: embeddings where the sign-normalized different generator has
    // positive imaginary part
    CycElt eta = different_generator(*it->second);
    for (int idx = 0; idx < it->second->degree; ++idx)
      if (embed(eta, idx).imag() > 0) it->second->cm_type.push_back(idx);
    if (static_cast<int>(it->second->cm_type.size()) * 2 != it->second->degree)
      throw std::runtime_error("cm_type: wrong size");
  }
  return *it->second;
}

const FieldDescriptor& FieldDescriptor::imaginary_quadratic(long disc) {
  auto key = std::make_pair(1, disc);
  auto& reg = field_registry();
  auto it = reg.find(key);
  if (it == reg.end()) {
    std::unique_ptr<FieldDescriptor> f(build_imaginary_quadratic(disc));
    it = reg.emplace(key, std::move(f)).first;
    it->second->cm_type = {0};
  }
  return *it->second;
}

std::string FieldDescriptor::name() const {
  std::ostringstream os;
  if (kind == Kind::Cyclotomic) os << "cyclotomic:" << n;
  else os << "imaginary_quadratic:" << disc;
  return os.str();
}

CycElt::CycElt(const FieldDescriptor& f, std::vector<Rat> c) : field(&f), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != f.degree)
    throw std::runtime_error("CycElt: coefficient count != degree");
}

CycElt CycElt::zero(const FieldDescriptor& f) {
  return CycElt(f, std::vector<Rat>(f.degree, Rat(0)));
}

CycElt CycElt::one(const FieldDescriptor& f) { return from_rat(f, Rat(1)); }

CycElt CycElt::from_rat(const FieldDescriptor& f, const Rat& v) {
  auto x = zero(f);
  x.coeffs[0] = v;
  return x;
}

CycElt CycElt::gen(const FieldDescriptor& f) {
  auto x = zero(f);
  x.coeffs[1] = 1;
  return x;
}

CycElt CycElt::gen_pow(const FieldDescriptor& f, long t) {
  if (f.is_cyclotomic()) {
    t = ((t % f.n) + f.n) % f.n;
    auto x = zero(f);
    for (int i = 0; i < f.degree; ++i) x.coeffs[i] = Rat(f.zeta_powers[t][i]);
    return x;
  }
  CycElt x = one(f), g = gen(f);
  if (t < 0) { g = g.inverse(); t = -t; }
  for (long i = 0; i < t; ++i) x *= g;
  return x;
}

bool CycElt::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

bool CycElt::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& c) { return denominator(c) == 1; });
}

CycElt CycElt::promoted(const FieldDescriptor& f) const {
  if (field == &f) return *this;
  if (field != nullptr) throw std::runtime_error("CycElt: mixed fields");
  return from_rat(f, coeffs[0]);
}

CycElt operator+(const CycElt& a, const CycElt& b) {
  if (a.field != b.field) {
    const FieldDescriptor* f = a.field ? a.field : b.field;
    return a.promoted(*f) + b.promoted(*f);
  }
  CycElt r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

CycElt operator-(const CycElt& a, const CycElt& b) { return a + (-b); }

CycElt operator-(const CycElt& a) {
  CycElt r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

CycElt operator*(const CycElt& a, const CycElt& b) {
  if (a.field != b.field) {
    const FieldDescriptor* f = a.field ? a.field : b.field;
    return a.promoted(*f) * b.promoted(*f);
  }
  if (a.field == nullptr) return CycElt(a.coeffs[0] * b.coeffs[0]);
  const auto& f = *a.field;
  std::vector<Rat> conv(2 * f.degree - 1, Rat(0));
  for (int i = 0; i < f.degree; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < f.degree; ++j) conv[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return CycElt(f, reduce_poly(std::move(conv), f.red));
}

bool operator==(const CycElt& a, const CycElt& b) {
  if (a.field != b.field) {
    if (a.field && b.field) return false;
    const FieldDescriptor* f = a.field ? a.field : b.field;
    return a.promoted(*f) == b.promoted(*f);
  }
  return a.coeffs == b.coeffs;
}

CycElt conjugate(const CycElt& x) {
  if (x.field == nullptr) return x;
  const auto& f = *x.field;
  CycElt r = CycElt::zero(f);
  for (int j = 0; j < f.degree; ++j) {
    if (x.coeffs[j] == 0) continue;
    for (int i = 0; i < f.degree; ++i) r.coeffs[i] += x.coeffs[j] * Rat(f.conj_cols[j][i]);
  }
  return r;
}

namespace {

// column i = coefficients of x * gen^i
std::vector<std::vector<Rat>> mult_matrix(const CycElt& x) {
  const auto& f = *x.field;
  std::vector<std::vector<Rat>> cols(f.degree);
  CycElt p = x;
  for (int i = 0; i < f.degree; ++i) {
    cols[i] = p.coeffs;
    if (i + 1 < f.degree) p = p * CycElt::gen(f);
  }
  return cols;
}

}  // namespace

Rat trace_Q(const CycElt& x) {
  if (x.field == nullptr) return x.coeffs[0];
  auto cols = mult_matrix(x);
  Rat t = 0;
  for (size_t i = 0; i < cols.size(); ++i) t += cols[i][i];
  return t;
}

Rat trace_subfield_Q(const CycElt& x) {
  if (conjugate(x) != x) throw std::runtime_error("trace_subfield_Q: element not real");
  Rat t = trace_Q(x);
  if (numerator(t) % 2 != 0 && denominator(t) == 1)
    throw std::runtime_error("trace_subfield_Q: odd trace");
  return t / 2;
}

Rat norm_Q(const CycElt& x) {
  if (x.field == nullptr) return x.coeffs[0];
  auto m = mult_matrix(x);  // m[col][row]
  const int d = x.field->degree;
  Rat det = 1;
  // fraction-full Gaussian elimination on columns-as-vectors
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = m[j][i];
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r2 = c; r2 < d; ++r2)
      if (a[r2][c] != 0) { piv = r2; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
    det *= a[c][c];
    Rat inv = Rat(1) / a[c][c];
    for (int r2 = c + 1; r2 < d; ++r2) {
      if (a[r2][c] == 0) continue;
      Rat fac = a[r2][c] * inv;
      for (int c2 = c; c2 < d; ++c2) a[r2][c2] -= fac * a[c][c2];
    }
  }
  return det;
}

std::complex<double> embed(const CycElt& x, int idx) {
  if (x.field == nullptr) return {to_double(x.coeffs[0]), 0.0};
  const auto& f = *x.field;
  if (idx < 0 || idx >= f.degree) throw std::runtime_error("embed: bad embedding index");
  std::complex<double> root = f.roots[idx], acc(0.0, 0.0);
  for (int i = f.degree - 1; i >= 0; --i) acc = acc * root + to_double(x.coeffs[i]);
  return acc;
}

CycElt CycElt::inverse() const {
  if (field == nullptr) {
    if (coeffs[0] == 0) throw std::runtime_error("inverse of zero");
    return CycElt(Rat(1) / coeffs[0]);
  }
  const int d = field->degree;
  auto m = mult_matrix(*this);
  // solve sum_i y_i (x * gen^i) = 1
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d + 1, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = m[j][i];
  a[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r2 = c; r2 < d; ++r2)
      if (a[r2][c] != 0) { piv = r2; break; }
    if (piv < 0) throw std::runtime_error("inverse of zero divisor");
    std::swap(a[piv], a[c]);
    Rat inv = Rat(1) / a[c][c];
    for (int c2 = c; c2 <= d; ++c2) a[c][c2] *= inv;
    for (int r2 = 0; r2 < d; ++r2) {
      if (r2 == c || a[r2][c] == 0) continue;
      Rat fac = a[r2][c];
      for (int c2 = c; c2 <= d; ++c2) a[r2][c2] -= fac * a[c][c2];
    }
  }
  std::vector<Rat> y(d);
  for (int i = 0; i < d; ++i) y[i] = a[i][d];
  return CycElt(*field, std::move(y));
}

std::string CycElt::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ",";
    os << coeffs[i];
  }
  os << "]";
  return os.str();
}

namespace {

// minimal polynomial of x over Q (coefficients ascending, monic), found as the
// first linear dependence among 1, x, x^2, ...
std::vector<Rat> minimal_polynomial(const CycElt& x) {
  const int d = x.field->degree;
  std::vector<CycElt> pows{CycElt::one(*x.field)};
  for (int k = 1; k <= d; ++k) {
    pows.push_back(pows.back() * x);
    // solve pows[k] = sum_{i<k} c_i pows[i]
    int rows = d, cols = static_cast<int>(pows.size()) - 1;
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) a[i][j] = pows[j].coeffs[i];
    for (int i = 0; i < rows; ++i) a[i][cols] = pows[k].coeffs[i];
    // row reduce
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int piv = -1;
      for (int r2 = r; r2 < rows; ++r2)
        if (a[r2][c] != 0) { piv = r2; break; }
      if (piv < 0) continue;
      std::swap(a[piv], a[r]);
      Rat inv = Rat(1) / a[r][c];
      for (int c2 = c; c2 <= cols; ++c2) a[r][c2] *= inv;
      for (int r2 = 0; r2 < rows; ++r2) {
        if (r2 == r || a[r2][c] == 0) continue;
        Rat fac = a[r2][c];
        for (int c2 = c; c2 <= cols; ++c2) a[r2][c2] -= fac * a[r][c2];
      }
      pivot_col[r] = c;
      ++r;
    }
    bool consistent = true;
    for (int r2 = r; r2 < rows; ++r2)
      if (a[r2][cols] != 0) { consistent = false; break; }
    if (!consistent) continue;
    std::vector<Rat> sol(cols, Rat(0));
    for (int r2 = 0; r2 < r; ++r2)
      if (pivot_col[r2] >= 0) sol[pivot_col[r2]] = a[r2][cols];
    // verify
    CycElt chk = CycElt::zero(*x.field);
    for (int i = 0; i < cols; ++i) chk += CycElt(sol[i]) * pows[i];
    if (chk != pows[k]) continue;
    std::vector<Rat> mp(k + 1, Rat(0));
    for (int i = 0; i < k; ++i) mp[i] = -sol[i];
    mp[k] = 1;
    return mp;
  }
  throw std::runtime_error("minimal_polynomial: no dependence found");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CycElt different_generator(const FieldDescriptor& f) {
  CycElt eta;
  if (f.kind == FieldDescriptor::Kind::ImaginaryQuadratic) {
    // sqrt(disc)
    long r = ((f.disc % 4) + 4) % 4;
    eta = (r == 0) ? CycElt(2) * CycElt::gen(f)
                   : CycElt(2) * CycElt::gen(f) - CycElt::one(f);
  } else if (f.is_cyclotomic()) {
    CycElt zeta = CycElt::gen(f);
    CycElt theta = zeta - zeta.inverse();
    if (is_prime(f.n)) {
      eta = CycElt(static_cast<int>(f.n)) * theta.inverse();
    } else {
      CycElt alpha = zeta + zeta.inverse();
      auto g = minimal_polynomial(alpha);
      // g'(alpha)
      CycElt gp = CycElt::zero(f);
      CycElt ap = CycElt::one(f);
      for (size_t i = 1; i < g.size(); ++i) {
        gp += CycElt(g[i] * Rat(static_cast<int>(i))) * ap;
        ap *= alpha;
      }
      eta = theta * gp;
    }
  } else {
    throw std::runtime_error("different_generator: unsupported field kind");
  }
  // generators are unique up to units: normalize the sign so the first
  // embedding has positive imaginary part
  if (embed(eta, 0).imag() < 0) eta = -eta;
  if (conjugate(eta) != -eta) throw std::runtime_error("different_generator: not purely imaginary");
  // trace-dual check: Tr(eta^-1 * gen^j) must be integral
  CycElt xi = eta.inverse();
  CycElt p = CycElt::one(f);
  for (int j = 0; j < f.degree; ++j) {
    Rat t = trace_Q(xi * p);
    if (denominator(t) != 1) throw std::runtime_error("different_generator: trace-dual check failed");
    p *= CycElt::gen(f);
  }
  return eta;
}

std::pair<long, CycElt> torsion_unit_group(const FieldDescriptor& f) {
  long m = f.torsion_order;
  CycElt g;
  if (f.is_cyclotomic()) {
    g = (f.n % 2 == 0) ? CycElt::gen(f) : -CycElt::gen(f);
  } else if (f.disc == -3 || f.disc == -4) {
    g = CycElt::gen(f);
  } else {
    g = -CycElt::one(f);
  }
  // primitivity
  CycElt p = CycElt::one(f);
  for (long i = 0; i < m; ++i) p *= g;
  if (p != CycElt::one(f)) throw std::runtime_error("torsion: generator order wrong");
  for (long q = 2; q <= m; ++q) {
    if (!is_prime(q) || m % q != 0) continue;
    CycElt s = CycElt::one(f);
    for (long i = 0; i < m / q; ++i) s *= g;
    if (s == CycElt::one(f)) throw std::runtime_error("torsion: generator not primitive");
  }
  return {m, g};
}

int sign_sqrt5(const Rat& a, const Rat& b) {
  int sa = (a > 0) - (a < 0), sb = (b > 0) - (b < 0);
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  Rat a2 = a * a, b25 = 5 * b * b;
  if (a2 == b25) return 0;  // impossible for rationals unless both zero
  return a2 > b25 ? sa : sb;
}

bool QuadElt::is_integral() const { return denominator(u) == 1 && denominator(v) == 1; }

QuadElt QuadElt::inverse() const {
  Rat n = norm();
  if (n == 0) throw std::runtime_error("QuadElt: inverse of zero");
  QuadElt g = galois();
  return {g.u / n, g.v / n};
}

int QuadElt::sign_at(int psi_idx) const {
  // lambda -> (sqrt5 - 1)/2 at Psi index 0, -(sqrt5 + 1)/2 at index 1
  if (psi_idx == 0) return sign_sqrt5(2 * u - v, v);
  if (psi_idx == 1) return sign_sqrt5(2 * u - v, -v);
  throw std::runtime_error("QuadElt: bad embedding index");
}

double QuadElt::embed_at(int psi_idx) const {
  static const double s5 = std::sqrt(5.0);
  double lam = (psi_idx == 0) ? (s5 - 1) / 2 : -(s5 + 1) / 2;
  return to_double(u) + to_double(v) * lam;
}

CycElt QuadElt::to_cyclotomic() const {
  const auto& f = FieldDescriptor::cyclotomic(5);
  return CycElt(f, {u - v, Rat(0), -v, -v});
}

std::string QuadElt::str() const {
  std::ostringstream os;
  os << u;
  if (v != 0) os << (v > 0 ? "+" : "") << v << "*lambda";
  return os.str();
}

std::pair<QuadElt, QuadElt> quad_divmod(const QuadElt& x, const QuadElt& y) {
  if (y.is_zero()) throw std::runtime_error("quad_divmod: division by zero");
  QuadElt q0 = x * y.inverse();
  // coordinates in the basis (1, phi), phi = lambda + 1; round both
  Rat A = q0.u - q0.v, B = q0.v;
  auto round_rat = [](const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = (2 * num + den) / (2 * den);
    if (2 * num + den < 0 && (2 * num + den) % (2 * den) != 0) q -= 1;
    return Rat(q);
  };
  Rat Ar = round_rat(A), Br = round_rat(B);
  QuadElt q{Ar + Br, Br};
  QuadElt r = x - q * y;
  Rat nr = r.norm(), ny = y.norm();
  if (abs(nr) >= abs(ny)) throw std::runtime_error("quad_divmod: Euclidean bound violated");
  return {q, r};
}

RealElt::RealElt(const CycElt& x) : val(x) {
  if (conjugate(x) != x) throw std::runtime_error("RealElt: element not fixed by sigma");
  if (x.field == nullptr || (x.field->is_cyclotomic() && x.field->n == 5)) {
    has_quad = true;
    quad = as_quad(x);
  }
}

int RealElt::sign_at(int psi_idx) const {
  if (has_quad) return quad.sign_at(psi_idx);
  double e = embed(val, val.field->cm_type.at(psi_idx)).real();
  if (std::abs(e) < 1e-9 && !val.is_zero())
    throw std::runtime_error("RealElt: sign too close to zero for numeric decision");
  return (e > 1e-9) - (e < -1e-9);
}

QuadElt as_quad(const CycElt& x) {
  if (x.field == nullptr) return {x.coeffs[0], Rat(0)};
  if (!x.field->is_cyclotomic() || x.field->n != 5)
    throw std::runtime_error("as_quad: needs Q(zeta_5)");
  const auto& c = x.coeffs;
  if (c[1] != 0 || c[2] != c[3]) throw std::runtime_error("as_quad: element not real");
  return {c[0] - c[2], -c[2]};
}

}  // namespace cmglue
