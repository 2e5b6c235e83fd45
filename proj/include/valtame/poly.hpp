#ifndef VALTAME_POLY_HPP
#define VALTAME_POLY_HPP

#include <algorithm>
#include <cassert>
#include <functional>
#include <utility>
#include <vector>

#include "valtame/common.hpp"

namespace valtame {

// Dense univariate polynomial over an exact coefficient ring T.
// T needs: T(0), T(1), +, -, *, unary -, ==. Field operations additionally
// need /. Coefficients are stored low-to-high with no trailing zeros.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly zero() { return Poly(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

  // x^k with coefficient v.
  static Poly monomial(T v, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c.back() = std::move(v);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const T& lc() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  T at(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(i)];
  }

  void set(int i, T v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, T(0));
    c_[static_cast<std::size_t>(i)] = std::move(v);
    trim();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return Poly(std::move(r));
  }

  Poly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const T& v : c_) r.push_back(-v);
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> r;
    r.reserve(p.c_.size());
    for (const T& v : p.c_) r.push_back(s * v);
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T k(0);
      for (std::size_t j = 0; j < i; ++j) k = k + T(1);
      r.push_back(k * c_[i]);
    }
    return Poly(std::move(r));
  }

  // p(x + a)
  Poly shift(const T& a) const {
    Poly acc;
    Poly base = Poly(std::vector<T>{a, T(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * base + constant(*it);
    return acc;
  }

  // p(s * x)
  Poly scale_arg(const T& s) const {
    std::vector<T> r = c_;
    T pw = T(1);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = r[i] * pw;
      pw = pw * s;
    }
    return Poly(std::move(r));
  }

  // x^deg * p(1/x)
  Poly reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  Poly pow(int e) const {
    Poly acc = constant(T(1));
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
  }

  // Division with remainder; requires lc(divisor) invertible via operator/.
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    Poly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      T f = r.lc() / b.lc();
      q = q + monomial(f, k);
      r = r - monomial(f, k) * b;
    }
    return {q, r};
  }

  // Division by a monic divisor; only ring operations used.
  friend std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    Poly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      T f = r.lc();
      q = q + monomial(f, k);
      r = r - monomial(f, k) * b;
    }
    return {q, r};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

// Euclidean gcd over a field, normalized monic.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    T inv_lc = T(1) / a.lc();
    a = inv_lc * a;
  }
  return a;
}

// p / gcd(p, p') — same roots, all simple.
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  Poly<T> g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  auto [q, r] = divrem(p, g);
  assert(r.is_zero());
  return q;
}

// Yun's squarefree decomposition: returns [(factor, multiplicity)] with the
// factors squarefree, pairwise coprime, product of factor^mult = p / lc-ish.
template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_decomposition(const Poly<T>& p) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  Poly<T> a = p, d = p.derivative();
  Poly<T> g = poly_gcd(a, d);
  Poly<T> w = divrem(a, g).first;
  Poly<T> y = divrem(d, g).first;
  Poly<T> z = y - w.derivative();
  int i = 1;
  while (!(w.degree() == 0)) {
    Poly<T> f = poly_gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, i);
    w = divrem(w, f).first;
    z = divrem(z, f).first - w.derivative();
    ++i;
  }
  return out;
}

// ---- Rational-coefficient utilities (Sturm, isolation, resultants) ----

using QPoly = Poly<Rat>;

// Integer-primitive form: clears denominators and content, keeps sign of lc.
inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1;
  for (const Rat& c : p.coeffs())
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  Int content = 0;
  std::vector<Rat> scaled;
  scaled.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Rat v = c * Rat(den_lcm);
    scaled.push_back(v);
    content = boost::multiprecision::gcd(content, boost::multiprecision::numerator(v));
  }
  if (content == 0) content = 1;
  for (Rat& v : scaled) v /= Rat(content);
  QPoly out{std::vector<Rat>(scaled)};
  if (out.lc() < 0) out = -out;
  return out;
}

// Sturm chain of a squarefree polynomial.
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    QPoly r = divrem(a, b).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sturm_sign_changes(const std::vector<QPoly>& chain, const Rat& x) {
  int changes = 0, prev = 0;
  for (const QPoly& q : chain) {
    int s = sign_of(q.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

// Number of distinct real roots of squarefree p in (lo, hi].
inline int sturm_count(const std::vector<QPoly>& chain, const Rat& lo, const Rat& hi) {
  return sturm_sign_changes(chain, lo) - sturm_sign_changes(chain, hi);
}

// Cauchy root bound: all real roots lie in [-B, B].
inline Rat root_bound(const QPoly& p) {
  assert(!p.is_zero());
  Rat b = 0;
  for (const Rat& c : p.coeffs()) {
    Rat a = boost::multiprecision::abs(c / p.lc());
    if (a > b) b = a;
  }
  return b + 1;
}

// Isolating intervals (lo, hi] for every real root of squarefree p,
// in increasing order, with p(lo) != 0 and p(hi) != 0.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  auto chain = sturm_chain(p);
  Rat bound = root_bound(p);
  std::function<void(Rat, Rat, int)> rec = [&](Rat lo, Rat hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      out.emplace_back(lo, hi);
      return;
    }
    Rat mid = (lo + hi) / 2;
    while (p.eval(mid) == 0) mid = (lo + mid) / 2;  // squarefree: nearby non-root exists
    int left = sturm_count(chain, lo, mid);
    rec(lo, mid, left);
    rec(mid, hi, count - left);
  };
  Rat lo = -bound, hi = bound;
  while (p.eval(lo) == 0) lo -= 1;
  while (p.eval(hi) == 0) hi += 1;
  rec(lo, hi, sturm_count(chain, lo, hi));
  std::sort(out.begin(), out.end());
  return out;
}

// Resultant of two rational polynomials via the Euclidean remainder sequence.
inline Rat resultant(QPoly a, QPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rat res = 1;
  bool swapped = false;
  while (true) {
    if (a.degree() < b.degree()) {
      std::swap(a, b);
      if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) res = -res;
      swapped = !swapped;
    }
    if (b.degree() == 0) {
      // res(a, c) = c^deg(a)
      Rat c = b.lc();
      Rat acc = 1;
      for (int i = 0; i < a.degree(); ++i) acc *= c;
      return res * acc;
    }
    QPoly r = divrem(a, b).second;
    if (r.is_zero()) return 0;
    // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r)
    Rat lcb = b.lc();
    Rat acc = 1;
    for (int i = 0; i < a.degree() - r.degree(); ++i) acc *= lcb;
    if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) res = -res;
    res *= acc;
    a = std::move(b);
    b = std::move(r);
  }
}

// Bivariate polynomial in (x, y) as a polynomial in y with QPoly coefficients.
using QPoly2 = Poly<QPoly>;

// res_y(A(y), B(x, y)) computed by evaluation at x = 0, 1, -1, 2, ... and
// Lagrange interpolation. Requires the y-leading coefficient of B constant
// in x, which holds for the resultant shapes used by coefficient arithmetic.
inline QPoly resultant_y(const QPoly& a, const QPoly2& b) {
  int deg_x = 0;
  for (const QPoly& c : b.coeffs()) deg_x = std::max(deg_x, c.is_zero() ? 0 : c.degree());
  int n = a.degree() * deg_x + 1;
  std::vector<Rat> xs, ys;
  Rat x = 0;
  int produced = 0;
  while (produced < n) {
    QPoly b_at_x;
    {
      std::vector<Rat> cc;
      cc.reserve(b.coeffs().size());
      for (const QPoly& c : b.coeffs()) cc.push_back(c.eval(x));
      b_at_x = QPoly(std::move(cc));
    }
    // Leading y-coefficient must not vanish for specialization to commute.
    if (b_at_x.degree() == b.degree()) {
      xs.push_back(x);
      ys.push_back(resultant(a, b_at_x));
      ++produced;
    }
    x = (x > 0) ? -x : (-x + 1);
  }
  // Lagrange interpolation.
  QPoly acc;
  for (int i = 0; i < n; ++i) {
    QPoly term = QPoly::constant(ys[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rat den = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
      term = term * QPoly(std::vector<Rat>{-xs[static_cast<std::size_t>(j)] / den, Rat(1) / den});
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace valtame

#endif
