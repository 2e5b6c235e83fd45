#ifndef VALTAME_COEFFNUM_HPP
#define VALTAME_COEFFNUM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valtame/common.hpp"
#include "valtame/poly.hpp"

namespace valtame {

namespace detail {

// Rational q with q*q <= r (r >= 0), reasonably tight.
inline Rat rat_sqrt_below(const Rat& r) {
  if (r <= 0) return 0;
  const Int scale = Int(1) << 32;
  Int scaled = rat_floor(r * Rat(scale * scale));
  Int s = boost::multiprecision::sqrt(scaled);
  return Rat(s) / Rat(scale);
}

// Rational q with q*q >= r.
inline Rat rat_sqrt_above(const Rat& r) {
  if (r <= 0) return 0;
  const Int scale = Int(1) << 32;
  Int scaled = rat_ceil(r * Rat(scale * scale));
  Int s = boost::multiprecision::sqrt(scaled) + 1;
  return Rat(s) / Rat(scale);
}

inline std::vector<Int> divisors_of(Int n, std::size_t cap = 4096) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  if (n == 0 || n > Int("1000000000000")) return out;  // rational collapse is best-effort
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
      if (out.size() > cap) return {};
    }
  }
  return out;
}

}  // namespace detail

// Exact element of the ordered coefficient field: a rational, or a real
// algebraic number given by a squarefree integer-primitive defining
// polynomial together with a rational interval containing exactly that root.
// The defining polynomial need not be irreducible.
class CoeffNum {
 public:
  CoeffNum() : rat_(0) {}
  CoeffNum(int v) : rat_(v) {}
  CoeffNum(const Rat& v) : rat_(v) {}

  static int degree_cap;  // resulting defining-poly degree cap (configurable)

  static CoeffNum make(const Rat& v) { return CoeffNum(v); }

  // (minpoly, interval) form. The interval must contain exactly one real root
  // of the squarefree part; endpoint roots are accepted and collapse.
  static CoeffNum make(const QPoly& poly, Rat lo, Rat hi) {
    if (poly.is_zero()) throw domain_error("zero polynomial cannot define a number");
    if (lo > hi) throw domain_error("empty isolating interval");
    QPoly p = primitive_part(squarefree_part(poly));
    if (p.degree() > degree_cap)
      throw cap_error("coefficient degree " + std::to_string(p.degree()));
    if (p.degree() < 1) throw domain_error("constant polynomial has no roots");
    if (p.eval(lo) == 0) return CoeffNum(lo);
    if (p.eval(hi) == 0) return CoeffNum(hi);
    auto chain = sturm_chain(p);
    int n = sturm_count(chain, lo, hi);
    if (n != 1) throw domain_error("interval does not isolate exactly one root (found " +
                                   std::to_string(n) + ")");
    CoeffNum out;
    out.rat_.reset();
    out.poly_ = p;
    out.lo_ = lo;
    out.hi_ = hi;
    out.collapse_if_rational();
    return out;
  }

  bool is_rational() const { return rat_.has_value(); }
  const Rat& rational_value() const { return *rat_; }
  const QPoly& defining_poly() const { return poly_; }
  std::pair<Rat, Rat> interval() const { return {lo_, hi_}; }

  int sign() const {
    if (rat_) return sign_of(*rat_);
    // 0 collapses to rational at construction, so refinement terminates.
    while (lo_ < 0 && hi_ > 0) refine();
    return lo_ >= 0 ? 1 : -1;
  }

  friend CoeffNum operator-(const CoeffNum& a) {
    if (a.rat_) return CoeffNum(-*a.rat_);
    CoeffNum out;
    out.rat_.reset();
    out.poly_ = primitive_part(a.poly_.scale_arg(Rat(-1)));
    out.lo_ = -a.hi_;
    out.hi_ = -a.lo_;
    return out;
  }

  friend CoeffNum operator+(const CoeffNum& a, const CoeffNum& b) {
    if (a.rat_ && b.rat_) return CoeffNum(*a.rat_ + *b.rat_);
    return combine(a, b, Op::add);
  }
  friend CoeffNum operator-(const CoeffNum& a, const CoeffNum& b) { return a + (-b); }
  friend CoeffNum operator*(const CoeffNum& a, const CoeffNum& b) {
    if (a.rat_ && b.rat_) return CoeffNum(*a.rat_ * *b.rat_);
    return combine(a, b, Op::mul);
  }

  CoeffNum inverse() const {
    if (rat_) {
      if (*rat_ == 0) throw domain_error("division by zero");
      return CoeffNum(Rat(1) / *rat_);
    }
    while (lo_ < 0 && hi_ > 0) refine();  // value nonzero: terminates
    CoeffNum out;
    out.rat_.reset();
    out.poly_ = primitive_part(poly_.reversed());
    out.lo_ = Rat(1) / hi_;
    out.hi_ = Rat(1) / lo_;
    if (out.lo_ > out.hi_) std::swap(out.lo_, out.hi_);
    while (out.root_count() != 1) {
      refine();
      out.lo_ = Rat(1) / hi_;
      out.hi_ = Rat(1) / lo_;
      if (out.lo_ > out.hi_) std::swap(out.lo_, out.hi_);
    }
    out.collapse_if_rational();
    return out;
  }

  friend CoeffNum operator/(const CoeffNum& a, const CoeffNum& b) { return a * b.inverse(); }

  friend bool operator==(const CoeffNum& a, const CoeffNum& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const CoeffNum& a, const CoeffNum& b) { return cmp(a, b) != 0; }
  friend bool operator<(const CoeffNum& a, const CoeffNum& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const CoeffNum& a, const CoeffNum& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const CoeffNum& a, const CoeffNum& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const CoeffNum& a, const CoeffNum& b) { return cmp(a, b) >= 0; }

  // sign(a - b), computed exactly.
  static int cmp(const CoeffNum& a, const CoeffNum& b) {
    if (a.rat_ && b.rat_) return sign_of(*a.rat_ - *b.rat_);
    for (int round = 0; round < 3; ++round) {
      auto [alo, ahi] = a.bounds();
      auto [blo, bhi] = b.bounds();
      if (ahi < blo) return -1;
      if (bhi < alo) return 1;
      a.refine();
      b.refine();
    }
    return (a + (-b)).sign();
  }

  // Half-open double for display / debugging; never used in decisions.
  double approx() const {
    if (rat_) return static_cast<double>(*rat_);
    for (int i = 0; i < 40 && hi_ - lo_ > Rat(1, 1000000); ++i) refine();
    return static_cast<double>((lo_ + hi_) / 2);
  }

  // Narrows the isolating interval below the given width.
  void refine_below(const Rat& width) const {
    if (rat_) return;
    while (hi_ - lo_ >= width) refine();
  }

  std::pair<Rat, Rat> bounds() const {
    if (rat_) return {*rat_, *rat_};
    return {lo_, hi_};
  }

  std::string str() const;

  // Square root of a nonnegative value.
  static CoeffNum sqrt(const CoeffNum& a) {
    int s = a.sign();
    if (s < 0) throw domain_error("sqrt of negative value");
    if (s == 0) return CoeffNum(0);
    if (a.rat_) {
      QPoly p(std::vector<Rat>{-*a.rat_, 0, 1});
      Rat hi = detail::rat_sqrt_above(*a.rat_);
      return make(p, 0, hi);
    }
    // Annihilator M(x^2); isolate via square-root bounds of a's interval.
    QPoly m2;
    {
      std::vector<Rat> cc(static_cast<std::size_t>(a.poly_.degree()) * 2 + 1, Rat(0));
      for (int i = 0; i <= a.poly_.degree(); ++i) cc[static_cast<std::size_t>(2 * i)] = a.poly_.at(i);
      m2 = QPoly(std::move(cc));
    }
    while (a.lo_ <= 0) a.refine();
    for (int round = 0; round < 64; ++round) {
      Rat lo = detail::rat_sqrt_below(a.lo_);
      Rat hi = detail::rat_sqrt_above(a.hi_);
      try {
        return make(m2, lo, hi);
      } catch (const domain_error&) {
        a.refine();
      }
    }
    throw precision_error("sqrt isolation failed");
  }

 private:
  enum class Op { add, mul };

  explicit CoeffNum(std::nullptr_t) {}

  int root_count() const {
    auto chain = sturm_chain(poly_);
    int n = sturm_count(chain, lo_, hi_);
    if (poly_.eval(lo_) == 0 || poly_.eval(hi_) == 0) return -1;  // force more refinement
    return n;
  }

  void refine() const {
    Rat mid = (lo_ + hi_) / 2;
    while (poly_.eval(mid) == 0) mid = (lo_ + mid) / 2;
    if (sign_of(poly_.eval(lo_)) * sign_of(poly_.eval(mid)) < 0)
      hi_ = mid;
    else
      lo_ = mid;
  }

  void collapse_if_rational() {
    if (rat_) return;
    // Root at 0 is always detected; other rational roots via divisor candidates.
    if (poly_.eval(Rat(0)) == 0 && lo_ < 0 && hi_ > 0) {
      rat_ = Rat(0);
      return;
    }
    QPoly q = poly_;
    int strip = 0;
    while (q.at(0) == 0 && q.degree() > 0) {
      std::vector<Rat> cc(q.coeffs().begin() + 1, q.coeffs().end());
      q = QPoly(std::move(cc));
      ++strip;
    }
    (void)strip;
    auto nums = detail::divisors_of(boost::multiprecision::numerator(q.at(0)));
    auto dens = detail::divisors_of(boost::multiprecision::numerator(q.lc()));
    for (const Int& n : nums)
      for (const Int& d : dens)
        for (int s : {1, -1}) {
          Rat cand = Rat(s * n) / Rat(d);
          if (cand > lo_ && cand < hi_ && poly_.eval(cand) == 0) {
            rat_ = cand;
            return;
          }
        }
  }

  static CoeffNum combine(const CoeffNum& a, const CoeffNum& b, Op op) {
    QPoly pa = a.rat_ ? QPoly(std::vector<Rat>{-*a.rat_, 1}) : a.poly_;
    QPoly pb = b.rat_ ? QPoly(std::vector<Rat>{-*b.rat_, 1}) : b.poly_;
    QPoly2 comb;
    if (op == Op::add) {
      // res_y(pa(y), pb(x - y)) vanishes at every sum of roots.
      QPoly2 acc, base;
      base = QPoly2(std::vector<QPoly>{QPoly::x(), QPoly::constant(Rat(-1))});  // x - y
      for (int j = pb.degree(); j >= 0; --j)
        acc = acc * base + QPoly2::constant(QPoly::constant(pb.at(j)));
      comb = acc;
    } else {
      // res_y(pa(y), y^n pb(x/y)) vanishes at every product of roots.
      int n = pb.degree();
      std::vector<QPoly> cc(static_cast<std::size_t>(n) + 1, QPoly());
      for (int j = 0; j <= n; ++j)
        cc[static_cast<std::size_t>(n - j)] = QPoly::monomial(pb.at(j), j);
      comb = QPoly2(std::move(cc));
    }
    QPoly res = primitive_part(squarefree_part(resultant_y(pa, comb)));
    if (res.degree() > degree_cap) throw cap_error("coefficient degree " + std::to_string(res.degree()));
    auto chain = sturm_chain(res);
    for (int round = 0; round < 256; ++round) {
      auto [alo, ahi] = a.bounds();
      auto [blo, bhi] = b.bounds();
      Rat lo, hi;
      if (op == Op::add) {
        lo = alo + blo;
        hi = ahi + bhi;
      } else {
        lo = std::min(std::min(alo * blo, alo * bhi), std::min(ahi * blo, ahi * bhi));
        hi = std::max(std::max(alo * blo, alo * bhi), std::max(ahi * blo, ahi * bhi));
      }
      if (res.eval(lo) != 0 && res.eval(hi) != 0 && sturm_count(chain, lo, hi) == 1) {
        CoeffNum out;
        out.rat_.reset();
        out.poly_ = res;
        out.lo_ = lo;
        out.hi_ = hi;
        out.collapse_if_rational();
        return out;
      }
      a.refine();
      b.refine();
    }
    throw precision_error("root selection failed in coefficient arithmetic");
  }

  std::optional<Rat> rat_;
  QPoly poly_;
  mutable Rat lo_ = 0, hi_ = 0;
};

inline int CoeffNum::degree_cap = 16;

inline int cn_sign(const CoeffNum& a) { return a.sign(); }
inline int cn_cmp(const CoeffNum& a, const CoeffNum& b) { return CoeffNum::cmp(a, b); }

// Canonical compact polynomial text in the variable x, e.g. "x^2-2".
inline std::string qpoly_str(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.at(i);
    if (c == 0) continue;
    std::string mag = rat_str(boost::multiprecision::abs(c));
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += (i == 1) ? "x" : ("x^" + std::to_string(i));
    }
  }
  return out;
}

inline std::string CoeffNum::str() const {
  if (rat_) return rat_str(*rat_);
  return "alg(" + qpoly_str(poly_) + "," + rat_str(lo_) + "," + rat_str(hi_) + ")";
}

// Real roots with multiplicities of a polynomial with CoeffNum coefficients,
// plus the count of non-real roots (with multiplicity). Supported shapes:
// any degree with all-rational coefficients, degree <= 2 otherwise.
struct RealRootsResult {
  std::vector<std::pair<CoeffNum, int>> roots;  // increasing
  int complex_count = 0;                        // non-real roots, with multiplicity
};

inline RealRootsResult real_roots(const Poly<CoeffNum>& p) {
  RealRootsResult out;
  if (p.is_zero() || p.degree() == 0) return out;
  auto handle_squarefree = [&out](const Poly<CoeffNum>& f, int mult) {
    bool all_rational = true;
    for (const CoeffNum& c : f.coeffs())
      if (!c.is_rational()) all_rational = false;
    if (all_rational) {
      std::vector<Rat> cc;
      cc.reserve(f.coeffs().size());
      for (const CoeffNum& c : f.coeffs()) cc.push_back(c.rational_value());
      QPoly q = primitive_part(QPoly(std::move(cc)));
      auto ivs = isolate_real_roots(q);
      for (auto& [lo, hi] : ivs) out.roots.emplace_back(CoeffNum::make(q, lo, hi), mult);
      out.complex_count += (f.degree() - static_cast<int>(ivs.size())) * mult;
      return;
    }
    if (f.degree() == 1) {
      out.roots.emplace_back(-f.at(0) / f.at(1), mult);
      return;
    }
    if (f.degree() == 2) {
      CoeffNum a = f.at(2), b = f.at(1), c = f.at(0);
      CoeffNum disc = b * b - CoeffNum(4) * a * c;
      int s = disc.sign();
      if (s < 0) {
        out.complex_count += 2 * mult;
        return;
      }
      CoeffNum r = CoeffNum::sqrt(disc);
      CoeffNum two_a = CoeffNum(2) * a;
      CoeffNum r1 = (-b - r) / two_a, r2 = (-b + r) / two_a;
      if (s == 0) {
        out.roots.emplace_back(r1, 2 * mult);
      } else {
        out.roots.emplace_back(r1, mult);
        out.roots.emplace_back(r2, mult);
      }
      return;
    }
    throw cap_error("real root isolation for degree " + std::to_string(f.degree()) +
                    " with non-rational coefficients");
  };
  for (auto& [f, mult] : squarefree_decomposition(p)) handle_squarefree(f, mult);
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace valtame

#endif
