#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "cm/errors.hpp"

namespace cm {

// Element of L = Z<xv,yv> / (a*xv = b*yv), kept in canonical form with
// 0 <= v < b.  Always manipulate through a GradingGroup.
struct LDeg {
  long u = 0;  // coefficient of xv
  long v = 0;  // coefficient of yv
  bool operator==(const LDeg&) const = default;
  bool operator<(const LDeg& o) const { return u != o.u ? u < o.u : v < o.v; }
};

class GradingGroup {
 public:
  // Relation a*xv = b*yv; c is the degree of w in (xv,yv) coordinates.
  GradingGroup(long a, long b, long cu, long cv) : a_(a), b_(b) {
    if (a <= 0 || b <= 0) throw Error("GradingGroup: relation must be positive");
    c_ = canon(cu, cv);
  }

  long rel_x() const { return a_; }
  long rel_y() const { return b_; }

  LDeg canon(long u, long v) const {
    long t = v >= 0 ? v / b_ : -((-v + b_ - 1) / b_);
    return LDeg{u + t * a_, v - t * b_};
  }
  LDeg canon(LDeg d) const { return canon(d.u, d.v); }

  LDeg xdeg() const { return canon(1, 0); }
  LDeg ydeg() const { return canon(0, 1); }
  LDeg cdeg() const { return c_; }
  LDeg zero() const { return LDeg{0, 0}; }

  LDeg add(LDeg l, LDeg r) const { return canon(l.u + r.u, l.v + r.v); }
  LDeg sub(LDeg l, LDeg r) const { return canon(l.u - r.u, l.v - r.v); }
  LDeg neg(LDeg l) const { return canon(-l.u, -l.v); }
  LDeg scale(long k, LDeg l) const { return canon(k * l.u, k * l.v); }
  LDeg monomial_degree(long ex, long ey) const { return canon(ex, ey); }

  // Projection to the free Z-factor, normalised so that the image is all
  // of Z.  For the relation a*xv = b*yv this is (u*b + v*a) / gcd(a,b).
  long free_part(LDeg l) const {
    long g = std::gcd(a_, b_);
    return (l.u * b_ + l.v * a_) / g;
  }

  long torsion_order() const { return std::gcd(a_, b_); }

  // Order of L / Z*c (finite for all models here).
  long quotient_order_by_c() const {
    long det = a_ * c_.v + b_ * c_.u;
    return det < 0 ? -det : det;
  }

  // All monomials x^e1 y^e2 of degree l, lex-ordered in (e1, e2).
  std::vector<std::pair<long, long>> monomials_of_degree(LDeg l) const {
    l = canon(l);
    std::vector<std::pair<long, long>> out;
    // (e1, e2) = (u + t*a, v - t*b) with both components nonnegative.
    long tmin = l.u >= 0 ? -(l.u / a_) : (-l.u + a_ - 1) / a_;
    for (long t = tmin; t <= 0; ++t) {
      long e1 = l.u + t * a_, e2 = l.v - t * b_;
      if (e1 >= 0 && e2 >= 0) out.emplace_back(e1, e2);
    }
    return out;
  }

  bool operator==(const GradingGroup& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

  std::string str(LDeg l) const {
    return std::to_string(l.u) + "x+" + std::to_string(l.v) + "y";
  }

 private:
  long a_, b_;
  LDeg c_;
};

}  // namespace cm
