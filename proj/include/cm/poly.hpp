#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cm/cyclotomic.hpp"
#include "cm/grading.hpp"

namespace cm {

using Mono = std::pair<long, long>;  // (exponent of x, exponent of y)

// Sparse bivariate polynomial over Q(zeta).  The monomial map is ordered,
// so iteration (and hence every derived report) is deterministic.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(const Cyc& c) { return monomial(0, 0, c); }
  static Poly monomial(long ex, long ey, const Cyc& c) {
    Poly p;
    if (!c.is_zero()) p.t_[{ex, ey}] = c;
    return p;
  }
  static Poly x(long e = 1) { return monomial(e, 0, Cyc(1)); }
  static Poly y(long e = 1) { return monomial(0, e, Cyc(1)); }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Mono, Cyc>& terms() const { return t_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Cyc& c) const;

  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Degree w.r.t. a grading group; nullopt when inhomogeneous or zero.
  std::optional<LDeg> homogeneous_degree(const GradingGroup& G) const;
  bool is_homogeneous_of(const GradingGroup& G, LDeg d) const;

  std::string str() const;

 private:
  std::map<Mono, Cyc> t_;
};

}  // namespace cm
