#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cm/errors.hpp"

namespace cm {

using Rat = mpq_class;

// Element of Q(zeta_N), zeta_N = exp(2*pi*i/N), stored as a polynomial in
// zeta_N of degree < phi(N), reduced modulo the N-th cyclotomic polynomial.
// Arithmetic is exact; mixed conductors are promoted to the lcm.
class Cyc {
 public:
  Cyc() : n_(1), c_(1) {}
  explicit Cyc(const Rat& r) : n_(1), c_{r} {}
  explicit Cyc(long v) : n_(1), c_{Rat(v)} {}

  static Cyc zero(int n);
  static Cyc one(int n);
  static Cyc rational(const Rat& r, int n);
  // zeta_N^k for any integer k.
  static Cyc root_of_unity(int n, long k);

  int conductor() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc inverse() const;  // throws DivisionByZero on zero
  Cyc pow(long e) const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Re-express in Q(zeta_m); n_ must divide m.
  Cyc promoted(int m) const;

  // Coordinates w.r.t. 1, zeta, ..., zeta^{phi(N)-1}.
  const std::vector<Rat>& coords() const { return c_; }

  std::string str() const;

 private:
  Cyc(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  void reduce_tail(std::vector<Rat>& raw) const;

  int n_;
  std::vector<Rat> c_;
};

// Monic integer cyclotomic polynomial Phi_N, ascending coefficients.
const std::vector<Rat>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace cm
