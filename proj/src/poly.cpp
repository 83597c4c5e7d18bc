#include "cm/poly.hpp"

#include <sstream>

namespace cm {

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) {
    auto it = r.t_.find(m);
    if (it == r.t_.end()) {
      r.t_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      Mono m{m1.first + m2.first, m1.second + m2.second};
      Cyc c = c1 * c2;
      if (c.is_zero()) continue;
      auto it = r.t_.find(m);
      if (it == r.t_.end()) {
        r.t_[m] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

Poly Poly::scaled(const Cyc& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_[m] = v * c;
  return r;
}

std::optional<LDeg> Poly::homogeneous_degree(const GradingGroup& G) const {
  if (t_.empty()) return std::nullopt;
  LDeg d = G.monomial_degree(t_.begin()->first.first, t_.begin()->first.second);
  for (const auto& [m, c] : t_)
    if (G.monomial_degree(m.first, m.second) != d) return std::nullopt;
  return d;
}

bool Poly::is_homogeneous_of(const GradingGroup& G, LDeg d) const {
  for (const auto& [m, c] : t_)
    if (G.monomial_degree(m.first, m.second) != G.canon(d)) return false;
  return true;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (m.first) os << "*x^" << m.first;
    if (m.second) os << "*y^" << m.second;
    first = false;
  }
  return os.str();
}

}  // namespace cm
