#include "cm/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace cm {

namespace {

// Exact division of polynomials with rational coefficients, ascending order.
std::vector<Rat> poly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Rat> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (int k = static_cast<int>(num.size()) - static_cast<int>(den.size()); k >= 0; --k) {
    Rat c = num[k + den.size() - 1] / den.back();
    quot[k] = c;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  return quot;
}

struct Context {
  int phi;
  std::vector<Rat> cyclo;                  // Phi_N
  std::vector<std::vector<Rat>> powtable;  // zeta^k for k in [phi, 2*phi-1), reduced
};

const Context& context(int n) {
  static std::map<int, Context> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_N = (t^N - 1) / prod_{d | N, d < N} Phi_d.
  std::vector<Rat> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, context(d).cyclo);

  Context ctx;
  ctx.cyclo = num;
  ctx.phi = static_cast<int>(num.size()) - 1;
  // zeta^phi = -(lower coefficients); higher powers by shifting.
  std::vector<Rat> cur(ctx.phi);
  for (int i = 0; i < ctx.phi; ++i) cur[i] = -num[i];
  ctx.powtable.push_back(cur);
  int top_power = std::max(2 * ctx.phi - 2, n - 1);
  for (int k = ctx.phi + 1; k <= top_power; ++k) {
    std::vector<Rat> next(ctx.phi);
    Rat top = cur[ctx.phi - 1];
    for (int i = ctx.phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (int i = 0; i < ctx.phi; ++i) next[i] += top * ctx.powtable[0][i];
    ctx.powtable.push_back(next);
    cur = next;
  }
  return cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(int n) { return context(n).cyclo; }

int euler_phi(int n) { return context(n).phi; }

Cyc Cyc::zero(int n) { return Cyc(n, std::vector<Rat>(context(n).phi)); }

Cyc Cyc::one(int n) { return rational(Rat(1), n); }

Cyc Cyc::rational(const Rat& r, int n) {
  std::vector<Rat> c(context(n).phi);
  c[0] = r;
  return Cyc(n, std::move(c));
}

Cyc Cyc::root_of_unity(int n, long k) {
  k %= n;
  if (k < 0) k += n;
  const Context& ctx = context(n);
  std::vector<Rat> raw(k + 1);
  raw[k] = 1;
  Cyc z(n, std::vector<Rat>(ctx.phi));
  z.reduce_tail(raw);
  raw.resize(ctx.phi);
  z.c_ = std::move(raw);
  return z;
}

void Cyc::reduce_tail(std::vector<Rat>& raw) const {
  // Fold powers zeta^k, k >= phi, through the table.  The table covers
  // every power a product or root_of_unity call can produce.
  const Context& ctx = context(n_);
  for (int k = static_cast<int>(raw.size()) - 1; k >= ctx.phi; --k) {
    if (raw[k] == 0) continue;
    Rat c = raw[k];
    raw[k] = 0;
    const auto& rep = ctx.powtable.at(k - ctx.phi);
    for (int i = 0; i < ctx.phi; ++i) raw[i] += c * rep[i];
  }
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rational_value() const {
  if (!is_rational()) throw Error("Cyc: not rational: " + str());
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  if (n_ != o.n_) {
    int m = std::lcm(n_, o.n_);
    return promoted(m) + o.promoted(m);
  }
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  if (n_ != o.n_) {
    int m = std::lcm(n_, o.n_);
    return promoted(m) * o.promoted(m);
  }
  int phi = static_cast<int>(c_.size());
  std::vector<Rat> raw(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_tail(raw);
  raw.resize(phi);
  return Cyc(n_, std::move(raw));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DivisionByZero("Cyc: division by zero");
  if (is_rational()) return rational(Rat(1) / c_[0], n_);
  // Extended Euclid in Q[t] against Phi_N.
  std::vector<Rat> r0 = context(n_).cyclo, r1(c_.begin(), c_.end());
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0{}, s1{Rat(1)};  // s tracks the coefficient of *this
  auto is_const = [](const std::vector<Rat>& p) { return p.size() == 1; };
  while (true) {
    // r0 = q*r1 + r2
    std::vector<Rat> rem = r0, q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0);
    for (int k = static_cast<int>(rem.size()) - static_cast<int>(r1.size()); k >= 0; --k) {
      Rat c = rem[k + r1.size() - 1] / r1.back();
      q[k] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s2 = s0 - q*s1
    std::vector<Rat> s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    while (!s2.empty() && s2.back() == 0) s2.pop_back();
    if (rem.empty()) throw Error("Cyc: inverse of zero divisor (conductor not squarefree-safe?)");
    if (is_const(rem)) {
      // s2 * this == rem (mod Phi): inverse = s2 / rem.
      std::vector<Rat> coeff(context(n_).phi);
      for (size_t i = 0; i < s2.size() && i < coeff.size(); ++i) coeff[i] = s2[i] / rem[0];
      // s2 may exceed phi-1 in degree only transiently; fold if needed.
      if (s2.size() > coeff.size()) {
        std::vector<Rat> raw(s2.size());
        for (size_t i = 0; i < s2.size(); ++i) raw[i] = s2[i] / rem[0];
        Cyc tmp = zero(n_);
        tmp.reduce_tail(raw);
        raw.resize(context(n_).phi);
        return Cyc(n_, std::move(raw));
      }
      return Cyc(n_, std::move(coeff));
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc acc = one(n_), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ != o.n_) {
    int m = std::lcm(n_, o.n_);
    return promoted(m) == o.promoted(m);
  }
  return c_ == o.c_;
}

Cyc Cyc::promoted(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error("Cyc: conductor must divide the target");
  int step = m / n_;
  Cyc r = zero(m);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyc z = root_of_unity(m, step * static_cast<long>(i));
    for (auto& x : z.c_) x *= c_[i];
    r += z;
  }
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i >= 1) os << "*z" << n_ << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cm
