#include "cm/invertible.hpp"

#include "cm/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cm {

std::string family_name(Family f) {
  switch (f) {
    case Family::Loop: return "loop";
    case Family::Chain: return "chain";
    case Family::BP: return "bp";
  }
  return "?";
}

ExponentMatrix ExponentMatrix::transposed() const {
  ExponentMatrix t;
  int m = n();
  t.a.assign(m, std::vector<long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t.a[j][i] = a[i][j];
  return t;
}

ExponentMatrix matrix_for(Family f, long p, long q) {
  switch (f) {
    case Family::Loop:  return {{{p, 1}, {1, q}}};
    case Family::Chain: return {{{p, 1}, {0, q}}};
    case Family::BP:    return {{{p, 0}, {0, q}}};
  }
  throw Error("matrix_for: bad family");
}

namespace {

Rat det_rational(const ExponentMatrix& m) {
  int n = m.n();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.a[i][j];
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace

InvertiblePolynomial classify(const ExponentMatrix& m) {
  int n = m.n();
  if (n == 0) throw NotInvertible("empty matrix");
  for (const auto& row : m.a) {
    if (static_cast<int>(row.size()) != n) throw NotInvertible("matrix not square");
    bool nonzero = false;
    for (long e : row) {
      if (e < 0) throw NotInvertible("negative exponent");
      if (e > 0) nonzero = true;
    }
    if (!nonzero) throw NotInvertible("zero row");
  }
  if (det_rational(m) == 0) throw NotInvertible("matrix singular over Q");

  // occ[v] = rows where variable v appears.
  std::vector<std::vector<int>> occ(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.a[i][j] > 0) occ[j].push_back(i);
  for (int v = 0; v < n; ++v) {
    if (occ[v].empty()) throw NotInvertible("variable x" + std::to_string(v) + " unused");
    if (occ[v].size() > 2)
      throw NotInvertible("variable x" + std::to_string(v) + " in more than two monomials");
  }

  auto support = [&](int row) {
    std::vector<int> s;
    for (int j = 0; j < n; ++j)
      if (m.a[row][j] > 0) s.push_back(j);
    return s;
  };

  std::vector<bool> used_row(n, false);
  std::vector<Atom> atoms;
  for (int r = 0; r < n; ++r) {
    if (used_row[r]) continue;
    auto sup = support(r);
    if (sup.size() == 1) {
      int v = sup[0];
      long e = m.a[r][v];
      if (occ[v].size() == 1) {
        // Fermat x^p, p >= 2.
        if (e < 2) throw NotInvertible("Fermat exponent must be >= 2");
        used_row[r] = true;
        atoms.push_back({Atom::Fermat, e, 0, {v}});
      } else {
        // Tail of a chain: x_head^p x_tail + x_tail^q.
        int other = occ[v][0] == r ? occ[v][1] : occ[v][0];
        if (used_row[other]) throw NotInvertible("tangled chain rows");
        auto sup2 = support(other);
        if (sup2.size() != 2) throw NotInvertible("chain head must involve two variables");
        int head = sup2[0] == v ? sup2[1] : sup2[0];
        if (m.a[other][v] != 1)
          throw NotInvertible("chain head monomial must be linear in the tail variable");
        if (occ[head].size() != 1) throw NotInvertible("chain longer than two variables");
        long p = m.a[other][head], q = e;
        if (p < 2 || q < 2) throw NotInvertible("chain exponents must be >= 2");
        used_row[r] = used_row[other] = true;
        atoms.push_back({Atom::Chain, p, q, {head, v}});
      }
    } else if (sup.size() == 2) {
      // Loop block x^p y + y^q x, or half of a chain handled above.
      int v1 = sup[0], v2 = sup[1];
      // Find the partner row sharing both variables.
      int partner = -1;
      for (int cand : occ[v1])
        if (cand != r && !used_row[cand]) {
          auto s2 = support(cand);
          if (s2.size() == 2 && ((s2[0] == v1 && s2[1] == v2) || (s2[0] == v2 && s2[1] == v1)))
            partner = cand;
        }
      if (partner < 0) {
        // Might be the head row of a chain; defer to the tail row pass.
        bool tail_exists = false;
        for (int cand : {v1, v2}) {
          for (int row2 : occ[cand])
            if (row2 != r && support(row2).size() == 1) tail_exists = true;
        }
        if (tail_exists) continue;
        throw NotInvertible("row x" + std::to_string(v1) + "/x" + std::to_string(v2) +
                            " closes no loop or chain");
      }
      // Orient: r = head^p * tail, partner = tail^q * head.
      long e11 = m.a[r][v1], e12 = m.a[r][v2];
      long e21 = m.a[partner][v1], e22 = m.a[partner][v2];
      int head, tail;
      long p, q;
      if (e12 == 1 && e21 == 1) {
        head = v1; tail = v2; p = e11; q = e22;
      } else if (e11 == 1 && e22 == 1) {
        head = v2; tail = v1; p = e12; q = e21;
      } else {
        throw NotInvertible("loop rows must be linear in the partner variable");
      }
      if (p < 2 || q < 2) throw NotInvertible("loop exponents must be >= 2");
      if (p < q) { std::swap(head, tail); std::swap(p, q); }
      used_row[r] = used_row[partner] = true;
      atoms.push_back({Atom::Loop, p, q, {head, tail}});
    } else {
      throw NotInvertible("monomial involves more than two variables");
    }
  }
  for (int r = 0; r < n; ++r)
    if (!used_row[r]) throw NotInvertible("unmatched chain head row");

  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.vars[0] < b.vars[0]; });
  return {m, atoms};
}

InvertiblePolynomial transpose(const InvertiblePolynomial& p) {
  return classify(p.matrix.transposed());
}

WeightSystem weight_system(const ExponentMatrix& m) {
  int n = m.n();
  // Solve A * d = h * 1 over Q with h = 1, then clear denominators.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.a[i][j];
    a[i][n] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) throw NotInvertible("weight system: singular matrix");
    std::swap(a[piv], a[c]);
    Rat d = a[c][c];
    for (int k = c; k <= n; ++k) a[c][k] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  mpz_class lcm_den = 1;
  for (int i = 0; i < n; ++i) {
    if (a[i][n] <= 0) throw NotInvertible("weight system: nonpositive weight");
    mpz_class den = a[i][n].get_den();
    lcm_den = lcm(lcm_den, den);
  }
  WeightSystem ws;
  mpz_class h = lcm_den;
  mpz_class g = h;
  for (int i = 0; i < n; ++i) {
    Rat scaled = a[i][n] * Rat(lcm_den);
    scaled.canonicalize();
    mpz_class di = scaled.get_num();
    ws.d.push_back(di.get_si());
    g = gcd(g, di);
  }
  // gcd-normalise to the primitive weight system.
  for (auto& d : ws.d) d /= g.get_si();
  ws.h = mpz_class(h / g).get_si();
  ws.d0 = ws.h - std::accumulate(ws.d.begin(), ws.d.end(), 0L);
  return ws;
}

long milnor_closed_form(const ExponentMatrix& m) {
  WeightSystem ws = weight_system(m);
  Rat mu = 1;
  for (long d : ws.d) mu *= Rat(ws.h, d) - 1;
  if (mu.get_den() != 1) throw OracleMismatch("milnor closed form not an integer");
  return mpz_class(mu.get_num()).get_si();
}

namespace {

// Partial derivative of the polynomial described by an exponent matrix,
// as a list of (coefficient, multi-exponent) terms.
struct Term {
  long coeff;
  std::vector<long> e;
};

std::vector<Term> partial(const ExponentMatrix& m, int v) {
  std::vector<Term> out;
  for (const auto& row : m.a) {
    if (row[v] == 0) continue;
    Term t;
    t.coeff = row[v];
    t.e = row;
    t.e[v] -= 1;
    out.push_back(t);
  }
  return out;
}

}  // namespace

long milnor_jacobian_oracle(const ExponentMatrix& m) {
  int n = m.n();
  WeightSystem ws = weight_system(m);
  std::vector<std::vector<Term>> partials;
  for (int v = 0; v < n; ++v) partials.push_back(partial(m, v));

  // Graded pieces of C[x_1..x_n]/(partials) by weighted degree; the socle
  // sits in degree sum(h - 2 d_i), and everything above must vanish.
  long top = 0;
  for (long d : ws.d) top += ws.h - 2 * d;
  long margin = *std::max_element(ws.d.begin(), ws.d.end());

  // Enumerate monomials of a given weighted degree.
  std::vector<std::vector<long>> monos;
  std::function<void(int, long, std::vector<long>&)> enumerate =
      [&](int v, long rem, std::vector<long>& cur) {
        if (v == n) {
          if (rem == 0) monos.push_back(cur);
          return;
        }
        for (long e = 0; e * ws.d[v] <= rem; ++e) {
          cur[v] = e;
          enumerate(v + 1, rem - e * ws.d[v], cur);
        }
        cur[v] = 0;
      };

  long mu = 0;
  for (long deg = 0; deg <= top + margin; ++deg) {
    monos.clear();
    std::vector<long> cur(n, 0);
    enumerate(0, deg, cur);
    if (monos.empty()) continue;
    std::map<std::vector<long>, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);

    RowSpan span(static_cast<int>(monos.size()));
    for (int v = 0; v < n; ++v) {
      long pdeg = ws.h - ws.d[v];
      if (deg < pdeg) continue;
      // Multiplier monomials of weighted degree deg - pdeg.
      std::vector<std::vector<long>> mults;
      std::swap(mults, monos);  // reuse the enumerator
      monos.clear();
      std::vector<long> c2(n, 0);
      enumerate(0, deg - pdeg, c2);
      std::swap(mults, monos);  // monos restored; mults holds the multipliers
      for (const auto& mult : mults) {
        SparseRow row;
        for (const auto& t : partials[v]) {
          std::vector<long> e = t.e;
          for (int k = 0; k < n; ++k) e[k] += mult[k];
          row.emplace_back(index.at(e), Cyc(Rat(t.coeff)));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // Merge duplicate columns (two partial terms can coincide).
        SparseRow merged;
        for (auto& [col, cval] : row) {
          if (!merged.empty() && merged.back().first == col)
            merged.back().second += cval;
          else
            merged.emplace_back(col, cval);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& p) { return p.second.is_zero(); }),
                     merged.end());
        span.insert(std::move(merged));
      }
    }
    long piece = static_cast<long>(monos.size()) - span.rank();
    if (deg > top && piece != 0)
      throw OracleMismatch("Jacobian ring not finite dimensional (degree " +
                           std::to_string(deg) + ")");
    mu += piece;
  }
  return mu;
}

long milnor_number(const ExponentMatrix& m) {
  long closed = milnor_closed_form(m);
  long oracle = milnor_jacobian_oracle(m);
  if (closed != oracle)
    throw OracleMismatch("milnor number: closed form " + std::to_string(closed) +
                         " != Jacobian oracle " + std::to_string(oracle));
  return closed;
}

long max_index(Family f, long p, long q) {
  switch (f) {
    case Family::Loop: return std::gcd(p - 1, q - 1);
    case Family::Chain: return std::gcd(p, q - 1);
    case Family::BP: return std::gcd(p, q);
  }
  throw Error("max_index: bad family");
}

GradingGroup grading_group(Family f, long p, long q, long ell) {
  long d = max_index(f, p, q);
  if (ell < 1 || d % ell != 0)
    throw BadIndex("index " + std::to_string(ell) + " does not divide " + std::to_string(d));
  switch (f) {
    case Family::Loop: return GradingGroup((p - 1) / ell, (q - 1) / ell, p, 1);
    case Family::Chain: return GradingGroup(p / ell, (q - 1) / ell, p, 1);
    case Family::BP: return GradingGroup(p / ell, q / ell, p, 0);
  }
  throw Error("grading_group: bad family");
}

SymmetryData symmetry_data(Family f, long p, long q, long ell) {
  if (p < 2 || q < 2) throw BadIndex("exponents must be >= 2");
  SymmetryData s;
  s.family = f;
  s.p = p;
  s.q = q;
  s.ell = ell;
  s.d_max = max_index(f, p, q);
  GradingGroup G = grading_group(f, p, q, ell);
  s.rel_x = G.rel_x();
  s.rel_y = G.rel_y();
  s.torsion_order = G.torsion_order();
  s.quotient_order = G.quotient_order_by_c();
  s.alpha = G.sub(G.add(G.xdeg(), G.ydeg()), G.cdeg());
  s.alpha_free = G.free_part(s.alpha);
  return s;
}

TiltingLength tilting_length(Family f, long p, long q, long ell) {
  long d = max_index(f, p, q);
  if (ell < 1 || d % ell != 0) throw BadIndex("tilting: bad index");
  ExponentMatrix mt = matrix_for(f, p, q).transposed();
  long mu_check = milnor_number(mt);
  if ((mu_check - 1) % ell != 0) throw BadIndex("index incompatible with transpose Milnor number");
  TiltingLength t;
  t.value = (mu_check - 1) / ell + ell;
  switch (f) {
    case Family::Loop: t.object_count = (p * q - 1) / ell + ell; break;
    case Family::Chain: t.object_count = p * (q - 1) / ell + ell; break;
    case Family::BP: t.object_count = ((p - 1) * (q - 1) - 1) / ell + ell; break;
  }
  if (t.value != t.object_count)
    throw OracleMismatch("tilting length " + std::to_string(t.value) +
                         " != object count " + std::to_string(t.object_count));
  return t;
}

std::vector<Mono> jacobian_basis_2var(const ExponentMatrix& m) {
  if (m.n() != 2) throw Error("jacobian_basis_2var: need two variables");
  WeightSystem ws = weight_system(m);
  auto px = partial(m, 0), py = partial(m, 1);
  long top = (ws.h - 2 * ws.d[0]) + (ws.h - 2 * ws.d[1]);
  long margin = std::max(ws.d[0], ws.d[1]);

  std::vector<Mono> basis;
  for (long deg = 0; deg <= top + margin; ++deg) {
    std::vector<Mono> monos;
    for (long e1 = 0; e1 * ws.d[0] <= deg; ++e1) {
      long rem = deg - e1 * ws.d[0];
      if (rem % ws.d[1] == 0) monos.emplace_back(e1, rem / ws.d[1]);
    }
    if (monos.empty()) continue;
    std::map<Mono, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    RowSpan span(static_cast<int>(monos.size()));
    for (int v = 0; v < 2; ++v) {
      const auto& dertms = v == 0 ? px : py;
      long pdeg = ws.h - ws.d[v];
      if (deg < pdeg) continue;
      for (long e1 = 0; e1 * ws.d[0] <= deg - pdeg; ++e1) {
        long rem = deg - pdeg - e1 * ws.d[0];
        if (rem % ws.d[1] != 0) continue;
        long e2 = rem / ws.d[1];
        SparseRow row;
        for (const auto& t : dertms)
          row.emplace_back(index.at({t.e[0] + e1, t.e[1] + e2}), Cyc(Rat(t.coeff)));
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        span.insert(std::move(row));
      }
    }
    for (size_t i = 0; i < monos.size(); ++i)
      if (!span.is_pivot(static_cast<int>(i))) {
        if (deg > top)
          throw OracleMismatch("Jacobian basis escapes the socle window");
        basis.push_back(monos[i]);
      }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

FjrwDimension fjrw_dimension(Family f, long p, long q, long ell) {
  long d = max_index(f, p, q);
  if (ell < 1 || d % ell != 0) throw BadIndex("fjrw: bad index");
  ExponentMatrix mt = matrix_for(f, p, q).transposed();
  FjrwDimension out;
  out.narrow_sectors = ell - 1;
  out.identity_sector = 0;
  for (const auto& [a, b] : jacobian_basis_2var(mt)) {
    if ((a - b) % ell == 0) {
      out.invariant_monomials.emplace_back(a, b);
      ++out.identity_sector;
    }
  }
  out.total = out.identity_sector + out.narrow_sectors;
  return out;
}

}  // namespace cm
