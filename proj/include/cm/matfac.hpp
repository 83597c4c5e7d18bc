#pragma once

#include <string>
#include <vector>

#include "cm/gmodule.hpp"
#include "cm/invertible.hpp"

namespace cm {

using Mat = std::vector<std::vector<Poly>>;

Poly det(const Mat& m);
Mat adjugate(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);

// L-graded matrix factorisation of w, presented by the two-periodic complex
//   ... -> K^{-2} --d0--> K^{-1} --d1--> K^0 -> ...
// with K^{2t} = (even gens) + t*c and K^{2t+1} = (odd gens) + (t+1)*c.
// Entry degrees: deg d1[a][b] = even[a] - odd[b],
//                deg d0[a][b] = odd[a] + c - even[b].
struct MF {
  GradingGroup G;
  Poly w;
  int rank = 0;
  std::vector<LDeg> even, odd;
  Mat d0, d1;

  // Generator degrees of K^n.
  std::vector<LDeg> gens(int n) const;
  // Matrix of k^n : K^n -> K^{n+1} (d0 for even n, d1 for odd n).
  const Mat& k(int n) const { return (((n % 2) + 2) % 2 == 0) ? d0 : d1; }
};

MF shift(const MF& K, LDeg l);
MF suspend(const MF& K);
MF shift_cohomological(const MF& K, int s);  // K[s]

struct MFMorphism {
  // Degree-n morphism as the pair f^0 : K^0 -> K'^n, f^{-1}: K^{-1} -> K'^{n-1},
  // extended two-periodically (matrices do not change under the twist).
  int deg = 0;
  Mat f0, f1;
};

bool is_closed(const MF& A, const MF& B, const MFMorphism& f);
MFMorphism compose_chain(const MF& A, const MF& B, const MF& C, const MFMorphism& g,
                         const MFMorphism& f);  // g after f
MFMorphism morphism_sub(const MFMorphism& f, const MFMorphism& g);

// Mapping cone of a closed degree-0 morphism f : K -> K'.
MF cone(const MF& K, const MF& Kp, const MFMorphism& f);

struct VerifyReport {
  bool product_ok = false;
  bool homogeneity_ok = false;
  bool periodicity_ok = false;
  bool det_ok = true;  // only checked for K0 objects
  std::vector<std::string> failures;
  bool pass() const { return product_ok && homogeneity_ok && periodicity_ok && det_ok; }
};

VerifyReport verify_mf(const MF& K, bool check_det_is_w = false);

// coker(d1 : K^{-1} -> K^0) as a graded module presentation.
GradedModule coker_module(const MF& K);

// Identifier of a basic object of the category B.
struct ObjectId {
  enum Kind { Kx, Ky, Kw, K0 } kind;
  long i = 0, j = 0, r = 0;
  std::string str() const;
  bool operator==(const ObjectId&) const = default;
  bool operator<(const ObjectId& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return r < o.r;
  }
};

// One family instance (family, p, q, ell): grading, w and its factors,
// the basic-object list, and builders for objects and named modules.
class Model {
 public:
  Model(Family f, long p, long q, long ell);

  Family family() const { return family_; }
  long p() const { return p_; }
  long q() const { return q_; }
  long ell() const { return ell_; }
  int conductor() const { return static_cast<int>(2 * ell_); }
  const GradingGroup& G() const { return G_; }
  const Poly& w() const { return w_; }
  const std::vector<Poly>& w_factors() const { return factors_; }
  Poly unit_monomial() const;  // xy / y / 1

  // K0 block data.
  long k_of(long i, long j) const;
  bool bp_short_shape(long i, long j) const;  // BP rank-(k+1) shape at i = (l-1)p/l

  std::vector<ObjectId> basic_objects() const;
  void check_range(const ObjectId& id) const;  // throws IndexOutOfRange

  MF build(const ObjectId& id) const;
  // The stabilised module R(shift)/I the object came from.
  GradedModule named_module(const ObjectId& id) const;
  LDeg module_shift(const ObjectId& id) const;
  std::vector<Poly> ideal_generators(const ObjectId& id) const;

  std::string str() const;

 private:
  MF build_k0(long i, long j) const;
  MF rank_one(const Poly& a, const Poly& b, LDeg odd_shift) const;

  Family family_;
  long p_, q_, ell_;
  GradingGroup G_;
  Poly w_;
  std::vector<Poly> factors_;
};

}  // namespace cm
