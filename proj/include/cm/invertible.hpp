#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cm/poly.hpp"
#include "cm/grading.hpp"

namespace cm {

enum class Family { Loop, Chain, BP };

std::string family_name(Family f);

// Square exponent matrix; row i is the monomial prod_j x_j^{a(i,j)}.
struct ExponentMatrix {
  std::vector<std::vector<long>> a;
  int n() const { return static_cast<int>(a.size()); }
  ExponentMatrix transposed() const;
  bool operator==(const ExponentMatrix&) const = default;
};

ExponentMatrix matrix_for(Family f, long p, long q);

struct Atom {
  enum Kind { Fermat, Loop, Chain } kind;
  long p = 0, q = 0;            // Fermat uses p only
  std::vector<int> vars;        // variable indices, (head, tail) for loop/chain
};

struct InvertiblePolynomial {
  ExponentMatrix matrix;
  std::vector<Atom> atoms;
};

// Atom decomposition.  Rejects matrices that are not of invertible type or
// whose loop/chain blocks involve more than two variables (transpose,
// weight_system and milnor_number still accept the raw matrices).
InvertiblePolynomial classify(const ExponentMatrix& m);

InvertiblePolynomial transpose(const InvertiblePolynomial& p);

struct WeightSystem {
  std::vector<long> d;
  long h = 0;
  long d0 = 0;  // h - sum(d)
};

// Minimal positive integer solution of A*d = h*(1,..,1), gcd-normalised.
WeightSystem weight_system(const ExponentMatrix& m);

// Milnor number, computed via the closed form prod(h/d_i - 1) and an
// independent Jacobian-ring dimension oracle; throws OracleMismatch when
// the two disagree.
long milnor_number(const ExponentMatrix& m);
long milnor_closed_form(const ExponentMatrix& m);
long milnor_jacobian_oracle(const ExponentMatrix& m);

// Maximal admissible index for a two-variable atom family.
long max_index(Family f, long p, long q);

struct SymmetryData {
  Family family;
  long p, q, ell;
  long d_max;
  long rel_x, rel_y;       // L presented by rel_x * xv = rel_y * yv
  long torsion_order;      // |L_tors| = d_max / ell
  long quotient_order;     // |L / Z c|
  LDeg alpha;              // Gorenstein parameter xv + yv - c
  long alpha_free;         // projection to the free factor (= -d0 of weights)
};

SymmetryData symmetry_data(Family f, long p, long q, long ell);

// Grading group of the model (relation plus degree of w).
GradingGroup grading_group(Family f, long p, long q, long ell);

struct TiltingLength {
  long value;         // (mu(transpose) - 1)/ell + ell
  long object_count;  // family-specific count; asserted equal to value
};

TiltingLength tilting_length(Family f, long p, long q, long ell);

struct FjrwDimension {
  long total;
  long narrow_sectors;               // ell - 1, each of dimension 1
  long identity_sector;              // invariant Jacobian basis monomials
  std::vector<Mono> invariant_monomials;
};

// FJRW state-space dimension of (transpose polynomial, mu_ell) with the
// diagonal action xi.(x,y) = (xi x, xi^{-1} y).
FjrwDimension fjrw_dimension(Family f, long p, long q, long ell);

// Explicit monomial basis of the Jacobian ring of a two-variable
// polynomial, lex-ordered (used by the oracle and by fjrw_dimension).
std::vector<Mono> jacobian_basis_2var(const ExponentMatrix& m);

}  // namespace cm
