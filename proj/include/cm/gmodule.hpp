#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cm/linalg.hpp"
#include "cm/poly.hpp"

namespace cm {

// Presentation of an L-graded R-module: a direct sum of shifted copies of
// R = S/(w) modulo homogeneous relation columns.  Quotients are never
// normalised; graded pieces expose the ambient monomial basis plus the
// relation span, and consumers work with spans and membership tests.
class GradedModule {
 public:
  GradedModule(GradingGroup G, Poly w, std::vector<LDeg> gens,
               std::vector<std::vector<Poly>> rels, std::string name = "")
      : G_(G), w_(std::move(w)), gens_(std::move(gens)), rels_(std::move(rels)),
        name_(std::move(name)) {
    validate();
  }

  // Cyclic quotient R(shift)/(ideal generators).
  static GradedModule cyclic(const GradingGroup& G, const Poly& w, LDeg shift,
                             const std::vector<Poly>& ideal, std::string name = "");

  const GradingGroup& grading() const { return G_; }
  const std::vector<LDeg>& gens() const { return gens_; }
  const std::string& name() const { return name_; }

  GradedModule shifted(LDeg l) const;

  struct Piece {
    std::vector<std::pair<int, Mono>> monos;  // (slot, monomial), slot-major lex
    std::map<std::pair<int, Mono>, int> index;
    std::shared_ptr<RowSpan> relspan;         // span of relation multiples
    int dim() const { return static_cast<int>(monos.size()) - relspan->rank(); }
    int col(int slot, Mono m) const { return index.at({slot, m}); }
  };

  // Degree-l piece; cached per canonical degree.
  const Piece& piece(LDeg l) const;

  // Basis monomials (non-pivot columns) of the degree-l piece, for reports
  // and for constructing explicit elements.
  std::vector<std::pair<int, Mono>> piece_basis(LDeg l) const;

  // Coordinates of a homogeneous element (one Poly per slot) in the
  // ambient monomial basis of its degree piece.
  SparseRow coords(LDeg l, const std::vector<Poly>& elt) const;

 private:
  void validate() const;

  GradingGroup G_;
  Poly w_;
  std::vector<LDeg> gens_;
  std::vector<std::vector<Poly>> rels_;
  std::string name_;
  mutable std::map<LDeg, Piece> cache_;
};

}  // namespace cm
