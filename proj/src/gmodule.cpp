#include "cm/gmodule.hpp"

#include <algorithm>

namespace cm {

GradedModule GradedModule::cyclic(const GradingGroup& G, const Poly& w, LDeg shift,
                                  const std::vector<Poly>& ideal, std::string name) {
  std::vector<std::vector<Poly>> rels;
  rels.reserve(ideal.size());
  for (const auto& g : ideal) rels.push_back({g});
  return GradedModule(G, w, {G.canon(shift)}, std::move(rels), std::move(name));
}

GradedModule GradedModule::shifted(LDeg l) const {
  std::vector<LDeg> g2;
  g2.reserve(gens_.size());
  for (auto g : gens_) g2.push_back(G_.add(g, l));
  return GradedModule(G_, w_, std::move(g2), rels_, name_);
}

void GradedModule::validate() const {
  for (const auto& rel : rels_) {
    if (rel.size() != gens_.size()) throw Error("GradedModule: relation arity mismatch");
    // Homogeneity: all nonzero components must agree on deg(f_s) - gen_s.
    bool seen = false;
    LDeg delta{0, 0};
    for (size_t s = 0; s < rel.size(); ++s) {
      if (rel[s].is_zero()) continue;
      auto d = rel[s].homogeneous_degree(G_);
      if (!d) throw Error("GradedModule: inhomogeneous relation entry");
      LDeg dd = G_.sub(*d, gens_[s]);
      if (seen && dd != delta) throw Error("GradedModule: relation not homogeneous");
      delta = dd;
      seen = true;
    }
  }
}

const GradedModule::Piece& GradedModule::piece(LDeg l) const {
  l = G_.canon(l);
  auto it = cache_.find(l);
  if (it != cache_.end()) return it->second;

  Piece p;
  for (size_t s = 0; s < gens_.size(); ++s) {
    for (auto [e1, e2] : G_.monomials_of_degree(G_.add(l, gens_[s]))) {
      p.index[{static_cast<int>(s), {e1, e2}}] = static_cast<int>(p.monos.size());
      p.monos.emplace_back(static_cast<int>(s), Mono{e1, e2});
    }
  }
  p.relspan = std::make_shared<RowSpan>(static_cast<int>(p.monos.size()));

  auto add_multiples = [&](const std::vector<Poly>& rel, LDeg delta) {
    for (auto [m1, m2] : G_.monomials_of_degree(G_.sub(l, delta))) {
      Poly mult = Poly::monomial(m1, m2, Cyc(1));
      SparseRow row;
      for (size_t s = 0; s < rel.size(); ++s) {
        if (rel[s].is_zero()) continue;
        Poly prod = mult * rel[s];
        for (const auto& [mono, c] : prod.terms())
          row.emplace_back(p.col(static_cast<int>(s), mono), c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      p.relspan->insert(std::move(row));
    }
  };

  for (const auto& rel : rels_) {
    LDeg delta{0, 0};
    for (size_t s = 0; s < rel.size(); ++s)
      if (!rel[s].is_zero()) {
        delta = G_.sub(*rel[s].homogeneous_degree(G_), gens_[s]);
        break;
      }
    add_multiples(rel, delta);
  }
  if (!w_.is_zero()) {
    // w * e_s for each slot.
    LDeg wd = *w_.homogeneous_degree(G_);
    for (size_t s = 0; s < gens_.size(); ++s) {
      std::vector<Poly> rel(gens_.size());
      rel[s] = w_;
      add_multiples(rel, G_.sub(wd, gens_[s]));
    }
  }
  return cache_.emplace(l, std::move(p)).first->second;
}

std::vector<std::pair<int, Mono>> GradedModule::piece_basis(LDeg l) const {
  const Piece& p = piece(l);
  std::vector<std::pair<int, Mono>> out;
  for (size_t i = 0; i < p.monos.size(); ++i)
    if (!p.relspan->is_pivot(static_cast<int>(i))) out.push_back(p.monos[i]);
  return out;
}

SparseRow GradedModule::coords(LDeg l, const std::vector<Poly>& elt) const {
  const Piece& p = piece(l);
  SparseRow row;
  for (size_t s = 0; s < elt.size(); ++s)
    for (const auto& [mono, c] : elt[s].terms())
      row.emplace_back(p.col(static_cast<int>(s), mono), c);
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace cm
