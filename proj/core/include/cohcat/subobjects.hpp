#ifndef COHCAT_SUBOBJECTS_HPP
#define COHCAT_SUBOBJECTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cohcat/category.hpp"
#include "cohcat/lattice.hpp"
#include "cohcat/limits.hpp"

namespace cohcat {

// One subobject class of a fixed ambient object: the canonical
// representative mono (least identifier among mutually-factoring monos).
struct Subobject {
  Obj domain;
  Mor mono;
};

// The subobject lattice of an ambient object, computed by bounded-exhaustive
// enumeration of monos up to mutual factorization.
class SubobjectLattice {
 public:
  SubobjectLattice(CatRef c, Obj ambient, std::vector<Obj> window);

  const Obj& ambient() const { return ambient_; }
  const std::vector<Subobject>& classes() const { return classes_; }
  size_t size() const { return classes_.size(); }

  // Class index of an arbitrary mono into the ambient object.
  size_t classify(const Mor& mono) const;
  bool leq(size_t i, size_t j) const;
  size_t meet(size_t i, size_t j) const;           // pullback of representatives
  std::optional<size_t> join(size_t i, size_t j) const;  // image of the copair
  size_t top() const { return top_; }
  std::optional<size_t> bottom() const { return bottom_; }

  // Complemented classes with their complements; throws NotBoolean if some
  // complement is not unique.
  std::vector<std::pair<size_t, size_t>> complemented_pairs() const;

 private:
  CatRef c_;
  Obj ambient_;
  std::vector<Subobject> classes_;
  std::vector<std::vector<bool>> leq_;
  size_t top_ = 0;
  std::optional<size_t> bottom_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<size_t, size_t>, size_t> meet_memo_;
  mutable std::map<std::pair<size_t, size_t>, std::optional<size_t>> join_memo_;
  bool mono_leq(const Mor& m1, const Mor& m2) const;
};

SubobjectLattice subobjects(CatRef c, const Obj& x);
SubobjectLattice subobjects(CatRef c, const Obj& x, std::vector<Obj> window);

// Join of two subobject classes, as the spec's standalone union operation.
Subobject union_of(const SubobjectLattice& lattice, size_t i, size_t j);

struct ComplementedSubobjects {
  FiniteBooleanAlgebra algebra;          // elements labelled by class reps
  std::vector<size_t> class_of_element;  // algebra element order -> class index
};

// The Boolean algebra of complemented subobjects of x.
ComplementedSubobjects complemented_subobjects(CatRef c, const Obj& x);
ComplementedSubobjects complemented_subobjects(CatRef c, const Obj& x,
                                               std::vector<Obj> window);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  void fail(std::string w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

// Bounded-exhaustive coherence check: finite limits exist, factorizations
// exist and are pullback-stable, finite unions exist and are pullback-stable.
CheckReport check_coherent(CatRef c);
CheckReport check_coherent(CatRef c, std::vector<Obj> window);

// Disjoint-coproduct structure: every subobject lattice is complemented
// with unique complements, joins of disjoint pairs are stable disjoint
// decompositions, and genuine coproducts inside the caps are disjoint and
// stable.
CheckReport check_disjoint_coproducts(CatRef c);
CheckReport check_disjoint_coproducts(CatRef c, std::vector<Obj> window);

}  // namespace cohcat

#endif
