#ifndef COHCAT_LATTICE_HPP
#define COHCAT_LATTICE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohcat/category.hpp"

namespace cohcat {

// Finite lattice with explicit meet/join tables and a computed
// distributivity flag.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  // Validates lattice axioms (unique glb/lub for every pair); throws
  // AxiomViolation otherwise.
  FiniteLattice(std::vector<Obj> elements, std::vector<std::pair<Obj, Obj>> le);

  static FiniteLattice chain(int n);  // 0 < 1 < ... < n-1, named c0..c{n-1}
  static FiniteLattice boolean_from_atoms(std::vector<std::string> atoms);
  static FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);
  // Birkhoff: the lattice of down-sets of the given poset.
  static FiniteLattice downsets(std::vector<Obj> poset_elements,
                                std::vector<std::pair<Obj, Obj>> lt);

  const std::vector<Obj>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  size_t index(const Obj& x) const;
  bool le(const Obj& x, const Obj& y) const;
  Obj meet(const Obj& x, const Obj& y) const;
  Obj join(const Obj& x, const Obj& y) const;
  const Obj& bottom() const { return bottom_; }
  const Obj& top() const { return top_; }
  bool distributive() const { return distributive_; }

  std::vector<Obj> down_set(const Obj& x) const;
  std::vector<Obj> up_set(const Obj& x) const;
  std::vector<Obj> atoms() const;

  struct Filter {
    Obj min;                   // finite filters are principal
    std::vector<Obj> members;  // ↑min in element order
  };
  std::vector<Filter> filters() const;  // one per element, in element order
  Filter principal_filter(const Obj& m) const;
  bool is_prime_filter(const Filter& f) const;  // proper + prime
  std::vector<Filter> prime_filters() const;

  // Complement of u relative to the interval [bottom, x]; nullopt if none,
  // throws NotBoolean when not unique.
  std::optional<Obj> relative_complement(const Obj& u, const Obj& x) const;

  std::shared_ptr<const PosetCategory> category() const;

 private:
  std::vector<Obj> elements_;
  std::map<Obj, size_t> index_;
  std::vector<std::vector<bool>> le_;
  std::vector<std::vector<size_t>> meet_, join_;
  Obj bottom_, top_;
  bool distributive_ = false;
  mutable std::shared_ptr<const PosetCategory> category_;
  mutable std::mutex memo_mutex_;
  void finish();
};

// A finite Boolean algebra: lattice plus complement table and atom list.
class FiniteBooleanAlgebra {
 public:
  FiniteBooleanAlgebra() = default;
  // Throws NotBoolean if some element lacks a complement or has several.
  explicit FiniteBooleanAlgebra(FiniteLattice lattice);
  static FiniteBooleanAlgebra from_atoms(std::vector<std::string> atoms);

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<Obj>& atoms() const { return atoms_; }
  Obj complement(const Obj& x) const;
  std::vector<Obj> atoms_below(const Obj& x) const;
  Obj join_of_atoms(const std::vector<Obj>& atoms) const;
  size_t size() const { return lattice_.size(); }

 private:
  FiniteLattice lattice_;
  std::map<Obj, Obj> complement_;
  std::vector<Obj> atoms_;
};

}  // namespace cohcat

#endif
