#ifndef COHCAT_CATEGORY_HPP
#define COHCAT_CATEGORY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cohcat/errors.hpp"

namespace cohcat {

// Objects, morphisms and set elements are canonical string identifiers;
// equality is string equality everywhere (structural, no up-to-iso).
using Obj = std::string;
using Mor = std::string;
using Elem = std::string;

enum class Backend { Table, Poset, SkelFinSet, Slice, Elements, Opposite };

const char* backend_name(Backend b);

class FinCategory;
using CatRef = std::shared_ptr<const FinCategory>;

// A small computable category. Backends may enumerate lazily; everything
// is immutable after construction and safe to share across threads
// (memo tables are mutex-guarded).
class FinCategory : public std::enable_shared_from_this<FinCategory> {
 public:
  virtual ~FinCategory() = default;

  virtual Backend backend() const = 0;
  // Object universe in identifier order (the order used for all
  // deterministic tie-breaks).
  virtual const std::vector<Obj>& objects() const = 0;
  virtual bool has_object(const Obj& x) const;
  virtual std::vector<Mor> hom(const Obj& x, const Obj& y) const = 0;
  virtual Obj dom(const Mor& f) const = 0;
  virtual Obj cod(const Mor& f) const = 0;
  virtual Mor identity(const Obj& x) const = 0;
  // compose(f, g) = f ∘ g, defined when dom(f) == cod(g).
  virtual Mor compose(const Mor& f, const Mor& g) const = 0;
  // hom-sets of size <= 1 everywhere (preorders; poset backend and the
  // materialized diagram categories are thin).
  virtual bool thin() const { return false; }

  size_t object_index(const Obj& x) const;
  bool is_identity(const Mor& f) const;
  std::vector<Mor> morphisms_between_all() const;  // all homs, object order

  // Cached structural queries used all over the limit machinery.
  std::optional<Obj> terminal() const;
  std::optional<Obj> initial() const;
  bool is_mono(const Mor& f) const;
  bool is_epi(const Mor& f) const;
  std::optional<Mor> inverse(const Mor& f) const;
  bool is_iso(const Mor& f) const { return inverse(f).has_value(); }

 protected:
  mutable std::mutex memo_mutex_;
  mutable std::map<std::string, std::vector<Mor>> hom_memo_;
  mutable std::optional<std::optional<Obj>> terminal_memo_;
  mutable std::optional<std::optional<Obj>> initial_memo_;
};

// --- Table backend ---------------------------------------------------------

struct TableData {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;                 // declaration order
  std::map<Mor, std::pair<Obj, Obj>> arrows;  // id -> (dom, cod)
  std::map<Obj, Mor> identities;
  std::map<std::pair<Mor, Mor>, Mor> compose;  // (f, g) -> f∘g
};

class TableCategory : public FinCategory {
 public:
  // validate=true checks all category axioms eagerly and throws
  // AxiomViolation on the first failure.
  explicit TableCategory(TableData data, bool validate = true);

  Backend backend() const override { return Backend::Table; }
  const std::vector<Obj>& objects() const override { return data_.objects; }
  std::vector<Mor> hom(const Obj& x, const Obj& y) const override;
  Obj dom(const Mor& f) const override;
  Obj cod(const Mor& f) const override;
  Mor identity(const Obj& x) const override;
  Mor compose(const Mor& f, const Mor& g) const override;
  bool thin() const override;

  const TableData& data() const { return data_; }
  std::vector<std::string> axiom_violations() const;

 private:
  TableData data_;
  mutable std::optional<bool> thin_memo_;
};

// --- Poset / preorder backend ----------------------------------------------

// Stores the <= relation and synthesizes the unique morphisms on demand.
// Antisymmetry is not required (materialized diagram categories are
// preorders with isomorphic distinct objects).
class PosetCategory : public FinCategory {
 public:
  // `le` holds pairs (x, y) with x <= y; the constructor closes the
  // relation reflexively and transitively.
  PosetCategory(std::vector<Obj> elements, std::vector<std::pair<Obj, Obj>> le);

  Backend backend() const override { return Backend::Poset; }
  const std::vector<Obj>& objects() const override { return elements_; }
  std::vector<Mor> hom(const Obj& x, const Obj& y) const override;
  Obj dom(const Mor& f) const override;
  Obj cod(const Mor& f) const override;
  Mor identity(const Obj& x) const override;
  Mor compose(const Mor& f, const Mor& g) const override;
  bool thin() const override { return true; }

  bool le(const Obj& x, const Obj& y) const;
  static Mor le_mor(const Obj& x, const Obj& y);
  // Meet/joins by bounded search; nullopt when no unique bound exists.
  std::optional<Obj> meet(const Obj& x, const Obj& y) const;
  std::optional<Obj> join(const Obj& x, const Obj& y) const;

 private:
  std::vector<Obj> elements_;
  std::map<Obj, size_t> index_;
  std::vector<std::vector<bool>> le_;  // le_[i][j] : elements_[i] <= elements_[j]
  void parse(const Mor& f, Obj& x, Obj& y) const;
};

// --- Skeletal finite sets ---------------------------------------------------

// Objects are the cardinals 0..cap; morphisms n -> m are all functions,
// identified by their value arrays and enumerated lazily in lexicographic
// order. Operations beyond the cap raise rather than truncate.
class SkelFinSetCategory : public FinCategory {
 public:
  explicit SkelFinSetCategory(int cap);

  Backend backend() const override { return Backend::SkelFinSet; }
  const std::vector<Obj>& objects() const override { return objects_; }
  std::vector<Mor> hom(const Obj& x, const Obj& y) const override;
  Obj dom(const Mor& f) const override;
  Obj cod(const Mor& f) const override;
  Mor identity(const Obj& x) const override;
  Mor compose(const Mor& f, const Mor& g) const override;

  int cap() const { return cap_; }
  static int card(const Obj& x);
  Obj obj_of(int n) const;
  // Morphism id "f{n}_{m}_v0-v1-..."; values index 0..m-1.
  static Mor mor_of(int n, int m, const std::vector<int>& values);
  static void parse(const Mor& f, int& n, int& m, std::vector<int>& values);
  static std::vector<int> values(const Mor& f);

 private:
  int cap_;
  std::vector<Obj> objects_;
};

// Formal opposite; morphism ids are reused with dom/cod swapped.
class OppositeCategory : public FinCategory {
 public:
  explicit OppositeCategory(CatRef base) : base_(std::move(base)) {}

  Backend backend() const override { return Backend::Opposite; }
  const std::vector<Obj>& objects() const override { return base_->objects(); }
  std::vector<Mor> hom(const Obj& x, const Obj& y) const override {
    return base_->hom(y, x);
  }
  Obj dom(const Mor& f) const override { return base_->cod(f); }
  Obj cod(const Mor& f) const override { return base_->dom(f); }
  Mor identity(const Obj& x) const override { return base_->identity(x); }
  Mor compose(const Mor& f, const Mor& g) const override {
    return base_->compose(g, f);
  }
  bool thin() const override { return base_->thin(); }
  CatRef base() const { return base_; }

 private:
  CatRef base_;
};

CatRef opposite(CatRef c);

// Structured axiom report; empty iff the input is a category. For the
// SkelFinSet backend associativity is probed on `samples` random triples
// with the given seed (recorded by the caller's report).
std::vector<std::string> check_category_axioms(const FinCategory& c,
                                               int samples = 200,
                                               unsigned long long seed = 0);

void validate_identifier(const std::string& id, const char* what);

}  // namespace cohcat

#endif
