#ifndef COHCAT_ELEMENTS_HPP
#define COHCAT_ELEMENTS_HPP

#include <utility>
#include <vector>

#include "cohcat/category.hpp"
#include "cohcat/functors.hpp"

namespace cohcat {

// The slice C/x restricted to domain objects drawn from `window` (a full
// subcategory; for finite backends the window is everything). Objects are
// the arrows into x, identified by their own morphism id; morphisms are
// commuting triangles "tri;f;h;k" with k∘f = h.
class SliceCategory : public FinCategory {
 public:
  SliceCategory(CatRef base, Obj over, std::vector<Obj> window);

  Backend backend() const override { return Backend::Slice; }
  const std::vector<Obj>& objects() const override { return objects_; }
  std::vector<Mor> hom(const Obj& h, const Obj& k) const override;
  Obj dom(const Mor& t) const override;
  Obj cod(const Mor& t) const override;
  Mor identity(const Obj& h) const override;
  Mor compose(const Mor& t1, const Mor& t2) const override;
  bool thin() const override { return base_->thin(); }

  CatRef base() const { return base_; }
  const Obj& over() const { return over_; }

  static Mor triangle_map(const Mor& t);  // the underlying base morphism
  Mor make_triangle(const Obj& h, const Obj& k, const Mor& f) const;

 private:
  CatRef base_;
  Obj over_;
  std::vector<Obj> objects_;
  void parse(const Mor& t, Mor& f, Obj& h, Obj& k) const;
};

// The category of elements ∫F over a window of base objects: objects are
// pairs "el;x;a" with a ∈ F(x), morphisms "elm;f;a" with F(f)(a) = b.
class ElementsCategory : public FinCategory {
 public:
  ElementsCategory(SetFunctor f, std::vector<Obj> window,
                   size_t max_objects = 2000000);

  Backend backend() const override { return Backend::Elements; }
  const std::vector<Obj>& objects() const override { return objects_; }
  std::vector<Mor> hom(const Obj& p, const Obj& q) const override;
  Obj dom(const Mor& m) const override;
  Obj cod(const Mor& m) const override;
  Mor identity(const Obj& p) const override;
  Mor compose(const Mor& m1, const Mor& m2) const override;
  bool thin() const override { return functor_.source()->thin(); }

  const SetFunctor& functor() const { return functor_; }
  static Obj object_id(const Obj& x, const Elem& a);
  static void parse_object(const Obj& p, Obj& x, Elem& a);
  static Mor mor_id(const Mor& f, const Elem& a);

 private:
  SetFunctor functor_;
  std::vector<Obj> objects_;
  void parse_mor(const Mor& m, Mor& f, Elem& a) const;
};

struct SlicedCategory {
  std::shared_ptr<const SliceCategory> cat;
  CatFunctor forgetful;  // C/x -> C
};

struct ElementsResult {
  std::shared_ptr<const ElementsCategory> cat;
  CatRef op;              // (∫F)^op
  CatFunctor projection;  // ∫F -> C
};

SlicedCategory slice(CatRef c, const Obj& x);
SlicedCategory slice(CatRef c, const Obj& x, std::vector<Obj> window);

ElementsResult category_of_elements(const SetFunctor& f);
ElementsResult category_of_elements(const SetFunctor& f, std::vector<Obj> window,
                                    size_t max_objects = 2000000);

}  // namespace cohcat

#endif
