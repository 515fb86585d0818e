#ifndef COHCAT_FUNCTORS_HPP
#define COHCAT_FUNCTORS_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cohcat/category.hpp"

namespace cohcat {

// A model: object -> finite set of element identifiers, morphism -> total
// function. Backends may be explicit tables or lazy (representables,
// filters, finite products); values are memoized.
class SetFunctor {
 public:
  SetFunctor() = default;
  SetFunctor(CatRef source, std::function<std::vector<Elem>(const Obj&)> sets,
             std::function<Elem(const Mor&, const Elem&)> apply,
             std::string label = "functor");

  static SetFunctor table(CatRef source, std::map<Obj, std::vector<Elem>> sets,
                          std::map<Mor, std::map<Elem, Elem>> functions,
                          std::string label = "functor");
  // C(z, -); elements are the morphism identifiers.
  static SetFunctor representable(CatRef source, Obj z);
  // Subsingleton functor of an upward-closed subset of a thin category;
  // lex iff the subset is a filter.
  static SetFunctor filter(CatRef thin_source, std::vector<Obj> members,
                           std::string label = "");
  static SetFunctor constant_terminal(CatRef source);
  static SetFunctor product(std::vector<SetFunctor> factors);

  CatRef source() const { return source_; }
  const std::string& label() const { return label_; }
  std::vector<Elem> set(const Obj& x) const;
  Elem apply(const Mor& f, const Elem& e) const;
  bool has_element(const Obj& x, const Elem& e) const;

  // Empty report iff identities and composites are respected on the window.
  std::vector<std::string> functoriality_violations(
      const std::vector<Obj>& window) const;
  // Spot-checks preservation of terminal, binary products and equalizers
  // over the window; returns violations.
  std::vector<std::string> lex_violations(const std::vector<Obj>& window) const;

  // Filter support when the functor is subsingleton-valued on a thin base.
  std::vector<Obj> support(const std::vector<Obj>& window) const;

  static const Elem kStar;

 private:
  CatRef source_;
  std::function<std::vector<Elem>(const Obj&)> sets_;
  std::function<Elem(const Mor&, const Elem&)> apply_;
  std::string label_;
  struct Memo {
    std::mutex mutex;
    std::map<Obj, std::vector<Elem>> sets;
  };
  std::shared_ptr<Memo> memo_;
};

// Functor between categories, function-backed so derived categories can
// expose lazy projections.
class CatFunctor {
 public:
  CatFunctor() = default;
  CatFunctor(CatRef source, CatRef target,
             std::function<Obj(const Obj&)> on_objects,
             std::function<Mor(const Mor&)> on_morphisms,
             std::string label = "functor");

  static CatFunctor table(CatRef source, CatRef target, std::map<Obj, Obj> omap,
                          std::map<Mor, Mor> mmap, std::string label = "functor");
  // Monotone map between thin categories.
  static CatFunctor monotone(CatRef source, CatRef target,
                             std::map<Obj, Obj> omap,
                             std::string label = "functor");
  static CatFunctor identity(CatRef c);
  static CatFunctor compose(const CatFunctor& f, const CatFunctor& g);  // f∘g

  CatRef source() const { return source_; }
  CatRef target() const { return target_; }
  const std::string& label() const { return label_; }
  Obj on_obj(const Obj& x) const { return on_objects_(x); }
  Mor on_mor(const Mor& f) const { return on_morphisms_(f); }

  std::vector<std::string> functoriality_violations(
      const std::vector<Obj>& window) const;
  std::vector<std::string> lex_violations(const std::vector<Obj>& window) const;
  bool is_faithful(const std::vector<Obj>& window) const;

 private:
  CatRef source_, target_;
  std::function<Obj(const Obj&)> on_objects_;
  std::function<Mor(const Mor&)> on_morphisms_;
  std::string label_;
};

// Natural transformation between SetFunctors over a common base.
class SetNatTransform {
 public:
  SetNatTransform() = default;
  SetNatTransform(SetFunctor source, SetFunctor target,
                  std::function<Elem(const Obj&, const Elem&)> component,
                  std::string label = "alpha");
  static SetNatTransform table(SetFunctor source, SetFunctor target,
                               std::map<Obj, std::map<Elem, Elem>> components,
                               std::string label = "alpha");
  static SetNatTransform identity(SetFunctor f);

  const SetFunctor& source() const { return source_; }
  const SetFunctor& target() const { return target_; }
  const std::string& label() const { return label_; }
  Elem component(const Obj& x, const Elem& e) const { return component_(x, e); }

  std::vector<std::string> naturality_violations(
      const std::vector<Obj>& window) const;

 private:
  SetFunctor source_, target_;
  std::function<Elem(const Obj&, const Elem&)> component_;
  std::string label_;
};

// Natural transformation between CatFunctors; components are morphisms of
// the common target category.
class CatNatTransform {
 public:
  CatNatTransform() = default;
  CatNatTransform(CatFunctor source, CatFunctor target,
                  std::function<Mor(const Obj&)> component,
                  std::string label = "alpha");
  static CatNatTransform table(CatFunctor source, CatFunctor target,
                               std::map<Obj, Mor> components,
                               std::string label = "alpha");

  const CatFunctor& source() const { return source_; }
  const CatFunctor& target() const { return target_; }
  Mor component(const Obj& x) const { return component_(x); }
  const std::string& label() const { return label_; }

  std::vector<std::string> naturality_violations(
      const std::vector<Obj>& window) const;

 private:
  CatFunctor source_, target_;
  std::function<Mor(const Obj&)> component_;
  std::string label_;
};

}  // namespace cohcat

#endif
