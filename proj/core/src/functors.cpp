#include "cohcat/functors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cohcat/limits.hpp"

namespace cohcat {

const Elem SetFunctor::kStar = "*";

SetFunctor::SetFunctor(CatRef source,
                       std::function<std::vector<Elem>(const Obj&)> sets,
                       std::function<Elem(const Mor&, const Elem&)> apply,
                       std::string label)
    : source_(std::move(source)),
      sets_(std::move(sets)),
      apply_(std::move(apply)),
      label_(std::move(label)),
      memo_(std::make_shared<Memo>()) {}

SetFunctor SetFunctor::table(CatRef source, std::map<Obj, std::vector<Elem>> sets,
                             std::map<Mor, std::map<Elem, Elem>> functions,
                             std::string label) {
  auto sets_p = std::make_shared<std::map<Obj, std::vector<Elem>>>(std::move(sets));
  auto fun_p =
      std::make_shared<std::map<Mor, std::map<Elem, Elem>>>(std::move(functions));
  CatRef src = source;
  return SetFunctor(
      source,
      [sets_p](const Obj& x) {
        auto it = sets_p->find(x);
        if (it == sets_p->end())
          throw UnknownObject("set-functor has no value at '" + x + "'");
        return it->second;
      },
      [fun_p, src](const Mor& f, const Elem& e) {
        if (src->is_identity(f)) {
          auto it = fun_p->find(f);
          if (it == fun_p->end()) return e;  // identities may be omitted
        }
        auto it = fun_p->find(f);
        if (it == fun_p->end())
          throw UnknownObject("set-functor has no function at '" + f + "'");
        auto jt = it->second.find(e);
        if (jt == it->second.end())
          throw UnknownObject("function at '" + f + "' undefined on '" + e + "'");
        return jt->second;
      },
      std::move(label));
}

SetFunctor SetFunctor::representable(CatRef source, Obj z) {
  CatRef src = source;
  Obj zz = z;
  return SetFunctor(
      source, [src, zz](const Obj& x) { return src->hom(zz, x); },
      [src](const Mor& f, const Elem& e) { return src->compose(f, e); },
      "C(" + z + ",-)");
}

SetFunctor SetFunctor::filter(CatRef thin_source, std::vector<Obj> members,
                              std::string label) {
  auto set = std::make_shared<std::set<Obj>>(members.begin(), members.end());
  CatRef src = thin_source;
  if (label.empty()) {
    std::ostringstream os;
    os << "filter{";
    for (size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << members[i];
    os << "}";
    label = os.str();
  }
  return SetFunctor(
      thin_source,
      [set](const Obj& x) {
        return set->count(x) ? std::vector<Elem>{kStar} : std::vector<Elem>{};
      },
      [set, src](const Mor& f, const Elem& e) {
        if (e != kStar || !set->count(src->dom(f)) || !set->count(src->cod(f)))
          throw UnknownObject("filter functor undefined on (" + f + ", " + e + ")");
        return kStar;
      },
      std::move(label));
}

SetFunctor SetFunctor::constant_terminal(CatRef source) {
  return SetFunctor(
      source, [](const Obj&) { return std::vector<Elem>{kStar}; },
      [](const Mor&, const Elem&) { return kStar; }, "1");
}

// Elements of a finite product are tuples "(e1|e2|...)" in factor order.
static Elem tuple_of(const std::vector<Elem>& parts) {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "|";
    out += parts[i];
  }
  return out + ")";
}

static std::vector<Elem> untuple(const Elem& e, size_t arity) {
  if (e.size() < 2 || e.front() != '(' || e.back() != ')')
    throw UnknownObject("'" + e + "' is not a tuple element");
  std::vector<Elem> parts;
  std::string body = e.substr(1, e.size() - 2);
  size_t depth = 0, start = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == '|' && depth == 0) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(body.substr(start));
  if (arity > 0 && parts.size() != arity)
    throw UnknownObject("tuple '" + e + "' has wrong arity");
  return parts;
}

SetFunctor SetFunctor::product(std::vector<SetFunctor> factors) {
  if (factors.empty())
    throw ParseError("product of zero functors needs an explicit source");
  auto fs = std::make_shared<std::vector<SetFunctor>>(std::move(factors));
  CatRef src = (*fs)[0].source();
  std::string label = "prod(";
  for (size_t i = 0; i < fs->size(); ++i)
    label += (i ? "," : "") + (*fs)[i].label();
  label += ")";
  return SetFunctor(
      src,
      [fs](const Obj& x) {
        std::vector<Elem> out{""};
        std::vector<std::vector<Elem>> parts;
        for (const auto& f : *fs) parts.push_back(f.set(x));
        std::vector<std::vector<Elem>> tuples{{}};
        for (const auto& p : parts) {
          std::vector<std::vector<Elem>> next;
          for (const auto& t : tuples)
            for (const auto& e : p) {
              auto t2 = t;
              t2.push_back(e);
              next.push_back(std::move(t2));
            }
          tuples = std::move(next);
        }
        out.clear();
        for (const auto& t : tuples) out.push_back(tuple_of(t));
        return out;
      },
      [fs](const Mor& f, const Elem& e) {
        auto parts = untuple(e, fs->size());
        std::vector<Elem> mapped;
        for (size_t i = 0; i < fs->size(); ++i)
          mapped.push_back((*fs)[i].apply(f, parts[i]));
        return tuple_of(mapped);
      },
      std::move(label));
}

std::vector<Elem> SetFunctor::set(const Obj& x) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->sets.find(x);
    if (it != memo_->sets.end()) return it->second;
  }
  auto v = sets_(x);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->sets[x] = v;
  return v;
}

Elem SetFunctor::apply(const Mor& f, const Elem& e) const { return apply_(f, e); }

bool SetFunctor::has_element(const Obj& x, const Elem& e) const {
  auto v = set(x);
  return std::find(v.begin(), v.end(), e) != v.end();
}

std::vector<std::string> SetFunctor::functoriality_violations(
    const std::vector<Obj>& window) const {
  std::vector<std::string> bad;
  for (const auto& x : window) {
    const Mor id = source_->identity(x);
    for (const auto& e : set(x))
      if (apply(id, e) != e) bad.push_back("F(id_" + x + ") moves " + e);
  }
  for (const auto& x : window)
    for (const auto& y : window)
      for (const auto& z : window)
        for (const auto& g : source_->hom(x, y))
          for (const auto& f : source_->hom(y, z)) {
            const Mor fg = source_->compose(f, g);
            for (const auto& e : set(x))
              if (apply(fg, e) != apply(f, apply(g, e)))
                bad.push_back("F(" + f + "∘" + g + ") != F(" + f + ")∘F(" + g +
                              ") at " + e);
          }
  return bad;
}

std::vector<std::string> SetFunctor::lex_violations(
    const std::vector<Obj>& window) const {
  std::vector<std::string> bad;
  const FinCategory& c = *source_;
  if (auto t = c.terminal()) {
    if (set(*t).size() != 1)
      bad.push_back("F(terminal " + *t + ") has " +
                    std::to_string(set(*t).size()) + " elements");
  }
  auto check_product = [&](const Obj& x, const Obj& y) {
    Cone cone;
    try {
      cone = limit(c, Diagram::discrete({x, y}));
    } catch (const Error&) {
      return;  // the product does not exist inside the caps
    }
    std::set<std::pair<Elem, Elem>> seen;
    auto fx = set(x);
    auto fy = set(y);
    for (const auto& e : set(cone.apex)) {
      auto p = std::make_pair(apply(cone.legs[0], e), apply(cone.legs[1], e));
      if (!seen.insert(p).second) {
        bad.push_back("F not injective on product " + x + "×" + y);
        return;
      }
    }
    if (seen.size() != fx.size() * fy.size())
      bad.push_back("F(" + x + "×" + y + ") misses pairs");
  };
  auto check_equalizer = [&](const Mor& f, const Mor& g) {
    Cone cone;
    try {
      cone = limit(c, Diagram::parallel_pair(c, f, g));
    } catch (const Error&) {
      return;
    }
    const Mor m = cone.legs[0];
    std::set<Elem> image;
    for (const auto& e : set(cone.apex)) {
      if (!image.insert(apply(m, e)).second) {
        bad.push_back("F not injective on equalizer of " + f + "," + g);
        return;
      }
    }
    std::set<Elem> expected;
    for (const auto& e : set(c.dom(f)))
      if (apply(f, e) == apply(g, e)) expected.insert(e);
    if (image != expected)
      bad.push_back("F(eq(" + f + "," + g + ")) is not the fixed set");
  };
  for (const auto& x : window)
    for (const auto& y : window) {
      check_product(x, y);
      for (const auto& f : c.hom(x, y))
        for (const auto& g : c.hom(x, y)) check_equalizer(f, g);
    }
  return bad;
}

std::vector<Obj> SetFunctor::support(const std::vector<Obj>& window) const {
  std::vector<Obj> out;
  for (const auto& x : window)
    if (!set(x).empty()) out.push_back(x);
  return out;
}

// --- CatFunctor --------------------------------------------------------------

CatFunctor::CatFunctor(CatRef source, CatRef target,
                       std::function<Obj(const Obj&)> on_objects,
                       std::function<Mor(const Mor&)> on_morphisms,
                       std::string label)
    : source_(std::move(source)),
      target_(std::move(target)),
      on_objects_(std::move(on_objects)),
      on_morphisms_(std::move(on_morphisms)),
      label_(std::move(label)) {}

CatFunctor CatFunctor::table(CatRef source, CatRef target, std::map<Obj, Obj> omap,
                             std::map<Mor, Mor> mmap, std::string label) {
  auto om = std::make_shared<std::map<Obj, Obj>>(std::move(omap));
  auto mm = std::make_shared<std::map<Mor, Mor>>(std::move(mmap));
  return CatFunctor(
      source, target,
      [om](const Obj& x) {
        auto it = om->find(x);
        if (it == om->end()) throw UnknownObject("functor undefined at '" + x + "'");
        return it->second;
      },
      [mm](const Mor& f) {
        auto it = mm->find(f);
        if (it == mm->end()) throw UnknownObject("functor undefined at '" + f + "'");
        return it->second;
      },
      std::move(label));
}

CatFunctor CatFunctor::monotone(CatRef source, CatRef target,
                                std::map<Obj, Obj> omap, std::string label) {
  auto om = std::make_shared<std::map<Obj, Obj>>(std::move(omap));
  CatRef src = source, tgt = target;
  return CatFunctor(
      source, target,
      [om](const Obj& x) {
        auto it = om->find(x);
        if (it == om->end()) throw UnknownObject("functor undefined at '" + x + "'");
        return it->second;
      },
      [om, src, tgt](const Mor& f) {
        const Obj fx = om->at(src->dom(f)), fy = om->at(src->cod(f));
        auto hs = tgt->hom(fx, fy);
        if (hs.empty())
          throw AxiomViolation("map is not monotone at '" + f + "'");
        return hs.front();
      },
      std::move(label));
}

CatFunctor CatFunctor::identity(CatRef c) {
  return CatFunctor(
      c, c, [](const Obj& x) { return x; }, [](const Mor& f) { return f; }, "Id");
}

CatFunctor CatFunctor::compose(const CatFunctor& f, const CatFunctor& g) {
  CatFunctor ff = f, gg = g;
  return CatFunctor(
      g.source(), f.target(),
      [ff, gg](const Obj& x) { return ff.on_obj(gg.on_obj(x)); },
      [ff, gg](const Mor& m) { return ff.on_mor(gg.on_mor(m)); },
      f.label() + "∘" + g.label());
}

std::vector<std::string> CatFunctor::functoriality_violations(
    const std::vector<Obj>& window) const {
  std::vector<std::string> bad;
  for (const auto& x : window) {
    if (on_mor(source_->identity(x)) != target_->identity(on_obj(x)))
      bad.push_back("F(id_" + x + ") is not an identity");
  }
  for (const auto& x : window)
    for (const auto& y : window)
      for (const auto& z : window)
        for (const auto& g : source_->hom(x, y))
          for (const auto& f : source_->hom(y, z)) {
            if (on_mor(source_->compose(f, g)) !=
                target_->compose(on_mor(f), on_mor(g)))
              bad.push_back("F breaks composition on (" + f + ", " + g + ")");
            if (target_->dom(on_mor(g)) != on_obj(x) ||
                target_->cod(on_mor(g)) != on_obj(y))
              bad.push_back("F breaks dom/cod on " + g);
          }
  return bad;
}

std::vector<std::string> CatFunctor::lex_violations(
    const std::vector<Obj>& window) const {
  std::vector<std::string> bad;
  const FinCategory& c = *source_;
  const FinCategory& d = *target_;
  auto check = [&](const Diagram& dg, const std::string& what) {
    Cone cone;
    try {
      cone = limit(c, dg);
    } catch (const Error&) {
      return;
    }
    Diagram image = dg;
    for (auto& n : image.nodes) n = on_obj(n);
    for (auto& e : image.edges) e.mor = on_mor(e.mor);
    Cone icone;
    icone.apex = on_obj(cone.apex);
    for (const auto& l : cone.legs) icone.legs.push_back(on_mor(l));
    if (!is_limiting(d, image, icone)) bad.push_back("F breaks " + what);
  };
  if (auto t = c.terminal()) check(Diagram::discrete({}), "the terminal object");
  for (const auto& x : window)
    for (const auto& y : window) {
      check(Diagram::discrete({x, y}), "product " + x + "×" + y);
      for (const auto& f : c.hom(x, y))
        for (const auto& g : c.hom(x, y))
          if (f < g) check(Diagram::parallel_pair(c, f, g),
                           "equalizer of " + f + "," + g);
    }
  for (const auto& x : window)
    for (const auto& y : window)
      for (const auto& z : window)
        for (const auto& f : c.hom(x, z))
          for (const auto& g : c.hom(y, z))
            check(Diagram::cospan(c, f, g), "pullback of " + f + "," + g);
  return bad;
}

bool CatFunctor::is_faithful(const std::vector<Obj>& window) const {
  for (const auto& x : window)
    for (const auto& y : window) {
      auto fs = source_->hom(x, y);
      std::set<Mor> images;
      for (const auto& f : fs)
        if (!images.insert(on_mor(f)).second) return false;
    }
  return true;
}

// --- SetNatTransform ----------------------------------------------------------

SetNatTransform::SetNatTransform(SetFunctor source, SetFunctor target,
                                 std::function<Elem(const Obj&, const Elem&)> comp,
                                 std::string label)
    : source_(std::move(source)),
      target_(std::move(target)),
      component_(std::move(comp)),
      label_(std::move(label)) {}

SetNatTransform SetNatTransform::table(SetFunctor source, SetFunctor target,
                                       std::map<Obj, std::map<Elem, Elem>> comps,
                                       std::string label) {
  auto c = std::make_shared<std::map<Obj, std::map<Elem, Elem>>>(std::move(comps));
  return SetNatTransform(
      std::move(source), std::move(target),
      [c](const Obj& x, const Elem& e) {
        auto it = c->find(x);
        if (it == c->end())
          throw UnknownObject("transformation has no component at '" + x + "'");
        auto jt = it->second.find(e);
        if (jt == it->second.end())
          throw UnknownObject("component at '" + x + "' undefined on '" + e + "'");
        return jt->second;
      },
      std::move(label));
}

SetNatTransform SetNatTransform::identity(SetFunctor f) {
  SetFunctor g = f;
  return SetNatTransform(
      f, g, [](const Obj&, const Elem& e) { return e; }, "id");
}

std::vector<std::string> SetNatTransform::naturality_violations(
    const std::vector<Obj>& window) const {
  std::vector<std::string> bad;
  for (const auto& x : window) {
    for (const auto& e : source_.set(x))
      if (!target_.has_element(x, component(x, e)))
        bad.push_back("component at " + x + " leaves the target on " + e);
  }
  for (const auto& x : window)
    for (const auto& y : window)
      for (const auto& f : source_.source()->hom(x, y))
        for (const auto& e : source_.set(x))
          if (target_.apply(f, component(x, e)) !=
              component(y, source_.apply(f, e)))
            bad.push_back("naturality fails at (" + f + ", " + e + ")");
  return bad;
}

// --- CatNatTransform ----------------------------------------------------------

CatNatTransform::CatNatTransform(CatFunctor source, CatFunctor target,
                                 std::function<Mor(const Obj&)> component,
                                 std::string label)
    : source_(std::move(source)),
      target_(std::move(target)),
      component_(std::move(component)),
      label_(std::move(label)) {}

CatNatTransform CatNatTransform::table(CatFunctor source, CatFunctor target,
                                       std::map<Obj, Mor> components,
                                       std::string label) {
  auto c = std::make_shared<std::map<Obj, Mor>>(std::move(components));
  return CatNatTransform(
      std::move(source), std::move(target),
      [c](const Obj& x) {
        auto it = c->find(x);
        if (it == c->end())
          throw UnknownObject("transformation has no component at '" + x + "'");
        return it->second;
      },
      std::move(label));
}

std::vector<std::string> CatNatTransform::naturality_violations(
    const std::vector<Obj>& window) const {
  std::vector<std::string> bad;
  const FinCategory& d = *source_.target();
  for (const auto& x : window) {
    const Mor cx = component(x);
    if (d.dom(cx) != source_.on_obj(x) || d.cod(cx) != target_.on_obj(x))
      bad.push_back("component at " + x + " has wrong endpoints");
  }
  for (const auto& x : window)
    for (const auto& y : window)
      for (const auto& f : source_.source()->hom(x, y))
        if (d.compose(target_.on_mor(f), component(x)) !=
            d.compose(component(y), source_.on_mor(f)))
          bad.push_back("naturality square fails at " + f);
  return bad;
}

}  // namespace cohcat
