#include "cohcat/elements.hpp"

#include <algorithm>

namespace cohcat {

// --- SliceCategory -----------------------------------------------------------

SliceCategory::SliceCategory(CatRef base, Obj over, std::vector<Obj> window)
    : base_(std::move(base)), over_(std::move(over)) {
  if (!base_->has_object(over_))
    throw UnknownObject("slice over unknown object '" + over_ + "'");
  for (const auto& u : window)
    for (const auto& h : base_->hom(u, over_)) objects_.push_back(h);
}

static std::vector<std::string> split3(const std::string& s, const char* tag) {
  // "tag;a;b;c" where a, b, c contain no ';'.
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ';') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 4 || parts[0] != tag)
    throw UnknownObject("'" + s + "' is not a " + std::string(tag) + " id");
  return {parts[1], parts[2], parts[3]};
}

Mor SliceCategory::make_triangle(const Obj& h, const Obj& k, const Mor& f) const {
  return "tri;" + f + ";" + h + ";" + k;
}

Mor SliceCategory::triangle_map(const Mor& t) { return split3(t, "tri")[0]; }

void SliceCategory::parse(const Mor& t, Mor& f, Obj& h, Obj& k) const {
  auto parts = split3(t, "tri");
  f = parts[0];
  h = parts[1];
  k = parts[2];
}

std::vector<Mor> SliceCategory::hom(const Obj& h, const Obj& k) const {
  std::vector<Mor> out;
  for (const auto& f : base_->hom(base_->dom(h), base_->dom(k)))
    if (base_->compose(k, f) == h) out.push_back(make_triangle(h, k, f));
  return out;
}

Obj SliceCategory::dom(const Mor& t) const {
  Mor f;
  Obj h, k;
  parse(t, f, h, k);
  return h;
}

Obj SliceCategory::cod(const Mor& t) const {
  Mor f;
  Obj h, k;
  parse(t, f, h, k);
  return k;
}

Mor SliceCategory::identity(const Obj& h) const {
  return make_triangle(h, h, base_->identity(base_->dom(h)));
}

Mor SliceCategory::compose(const Mor& t1, const Mor& t2) const {
  Mor f1, f2;
  Obj h1, k1, h2, k2;
  parse(t1, f1, h1, k1);
  parse(t2, f2, h2, k2);
  if (k2 != h1) throw AxiomViolation("slice compose mismatch");
  return make_triangle(h2, k1, base_->compose(f1, f2));
}

// --- ElementsCategory --------------------------------------------------------

Obj ElementsCategory::object_id(const Obj& x, const Elem& a) {
  return "el;" + x + ";" + a;
}

void ElementsCategory::parse_object(const Obj& p, Obj& x, Elem& a) {
  size_t s1 = p.find(';');
  size_t s2 = (s1 == std::string::npos) ? s1 : p.find(';', s1 + 1);
  if (p.substr(0, 2) != "el" || s1 == std::string::npos || s2 == std::string::npos)
    throw UnknownObject("'" + p + "' is not an element-pair id");
  x = p.substr(s1 + 1, s2 - s1 - 1);
  a = p.substr(s2 + 1);
}

Mor ElementsCategory::mor_id(const Mor& f, const Elem& a) {
  return "elm;" + f + ";" + a;
}

void ElementsCategory::parse_mor(const Mor& m, Mor& f, Elem& a) const {
  size_t s1 = m.find(';');
  size_t s2 = (s1 == std::string::npos) ? s1 : m.find(';', s1 + 1);
  if (m.substr(0, 3) != "elm" || s1 == std::string::npos || s2 == std::string::npos)
    throw UnknownObject("'" + m + "' is not an element-map id");
  f = m.substr(s1 + 1, s2 - s1 - 1);
  a = m.substr(s2 + 1);
}

ElementsCategory::ElementsCategory(SetFunctor f, std::vector<Obj> window,
                                   size_t max_objects)
    : functor_(std::move(f)) {
  for (const auto& x : window) {
    for (const auto& a : functor_.set(x)) {
      objects_.push_back(object_id(x, a));
      if (objects_.size() > max_objects)
        throw SizeOverflow("category of elements exceeds the configured bound");
    }
  }
}

std::vector<Mor> ElementsCategory::hom(const Obj& p, const Obj& q) const {
  Obj x, y;
  Elem a, b;
  parse_object(p, x, a);
  parse_object(q, y, b);
  std::vector<Mor> out;
  for (const auto& f : functor_.source()->hom(x, y))
    if (functor_.apply(f, a) == b) out.push_back(mor_id(f, a));
  return out;
}

Obj ElementsCategory::dom(const Mor& m) const {
  Mor f;
  Elem a;
  parse_mor(m, f, a);
  return object_id(functor_.source()->dom(f), a);
}

Obj ElementsCategory::cod(const Mor& m) const {
  Mor f;
  Elem a;
  parse_mor(m, f, a);
  return object_id(functor_.source()->cod(f), functor_.apply(f, a));
}

Mor ElementsCategory::identity(const Obj& p) const {
  Obj x;
  Elem a;
  parse_object(p, x, a);
  return mor_id(functor_.source()->identity(x), a);
}

Mor ElementsCategory::compose(const Mor& m1, const Mor& m2) const {
  Mor f1, f2;
  Elem a1, a2;
  parse_mor(m1, f1, a1);
  parse_mor(m2, f2, a2);
  if (functor_.apply(f2, a2) != a1)
    throw AxiomViolation("element-map compose mismatch");
  return mor_id(functor_.source()->compose(f1, f2), a2);
}

// --- wrappers ----------------------------------------------------------------

SlicedCategory slice(CatRef c, const Obj& x) {
  return slice(std::move(c), x, CatRef(c)->objects());
}

SlicedCategory slice(CatRef c, const Obj& x, std::vector<Obj> window) {
  auto s = std::make_shared<const SliceCategory>(c, x, std::move(window));
  CatRef base = c;
  CatFunctor forget(
      s, c, [base](const Obj& h) { return base->dom(h); },
      [](const Mor& t) { return SliceCategory::triangle_map(t); }, "dom");
  return SlicedCategory{s, std::move(forget)};
}

ElementsResult category_of_elements(const SetFunctor& f) {
  return category_of_elements(f, f.source()->objects());
}

ElementsResult category_of_elements(const SetFunctor& f, std::vector<Obj> window,
                                    size_t max_objects) {
  auto e =
      std::make_shared<const ElementsCategory>(f, std::move(window), max_objects);
  CatFunctor proj(
      e, f.source(),
      [](const Obj& p) {
        Obj x;
        Elem a;
        ElementsCategory::parse_object(p, x, a);
        return x;
      },
      [](const Mor& m) {
        size_t s1 = m.find(';');
        size_t s2 = m.find(';', s1 + 1);
        return m.substr(s1 + 1, s2 - s1 - 1);
      },
      "proj");
  return ElementsResult{e, opposite(e), std::move(proj)};
}

}  // namespace cohcat
