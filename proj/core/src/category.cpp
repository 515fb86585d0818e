#include "cohcat/category.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cohcat {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Table: return "table";
    case Backend::Poset: return "poset";
    case Backend::SkelFinSet: return "skel-finset";
    case Backend::Slice: return "slice";
    case Backend::Elements: return "elements";
    case Backend::Opposite: return "opposite";
  }
  return "?";
}

void validate_identifier(const std::string& id, const char* what) {
  if (id.empty()) throw ParseError(std::string(what) + ": empty identifier");
  if (id.find("<=") != std::string::npos || id.find(';') != std::string::npos ||
      id.find('\n') != std::string::npos)
    throw ParseError(std::string(what) + " '" + id +
                     "': identifiers may not contain \"<=\", ';' or newlines");
}

bool FinCategory::has_object(const Obj& x) const {
  const auto& os = objects();
  return std::find(os.begin(), os.end(), x) != os.end();
}

size_t FinCategory::object_index(const Obj& x) const {
  const auto& os = objects();
  auto it = std::find(os.begin(), os.end(), x);
  if (it == os.end()) throw UnknownObject("object '" + x + "' not in category");
  return static_cast<size_t>(it - os.begin());
}

bool FinCategory::is_identity(const Mor& f) const {
  return identity(dom(f)) == f;
}

std::vector<Mor> FinCategory::morphisms_between_all() const {
  std::vector<Mor> out;
  for (const auto& x : objects())
    for (const auto& y : objects())
      for (const auto& f : hom(x, y)) out.push_back(f);
  return out;
}

std::optional<Obj> FinCategory::terminal() const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (terminal_memo_) return *terminal_memo_;
  }
  std::optional<Obj> found;
  for (const auto& t : objects()) {
    bool ok = true;
    for (const auto& x : objects())
      if (hom(x, t).size() != 1) { ok = false; break; }
    if (ok) { found = t; break; }
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  terminal_memo_ = found;
  return found;
}

std::optional<Obj> FinCategory::initial() const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (initial_memo_) return *initial_memo_;
  }
  std::optional<Obj> found;
  for (const auto& t : objects()) {
    bool ok = true;
    for (const auto& x : objects())
      if (hom(t, x).size() != 1) { ok = false; break; }
    if (ok) { found = t; break; }
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  initial_memo_ = found;
  return found;
}

bool FinCategory::is_mono(const Mor& f) const {
  if (thin()) return true;
  if (backend() == Backend::SkelFinSet) {
    auto vals = SkelFinSetCategory::values(f);
    std::set<int> seen;
    for (int v : vals)
      if (!seen.insert(v).second) return false;
    return true;
  }
  const Obj d = dom(f);
  for (const auto& w : objects()) {
    auto gs = hom(w, d);
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j)
        if (compose(f, gs[i]) == compose(f, gs[j])) return false;
  }
  return true;
}

bool FinCategory::is_epi(const Mor& f) const {
  if (thin()) {
    // In a preorder every morphism is both monic and epic.
    return true;
  }
  if (backend() == Backend::SkelFinSet) {
    int n, m;
    std::vector<int> vals;
    SkelFinSetCategory::parse(f, n, m, vals);
    std::set<int> image(vals.begin(), vals.end());
    return static_cast<int>(image.size()) == m;
  }
  const Obj c = cod(f);
  for (const auto& w : objects()) {
    auto gs = hom(c, w);
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j)
        if (compose(gs[i], f) == compose(gs[j], f)) return false;
  }
  return true;
}

std::optional<Mor> FinCategory::inverse(const Mor& f) const {
  const Obj d = dom(f), c = cod(f);
  for (const auto& g : hom(c, d))
    if (compose(g, f) == identity(d) && compose(f, g) == identity(c)) return g;
  return std::nullopt;
}

// --- TableCategory ----------------------------------------------------------

TableCategory::TableCategory(TableData data, bool validate)
    : data_(std::move(data)) {
  for (const auto& o : data_.objects) validate_identifier(o, "object");
  for (const auto& m : data_.morphisms) validate_identifier(m, "morphism");
  if (validate) {
    auto bad = axiom_violations();
    if (!bad.empty()) throw AxiomViolation(bad.front());
  }
}

std::vector<Mor> TableCategory::hom(const Obj& x, const Obj& y) const {
  std::vector<Mor> out;
  for (const auto& m : data_.morphisms) {
    auto it = data_.arrows.find(m);
    if (it->second.first == x && it->second.second == y) out.push_back(m);
  }
  return out;
}

Obj TableCategory::dom(const Mor& f) const {
  auto it = data_.arrows.find(f);
  if (it == data_.arrows.end()) throw UnknownObject("morphism '" + f + "'");
  return it->second.first;
}

Obj TableCategory::cod(const Mor& f) const {
  auto it = data_.arrows.find(f);
  if (it == data_.arrows.end()) throw UnknownObject("morphism '" + f + "'");
  return it->second.second;
}

Mor TableCategory::identity(const Obj& x) const {
  auto it = data_.identities.find(x);
  if (it == data_.identities.end())
    throw UnknownObject("no identity for object '" + x + "'");
  return it->second;
}

Mor TableCategory::compose(const Mor& f, const Mor& g) const {
  auto it = data_.compose.find({f, g});
  if (it == data_.compose.end())
    throw AxiomViolation("compose(" + f + ", " + g + ") undefined");
  return it->second;
}

bool TableCategory::thin() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (!thin_memo_) {
    bool t = true;
    for (const auto& x : data_.objects) {
      for (const auto& y : data_.objects) {
        size_t n = 0;
        for (const auto& m : data_.morphisms) {
          const auto& a = data_.arrows.at(m);
          if (a.first == x && a.second == y) ++n;
        }
        if (n > 1) { t = false; break; }
      }
      if (!t) break;
    }
    thin_memo_ = t;
  }
  return *thin_memo_;
}

std::vector<std::string> TableCategory::axiom_violations() const {
  std::vector<std::string> bad;
  auto known_obj = [&](const Obj& o) {
    return std::find(data_.objects.begin(), data_.objects.end(), o) !=
           data_.objects.end();
  };
  for (const auto& [m, dc] : data_.arrows) {
    if (!known_obj(dc.first))
      bad.push_back("morphism " + m + " has unknown dom " + dc.first);
    if (!known_obj(dc.second))
      bad.push_back("morphism " + m + " has unknown cod " + dc.second);
  }
  for (const auto& x : data_.objects) {
    auto it = data_.identities.find(x);
    if (it == data_.identities.end()) {
      bad.push_back("object " + x + " has no identity");
      continue;
    }
    const auto& a = data_.arrows.at(it->second);
    if (a.first != x || a.second != x)
      bad.push_back("identity of " + x + " is not an endomorphism");
  }
  // Totality and dom/cod coherence of the table.
  for (const auto& f : data_.morphisms) {
    for (const auto& g : data_.morphisms) {
      const auto& af = data_.arrows.at(f);
      const auto& ag = data_.arrows.at(g);
      if (af.first != ag.second) continue;
      auto it = data_.compose.find({f, g});
      if (it == data_.compose.end()) {
        bad.push_back("compose(" + f + ", " + g + ") undefined for composable pair");
        continue;
      }
      const auto& ac = data_.arrows.at(it->second);
      if (ac.first != ag.first || ac.second != af.second)
        bad.push_back("compose(" + f + ", " + g + ") has wrong dom/cod");
    }
  }
  if (!bad.empty()) return bad;
  // Identity laws.
  for (const auto& f : data_.morphisms) {
    const auto& a = data_.arrows.at(f);
    if (data_.compose.at({f, data_.identities.at(a.first)}) != f)
      bad.push_back("f∘id != f for " + f);
    if (data_.compose.at({data_.identities.at(a.second), f}) != f)
      bad.push_back("id∘f != f for " + f);
  }
  // Associativity on all composable triples.
  for (const auto& f : data_.morphisms)
    for (const auto& g : data_.morphisms) {
      if (data_.arrows.at(f).first != data_.arrows.at(g).second) continue;
      for (const auto& h : data_.morphisms) {
        if (data_.arrows.at(g).first != data_.arrows.at(h).second) continue;
        const Mor lhs = data_.compose.at({data_.compose.at({f, g}), h});
        const Mor rhs = data_.compose.at({f, data_.compose.at({g, h})});
        if (lhs != rhs)
          bad.push_back("associativity fails on (" + f + ", " + g + ", " + h + ")");
      }
    }
  return bad;
}

// --- PosetCategory ----------------------------------------------------------

PosetCategory::PosetCategory(std::vector<Obj> elements,
                             std::vector<std::pair<Obj, Obj>> le)
    : elements_(std::move(elements)) {
  for (size_t i = 0; i < elements_.size(); ++i) {
    validate_identifier(elements_[i], "poset element");
    if (index_.count(elements_[i]))
      throw ParseError("duplicate poset element '" + elements_[i] + "'");
    index_[elements_[i]] = i;
  }
  const size_t n = elements_.size();
  le_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) le_[i][i] = true;
  for (const auto& [x, y] : le) {
    auto ix = index_.find(x), iy = index_.find(y);
    if (ix == index_.end() || iy == index_.end())
      throw ParseError("le pair mentions unknown element");
    le_[ix->second][iy->second] = true;
  }
  // Reflexive-transitive closure (Warshall).
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (le_[i][k])
        for (size_t j = 0; j < n; ++j)
          if (le_[k][j]) le_[i][j] = true;
}

bool PosetCategory::le(const Obj& x, const Obj& y) const {
  auto ix = index_.find(x), iy = index_.find(y);
  if (ix == index_.end() || iy == index_.end())
    throw UnknownObject("'" + x + "' or '" + y + "' not in poset");
  return le_[ix->second][iy->second];
}

Mor PosetCategory::le_mor(const Obj& x, const Obj& y) { return x + "<=" + y; }

void PosetCategory::parse(const Mor& f, Obj& x, Obj& y) const {
  auto pos = f.find("<=");
  if (pos == std::string::npos)
    throw UnknownObject("'" + f + "' is not a poset morphism");
  x = f.substr(0, pos);
  y = f.substr(pos + 2);
  if (!index_.count(x) || !index_.count(y) || !le(x, y))
    throw UnknownObject("'" + f + "' is not a morphism of this poset");
}

std::vector<Mor> PosetCategory::hom(const Obj& x, const Obj& y) const {
  if (le(x, y)) return {le_mor(x, y)};
  return {};
}

Obj PosetCategory::dom(const Mor& f) const {
  Obj x, y;
  parse(f, x, y);
  return x;
}

Obj PosetCategory::cod(const Mor& f) const {
  Obj x, y;
  parse(f, x, y);
  return y;
}

Mor PosetCategory::identity(const Obj& x) const {
  if (!index_.count(x)) throw UnknownObject("'" + x + "' not in poset");
  return le_mor(x, x);
}

Mor PosetCategory::compose(const Mor& f, const Mor& g) const {
  Obj fx, fy, gx, gy;
  parse(f, fx, fy);
  parse(g, gx, gy);
  if (gy != fx) throw AxiomViolation("poset compose mismatch " + f + " ∘ " + g);
  return le_mor(gx, fy);
}

std::optional<Obj> PosetCategory::meet(const Obj& x, const Obj& y) const {
  std::optional<Obj> best;
  for (const auto& z : elements_) {
    if (!le(z, x) || !le(z, y)) continue;
    if (!best || le(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  for (const auto& z : elements_)
    if (le(z, x) && le(z, y) && !le(z, *best)) return std::nullopt;
  return best;
}

std::optional<Obj> PosetCategory::join(const Obj& x, const Obj& y) const {
  std::optional<Obj> best;
  for (const auto& z : elements_) {
    if (!le(x, z) || !le(y, z)) continue;
    if (!best || le(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (const auto& z : elements_)
    if (le(x, z) && le(y, z) && !le(*best, z)) return std::nullopt;
  return best;
}

// --- SkelFinSetCategory -----------------------------------------------------

SkelFinSetCategory::SkelFinSetCategory(int cap) : cap_(cap) {
  if (cap <= 0) throw CapExceeded("SkelFinSet cap must be positive");
  for (int n = 0; n <= cap; ++n) objects_.push_back(std::to_string(n));
}

int SkelFinSetCategory::card(const Obj& x) {
  try {
    size_t pos = 0;
    int n = std::stoi(x, &pos);
    if (pos != x.size() || n < 0) throw std::invalid_argument(x);
    return n;
  } catch (const std::exception&) {
    throw UnknownObject("'" + x + "' is not a cardinal");
  }
}

Obj SkelFinSetCategory::obj_of(int n) const {
  if (n < 0 || n > cap_)
    throw SizeOverflow("cardinal " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap_));
  return std::to_string(n);
}

Mor SkelFinSetCategory::mor_of(int n, int m, const std::vector<int>& values) {
  std::ostringstream os;
  os << 'f' << n << '_' << m << '_';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << '-';
    os << values[i];
  }
  return os.str();
}

void SkelFinSetCategory::parse(const Mor& f, int& n, int& m,
                               std::vector<int>& values) {
  values.clear();
  if (f.empty() || f[0] != 'f') throw UnknownObject("'" + f + "' is not a map");
  auto p1 = f.find('_');
  auto p2 = f.find('_', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw UnknownObject("'" + f + "' is not a map");
  n = std::stoi(f.substr(1, p1 - 1));
  m = std::stoi(f.substr(p1 + 1, p2 - p1 - 1));
  std::string rest = f.substr(p2 + 1);
  if (!rest.empty()) {
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, '-')) values.push_back(std::stoi(tok));
  }
  if (static_cast<int>(values.size()) != n)
    throw UnknownObject("'" + f + "': wrong arity");
  for (int v : values)
    if (v < 0 || v >= m) throw UnknownObject("'" + f + "': value out of range");
}

std::vector<int> SkelFinSetCategory::values(const Mor& f) {
  int n, m;
  std::vector<int> v;
  parse(f, n, m, v);
  return v;
}

std::vector<Mor> SkelFinSetCategory::hom(const Obj& x, const Obj& y) const {
  const int n = card(x), m = card(y);
  if (n > cap_ || m > cap_)
    throw SizeOverflow("hom(" + x + ", " + y + ") outside cap");
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = hom_memo_.find(x + "|" + y);
    if (it != hom_memo_.end()) return it->second;
  }
  std::vector<Mor> out;
  if (m == 0 && n > 0) {
    // no maps into the empty set from a nonempty one
  } else {
    double count = 1;
    for (int i = 0; i < n; ++i) count *= m;
    if (count > 2e7)
      throw SizeOverflow("hom(" + x + ", " + y + ") too large to enumerate");
    std::vector<int> v(static_cast<size_t>(n), 0);
    while (true) {
      out.push_back(mor_of(n, m, v));
      int i = n - 1;
      while (i >= 0 && v[static_cast<size_t>(i)] == m - 1) {
        v[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++v[static_cast<size_t>(i)];
    }
    if (n == 0 && m == 0) out = {mor_of(0, 0, {})};
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  hom_memo_[x + "|" + y] = out;
  return out;
}

Obj SkelFinSetCategory::dom(const Mor& f) const {
  int n, m;
  std::vector<int> v;
  parse(f, n, m, v);
  return std::to_string(n);
}

Obj SkelFinSetCategory::cod(const Mor& f) const {
  int n, m;
  std::vector<int> v;
  parse(f, n, m, v);
  return std::to_string(m);
}

Mor SkelFinSetCategory::identity(const Obj& x) const {
  const int n = card(x);
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return mor_of(n, n, v);
}

Mor SkelFinSetCategory::compose(const Mor& f, const Mor& g) const {
  int fn, fm, gn, gm;
  std::vector<int> fv, gv;
  parse(f, fn, fm, fv);
  parse(g, gn, gm, gv);
  if (gm != fn) throw AxiomViolation("compose mismatch " + f + " ∘ " + g);
  std::vector<int> v(gv.size());
  for (size_t i = 0; i < gv.size(); ++i)
    v[i] = fv[static_cast<size_t>(gv[i])];
  return mor_of(gn, fm, v);
}

CatRef opposite(CatRef c) { return std::make_shared<OppositeCategory>(std::move(c)); }

// --- axioms ------------------------------------------------------------------

std::vector<std::string> check_category_axioms(const FinCategory& c, int samples,
                                               unsigned long long seed) {
  if (auto* t = dynamic_cast<const TableCategory*>(&c))
    return t->axiom_violations();
  std::vector<std::string> bad;
  if (c.backend() == Backend::Poset) {
    // Closure is enforced structurally at construction; check identity and
    // composition bookkeeping on all pairs.
    for (const auto& x : c.objects())
      for (const auto& y : c.objects()) {
        auto fs = c.hom(x, y);
        if (fs.size() > 1) bad.push_back("poset hom(" + x + "," + y + ") not thin");
        for (const auto& f : fs) {
          if (c.compose(f, c.identity(x)) != f) bad.push_back("f∘id != f for " + f);
          if (c.compose(c.identity(y), f) != f) bad.push_back("id∘f != f for " + f);
        }
      }
    return bad;
  }
  // Lazy backends: identity laws on a sweep plus a seeded random
  // associativity probe.
  std::mt19937_64 rng(seed);
  const auto& objs = c.objects();
  auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
  for (int s = 0; s < samples; ++s) {
    const Obj& x = objs[pick(objs.size())];
    const Obj& y = objs[pick(objs.size())];
    const Obj& z = objs[pick(objs.size())];
    const Obj& w = objs[pick(objs.size())];
    auto hs = c.hom(x, y);
    auto gs = c.hom(y, z);
    auto fs = c.hom(z, w);
    if (hs.empty() || gs.empty() || fs.empty()) continue;
    const Mor& h = hs[pick(hs.size())];
    const Mor& g = gs[pick(gs.size())];
    const Mor& f = fs[pick(fs.size())];
    if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
      bad.push_back("associativity fails on (" + f + ", " + g + ", " + h + ")");
    if (c.compose(h, c.identity(x)) != h) bad.push_back("f∘id != f for " + h);
    if (c.compose(c.identity(y), h) != h) bad.push_back("id∘f != f for " + h);
  }
  return bad;
}

}  // namespace cohcat
