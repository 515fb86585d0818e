#include "cohcat/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cohcat/elements.hpp"

namespace cohcat {

Diagram Diagram::discrete(std::vector<Obj> objects) {
  Diagram d;
  d.nodes = std::move(objects);
  return d;
}

Diagram Diagram::parallel_pair(const FinCategory& c, const Mor& f, const Mor& g) {
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
    throw AxiomViolation("parallel pair must share endpoints");
  Diagram d;
  d.nodes = {c.dom(f), c.cod(f)};
  d.edges = {{0, 1, f}, {0, 1, g}};
  return d;
}

Diagram Diagram::cospan(const FinCategory& c, const Mor& f, const Mor& g) {
  if (c.cod(f) != c.cod(g)) throw AxiomViolation("cospan must share codomain");
  Diagram d;
  d.nodes = {c.dom(f), c.dom(g), c.cod(f)};
  d.edges = {{0, 2, f}, {1, 2, g}};
  return d;
}

Diagram Diagram::span(const FinCategory& c, const Mor& f, const Mor& g) {
  if (c.dom(f) != c.dom(g)) throw AxiomViolation("span must share domain");
  Diagram d;
  d.nodes = {c.cod(f), c.cod(g), c.dom(f)};
  d.edges = {{2, 0, f}, {2, 1, g}};
  return d;
}

bool is_cone(const FinCategory& c, const Diagram& d, const Cone& cone) {
  if (cone.legs.size() != d.nodes.size()) return false;
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    if (c.dom(cone.legs[i]) != cone.apex || c.cod(cone.legs[i]) != d.nodes[i])
      return false;
  }
  for (const auto& e : d.edges)
    if (c.compose(e.mor, cone.legs[e.src]) != cone.legs[e.dst]) return false;
  return true;
}

std::vector<Mor> mediators(const FinCategory& c, const Cone& from, const Cone& to) {
  std::vector<Mor> out;
  for (const auto& m : c.hom(from.apex, to.apex)) {
    bool ok = true;
    for (size_t i = 0; i < from.legs.size(); ++i)
      if (c.compose(to.legs[i], m) != from.legs[i]) { ok = false; break; }
    if (ok) out.push_back(m);
  }
  return out;
}

Mor mediate(const FinCategory& c, const Cone& from, const Cone& to) {
  auto ms = mediators(c, from, to);
  if (ms.size() != 1)
    throw NoLimit("expected a unique mediating morphism, found " +
                  std::to_string(ms.size()));
  return ms.front();
}

std::vector<Cone> enumerate_cones(const FinCategory& c, const Diagram& d,
                                  size_t max_cones) {
  std::vector<Cone> cones;
  for (const auto& apex : c.objects()) {
    std::vector<std::vector<Mor>> cand(d.nodes.size());
    bool dead = false;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
      cand[i] = c.hom(apex, d.nodes[i]);
      if (cand[i].empty()) { dead = true; break; }
    }
    if (dead && !d.nodes.empty()) continue;
    // DFS over leg assignments, pruning on edges with both ends assigned.
    std::vector<Mor> legs(d.nodes.size());
    std::function<void(size_t)> rec = [&](size_t i) {
      if (cones.size() > max_cones)
        throw SizeOverflow("cone enumeration exceeded bound");
      if (i == d.nodes.size()) {
        cones.push_back(Cone{apex, legs});
        return;
      }
      for (const auto& l : cand[i]) {
        legs[i] = l;
        bool ok = true;
        for (const auto& e : d.edges) {
          if (std::max(e.src, e.dst) != i && (e.src > i || e.dst > i)) continue;
          if (e.src <= i && e.dst <= i)
            if (c.compose(e.mor, legs[e.src]) != legs[e.dst]) { ok = false; break; }
        }
        if (ok) rec(i + 1);
      }
    };
    rec(0);
  }
  return cones;
}

bool is_limiting(const FinCategory& c, const Diagram& d, const Cone& cone) {
  if (!is_cone(c, d, cone)) return false;
  if (c.thin()) {
    // Universality in a preorder: every lower bound maps into the apex.
    for (const auto& z : c.objects()) {
      bool lower = true;
      for (const auto& n : d.nodes)
        if (c.hom(z, n).empty()) { lower = false; break; }
      if (lower && c.hom(z, cone.apex).empty()) return false;
    }
    return true;
  }
  for (const auto& k : enumerate_cones(c, d))
    if (mediators(c, k, cone).size() != 1) return false;
  return true;
}

// Thin path: the apex is a greatest lower bound of the node objects.
static std::optional<Cone> limit_thin(const FinCategory& c, const Diagram& d) {
  std::vector<Obj> lower;
  for (const auto& z : c.objects()) {
    bool ok = true;
    for (const auto& n : d.nodes)
      if (c.hom(z, n).empty()) { ok = false; break; }
    if (ok) lower.push_back(z);
  }
  for (const auto& g : lower) {
    bool greatest = true;
    for (const auto& z : lower)
      if (c.hom(z, g).empty()) { greatest = false; break; }
    if (greatest) {
      Cone cone;
      cone.apex = g;
      for (const auto& n : d.nodes) cone.legs.push_back(c.hom(g, n).front());
      return cone;
    }
  }
  return std::nullopt;
}

// SkelFinSet: the limit set is the set of edge-compatible tuples; legs read
// off the lexicographically sorted tuple list.
static Cone limit_skel(const SkelFinSetCategory& c, const Diagram& d) {
  const size_t n = d.nodes.size();
  std::vector<int> card(n);
  for (size_t i = 0; i < n; ++i) card[i] = SkelFinSetCategory::card(d.nodes[i]);
  std::vector<std::vector<int>> edge_vals;
  for (const auto& e : d.edges) edge_vals.push_back(SkelFinSetCategory::values(e.mor));

  std::vector<std::vector<int>> tuples;
  std::vector<int> t(n, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (tuples.size() > 4000000u) throw SizeOverflow("limit tuple search too large");
    if (i == n) {
      tuples.push_back(t);
      return;
    }
    for (int v = 0; v < card[i]; ++v) {
      t[i] = v;
      bool ok = true;
      for (size_t k = 0; k < d.edges.size(); ++k) {
        const auto& e = d.edges[k];
        if (e.src <= i && e.dst <= i && std::max(e.src, e.dst) == i) {
          if (edge_vals[k][static_cast<size_t>(t[e.src])] != t[e.dst]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);

  const int apex = static_cast<int>(tuples.size());
  if (apex > c.cap())
    throw SizeOverflow("limit apex " + std::to_string(apex) + " exceeds cap " +
                       std::to_string(c.cap()));
  Cone cone;
  cone.apex = std::to_string(apex);
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> vals(tuples.size());
    for (size_t k = 0; k < tuples.size(); ++k) vals[k] = tuples[k][i];
    cone.legs.push_back(SkelFinSetCategory::mor_of(apex, card[i], vals));
  }
  return cone;
}

// Limits in a slice reduce to limits in the base over the augmented
// diagram that adds the slice object and the structure maps.
static Cone limit_slice(const SliceCategory& s, const Diagram& d) {
  const FinCategory& base = *s.base();
  Diagram aug;
  aug.nodes.reserve(d.nodes.size() + 1);
  for (const auto& n : d.nodes) aug.nodes.push_back(base.dom(n));
  aug.nodes.push_back(s.over());
  const size_t xnode = d.nodes.size();
  for (const auto& e : d.edges)
    aug.edges.push_back({e.src, e.dst, SliceCategory::triangle_map(e.mor)});
  for (size_t i = 0; i < d.nodes.size(); ++i)
    aug.edges.push_back({i, xnode, d.nodes[i]});
  Cone basecone = limit(base, aug);
  Cone out;
  out.apex = basecone.legs[xnode];  // a map into the slice object
  for (size_t i = 0; i < d.nodes.size(); ++i)
    out.legs.push_back(
        s.make_triangle(out.apex, d.nodes[i], basecone.legs[i]));
  return out;
}

Cone limit(const FinCategory& c, const Diagram& d) {
  for (const auto& e : d.edges) {
    if (c.dom(e.mor) != d.nodes[e.src] || c.cod(e.mor) != d.nodes[e.dst])
      throw AxiomViolation("diagram edge endpoints do not match its nodes");
  }
  if (auto* s = dynamic_cast<const SliceCategory*>(&c)) return limit_slice(*s, d);
  if (c.thin()) {
    auto cone = limit_thin(c, d);
    if (!cone) throw NoLimit("no greatest lower bound for the diagram");
    return *cone;
  }
  if (auto* sk = dynamic_cast<const SkelFinSetCategory*>(&c))
    return limit_skel(*sk, d);

  auto cones = enumerate_cones(c, d);
  for (const auto& apex : c.objects()) {
    for (const auto& cand : cones) {
      if (cand.apex != apex) continue;
      bool universal = true;
      for (const auto& k : cones)
        if (mediators(c, k, cand).size() != 1) { universal = false; break; }
      if (universal) return cand;
    }
  }
  throw NoLimit("no universal cone exists");
}

// SkelFinSet colimit: quotient of the disjoint sum by the relation the
// edges generate; class numbering by least member.
static Cone colimit_skel(const SkelFinSetCategory& c, const Diagram& d) {
  const size_t n = d.nodes.size();
  std::vector<int> card(n), offset(n, 0);
  int total = 0;
  for (size_t i = 0; i < n; ++i) {
    card[i] = SkelFinSetCategory::card(d.nodes[i]);
    offset[i] = total;
    total += card[i];
  }
  std::vector<int> parent(static_cast<size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const auto& e : d.edges) {
    auto vals = SkelFinSetCategory::values(e.mor);
    for (int v = 0; v < card[e.src]; ++v)
      unite(offset[e.src] + v, offset[e.dst] + vals[static_cast<size_t>(v)]);
  }
  std::map<int, int> cls;
  for (int a = 0; a < total; ++a) {
    int r = find(a);
    if (!cls.count(r)) {
      int next = static_cast<int>(cls.size());
      cls[r] = next;
    }
  }
  const int apex = static_cast<int>(cls.size());
  if (apex > c.cap())
    throw SizeOverflow("colimit apex " + std::to_string(apex) + " exceeds cap " +
                       std::to_string(c.cap()));
  Cone cone;
  cone.apex = std::to_string(apex);
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> vals(static_cast<size_t>(card[i]));
    for (int v = 0; v < card[i]; ++v)
      vals[static_cast<size_t>(v)] = cls[find(offset[i] + v)];
    cone.legs.push_back(SkelFinSetCategory::mor_of(card[i], apex, vals));
  }
  return cone;
}

static std::optional<Cone> colimit_thin(const FinCategory& c, const Diagram& d) {
  std::vector<Obj> upper;
  for (const auto& z : c.objects()) {
    bool ok = true;
    for (const auto& n : d.nodes)
      if (c.hom(n, z).empty()) { ok = false; break; }
    if (ok) upper.push_back(z);
  }
  for (const auto& g : upper) {
    bool least = true;
    for (const auto& z : upper)
      if (c.hom(g, z).empty()) { least = false; break; }
    if (least) {
      Cone cone;
      cone.apex = g;
      for (const auto& n : d.nodes) cone.legs.push_back(c.hom(n, g).front());
      return cone;
    }
  }
  return std::nullopt;
}

Cone colimit(const FinCategory& c, const Diagram& d) {
  if (c.thin()) {
    auto cone = colimit_thin(c, d);
    if (!cone) throw NoLimit("no least upper bound for the diagram");
    return *cone;
  }
  if (auto* sk = dynamic_cast<const SkelFinSetCategory*>(&c))
    return colimit_skel(*sk, d);
  auto op = opposite(c.shared_from_this());
  Diagram flipped = d;
  for (auto& e : flipped.edges) std::swap(e.src, e.dst);
  return limit(*op, flipped);
}

Cone product_cone(const FinCategory& c, const Obj& x, const Obj& y) {
  // The convention 1 × x = x is taken literally: the chosen product with a
  // terminal factor is the other factor with an identity projection.
  if (auto t = c.terminal()) {
    if (x == *t) {
      Cone cone;
      cone.apex = y;
      cone.legs = {c.hom(y, *t).front(), c.identity(y)};
      return cone;
    }
    if (y == *t) {
      Cone cone;
      cone.apex = x;
      cone.legs = {c.identity(x), c.hom(x, *t).front()};
      return cone;
    }
  }
  return limit(c, Diagram::discrete({x, y}));
}

Cone pullback_cone(const FinCategory& c, const Mor& f, const Mor& g) {
  return limit(c, Diagram::cospan(c, f, g));
}

Cone equalizer_cone(const FinCategory& c, const Mor& f, const Mor& g) {
  return limit(c, Diagram::parallel_pair(c, f, g));
}

std::optional<Obj> terminal_object(const FinCategory& c) { return c.terminal(); }

bool is_effective_epi(const FinCategory& c, const Mor& f) {
  if (c.thin()) return c.is_iso(f);
  if (c.backend() == Backend::SkelFinSet) return c.is_epi(f);
  Cone kp = pullback_cone(c, f, f);
  Cone coeq = colimit(c, Diagram::parallel_pair(c, kp.legs[0], kp.legs[1]));
  const Mor q = coeq.legs[1];
  // Canonical comparison out of the coequalizer.
  Cone target;
  target.apex = c.cod(f);
  target.legs = {c.compose(f, kp.legs[0]), f};
  for (const auto& h : c.hom(coeq.apex, c.cod(f)))
    if (c.compose(h, q) == f) return c.is_iso(h);
  return false;
}

Factorization factorize(const FinCategory& c, const Mor& f) {
  if (c.thin())
    return Factorization{c.identity(c.dom(f)), f, c.dom(f)};
  if (c.backend() == Backend::SkelFinSet) {
    int n, m;
    std::vector<int> vals;
    SkelFinSetCategory::parse(f, n, m, vals);
    std::vector<int> image(vals.begin(), vals.end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::map<int, int> idx;
    for (size_t i = 0; i < image.size(); ++i) idx[image[i]] = static_cast<int>(i);
    std::vector<int> evals(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) evals[i] = idx[vals[i]];
    const int k = static_cast<int>(image.size());
    return Factorization{SkelFinSetCategory::mor_of(n, k, evals),
                         SkelFinSetCategory::mor_of(k, m, image),
                         std::to_string(k)};
  }
  Cone kp;
  Cone coeq;
  try {
    kp = pullback_cone(c, f, f);
    coeq = colimit(c, Diagram::parallel_pair(c, kp.legs[0], kp.legs[1]));
  } catch (const NoLimit&) {
    throw NoFactorization("kernel pair or coequalizer missing for " + f);
  }
  const Mor q = coeq.legs[1];
  for (const auto& m : c.hom(coeq.apex, c.cod(f)))
    if (c.compose(m, q) == f) {
      if (!c.is_mono(m))
        throw NoFactorization("comparison out of the coequalizer is not monic");
      return Factorization{q, m, coeq.apex};
    }
  throw NoFactorization("no comparison map out of the coequalizer of " + f);
}

bool is_pullback_square(const FinCategory& c, const Mor& f, const Mor& g,
                        const Obj& apex, const Mor& p1, const Mor& p2) {
  Diagram d = Diagram::cospan(c, f, g);
  Cone cone;
  cone.apex = apex;
  cone.legs = {p1, p2, c.compose(f, p1)};
  if (c.compose(f, p1) != c.compose(g, p2)) return false;
  return is_limiting(c, d, cone);
}

}  // namespace cohcat
