#ifndef COHCAT_LIMITS_HPP
#define COHCAT_LIMITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cohcat/category.hpp"

namespace cohcat {

// A finite diagram: nodes carry objects, edges carry morphisms between the
// node objects. Node identity is positional.
struct Diagram {
  struct Edge {
    size_t src, dst;
    Mor mor;
  };
  std::vector<Obj> nodes;
  std::vector<Edge> edges;

  static Diagram discrete(std::vector<Obj> objects);
  // f, g : x -> y gives the equalizer diagram.
  static Diagram parallel_pair(const FinCategory& c, const Mor& f, const Mor& g);
  // f : x -> z <- y : g gives the pullback diagram.
  static Diagram cospan(const FinCategory& c, const Mor& f, const Mor& g);
  // f : x <- z -> y : g gives the pushout diagram (for colimits).
  static Diagram span(const FinCategory& c, const Mor& f, const Mor& g);
};

struct Cone {
  Obj apex;
  std::vector<Mor> legs;  // one per node
};

// Legs commute with every edge.
bool is_cone(const FinCategory& c, const Diagram& d, const Cone& cone);

// Morphisms m : apex(from) -> apex(to) with to.legs ∘ m = from.legs.
std::vector<Mor> mediators(const FinCategory& c, const Cone& from, const Cone& to);

// Exactly one mediator from every cone over the diagram.
bool is_limiting(const FinCategory& c, const Diagram& d, const Cone& cone);

// All cones over d, grouped deterministically (apex in object order, legs
// in hom-enumeration order with edge pruning). Sizes are guarded.
std::vector<Cone> enumerate_cones(const FinCategory& c, const Diagram& d,
                                  size_t max_cones = 2000000);

// Limiting cone by exhaustive search; the apex is the first in object
// order that carries a universal cone, the legs the first assignment in
// enumeration order (thin and SkelFinSet backends use equivalent fast
// paths). Throws NoLimit / SizeOverflow.
Cone limit(const FinCategory& c, const Diagram& d);

// Colimiting cocone, computed as a limit in the opposite category; legs
// point from the nodes into the apex.
Cone colimit(const FinCategory& c, const Diagram& d);

// Convenience wrappers.
Cone product_cone(const FinCategory& c, const Obj& x, const Obj& y);
Cone pullback_cone(const FinCategory& c, const Mor& f, const Mor& g);
Cone equalizer_cone(const FinCategory& c, const Mor& f, const Mor& g);
std::optional<Obj> terminal_object(const FinCategory& c);

// The unique mediating morphism from a cone to a limiting cone; throws if
// the count differs from one.
Mor mediate(const FinCategory& c, const Cone& from, const Cone& to);

// f is the coequalizer of its kernel pair.
bool is_effective_epi(const FinCategory& c, const Mor& f);

struct Factorization {
  Mor epi;   // effective epi
  Mor mono;  // mono with mono∘epi = f
  Obj image;
};

// Pullback-style effective epi-mono factorization. In a thin category the
// epi part is the identity.
Factorization factorize(const FinCategory& c, const Mor& f);

// The given commuting square (p1 : P -> x, p2 : P -> y over cospan
// f : x -> z <- y : g) is a pullback.
bool is_pullback_square(const FinCategory& c, const Mor& f, const Mor& g,
                        const Obj& apex, const Mor& p1, const Mor& p2);

}  // namespace cohcat

#endif
