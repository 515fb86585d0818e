#include "cohcat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cohcat {

FiniteLattice::FiniteLattice(std::vector<Obj> elements,
                             std::vector<std::pair<Obj, Obj>> le)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw AxiomViolation("a lattice needs an element");
  for (size_t i = 0; i < elements_.size(); ++i) {
    validate_identifier(elements_[i], "lattice element");
    if (index_.count(elements_[i]))
      throw ParseError("duplicate lattice element '" + elements_[i] + "'");
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
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (le_[i][k])
        for (size_t j = 0; j < n; ++j)
          if (le_[k][j]) le_[i][j] = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (le_[i][j] && le_[j][i])
        throw AxiomViolation("lattice order is not antisymmetric on " +
                             elements_[i] + ", " + elements_[j]);
  finish();
}

void FiniteLattice::finish() {
  const size_t n = elements_.size();
  auto glb = [&](size_t i, size_t j) -> std::optional<size_t> {
    std::optional<size_t> best;
    for (size_t k = 0; k < n; ++k) {
      if (!le_[k][i] || !le_[k][j]) continue;
      if (!best || le_[*best][k]) best = k;
    }
    if (!best) return std::nullopt;
    for (size_t k = 0; k < n; ++k)
      if (le_[k][i] && le_[k][j] && !le_[k][*best]) return std::nullopt;
    return best;
  };
  auto lub = [&](size_t i, size_t j) -> std::optional<size_t> {
    std::optional<size_t> best;
    for (size_t k = 0; k < n; ++k) {
      if (!le_[i][k] || !le_[j][k]) continue;
      if (!best || le_[k][*best]) best = k;
    }
    if (!best) return std::nullopt;
    for (size_t k = 0; k < n; ++k)
      if (le_[i][k] && le_[j][k] && !le_[*best][k]) return std::nullopt;
    return best;
  };
  meet_.assign(n, std::vector<size_t>(n));
  join_.assign(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto m = glb(i, j), u = lub(i, j);
      if (!m || !u)
        throw AxiomViolation("not a lattice: no meet/join for " + elements_[i] +
                             ", " + elements_[j]);
      meet_[i][j] = *m;
      join_[i][j] = *u;
    }
  size_t bot = 0, top = 0;
  for (size_t i = 0; i < n; ++i) {
    bot = meet_[bot][i];
    top = join_[top][i];
  }
  bottom_ = elements_[bot];
  top_ = elements_[top];
  distributive_ = true;
  for (size_t a = 0; a < n && distributive_; ++a)
    for (size_t b = 0; b < n && distributive_; ++b)
      for (size_t c = 0; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]]) {
          distributive_ = false;
          break;
        }
}

size_t FiniteLattice::index(const Obj& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw UnknownObject("'" + x + "' not in lattice");
  return it->second;
}

bool FiniteLattice::le(const Obj& x, const Obj& y) const {
  return le_[index(x)][index(y)];
}

Obj FiniteLattice::meet(const Obj& x, const Obj& y) const {
  return elements_[meet_[index(x)][index(y)]];
}

Obj FiniteLattice::join(const Obj& x, const Obj& y) const {
  return elements_[join_[index(x)][index(y)]];
}

std::vector<Obj> FiniteLattice::down_set(const Obj& x) const {
  std::vector<Obj> out;
  for (const auto& z : elements_)
    if (le(z, x)) out.push_back(z);
  return out;
}

std::vector<Obj> FiniteLattice::up_set(const Obj& x) const {
  std::vector<Obj> out;
  for (const auto& z : elements_)
    if (le(x, z)) out.push_back(z);
  return out;
}

std::vector<Obj> FiniteLattice::atoms() const {
  std::vector<Obj> out;
  for (const auto& a : elements_) {
    if (a == bottom_) continue;
    bool minimal = true;
    for (const auto& z : elements_)
      if (z != bottom_ && z != a && le(z, a)) { minimal = false; break; }
    if (minimal) out.push_back(a);
  }
  return out;
}

FiniteLattice::Filter FiniteLattice::principal_filter(const Obj& m) const {
  return Filter{m, up_set(m)};
}

std::vector<FiniteLattice::Filter> FiniteLattice::filters() const {
  // In a finite lattice every filter has a minimum (the meet of its
  // members), so the principal filters exhaust all of them.
  std::vector<Filter> out;
  for (const auto& m : elements_) out.push_back(principal_filter(m));
  return out;
}

bool FiniteLattice::is_prime_filter(const Filter& f) const {
  if (f.min == bottom_ && elements_.size() > 1) return false;  // improper
  if (elements_.size() == 1) return false;
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      if (le(f.min, join(a, b)) && !le(f.min, a) && !le(f.min, b)) return false;
  return true;
}

std::vector<FiniteLattice::Filter> FiniteLattice::prime_filters() const {
  std::vector<Filter> out;
  for (const auto& f : filters())
    if (is_prime_filter(f)) out.push_back(f);
  return out;
}

std::optional<Obj> FiniteLattice::relative_complement(const Obj& u,
                                                      const Obj& x) const {
  if (!le(u, x)) throw UnknownObject("'" + u + "' is not below '" + x + "'");
  std::optional<Obj> found;
  for (const auto& v : down_set(x)) {
    if (meet(u, v) == bottom_ && join(u, v) == x) {
      if (found)
        throw NotBoolean("complement of " + u + " in [bottom, " + x +
                         "] is not unique (" + *found + " and " + v + ")");
      found = v;
    }
  }
  return found;
}

std::shared_ptr<const PosetCategory> FiniteLattice::category() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (!category_) {
    std::vector<std::pair<Obj, Obj>> le;
    for (const auto& x : elements_)
      for (const auto& y : elements_)
        if (le_[index_.at(x)][index_.at(y)]) le.push_back({x, y});
    category_ = std::make_shared<const PosetCategory>(elements_, le);
  }
  return category_;
}

FiniteLattice FiniteLattice::chain(int n) {
  if (n <= 0) throw AxiomViolation("chain needs a positive length");
  std::vector<Obj> elems;
  std::vector<std::pair<Obj, Obj>> le;
  for (int i = 0; i < n; ++i) elems.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) le.push_back({elems[static_cast<size_t>(i)],
                                                elems[static_cast<size_t>(i + 1)]});
  return FiniteLattice(elems, le);
}

static std::string subset_name(const std::vector<std::string>& atoms,
                               unsigned mask) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < atoms.size(); ++i)
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += atoms[i];
      first = false;
    }
  return out + "}";
}

FiniteLattice FiniteLattice::boolean_from_atoms(std::vector<std::string> atoms) {
  if (atoms.size() > 16) throw SizeOverflow("too many atoms");
  const unsigned n = 1u << atoms.size();
  std::vector<Obj> elems;
  std::vector<std::pair<Obj, Obj>> le;
  for (unsigned m = 0; m < n; ++m) elems.push_back(subset_name(atoms, m));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if ((a & b) == a) le.push_back({elems[a], elems[b]});
  return FiniteLattice(elems, le);
}

FiniteLattice FiniteLattice::product(const FiniteLattice& a,
                                     const FiniteLattice& b) {
  std::vector<Obj> elems;
  std::vector<std::pair<Obj, Obj>> le;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) elems.push_back("(" + x + "|" + y + ")");
  for (const auto& x1 : a.elements())
    for (const auto& y1 : b.elements())
      for (const auto& x2 : a.elements())
        for (const auto& y2 : b.elements())
          if (a.le(x1, x2) && b.le(y1, y2))
            le.push_back({"(" + x1 + "|" + y1 + ")", "(" + x2 + "|" + y2 + ")"});
  return FiniteLattice(elems, le);
}

FiniteLattice FiniteLattice::downsets(std::vector<Obj> poset_elements,
                                      std::vector<std::pair<Obj, Obj>> lt) {
  const size_t n = poset_elements.size();
  if (n > 16) throw SizeOverflow("poset too large for downset lattice");
  std::map<Obj, size_t> idx;
  for (size_t i = 0; i < n; ++i) idx[poset_elements[i]] = i;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : lt) le[idx.at(x)][idx.at(y)] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  std::vector<unsigned> downs;
  for (unsigned m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (m & (1u << i))
        for (size_t j = 0; j < n; ++j)
          if (le[j][i] && !(m & (1u << j))) { ok = false; break; }
    if (ok) downs.push_back(m);
  }
  std::vector<Obj> elems;
  std::vector<std::pair<Obj, Obj>> lattice_le;
  std::vector<std::string> names(downs.size());
  for (size_t i = 0; i < downs.size(); ++i) {
    std::vector<std::string> atoms(poset_elements.begin(), poset_elements.end());
    names[i] = subset_name(atoms, downs[i]);
    elems.push_back(names[i]);
  }
  for (size_t i = 0; i < downs.size(); ++i)
    for (size_t j = 0; j < downs.size(); ++j)
      if ((downs[i] & downs[j]) == downs[i]) lattice_le.push_back({names[i], names[j]});
  return FiniteLattice(elems, lattice_le);
}

// --- FiniteBooleanAlgebra ----------------------------------------------------

FiniteBooleanAlgebra::FiniteBooleanAlgebra(FiniteLattice lattice)
    : lattice_(std::move(lattice)) {
  for (const auto& x : lattice_.elements()) {
    auto c = lattice_.relative_complement(x, lattice_.top());
    if (!c) throw NotBoolean("element " + x + " has no complement");
    complement_[x] = *c;
  }
  if (!lattice_.distributive())
    throw NotBoolean("complemented but not distributive");
  atoms_ = lattice_.atoms();
  for (const auto& x : lattice_.elements()) {
    Obj j = lattice_.bottom();
    for (const auto& a : atoms_)
      if (lattice_.le(a, x)) j = lattice_.join(j, a);
    if (j != x) throw NotBoolean("element " + x + " is not a join of atoms");
  }
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::from_atoms(
    std::vector<std::string> atoms) {
  return FiniteBooleanAlgebra(FiniteLattice::boolean_from_atoms(std::move(atoms)));
}

Obj FiniteBooleanAlgebra::complement(const Obj& x) const {
  auto it = complement_.find(x);
  if (it == complement_.end()) throw UnknownObject("'" + x + "' not in algebra");
  return it->second;
}

std::vector<Obj> FiniteBooleanAlgebra::atoms_below(const Obj& x) const {
  std::vector<Obj> out;
  for (const auto& a : atoms_)
    if (lattice_.le(a, x)) out.push_back(a);
  return out;
}

Obj FiniteBooleanAlgebra::join_of_atoms(const std::vector<Obj>& atoms) const {
  Obj j = lattice_.bottom();
  for (const auto& a : atoms) j = lattice_.join(j, a);
  return j;
}

}  // namespace cohcat
