#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tfc/bitset.hpp"
#include "tfc/errors.hpp"

namespace tfc {

using AtomIndex = std::uint32_t;

enum class Sign { minus, plus };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }

// Serialized form of one atom. minus/plus are empty for 0-atoms.
struct AtomSpec {
  std::string id;
  int dim = 0;
  std::vector<std::string> minus;
  std::vector<std::string> plus;

  friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

// A finite graded set of atoms with minus/plus boundary maps. Immutable after
// construction; atoms are addressed by their position in the input list.
class Complex {
 public:
  Complex() = default;

  explicit Complex(std::vector<AtomSpec> atoms, std::string name = {}) : name_(std::move(name)) {
    const std::size_t n = atoms.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (atoms[i].dim < 0) throw InputError("atom '" + atoms[i].id + "' has negative dimension");
      if (!index_.emplace(atoms[i].id, static_cast<AtomIndex>(i)).second)
        throw InputError("duplicate atom id '" + atoms[i].id + "'");
    }
    ids_.reserve(n);
    dims_.reserve(n);
    for (auto& a : atoms) {
      ids_.push_back(a.id);
      dims_.push_back(a.dim);
      dim_ = std::max(dim_, a.dim);
    }
    by_dim_.assign(static_cast<std::size_t>(dim_ + 1), {});
    faces_[0].assign(n, Bitset(n));
    faces_[1].assign(n, Bitset(n));
    cofaces_[0].assign(n, Bitset(n));
    cofaces_[1].assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = atoms[i];
      by_dim_[static_cast<std::size_t>(a.dim)].push_back(static_cast<AtomIndex>(i));
      if (a.dim == 0 && (!a.minus.empty() || !a.plus.empty()))
        throw InputError("0-atom '" + a.id + "' has nonempty boundary");
      for (int s = 0; s < 2; ++s) {
        for (const auto& f : (s == 0 ? a.minus : a.plus)) {
          auto it = index_.find(f);
          if (it == index_.end())
            throw InputError("atom '" + a.id + "' references unknown atom '" + f + "'");
          if (dims_[it->second] != a.dim - 1)
            throw InputError("atom '" + a.id + "' (dim " + std::to_string(a.dim) + ") has face '" + f +
                             "' of dim " + std::to_string(dims_[it->second]));
          faces_[s][i].set(it->second);
          cofaces_[s][it->second].set(i);
        }
      }
    }
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  // Largest atom dimension, -1 for the empty complex.
  int dim() const { return dim_; }

  const std::string& id(AtomIndex a) const { return ids_[a]; }
  int dim(AtomIndex a) const { return dims_[a]; }
  const Bitset& faces(AtomIndex a, Sign s) const { return faces_[s == Sign::plus][a]; }
  const Bitset& minus(AtomIndex a) const { return faces_[0][a]; }
  const Bitset& plus(AtomIndex a) const { return faces_[1][a]; }
  // Atoms having `a` in their minus (resp. plus) set.
  const Bitset& cofaces(AtomIndex a, Sign s) const { return cofaces_[s == Sign::plus][a]; }

  const std::vector<AtomIndex>& atoms_of_dim(int n) const {
    static const std::vector<AtomIndex> none;
    if (n < 0 || n > dim_) return none;
    return by_dim_[static_cast<std::size_t>(n)];
  }

  std::optional<AtomIndex> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  AtomIndex index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown atom '" + id + "'");
    return it->second;
  }

  Bitset empty_set() const { return Bitset(size()); }
  Bitset all_atoms() const {
    Bitset b(size());
    for (std::size_t i = 0; i < size(); ++i) b.set(i);
    return b;
  }
  Bitset set_of(std::span<const std::string> ids) const {
    Bitset b(size());
    for (const auto& s : ids) b.set(index(s));
    return b;
  }
  std::vector<std::string> ids_of(const Bitset& b) const {
    std::vector<std::string> out;
    b.for_each([&](std::size_t i) { out.push_back(ids_[i]); });
    return out;
  }

  // S^+ and S^-: unions of the faces of the members of S.
  Bitset faces_of(const Bitset& s, Sign sign) const {
    Bitset out(size());
    s.for_each([&](std::size_t i) { out |= faces(static_cast<AtomIndex>(i), sign); });
    return out;
  }

  // S^± = S^+ \ S^- (sign plus) and S^∓ = S^- \ S^+ (sign minus).
  Bitset net_faces(const Bitset& s, Sign sign) const { return faces_of(s, sign) - faces_of(s, opposite(sign)); }

  std::vector<AtomSpec> specs() const {
    std::vector<AtomSpec> out;
    out.reserve(size());
    for (AtomIndex i = 0; i < size(); ++i)
      out.push_back({ids_[i], dims_[i], ids_of(minus(i)), ids_of(plus(i))});
    return out;
  }

 private:
  std::string name_;
  std::vector<std::string> ids_;
  std::vector<int> dims_;
  int dim_ = -1;
  std::unordered_map<std::string, AtomIndex> index_;
  std::vector<std::vector<AtomIndex>> by_dim_;
  std::vector<Bitset> faces_[2];
  std::vector<Bitset> cofaces_[2];
};

// A set of atoms closed under minus and plus.
struct Subcomplex {
  const Complex* parent = nullptr;
  Bitset members;

  std::size_t size() const { return members.count(); }
  bool contains(AtomIndex a) const { return members.test(a); }
  friend bool operator==(const Subcomplex& a, const Subcomplex& b) { return a.members == b.members; }
};

inline bool is_closed(const Complex& c, const Bitset& s) {
  bool ok = true;
  s.for_each([&](std::size_t i) {
    auto a = static_cast<AtomIndex>(i);
    if (!c.minus(a).subset_of(s) || !c.plus(a).subset_of(s)) ok = false;
  });
  return ok;
}

// Smallest subcomplex containing `seed`.
inline Subcomplex closure(const Complex& c, const Bitset& seed) {
  Bitset out = seed;
  // Faces have strictly lower dimension, so one top-down sweep reaches the fixpoint.
  for (int d = c.dim(); d >= 1; --d)
    for (AtomIndex a : c.atoms_of_dim(d))
      if (out.test(a)) {
        out |= c.minus(a);
        out |= c.plus(a);
      }
  return {&c, std::move(out)};
}

inline Subcomplex closure(const Complex& c, std::span<const std::string> seed) { return closure(c, c.set_of(seed)); }

// Edges x -> y among n-atoms with x^+ ∩ y^- nonempty.
struct RelationGraph {
  int dim = 0;
  std::vector<std::pair<AtomIndex, AtomIndex>> edges;
};

inline RelationGraph triangle_relation(const Complex& c, int n) {
  RelationGraph g{n, {}};
  for (AtomIndex x : c.atoms_of_dim(n))
    for (AtomIndex y : c.atoms_of_dim(n))
      if (c.plus(x).intersects(c.minus(y))) g.edges.emplace_back(x, y);
  return g;
}

// A directed cycle of the relation, as a closed walk x0 -> ... -> x0, or empty.
inline std::vector<AtomIndex> find_cycle(const Complex& c, const RelationGraph& g) {
  std::map<AtomIndex, std::vector<AtomIndex>> out;
  for (auto [x, y] : g.edges) out[x].push_back(y);
  std::map<AtomIndex, int> state;  // 1 = on stack, 2 = done
  std::vector<AtomIndex> stack;
  std::vector<AtomIndex> cycle;
  std::function<bool(AtomIndex)> dfs = [&](AtomIndex v) {
    state[v] = 1;
    stack.push_back(v);
    for (AtomIndex w : out[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (AtomIndex v : c.atoms_of_dim(g.dim))
    if (state[v] == 0 && dfs(v)) return cycle;
  return {};
}

// The subcomplex as a complex in its own right, keeping atom ids.
inline Complex restrict_to(const Complex& c, const Bitset& members, std::string name = {}) {
  if (!is_closed(c, members)) throw InputError("atom set is not closed under boundaries");
  std::vector<AtomSpec> specs;
  for (auto& s : c.specs())
    if (members.test(c.index(s.id))) specs.push_back(std::move(s));
  return Complex(std::move(specs), std::move(name));
}

// Drops the atoms of top dimension.
inline Complex boundary_complex(const Complex& c) {
  Bitset m(c.size());
  for (int d = 0; d < c.dim(); ++d)
    for (AtomIndex a : c.atoms_of_dim(d)) m.set(a);
  return restrict_to(c, m, c.name().empty() ? std::string{} : "boundary(" + c.name() + ")");
}

// Exchanges minus and plus on every atom.
inline Complex swap_orientation(const Complex& c) {
  auto specs = c.specs();
  for (auto& s : specs) std::swap(s.minus, s.plus);
  return Complex(std::move(specs), c.name().empty() ? std::string{} : "swap(" + c.name() + ")");
}

// Decides whether two complexes are isomorphic (dimension and +/- preserving
// bijection of atoms). Backtracking over atoms in increasing dimension.
inline bool isomorphic(const Complex& a, const Complex& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  for (int d = 0; d <= a.dim(); ++d)
    if (a.atoms_of_dim(d).size() != b.atoms_of_dim(d).size()) return false;
  auto signature = [](const Complex& c, AtomIndex x) {
    return std::array<std::size_t, 5>{static_cast<std::size_t>(c.dim(x)), c.minus(x).count(), c.plus(x).count(),
                                      c.cofaces(x, Sign::minus).count(), c.cofaces(x, Sign::plus).count()};
  };
  std::vector<AtomIndex> order;
  for (int d = 0; d <= a.dim(); ++d)
    for (AtomIndex x : a.atoms_of_dim(d)) order.push_back(x);
  std::vector<std::int64_t> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  auto image = [&](const Bitset& s) {
    Bitset out(b.size());
    s.for_each([&](std::size_t i) { out.set(static_cast<std::size_t>(map[i])); });
    return out;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) return true;
    AtomIndex x = order[k];
    auto sig = signature(a, x);
    for (AtomIndex y : b.atoms_of_dim(a.dim(x))) {
      if (used[y] || signature(b, y) != sig) continue;
      if (image(a.minus(x)) != b.minus(y) || image(a.plus(x)) != b.plus(y)) continue;
      map[x] = y;
      used[y] = true;
      if (go(k + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace tfc
