#include <gtest/gtest.h>

#include <set>

#include "tfc/catalog.hpp"
#include "tfc/checks.hpp"

using namespace tfc;

namespace {

// sets listed as -0, +0, -1, +1, ...
Cell make_cell(const Complex& c, const std::vector<std::vector<std::string>>& sets) {
  const int n = static_cast<int>(sets.size()) / 2 - 1;
  Cell x(n, c.size());
  for (int i = 0; i <= n; ++i) {
    x.at(Sign::minus, i) = c.set_of(sets[2 * static_cast<std::size_t>(i)]);
    x.at(Sign::plus, i) = c.set_of(sets[2 * static_cast<std::size_t>(i) + 1]);
  }
  return x;
}

Complex chain(int r) {
  ThetaTerm t;
  t.children.assign(static_cast<std::size_t>(r), ThetaTerm{});
  return term_to_complex(t);
}

// Every subset tuple of the right dimensions that passes is_cell, reduced.
std::set<Cell> brute_force_cells(const Complex& c) {
  std::set<Cell> out;
  const int top = c.dim();
  std::vector<std::vector<Bitset>> subsets(static_cast<std::size_t>(top + 1));
  for (int i = 0; i <= top; ++i) {
    const auto& atoms = c.atoms_of_dim(i);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
      Bitset b(c.size());
      for (std::size_t j = 0; j < atoms.size(); ++j)
        if ((m >> j) & 1u) b.set(atoms[j]);
      subsets[static_cast<std::size_t>(i)].push_back(b);
    }
  }
  for (int n = 0; n <= top; ++n) {
    Cell x(n, c.size());
    std::function<void(int)> go = [&](int i) {
      if (i > n) {
        if (is_cell(c, x)) out.insert(reduced(x));
        return;
      }
      for (const auto& m : subsets[static_cast<std::size_t>(i)]) {
        x.at(Sign::minus, i) = m;
        if (i == n) {
          x.at(Sign::plus, i) = m;
          go(i + 1);
          continue;
        }
        for (const auto& p : subsets[static_cast<std::size_t>(i)]) {
          x.at(Sign::plus, i) = p;
          go(i + 1);
        }
      }
    };
    go(0);
  }
  return out;
}

}  // namespace

TEST(Moves, Oriental2) {
  auto c = oriental(2);
  auto S = c.set_of(std::vector<std::string>{"012"});
  auto X = c.set_of(std::vector<std::string>{"01", "12"});
  EXPECT_TRUE(moves(c, S, X, c.set_of(std::vector<std::string>{"02"})));
  EXPECT_FALSE(moves(c, S, X, c.set_of(std::vector<std::string>{"01"})));
  EXPECT_TRUE(moves(c, c.empty_set(), X, X));
  EXPECT_FALSE(moves(c, c.empty_set(), X, c.set_of(std::vector<std::string>{"02"})));
}

TEST(IsCell, Examples) {
  auto c = oriental(2);
  EXPECT_TRUE(is_cell(c, atom_cell(c, "012")));
  auto two = chain(2);  // v0 -f-> v1 -g-> v2
  EXPECT_TRUE(is_cell(two, make_cell(two, {{"v0"}, {"v2"}, {"c0.v0", "c1.v0"}, {"c0.v0", "c1.v0"}})));
  Complex par({{"x", 0, {}, {}}, {"y", 0, {}, {}}, {"f", 1, {"x"}, {"y"}}, {"g", 1, {"x"}, {"y"}}});
  auto fork = is_cell(par, make_cell(par, {{"x"}, {"y"}, {"f", "g"}, {"f", "g"}}));
  EXPECT_FALSE(fork);
  EXPECT_NE(fork.reason.find("fork"), std::string::npos);
}

TEST(AtomCell, LowDimensions) {
  Complex g({{"x", 0, {}, {}}, {"y", 0, {}, {}}, {"f", 1, {"x"}, {"y"}}});
  EXPECT_EQ(atom_cell(g, "x"), make_cell(g, {{"x"}, {"x"}}));
  EXPECT_EQ(atom_cell(g, "f"), make_cell(g, {{"x"}, {"y"}, {"f"}, {"f"}}));
}

TEST(AtomCell, Oriental2Top) {
  auto c = oriental(2);
  EXPECT_EQ(atom_cell(c, "012"), make_cell(c, {{"0"}, {"2"}, {"01", "12"}, {"02"}, {"012"}, {"012"}}));
}

TEST(Boundary, OfTopAtom) {
  auto c = oriental(2);
  auto a = atom_cell(c, "012");
  EXPECT_EQ(boundary(a, Sign::minus, 1), make_cell(c, {{"0"}, {"2"}, {"01", "12"}, {"01", "12"}}));
  EXPECT_EQ(boundary(a, Sign::plus, 1), make_cell(c, {{"0"}, {"2"}, {"02"}, {"02"}}));
  EXPECT_EQ(boundary(a, Sign::minus, 0), make_cell(c, {{"0"}, {"0"}}));
  EXPECT_EQ(boundary(a, Sign::plus, 2), a);
  EXPECT_THROW(boundary(a, Sign::plus, 3), InputError);
}

TEST(Identity, PadsWithEmptySets) {
  Complex g({{"x", 0, {}, {}}, {"y", 0, {}, {}}, {"f", 1, {"x"}, {"y"}}});
  EXPECT_EQ(identity(atom_cell(g, "f"), 2), make_cell(g, {{"x"}, {"y"}, {"f"}, {"f"}, {}, {}}));
  auto c = oriental(2);
  auto id3 = identity(atom_cell(c, "012"), 3);
  EXPECT_TRUE(is_cell(c, id3));
  EXPECT_EQ(id3.intrinsic_dim(), 2);
  EXPECT_TRUE(same_cell(id3, atom_cell(c, "012")));
  EXPECT_THROW(identity(atom_cell(c, "012"), 1), DimensionError);
}

TEST(Compose, ChainOfTwo) {
  auto two = chain(2);
  auto gf = compose(atom_cell(two, "c1.v0"), atom_cell(two, "c0.v0"), 0);
  EXPECT_EQ(gf, make_cell(two, {{"v0"}, {"v2"}, {"c0.v0", "c1.v0"}, {"c0.v0", "c1.v0"}}));
  EXPECT_THROW(compose(atom_cell(two, "c0.v0"), atom_cell(two, "c1.v0"), 0), BoundaryMismatch);
}

TEST(Compose, VerticalInSuspendedChain) {
  auto t = term_to_complex(parse_term("[[[],[]]]"));
  auto ba = compose(atom_cell(t, "c0.c1.v0"), atom_cell(t, "c0.c0.v0"), 1);
  EXPECT_TRUE(is_cell(t, ba));
  EXPECT_EQ(t.ids_of(ba.plus(2)), (std::vector<std::string>{"c0.c0.v0", "c0.c1.v0"}));
  EXPECT_EQ(t.ids_of(ba.minus(1)), std::vector<std::string>{"c0.v0"});
  EXPECT_EQ(t.ids_of(ba.plus(1)), std::vector<std::string>{"c0.v2"});
}

TEST(Compose, PaddedWhiskering) {
  auto c = gray_cube(2);
  // (*1) ∘_0 <**> is defined after padding the 1-cell.
  auto w = compose_padded(atom_cell(c, "1*"), atom_cell(c, "*0"), 0);
  EXPECT_TRUE(is_cell(c, w));
  EXPECT_THROW(compose(atom_cell(c, "**"), atom_cell(c, "1*"), 0), DimensionError);
}

TEST(Enumerate, Globe1) {
  auto g = globe(1);
  CellTable t(g);
  EXPECT_EQ(t.counts_up_to_dim(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(t.of_dim(0).size(), 2u);
  EXPECT_EQ(t.of_dim(1).size(), 1u);
}

TEST(Enumerate, ChainOfTwo) {
  auto two = chain(2);
  CellTable t(two);
  EXPECT_EQ(t.counts_up_to_dim(), (std::vector<std::size_t>{3, 6}));
  EXPECT_TRUE(t.find(make_cell(two, {{"v0"}, {"v2"}, {"c0.v0", "c1.v0"}, {"c0.v0", "c1.v0"}})));
}

TEST(Enumerate, EmptyComplex) {
  Complex c;
  CellTable t(c);
  EXPECT_EQ(t.size(), 0u);
}

TEST(Enumerate, MatchesBruteForce) {
  for (const auto& c : {globe(2), oriental(2), gray_cube(2), chain(3), term_to_complex(parse_term("[[[]],[[]]]")),
                        term_to_complex(parse_term("[[[],[]]]"))}) {
    CellTable t(c);
    std::set<Cell> mine(t.cells().begin(), t.cells().end());
    EXPECT_EQ(mine.size(), t.size());
    EXPECT_EQ(mine, brute_force_cells(c)) << complex_to_json(c).dump();
  }
}

TEST(Enumerate, BudgetIsEnforced) {
  auto c = oriental(4);
  EXPECT_THROW(CellTable(c, {10, Traversal::fifo}), BudgetError);
}

TEST(Enumerate, TraversalIndependent) {
  for (const auto& c : {oriental(3), gray_cube(3), term_to_complex(parse_term("[[[],[]],[[]]]"))}) {
    CellTable a(c, {100'000, Traversal::fifo}), b(c, {100'000, Traversal::lifo});
    EXPECT_EQ(a.cells(), b.cells());
  }
}

TEST(Enumerate, SupportDeterminesCell) {
  for (const auto& c : {oriental(3), gray_cube(3)}) {
    CellTable t(c);
    std::set<Bitset> seen;
    for (const auto& x : t.cells()) EXPECT_TRUE(seen.insert(x.support()).second);
  }
}

TEST(Enumerate, TableCompositionAgreesWithFormula) {
  auto c = oriental(3);
  CellTable t(c);
  for (const auto& k : t.compositions()) {
    auto direct = reduced(compose_padded(t.cell(k.b), t.cell(k.a), k.i));
    EXPECT_EQ(t.cell(k.result), direct);
  }
}

TEST(Laws, AssociativityAndInterchange) {
  for (const auto& c : {oriental(3), gray_cube(3), term_to_complex(parse_term("[[[]],[[]]]")),
                        term_to_complex(parse_term("[[[],[]],[[]]]"))}) {
    CellTable t(c);
    auto r = check_cell_laws(t);
    EXPECT_TRUE(r.failures.empty()) << r.failures.front();
    EXPECT_GT(r.associativity, 0u);
  }
  // Interchange needs two levels of composition.
  auto hc = term_to_complex(parse_term("[[[],[]],[[],[]]]"));
  CellTable h(hc);
  auto r = check_cell_laws(h);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_GT(r.interchange, 0u);
}

TEST(BigCell, PresentOrAbsent) {
  auto o = oriental(2);
  CellTable to(o);
  auto b = big_cell(to);
  ASSERT_TRUE(b);
  EXPECT_EQ(to.cell(*b), atom_cell(o, "012"));
  auto w = term_to_complex(parse_term("[[],[]]"));
  CellTable tw(w);
  ASSERT_TRUE(big_cell(tw));
  EXPECT_EQ(tw.dim(*big_cell(tw)), 1);
  auto par = boundary_complex(globe(2));  // two parallel arrows
  CellTable tb(par);
  EXPECT_FALSE(big_cell(tb));
}
