#include <gtest/gtest.h>

#include "tfc/catalog.hpp"
#include "tfc/decomp.hpp"
#include "tfc/homology.hpp"

using namespace tfc;

namespace {

struct Fixture {
  Complex c;
  CellTable t;
  DecompSpace s;
  explicit Fixture(Complex cx) : c(std::move(cx)), t(c), s(t) {}
  Fixture(const Fixture&) = delete;

  CellId big() const { return *big_cell(t); }
  CellId atom(const std::string& id) const { return *t.atom_cell_id(c.index(id)); }
  std::vector<std::string> ids(const Bitset& b) const { return c.ids_of(b); }
};

std::unique_ptr<Fixture> fx(const std::string& term) {
  return std::make_unique<Fixture>(term_to_complex(parse_term(term)));
}

// Index of the Sd element with this term whose image contains `cell`.
std::size_t elem_with(const DecompPoset& sd, const std::string& term, CellId cell) {
  for (std::size_t i = 0; i < sd.size(); ++i)
    if (to_string(sd.terms[i]) == term && std::binary_search(sd.images[i].begin(), sd.images[i].end(), cell)) return i;
  ADD_FAILURE() << "no element " << term;
  return 0;
}

FinPoset boolean_lattice_without_bottom(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 1; a < (std::size_t{1} << m); ++a) labels.push_back(std::to_string(a));
  for (std::size_t a = 1; a < (std::size_t{1} << m); ++a)
    for (std::size_t b = 1; b < (std::size_t{1} << m); ++b)
      if ((a & b) == a) pairs.emplace_back(a - 1, b - 1);
  return FinPoset::generated(labels, pairs);
}

}  // namespace

TEST(AtPreorder, VerticalChain) {
  auto f = fx("[[[],[]]]");
  auto at = at_preorder(f->c, f->t.cell(f->big()), 2);
  ASSERT_EQ(at.relation.size(), 2u);
  EXPECT_EQ(at.relation.labels(), (std::vector<std::string>{"c0.c0.v0", "c0.c1.v0"}));
  EXPECT_TRUE(at.relation.less(0, 1));
  EXPECT_FALSE(at.relation.leq(1, 0));
}

TEST(AtPreorder, HorizontalPair) {
  auto f = fx("[[[]],[[]]]");
  const Cell& mu = f->t.cell(f->big());
  auto at2 = at_preorder(f->c, mu, 2);
  EXPECT_EQ(at2.relation.size(), 2u);
  EXPECT_TRUE(at2.relation.is_equivalence());
  EXPECT_FALSE(at2.relation.leq(0, 1));
  auto at1 = at_preorder(f->c, mu, 1);
  EXPECT_EQ(at1.relation.labels(), (std::vector<std::string>{"c0.v1", "c1.v1"}));
  EXPECT_TRUE(at1.relation.less(0, 1));
  EXPECT_THROW(at_preorder(f->c, mu, 3), InputError);
  EXPECT_THROW(at_preorder(f->c, mu, 0), InputError);
}

TEST(AtPreorder, AtomsAreCodiscreteBelowTop) {
  auto o = oriental(3);
  auto mu = atom_cell(o, "0123");
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(at_preorder(o, mu, k).relation.is_codiscrete()) << k;
}

TEST(ExistsMin, Examples) {
  auto f = fx("[[],[],[]]");
  EXPECT_EQ(exists_min_k(f->c, f->t.cell(f->big())), 1);
  EXPECT_FALSE(exists_min_k(f->c, atom_cell(f->c, "c0.v0")));
  EXPECT_FALSE(exists_min_k(f->c, atom_cell(f->c, "v0")));
  auto h = fx("[[[]],[[]]]");
  EXPECT_EQ(exists_min_k(h->c, h->t.cell(h->big())), 1);
  auto v = fx("[[[],[]]]");
  EXPECT_EQ(exists_min_k(v->c, v->t.cell(v->big())), 2);
}

TEST(Sd, AtomIsEmpty) {
  Fixture f(oriental(2));
  auto sd = enumerate_sd(f.s, f.atom("012"), std::nullopt, false);
  EXPECT_EQ(sd.size(), 0u);
  auto with_bottom = enumerate_sd(f.s, f.atom("012"), std::nullopt, true);
  EXPECT_EQ(with_bottom.size(), 1u);
}

TEST(Sd, ChainOfThree) {
  auto f = fx("[[],[],[]]");
  auto sd = enumerate_sd(f->s, f->big(), std::nullopt, false);
  ASSERT_EQ(sd.size(), 3u);
  std::size_t full = elem_with(sd, "[[],[],[]]", f->atom("c0.v0"));
  for (std::size_t i = 0; i < sd.size(); ++i) EXPECT_TRUE(sd.order.leq(i, full));
  std::size_t gf_h = elem_with(sd, "[[],[]]", f->atom("c2.v0"));
  std::size_t f_hg = elem_with(sd, "[[],[]]", f->atom("c0.v0"));
  EXPECT_NE(gf_h, f_hg);
  EXPECT_FALSE(sd.order.leq(gf_h, f_hg));
  EXPECT_TRUE(sd.all_monic);
  EXPECT_TRUE(sd.rigid);
}

TEST(Sd, SuspendedChainHasOneElement) {
  auto f = fx("[[[],[]]]");
  auto sd = enumerate_sd(f->s, f->big(), std::nullopt, false);
  ASSERT_EQ(sd.size(), 1u);
  EXPECT_EQ(to_string(sd.terms[0]), "[[[],[]]]");
}

TEST(Sd, OneCellsAreBooleanLattices) {
  // A 1-cell through m atoms splits at any subset of its m - 1 inner points.
  for (const auto& c : {oriental(4), gray_cube(3), term_to_complex(parse_term("[[],[],[],[]]"))}) {
    CellTable t(c);
    DecompSpace s(t);
    for (CellId x : t.of_dim(1)) {
      std::size_t m = t.cell(x).plus(1).count();
      auto sd = enumerate_sd(s, x, std::nullopt, true);
      EXPECT_EQ(sd.size(), std::size_t{1} << (m - 1));
      if (m >= 2) EXPECT_TRUE(iso_check(enumerate_sd(s, x, std::nullopt, false).order, boolean_lattice_without_bottom(m - 1)));
    }
  }
}

TEST(Sd, OrderIsImageContainment) {
  Fixture f(oriental(3));
  auto sd = enumerate_sd(f.s, f.big(), std::nullopt, true);
  for (std::size_t a = 0; a < sd.size(); ++a)
    for (std::size_t b = 0; b < sd.size(); ++b)
      EXPECT_EQ(sd.order.leq(a, b),
                std::includes(sd.images[b].begin(), sd.images[b].end(), sd.images[a].begin(), sd.images[a].end()));
}

TEST(Sd, GeneratorsFollowTermNames) {
  Fixture f(oriental(3));
  for (CellId mu = 0; mu < f.t.size(); ++mu)
    for (ElemId e : f.s.decomps(mu, 0)) {
      auto d = f.s.describe(e);
      auto shape = term_to_complex(d.term);
      std::set<std::string> names, ids;
      for (const auto& [n, c] : d.generators) {
        names.insert(n);
        EXPECT_EQ(f.t.dim(c), shape.dim(shape.index(n))) << n;
      }
      for (const auto& a : shape.specs()) ids.insert(a.id);
      EXPECT_EQ(names, ids);
    }
}

TEST(Sd, RestrictionMatchesFilter) {
  Fixture f(gray_cube(3));
  for (CellId mu = 0; mu < f.t.size(); ++mu)
    for (const DimSet& r : {DimSet{}, DimSet{0}, DimSet{1}, DimSet{0, 1}, DimSet{2}, DimSet{0, 2}}) {
      auto a = enumerate_sd(f.s, mu, r, true);
      auto b = filter_sd(f.s, mu, r, true);
      EXPECT_EQ(a.images, b.images);
    }
}

TEST(Sd, HomologyTrivialOnComposites) {
  for (const auto& c : {oriental(3), gray_cube(3), term_to_complex(parse_term("[[[],[]],[[]]]"))}) {
    CellTable t(c);
    DecompSpace s(t);
    for (CellId mu = 0; mu < t.size(); ++mu) {
      auto sd = enumerate_sd(s, mu, std::nullopt, false);
      if (!exists_min_k(c, t.cell(mu))) {
        EXPECT_EQ(sd.size(), 0u);
        continue;
      }
      EXPECT_TRUE(homology(sd.order).trivial());
    }
  }
}

TEST(LMap, ChainOfThree) {
  auto f = fx("[[],[],[]]");
  auto sd = enumerate_sd(f->s, f->big(), std::nullopt, true);
  // g∘f then h
  std::size_t gf_h = elem_with(sd, "[[],[]]", f->atom("c2.v0"));
  auto l = L_map(f->s, sd.elems[gf_h], 1);
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"c0.v0", "c1.v0", "c2.v0"}));
  EXPECT_TRUE(l.is_total());
  EXPECT_TRUE(l.leq(0, 1) && l.leq(1, 0));
  EXPECT_TRUE(l.less(1, 2));
  auto bottom = L_map(f->s, f->s.globe_chain(f->big(), 0), 1);
  EXPECT_TRUE(bottom.is_codiscrete());
  std::size_t full = elem_with(sd, "[[],[],[]]", f->atom("c0.v0"));
  auto fine = L_map(f->s, sd.elems[full], 1);
  EXPECT_TRUE(fine.is_antisymmetric());
  EXPECT_TRUE(fine.less(0, 1) && fine.less(1, 2));
}

TEST(LMap, RejectsHighCompositions) {
  auto f = fx("[[[],[]]]");
  auto sd = enumerate_sd(f->s, f->big(), std::nullopt, false);
  EXPECT_THROW(L_map(f->s, sd.elems[0], 1), InputError);
}

TEST(Functors, MergeEverything) {
  auto f = fx("[[],[],[]]");
  auto sd = enumerate_sd(f->s, f->big(), std::nullopt, true);
  std::size_t full = elem_with(sd, "[[],[],[]]", f->atom("c0.v0"));
  auto u = U_functor(f->s, sd.elems[full], DimSet{0}, DimSet{});
  EXPECT_EQ(u, f->s.globe_chain(f->big(), 0));
  EXPECT_EQ(U_functor(f->s, sd.elems[full], DimSet{0}, DimSet{0}), sd.elems[full]);
  EXPECT_THROW(merge_level(DimSet{0}, DimSet{1}), InputError);
  EXPECT_THROW(merge_level(DimSet{0, 1}, DimSet{1}), InputError);
}

TEST(Functors, BoundaryOfDecomposition) {
  auto f = fx("[[[],[]],[[]]]");
  auto sd = enumerate_sd(f->s, f->big(), std::nullopt, false);
  for (ElemId e : sd.elems) EXPECT_EQ(D_functor(f->s, e, 2), e);
  // The finest decomposition has target boundary f' then g'.
  std::size_t full = elem_with(sd, "[[[],[]],[[]]]", f->atom("c1.c0.v0"));
  ElemId d = D_functor(f->s, sd.elems[full], 1);
  EXPECT_EQ(to_string(f->s.term(d)), "[[],[]]");
  EXPECT_EQ(f->s.cell(d), f->t.bd(f->big(), Sign::plus, 1));
  EXPECT_EQ(f->s.generators(d).size(), 5u);
}

TEST(PosIso, Examples) {
  auto f = fx("[[],[],[]]");
  auto r = check_pos_iso(f->s, f->big(), 1);
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_EQ(r.domain, 3u);
  EXPECT_EQ(r.codomain, 3u);
  auto v = fx("[[[],[]]]");
  auto rv = check_pos_iso(v->s, v->big(), 2);
  EXPECT_TRUE(rv.ok);
  EXPECT_EQ(rv.domain, 1u);
  EXPECT_EQ(rv.codomain, 1u);
  Fixture o(oriental(2));
  auto ra = check_pos_iso(o.s, o.atom("012"), 2);
  EXPECT_TRUE(ra.ok);
  EXPECT_EQ(ra.domain, 0u);
  EXPECT_EQ(ra.codomain, 0u);
  // At_2 of the vertical chain is not an equivalence.
  EXPECT_THROW(check_pos_iso(v->s, v->big(), 1), HypothesisNotMet);
}

TEST(Cocartesian, Examples) {
  auto f = fx("[[],[],[]]");
  EXPECT_TRUE(check_cocartesian(f->s, f->big(), DimSet{0}, DimSet{}).ok);
  EXPECT_TRUE(check_cocartesian(f->s, f->big(), DimSet{0}, DimSet{0}).ok);
  auto g = fx("[[[],[]],[[],[]]]");
  auto r = check_cocartesian(g->s, g->big(), DimSet{0, 1}, DimSet{0});
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_GT(r.checked, 0u);
}

TEST(Cocartesian, InstancesFollowHypotheses) {
  auto v = fx("[[[],[]]]");
  auto ins = cocartesian_instances(v->c, v->t.cell(v->big()));
  // At_2 is a chain: only the unconditional instance, plus k = 2.
  ASSERT_FALSE(ins.empty());
  EXPECT_EQ(ins[0].lemma, "cocart");
  for (const auto& i : ins) EXPECT_TRUE(i.lemma == "cocart" || i.k == 2);
  for (const auto& i : ins) EXPECT_TRUE(check_cocartesian(v->s, v->big(), i.from, i.to).ok);
}

TEST(Budget, DecompositionNodes) {
  auto c = term_to_complex(parse_term("[[],[],[],[],[],[]]"));
  CellTable t(c);
  DecompSpace s(t, 20);
  EXPECT_THROW(enumerate_sd(s, *big_cell(t), std::nullopt, false), BudgetError);
}
