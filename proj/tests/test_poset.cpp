#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "tfc/homology.hpp"
#include "tfc/poset.hpp"

using namespace tfc;

namespace {

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  return v;
}

FinPreorder discrete(std::size_t n) { return FinPreorder(letters(n)); }

FinPreorder chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return FinPreorder::generated(letters(n), p);
}

FinPreorder codiscrete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.emplace_back(i, j);
  return FinPreorder::generated(letters(n), p);
}

bool has_maximum(const FinPoset& p) {
  for (std::size_t m = 0; m < p.size(); ++m) {
    bool top = true;
    for (std::size_t x = 0; x < p.size() && top; ++x) top = p.leq(x, m);
    if (top) return true;
  }
  return false;
}

using Rel = std::vector<std::vector<bool>>;

Rel relation_of(const FinPreorder& p) {
  Rel r(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) r[i][j] = p.leq(i, j);
  return r;
}

// All reflexive transitive relations on n points, by brute force.
std::size_t labeled_preorders(std::size_t n) {
  std::size_t count = 0;
  const std::size_t bits = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    auto at = [&](std::size_t i, std::size_t j) { return (m >> (i * n + j)) & 1u; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = at(i, i);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          if (at(i, j) && at(j, k) && !at(i, k)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST(Preorder, ClosureAndPredicates) {
  auto c = chain(3);
  EXPECT_TRUE(c.leq(0, 2));
  EXPECT_FALSE(c.leq(2, 0));
  EXPECT_TRUE(c.is_total());
  EXPECT_TRUE(c.is_antisymmetric());
  EXPECT_FALSE(c.is_equivalence());
  EXPECT_TRUE(discrete(3).is_equivalence());
  EXPECT_TRUE(codiscrete(3).is_codiscrete());
  // contains: every pair of the argument is a pair of this preorder
  EXPECT_TRUE(chain(3).contains(discrete(3)));
  EXPECT_FALSE(discrete(3).contains(chain(3)));
  EXPECT_TRUE(codiscrete(3).contains(chain(3)));
}

TEST(Preorder, IsoClassesAccountForAllLabelings) {
  // Orbit sizes of the iso representatives must add up to the labeled count.
  for (std::size_t n = 0; n <= 4; ++n) {
    std::set<Rel> all;
    for (const auto& p : preorders_up_to_iso(n)) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      auto r = relation_of(p);
      do {
        Rel q(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) q[perm[i]][perm[j]] = r[i][j];
        all.insert(q);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    EXPECT_EQ(all.size(), labeled_preorders(n)) << n;
  }
  EXPECT_EQ(preorders_up_to_iso(3).size(), 9u);
  EXPECT_EQ(preorders_up_to_iso(4).size(), 33u);
}

TEST(OrderedPartitions, FubiniNumbers) {
  // Ordered set partitions of n elements: 1, 3, 13, 75.
  std::vector<std::size_t> fubini{1, 3, 13, 75};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(ordered_partitions_refining(discrete(n)).size(), fubini[n - 1]);
  // A chain of n admits 2^(n-1) compressions.
  EXPECT_EQ(ordered_partitions_refining(chain(4)).size(), 8u);
}

TEST(Lin, Examples) {
  auto l2 = lin(discrete(2));
  EXPECT_EQ(l2.size(), 2u);
  EXPECT_FALSE(l2.leq(0, 1));
  EXPECT_FALSE(l2.leq(1, 0));
  EXPECT_TRUE(lin(codiscrete(3)).empty());
  auto l3 = lin(chain(3));
  EXPECT_EQ(l3.size(), 3u);
  EXPECT_TRUE(has_maximum(l3));
  EXPECT_EQ(lin(discrete(3)).size(), 12u);
}

TEST(Dc, Examples) {
  EXPECT_EQ(dc(chain(2)).size(), 1u);
  auto d2 = dc(discrete(2));
  EXPECT_EQ(d2.size(), 2u);
  EXPECT_FALSE(d2.leq(0, 1) || d2.leq(1, 0));
  EXPECT_EQ(dc(discrete(3)).size(), 6u);
  EXPECT_TRUE(dc(codiscrete(3)).empty());
  // A chain of n has n - 1 proper nonempty down-sets, totally ordered.
  auto d4 = dc(chain(4));
  EXPECT_EQ(d4.size(), 3u);
  EXPECT_TRUE(d4.is_total());
}

TEST(Sd, Examples) {
  auto c2 = FinPoset(chain(2));
  EXPECT_EQ(barycentric_sd(c2).size(), 3u);
  auto a2 = FinPoset(discrete(2));
  auto sa = barycentric_sd(a2);
  EXPECT_EQ(sa.size(), 2u);
  EXPECT_TRUE(iso_check(sa, a2));
  EXPECT_EQ(barycentric_sd(dc(discrete(3))).size(), 12u);
  EXPECT_EQ(chains(FinPoset(chain(3))).size(), 7u);
}

TEST(Dismantle, Examples) {
  EXPECT_TRUE(dismantle(FinPoset(chain(3))));
  EXPECT_TRUE(dismantle(lin(chain(3))));
  EXPECT_FALSE(dismantle(FinPoset(discrete(2))));
  EXPECT_FALSE(dismantle(lin(discrete(3))));
  EXPECT_EQ(beat_core(lin(discrete(3))).count(), 12u);
}

TEST(Iso, Examples) {
  EXPECT_TRUE(iso_check(lin(discrete(2)), barycentric_sd(dc(discrete(2)))));
  EXPECT_FALSE(iso_check(FinPoset(chain(2)), FinPoset(discrete(2))));
  EXPECT_TRUE(iso_check(lin(chain(3)), barycentric_sd(dc(chain(3)))));
  EXPECT_TRUE(iso_check(lin(discrete(3)), barycentric_sd(dc(discrete(3)))));
  EXPECT_FALSE(iso_check(lin(discrete(3)), barycentric_sd(FinPoset(discrete(3)))));
}

TEST(Subposet, KeepsInducedOrder) {
  auto c = FinPoset(chain(4));
  Bitset keep(4);
  keep.set(0);
  keep.set(3);
  auto s = subposet(c, keep);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.leq(0, 1));
  EXPECT_EQ(s.label(1), "d");
}
