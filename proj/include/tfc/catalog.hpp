#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tfc/complex.hpp"

namespace tfc {

// Globe with atoms a0-, a0+, ..., a(n-1)-, a(n-1)+ and the top atom a<n>.
inline Complex globe(int n) {
  if (n < 0) throw InputError("globe dimension must be nonnegative");
  std::vector<AtomSpec> atoms;
  auto name = [](int k, const char* s) { return "a" + std::to_string(k) + s; };
  for (int k = 0; k <= n; ++k) {
    std::vector<const char*> sides = k < n ? std::vector<const char*>{"-", "+"} : std::vector<const char*>{""};
    for (const char* s : sides) {
      AtomSpec a{name(k, s), k, {}, {}};
      if (k > 0) {
        a.minus = {name(k - 1, "-")};
        a.plus = {name(k - 1, "+")};
      }
      atoms.push_back(std::move(a));
    }
  }
  return Complex(std::move(atoms), "globe(" + std::to_string(n) + ")");
}

namespace detail {
inline std::string vertex_word(const std::vector<int>& vs, int n) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (n > 9 && i > 0) out += '.';
    out += std::to_string(vs[i]);
  }
  return out;
}
}  // namespace detail

// Nonempty vertex subsets of the n-simplex. The face dropping the j-th
// vertex of a d-dimensional face lies in minus iff j + d is even.
inline Complex oriental(int n) {
  if (n < 0) throw InputError("oriental dimension must be nonnegative");
  if (n > 20) throw InputError("oriental dimension too large");
  std::vector<std::vector<int>> subsets;
  for (unsigned m = 1; m < (1u << (n + 1)); ++m) {
    std::vector<int> s;
    for (int v = 0; v <= n; ++v)
      if (m >> v & 1u) s.push_back(v);
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<AtomSpec> atoms;
  for (const auto& s : subsets) {
    const int d = static_cast<int>(s.size()) - 1;
    AtomSpec a{detail::vertex_word(s, n), d, {}, {}};
    if (d > 0)
      for (int j = 0; j <= d; ++j) {
        auto f = s;
        f.erase(f.begin() + j);
        ((j + d) % 2 == 0 ? a.minus : a.plus).push_back(detail::vertex_word(f, n));
      }
    atoms.push_back(std::move(a));
  }
  return Complex(std::move(atoms), "oriental(" + std::to_string(n) + ")");
}

// Words over {0,1,*}. Numbering stars from the right, setting star j to 0
// lands in minus iff j is odd, setting it to 1 lands in minus iff j is even.
inline Complex gray_cube(int n) {
  if (n < 0) throw InputError("cube dimension must be nonnegative");
  if (n > 12) throw InputError("cube dimension too large");
  std::vector<std::string> words{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char ch : {'0', '1', '*'}) next.push_back(w + ch);
    words = std::move(next);
  }
  auto stars = [](const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), '*')); };
  std::stable_sort(words.begin(), words.end(), [&](const auto& a, const auto& b) {
    return stars(a) != stars(b) ? stars(a) < stars(b) : a < b;
  });
  std::vector<AtomSpec> atoms;
  for (const auto& w : words) {
    AtomSpec a{w, stars(w), {}, {}};
    int j = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
      if (w[static_cast<std::size_t>(pos)] != '*') continue;
      ++j;
      for (char v : {'0', '1'}) {
        auto f = w;
        f[static_cast<std::size_t>(pos)] = v;
        bool in_minus = (v == '0') == (j % 2 == 1);
        (in_minus ? a.minus : a.plus).push_back(f);
      }
    }
    std::sort(a.minus.begin(), a.minus.end());
    std::sort(a.plus.begin(), a.plus.end());
    atoms.push_back(std::move(a));
  }
  return Complex(std::move(atoms), "cube(" + std::to_string(n) + ")");
}

}  // namespace tfc
