// One line per acceptance criterion over the checked-in corpus. Exit status
// is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "tfc/checks.hpp"

using namespace tfc;

namespace {

int failures = 0;

void line(int n, const std::string& what, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %-34s %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::size_t count(const json& d, const char* key) { return d.contains(key) ? d[key].get<std::size_t>() : 0; }

template <class F>
void criterion(int n, const std::string& what, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  line(n, what, ok, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::string first_failure(const CheckReport& r) {
  if (!r.details.contains("targets")) return r.details.dump();
  for (const auto& t : r.details["targets"])
    if (t["verdict"] != "pass") return t.dump();
  return {};
}

}  // namespace

int main() {
  std::vector<Target> corpus;
  try {
    corpus = resolve_targets("corpus", TFC_CORPUS_MANIFEST);
  } catch (const std::exception& e) {
    std::printf("cannot load corpus: %s\n", e.what());
    return 1;
  }
  std::printf("corpus: %zu complexes\n", corpus.size());
  CheckOptions opt;

  criterion(1, "Sd(mu) contractible", [&] {
    auto r = check_thm_a(corpus, opt);
    auto n = count(r.details, "instances"), d = count(r.details, "dismantled");
    std::string s = std::to_string(n) + " composite cells, homology trivial; " + std::to_string(d) + " dismantled";
    if (!r.ok()) s += "; " + first_failure(r);
    return std::pair{r.ok() && n > 0, s};
  });

  criterion(2, "lin(discrete d) is a sphere", [&] {
    bool ok = true;
    std::string s;
    for (int d = 2; d <= 4; ++d) {
      auto h = homology(lin(FinPreorder(std::vector<std::string>(static_cast<std::size_t>(d), ""))));
      bool match = same_homology(h, sphere_homology(d - 2));
      ok = ok && match;
      s += "d=" + std::to_string(d) + ": " + h.describe() + (d < 4 ? "; " : "");
    }
    return std::pair{ok, s};
  });

  criterion(3, "lin(P) iso sd(dc(P))", [&] {
    CheckOptions o = opt;
    o.max_carrier = 4;
    auto r = check_iso_sd(o);
    std::size_t n = 0;
    for (const auto& s : r.details["sizes"]) n += s["preorders"].get<std::size_t>();
    return std::pair{r.ok() && n == 1 + 3 + 9 + 33, std::to_string(n) + " preorders up to iso on <= 4 points"};
  });

  criterion(4, "non-equivalences contract", [&] {
    CheckOptions o = opt;
    o.max_carrier = 4;
    auto r = check_dc_contract(o);
    std::size_t n = 0;
    for (const auto& s : r.details["sizes"]) n += s["preorders"].get<std::size_t>();
    return std::pair{r.ok() && n > 0, std::to_string(n) + " preorders: dc and lin acyclic, dc dismantles"};
  });

  criterion(5, "L_k is a poset isomorphism", [&] {
    auto r = check_pos_iso_all(corpus, opt);
    auto n = count(r.details, "instances");
    return std::pair{r.ok() && n > 0, std::to_string(n) + " (cell, k) instances; " +
                                          std::to_string(count(r.details, "hypothesis_not_met")) +
                                          " outside the hypothesis" + (r.ok() ? "" : "; " + first_failure(r))};
  });

  criterion(6, "exists-min separates atoms", [&] {
    auto r = check_exists_min(corpus, opt);
    return std::pair{r.ok(), std::to_string(count(r.details, "composite_cells")) + " composites with k, " +
                                 std::to_string(count(r.details, "atom_cells")) + " atoms without" +
                                 (r.ok() ? "" : "; " + first_failure(r))};
  });

  criterion(7, "Theta-regular, hypercancellative", [&] {
    auto r = check_regularity(corpus, opt);
    return std::pair{r.ok() && count(r.details, "maps") > 0,
                     std::to_string(count(r.details, "maps")) + " maps monic, " + std::to_string(count(r.details, "pairs")) +
                         " cancellation pairs" + (r.ok() ? "" : "; " + first_failure(r))};
  });

  criterion(8, "cell calculus sound", [&] {
    auto r = check_cell_laws_all(corpus, opt);
    std::size_t assoc = 0, inter = 0;
    for (const auto& t : r.details["targets"]) {
      assoc += count(t, "associativity");
      inter += count(t, "interchange");
    }
    auto g1 = globe(1);
    auto two = term_to_complex(parse_term("[[],[]]"));
    CellTable tg(g1), t2(two);
    auto one_cells = [](const CellTable& t) { return t.counts_up_to_dim().at(1); };
    bool counts = one_cells(tg) == 3 && one_cells(t2) == 6;
    return std::pair{r.ok() && counts && assoc > 0 && inter > 0,
                     std::to_string(assoc) + " associativity and " + std::to_string(inter) +
                         " interchange instances; 1-cells of F(G1), F([2]): " + std::to_string(one_cells(tg)) + ", " +
                         std::to_string(one_cells(t2)) + (r.ok() ? "" : "; " + first_failure(r))};
  });

  criterion(9, "collapse fibers contractible", [&] {
    auto r = check_prop_level_all(corpus, opt);
    auto n = count(r.details, "points");
    return std::pair{r.ok() && n > 0, std::to_string(n) + " points" + (r.ok() ? "" : "; " + first_failure(r))};
  });

  criterion(10, "merging functors cocartesian", [&] {
    auto r = check_cocart_all(corpus, opt);
    auto n = count(r.details, "instances");
    return std::pair{r.ok() && n > 0, std::to_string(n) + " instances" + (r.ok() ? "" : "; " + first_failure(r))};
  });

  criterion(11, "wedge hom formula", [&] {
    auto r = check_wedge_all(corpus, opt);
    auto n = count(r.details, "wedges");
    return std::pair{r.ok() && n > 0, std::to_string(n) + " sink/source wedges" + (r.ok() ? "" : "; " + r.details.dump())};
  });

  std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria fail").c_str());
  return failures == 0 ? 0 : 1;
}
