#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tfc/cell_table.hpp"
#include "tfc/decomp.hpp"
#include "tfc/theta.hpp"

namespace tfc {

// A named pass/fail check with an explanation.
struct NamedCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct DimensionReport {
  int dim = 0;
  bool acyclic = true;
  std::vector<std::string> cycle;  // closed walk of atom ids when cyclic
  std::vector<std::string> empty_boundary;  // atoms with an empty minus or plus set
};

// Only acyclicity and nonemptiness are checked literally; the rest of
// torsion-freeness is covered by the semantic battery, marked as surrogate.
struct ValidationReport {
  bool valid = true;
  bool surrogate = true;
  std::vector<DimensionReport> dims;
  NamedCheck atom_cells{"atom-cells"};
  std::vector<NamedCheck> extra;
};

using ExtraCheck = std::function<NamedCheck(const Complex&)>;

struct ValidateOptions {
  // Adds hypercancellativity and Θ-regularity of F(P).
  bool deep = false;
  std::size_t max_cells = 200'000;
  std::vector<ExtraCheck> extra_checks;
};

inline ValidationReport validate(const Complex& c, const ValidateOptions& opt = {}) {
  ValidationReport r;
  for (int n = 1; n <= c.dim(); ++n) {
    DimensionReport d;
    d.dim = n;
    auto cyc = find_cycle(c, triangle_relation(c, n));
    if (!cyc.empty()) {
      d.acyclic = false;
      for (AtomIndex a : cyc) d.cycle.push_back(c.id(a));
    }
    for (AtomIndex a : c.atoms_of_dim(n))
      if (c.minus(a).none() || c.plus(a).none()) d.empty_boundary.push_back(c.id(a));
    if (!d.acyclic || !d.empty_boundary.empty()) r.valid = false;
    r.dims.push_back(std::move(d));
  }
  for (AtomIndex a = 0; a < c.size(); ++a) {
    auto chk = is_cell(c, atom_cell(c, a));
    if (!chk) {
      r.atom_cells.ok = false;
      if (r.atom_cells.detail.empty()) r.atom_cells.detail = "<" + c.id(a) + ">: " + chk.reason;
    }
  }
  if (!r.atom_cells.ok) r.valid = false;
  if (opt.deep && r.valid) {
    CellTable t(c, {opt.max_cells, Traversal::fifo});
    auto h = check_hypercancellative(t);
    r.extra.push_back({"hypercancellative", h.ok, h.witness});
    DecompSpace s(t);
    auto reg = check_theta_regular(s, t.size());
    r.extra.push_back({"theta-regular", reg.ok, reg.failure});
  }
  for (const auto& f : opt.extra_checks) r.extra.push_back(f(c));
  for (const auto& e : r.extra)
    if (!e.ok) r.valid = false;
  return r;
}

}  // namespace tfc
