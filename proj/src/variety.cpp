/*
 Copyright 2026 The singular-sos Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "singular_sos/variety.hpp"

#include <algorithm>
#include <set>

#include "singular_sos/factor.hpp"

namespace singular_sos {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::positive_dim:
      return "positive-dim";
    case NodeKind::zero_dim:
      return "zero-dim";
    case NodeKind::empty:
      return "empty";
  }
  return "?";
}

VarietyNode make_node(const Ideal& I, std::vector<Provenance> provenance) {
  VarietyNode node;
  node.ideal = I;
  node.dim = ideal_dimension(I);
  if (!node.dim) node.kind = NodeKind::empty;
  else if (*node.dim == 0) node.kind = NodeKind::zero_dim;
  else node.kind = NodeKind::positive_dim;
  node.provenance = std::move(provenance);
  return node;
}

VarietyNode make_node(std::size_t nvars, const std::vector<Polynomial>& generators) {
  return make_node(Ideal(nvars, generators));
}

namespace {

/// Same-sign sum of monomials with even exponents (at least one nonconstant term).
bool is_even_sum(const Polynomial& g) {
  if (g.size() < 2) return false;
  int sign = 0;
  for (const auto& [m, c] : g.terms()) {
    for (unsigned e : m.exponents())
      if (e % 2) return false;
    int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

Polynomial support_product(const Monomial& m) {
  Polynomial p = Polynomial::constant(m.nvars(), 1);
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i]) p *= Polynomial::variable(m.nvars(), i);
  return p;
}

std::string basis_key(const Ideal& I) {
  std::string key;
  for (const auto& g : I.basis()) key += poly_format(g) + ";";
  return key;
}

}  // namespace

Ideal radicalize(const Ideal& I, const RadicalOptions& options) {
  Ideal cur = I;
  if (!options.squarefree && !options.real_rules) return cur;
  for (int round = 0; round < 64; ++round) {
    if (is_trivial(cur)) break;
    const auto& basis = cur.basis();
    std::vector<Polynomial> extra;
    for (const auto& g : basis) {
      if (options.squarefree && g.degree() > 1) {
        Polynomial s = squarefree_part(g);
        if (s.degree() < g.degree()) extra.push_back(std::move(s));
      }
      if (options.real_rules && is_even_sum(g))
        for (const auto& [m, c] : g.terms()) extra.push_back(support_product(m));
    }
    std::vector<Polynomial> fresh;
    for (auto& e : extra)
      if (!ideal_membership(e, cur)) fresh.push_back(std::move(e));
    if (fresh.empty()) break;
    cur = cur.extended_by(fresh);
  }
  return Ideal(cur.nvars(), cur.basis(), cur.order(), cur.options());
}

VarietyNode singular_locus(const VarietyNode& V, const RadicalOptions& options) {
  const std::size_t n = V.ideal.nvars();
  Ideal R = radicalize(V.ideal, options);
  auto dim = ideal_dimension(R);
  std::vector<Provenance> prov = V.provenance;
  prov.push_back({V.depth() + 1, V.id});
  if (!dim) throw std::invalid_argument("singular_locus: the variety is empty");
  const auto& gens = R.basis();
  const std::size_t t = n - static_cast<std::size_t>(*dim);
  if (t == 0) return make_node(Ideal(n, {Polynomial::constant(n, 1)}), prov);
  std::vector<Polynomial> all = gens;
  if (gens.size() >= t) {
    auto mins = minors(gens, t, n);
    for (auto& m : mins)
      if (!m.is_zero()) all.push_back(std::move(m));
  }
  Ideal S = radicalize(Ideal(n, all, V.ideal.order(), V.ideal.options()), options);
  VarietyNode node = make_node(S, std::move(prov));
  if (node.dim && *node.dim >= *dim)
    throw LoopGuardError("singular locus has dimension " + std::to_string(*node.dim) +
                         ", not below the variety's dimension " + std::to_string(*dim) +
                         "; the generators are probably not radical (e.g. a repeated factor)");
  return node;
}

ComponentSplit irreducible_components(const VarietyNode& V, const RadicalOptions& options) {
  ComponentSplit out;
  struct Found {
    Ideal ideal;
    bool incomplete;
  };
  std::vector<Found> found;
  std::set<std::string> seen;
  bool any_incomplete = false;

  // Depth-first factor splitting over an explicit stack (deterministic order).
  std::vector<Ideal> stack{V.ideal};
  while (!stack.empty()) {
    Ideal J = radicalize(stack.back(), options);
    stack.pop_back();
    if (is_trivial(J)) continue;
    if (!seen.insert(basis_key(J)).second) continue;
    bool split = false;
    bool incomplete = false;
    for (const auto& g : J.basis()) {
      if (g.degree() <= 1) continue;
      Factorization F = factor_bounded(g);
      if (!F.complete()) incomplete = true;
      if (F.factors.size() >= 2) {
        for (const auto& f : F.factors) stack.push_back(J.extended_by({f.poly}));
        split = true;
        break;
      }
    }
    if (!split) {
      found.push_back({J, incomplete});
      any_incomplete = any_incomplete || incomplete;
    }
  }

  // Drop components contained in another one.
  std::vector<bool> keep(found.size(), true);
  for (std::size_t a = 0; a < found.size(); ++a)
    for (std::size_t b = 0; b < found.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (ideal_contains(found[b].ideal, found[a].ideal)) keep[a] = false;
    }
  for (std::size_t a = 0; a < found.size(); ++a) {
    if (!keep[a]) continue;
    VarietyNode node = make_node(found[a].ideal, V.provenance);
    node.incomplete = found[a].incomplete;
    out.components.push_back(std::move(node));
  }
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const VarietyNode& x, const VarietyNode& y) { return x.dim.value_or(-1) > y.dim.value_or(-1); });
  if (any_incomplete)
    out.warnings.push_back("decomposition incomplete: a factor could not be decided irreducible; components may be coarser than irreducible");
  return out;
}

Decomposition decompose_singular_loci(const VarietyNode& V, const RadicalOptions& options) {
  const std::size_t n = V.ideal.nvars();
  Decomposition D;
  std::vector<VarietyNode> registry;
  struct Pending {
    Ideal ideal;
    std::vector<Provenance> provenance;
  };
  std::vector<Pending> level{{V.ideal, {}}};
  int depth = 0;
  while (!level.empty()) {
    if (depth > static_cast<int>(n)) throw std::logic_error("decomposition exceeded the ambient dimension in depth");
    std::vector<Pending> next;
    for (const auto& item : level) {
      VarietyNode U = make_node(item.ideal);
      if (U.kind == NodeKind::empty) continue;
      auto split = irreducible_components(U, options);
      for (auto& w : split.warnings)
        if (std::find(D.warnings.begin(), D.warnings.end(), w) == D.warnings.end()) D.warnings.push_back(w);
      for (auto& comp : split.components) {
        comp.provenance = item.provenance;
        if (comp.provenance.empty()) comp.provenance.push_back({0, -1});
        auto dup = std::find_if(registry.begin(), registry.end(),
                                [&](const VarietyNode& r) { return same_ideal(r.ideal, comp.ideal); });
        if (dup != registry.end()) {
          D.diagnostics.push_back("component at depth " + std::to_string(depth) + " duplicates node " +
                                  std::to_string(dup->id) + "; dropped");
          continue;
        }
        comp.id = static_cast<int>(registry.size());
        registry.push_back(comp);
        if (comp.kind == NodeKind::zero_dim) {
          D.B.push_back(comp);
          continue;
        }
        D.A.push_back(comp);
        VarietyNode S = singular_locus(comp, options);
        if (S.kind == NodeKind::empty) {
          D.diagnostics.push_back("singular locus of node " + std::to_string(comp.id) + " is empty; dropped");
          continue;
        }
        next.push_back({S.ideal, S.provenance});
      }
    }
    level = std::move(next);
    ++depth;
  }
  return D;
}

std::vector<std::string> KKTSystem::variable_names(const std::vector<std::string>& x_names) const {
  std::vector<std::string> names = x_names;
  for (std::size_t j = 0; j < nl; ++j) names.push_back("lambda" + std::to_string(j + 1));
  return names;
}

KKTSystem kkt_system(const Polynomial& h0, const std::vector<Polynomial>& h) {
  KKTSystem sys;
  sys.nx = h0.nvars();
  sys.nl = h.size();
  const std::size_t N = sys.nvars();
  for (const auto& g : h) {
    if (g.nvars() != sys.nx) throw std::invalid_argument("kkt_system: ring size mismatch");
    sys.polynomials.push_back(g.extended(N));
  }
  for (std::size_t t = 0; t < sys.nx; ++t) {
    Polynomial row = h0.derivative(t).extended(N);
    for (std::size_t j = 0; j < h.size(); ++j)
      row -= Polynomial::variable(N, sys.nx + j) * h[j].derivative(t).extended(N);
    sys.polynomials.push_back(std::move(row));
  }
  return sys;
}

KKTSystem kkt_system(const Polynomial& h0, const VarietyNode& V) { return kkt_system(h0, V.ideal.generators()); }

std::vector<std::string> format_generators(const VarietyNode& V, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& g : V.ideal.basis()) out.push_back(poly_format(g, names));
  return out;
}

}  // namespace singular_sos
