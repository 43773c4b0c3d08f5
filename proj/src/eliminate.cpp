#include "crn/eliminate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crn {

bool LaplacianSystem::is_cut() const {
  for (const auto& p : d)
    if (!p.is_zero()) return false;
  for (const auto& p : z)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<std::size_t> LaplacianSystem::local_index(std::uint32_t species) const {
  auto it = std::lower_bound(subset.begin(), subset.end(), species);
  if (it == subset.end() || *it != species) return std::nullopt;
  return static_cast<std::size_t>(it - subset.begin());
}

namespace {

// Monomial c^{y(r)} with the coordinate of `dropped` removed.
Monomial initial_monomial_without(const Crn& crn, std::uint32_t r, std::uint32_t dropped) {
  std::vector<Monomial::Factor> factors;
  for (const auto& [sp, coeff] : crn.complex(crn.reaction(r).initial).entries) {
    if (sp == dropped) continue;
    factors.push_back({crn.conc(sp), coeff});
  }
  return Monomial::from_factors(std::move(factors));
}

}  // namespace

LaplacianSystem build_system(const Crn& crn, const std::vector<std::uint32_t>& subset) {
  const Classification cls = classify(crn, subset);
  if (!cls.non_interacting)
    throw DomainError("subset {" + [&] {
      std::string s;
      for (auto sp : subset) s += (s.empty() ? "" : ",") + crn.species_name(sp);
      return s;
    }() + "} is not non-interacting: " + non_interacting_violation_message(crn, cls));
  if (cls.connected_components.size() != 1)
    throw DomainError("subset graph is disconnected; eliminate the components separately");

  const SpeciesGraph g = species_graph(crn, subset);
  const std::size_t m = g.nodes.size();

  LaplacianSystem sys;
  sys.subset = g.nodes;

  // ghat: edge labels a_{i,j} = sum over edges S_j -> S_i of k_r c^{y(r) without j};
  // parallel edges collapse, self-loops contribute nothing.
  LabeledDigraph raw;
  for (auto sp : g.nodes) raw.node_names.push_back(crn.species_name(sp));
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    const auto from = *sys.local_index(e.from);
    const auto to = *sys.local_index(e.to);
    raw.edges.push_back({static_cast<std::uint32_t>(from), static_cast<std::uint32_t>(to),
                         Poly::term(1, Monomial::of(crn.rate(e.reaction)) *
                                           initial_monomial_without(crn, e.reaction, e.from))});
  }
  sys.ghat = collapse_parallel(raw);

  // d and z from the reactions involving a member without being a label.
  std::vector<bool> is_label(crn.reaction_count(), false);
  for (const auto& e : g.edges) is_label[e.reaction] = true;
  sys.d.assign(m, Poly::zero());
  sys.z.assign(m, Poly::zero());
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) {
    if (is_label[r]) continue;
    const auto& rx = crn.reaction(r);
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint32_t sp = sys.subset[i];
      if (crn.complex(rx.initial).involves(sp))
        sys.d[i] -= Poly::term(1, Monomial::of(rx.rate) * initial_monomial_without(crn, r, sp));
      if (crn.complex(rx.terminal).involves(sp))
        sys.z[i] += Poly::term(1, Monomial::of(rx.rate) * crn.complex_monomial(rx.initial));
    }
  }

  // A = laplacian(ghat) + diag(d): column i sums to d_i.
  sys.A = laplacian(sys.ghat);
  for (std::size_t i = 0; i < m; ++i) sys.A.at(i, i) += sys.d[i];

  // C_alpha^c: outside species that interact with or produce a member.
  std::set<Sym> boundary;
  for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp) {
    if (sys.local_index(sp)) continue;
    for (auto member : sys.subset)
      if (crn.interacts(sp, member) || crn.produces(sp, member)) {
        boundary.insert(crn.conc(sp));
        break;
      }
  }
  sys.calpha_c.assign(boundary.begin(), boundary.end());
  return sys;
}

LabeledDigraph star_extended(const LaplacianSystem& sys) {
  LabeledDigraph g = sys.ghat;
  const auto star = static_cast<std::uint32_t>(g.node_names.size());
  g.node_names.push_back("*");
  for (std::uint32_t i = 0; i < sys.size(); ++i) {
    if (!sys.d[i].is_zero()) g.edges.push_back({i, star, -sys.d[i]});
    if (!sys.z[i].is_zero()) g.edges.push_back({star, i, sys.z[i]});
  }
  return g;
}

const RatFn& EliminationResult::value_of(std::uint32_t species) const {
  const auto local = system.local_index(species);
  if (!local) throw std::invalid_argument("species not part of this elimination");
  if (kind == Kind::Cut) return phibar.at(*local);
  if (kind == Kind::NonCut) return phi.at(*local);
  throw std::invalid_argument("elimination failed; no value available");
}

namespace {

[[noreturn]] void sign_bug(const std::string& what) {
  throw std::logic_error("sign bookkeeping error: " + what +
                         " is not S-positive; this is an internal bug");
}

EliminationResult rank_deficient_result(const LaplacianSystem& sys) {
  EliminationResult out;
  out.kind = EliminationResult::Kind::RankDeficient;
  out.subset = sys.subset;
  out.certificate = kernel_basis(sys.A.transposed());
  out.system = sys;
  return out;
}

}  // namespace

EliminationResult eliminate_cut_with_root(const Crn& crn, const LaplacianSystem& sys,
                                          Sym total, std::size_t root_local) {
  if (!sys.is_cut())
    throw std::invalid_argument("eliminate_cut called on a system with z or d nonzero");
  if (total.kind != SymKind::TotalAmount)
    throw std::invalid_argument("cut elimination needs a TotalAmount symbol");
  const std::size_t m = sys.size();

  // sigma_j = sum over spanning trees of ghat rooted at S_j, realized as the
  // signed principal minor (-1)^{m-1} A_(jj).
  std::vector<Poly> sigma(m);
  bool any_nonzero = false;
  for (std::size_t j = 0; j < m; ++j) {
    Poly minor = det_minor(sys.A, j, j);
    sigma[j] = (m % 2 == 0) ? -minor : std::move(minor);
    if (!sigma[j].is_zero() && !sigma[j].is_s_positive())
      sign_bug("sigma of '" + crn.species_name(sys.subset[j]) + "'");
    any_nonzero = any_nonzero || !sigma[j].is_zero();
  }
  if (!any_nonzero) return rank_deficient_result(sys);

  if (root_local >= m || sigma[root_local].is_zero())
    throw std::invalid_argument("chosen root has zero sigma");

  EliminationResult out;
  out.kind = EliminationResult::Kind::Cut;
  out.subset = sys.subset;
  out.system = sys;
  out.sigma = std::move(sigma);
  out.root = sys.subset[root_local];
  out.total = total;

  Poly sigma_sum;
  for (const auto& s : out.sigma) sigma_sum += s;

  // phibar_j = phi_j * phibar_root collapses to total * sigma_j / sum sigma;
  // build it in that form so the sigma_root factor never has to cancel.
  const Poly total_sym = Poly::symbol(total);
  for (std::size_t j = 0; j < m; ++j) {
    out.phi.push_back(RatFn::of(out.sigma[j], out.sigma[root_local]));
    out.phibar.push_back(RatFn::of(total_sym * out.sigma[j], sigma_sum));
  }
  return out;
}

EliminationResult eliminate_cut(const Crn& crn, const LaplacianSystem& sys, Sym total) {
  if (!sys.is_cut())
    throw std::invalid_argument("eliminate_cut called on a system with z or d nonzero");
  const std::size_t m = sys.size();
  // Probe the root: smallest species index with nonzero sigma.
  for (std::size_t j = 0; j < m; ++j) {
    Poly minor = det_minor(sys.A, j, j);
    if (!minor.is_zero()) return eliminate_cut_with_root(crn, sys, total, j);
  }
  return rank_deficient_result(sys);
}

EliminationResult eliminate_noncut(const Crn& crn, const LaplacianSystem& sys) {
  if (sys.is_cut())
    throw std::invalid_argument("eliminate_noncut called on a cut system");
  const std::size_t m = sys.size();

  Poly det = det_fraction_free(sys.A);
  Poly sigma_det = (m % 2 == 1) ? -det : std::move(det);

  if (sigma_det.is_zero()) {
    // No spanning tree rooted at the star node. If d = 0 the rows of A sum
    // to zero, so lambda = (1,...,1) kills A while lambda . z != 0: the
    // system is incompatible. Otherwise look for a non-negative left null
    // vector with lambda . z != 0.
    EliminationResult out = rank_deficient_result(sys);
    bool d_zero = true;
    for (const auto& p : sys.d) d_zero = d_zero && p.is_zero();
    if (d_zero) {
      out.kind = EliminationResult::Kind::Incompatible;
      out.certificate = {std::vector<Poly>(m, Poly::one())};
      return out;
    }
    for (const auto& lambda : out.certificate) {
      bool nonneg = true;
      Poly dot;
      for (std::size_t i = 0; i < m; ++i) {
        nonneg = nonneg && (lambda[i].is_zero() || lambda[i].is_s_positive());
        dot += lambda[i] * sys.z[i];
      }
      if (nonneg && !dot.is_zero()) {
        out.kind = EliminationResult::Kind::Incompatible;
        out.certificate = {lambda};
        return out;
      }
    }
    return out;
  }
  if (!sigma_det.is_s_positive()) sign_bug("sigma");

  // Extended Laplacian: star row -d, star column z.
  PolyMatrix L(m + 1, m + 1);
  Poly z_sum;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) L.at(i, j) = sys.A.at(i, j);
    L.at(i, m) = sys.z[i];
    L.at(m, i) = -sys.d[i];
    z_sum += sys.z[i];
  }
  L.at(m, m) = -z_sum;

  EliminationResult out;
  out.kind = EliminationResult::Kind::NonCut;
  out.subset = sys.subset;
  out.system = sys;
  out.sigma_det = std::move(sigma_det);
  for (std::size_t i = 0; i < m; ++i) {
    Poly minor = det_minor(L, m, i);
    Poly s = (i % 2 == 1) ? -minor : std::move(minor);
    if (!s.is_zero() && !s.is_s_positive())
      sign_bug("sigma of '" + crn.species_name(sys.subset[i]) + "'");
    out.phi.push_back(RatFn::of(s, out.sigma_det));
    out.sigma.push_back(std::move(s));
  }
  return out;
}

std::vector<EliminationResult> eliminate(Crn& crn, const std::vector<std::uint32_t>& subset,
                                         const TotalSpec& totals) {
  const Classification cls = classify(crn, subset);
  if (!cls.non_interacting)
    throw DomainError("subset cannot be eliminated: " +
                      non_interacting_violation_message(crn, cls));

  std::vector<EliminationResult> results;
  for (const auto& component : cls.connected_components) {
    LaplacianSystem sys = build_system(crn, component);
    if (sys.is_cut()) {
      auto it = totals.by_component.find(component);
      if (it == totals.by_component.end()) {
        std::string names;
        for (auto sp : component) names += (names.empty() ? "" : ",") + crn.species_name(sp);
        throw DomainError("missing total amount for cut component {" + names + "}");
      }
      results.push_back(eliminate_cut(crn, sys, crn.ensure_total(it->second)));
    } else {
      results.push_back(eliminate_noncut(crn, sys));
    }
  }

  // Simultaneous elimination needs C(P) disjoint from C^c(Q) for P != Q.
  // Components of one induced graph have no cross-production, so this holds
  // by construction; verify anyway.
  for (const auto& p : results)
    for (const auto& q : results) {
      if (&p == &q) continue;
      for (auto sp : p.subset)
        if (std::binary_search(q.system.calpha_c.begin(), q.system.calpha_c.end(),
                               crn.conc(sp)))
          throw std::logic_error("components cannot be eliminated simultaneously; "
                                 "C(S1) meets C^c(S2)");
    }
  return results;
}

namespace {

// Rank condition only; no totals needed.
bool component_eliminable(const Crn& crn, const std::vector<std::uint32_t>& component) {
  const LaplacianSystem sys = build_system(crn, component);
  if (sys.is_cut()) {
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (!det_minor(sys.A, j, j).is_zero()) return true;
    return false;
  }
  return !det_fraction_free(sys.A).is_zero();
}

bool subset_eliminable(const Crn& crn, const std::vector<std::uint32_t>& subset) {
  const Classification cls = classify(crn, subset);
  if (!cls.non_interacting) return false;
  for (const auto& component : cls.connected_components)
    if (!component_eliminable(crn, component)) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> eliminable_subsets_advisory(
    const Crn& crn, const std::vector<std::uint32_t>& subset) {
  std::vector<std::uint32_t> members = subset;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() > 16)
    throw std::invalid_argument("eliminable-subset search is capped at 16 species");

  std::vector<std::vector<std::uint32_t>> found;
  const std::uint32_t limit = 1u << members.size();
  // Walk masks grouped by decreasing popcount so maximality is a simple
  // containment check against what is already kept.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < limit; ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<std::uint32_t> kept_masks;
  for (std::uint32_t mask : masks) {
    bool covered = false;
    for (std::uint32_t k : kept_masks) covered = covered || ((mask & k) == mask);
    if (covered) continue;
    std::vector<std::uint32_t> candidate;
    for (std::size_t b = 0; b < members.size(); ++b)
      if (mask & (1u << b)) candidate.push_back(members[b]);
    if (subset_eliminable(crn, candidate)) {
      kept_masks.push_back(mask);
      found.push_back(std::move(candidate));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace crn
