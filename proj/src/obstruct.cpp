#include "thurston/obstruct.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "thurston/errors.hpp"
#include "thurston/parallel.hpp"

namespace thurston {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(CandidateVerdict v) {
  switch (v) {
    case CandidateVerdict::Accept: return "accept";
    case CandidateVerdict::Reject: return "reject";
    case CandidateVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(DecompositionComponent::Kind kind) {
  switch (kind) {
    case DecompositionComponent::Kind::Homeomorphism: return "homeomorphism";
    case DecompositionComponent::Kind::TwoTwoTwoTwo: return "2222";
    case DecompositionComponent::Kind::Other: return "other";
  }
  return "?";
}

CurveTable CurveTable::create(unsigned degree, std::vector<std::string> marked_points,
                              std::vector<CurveClass> classes) {
  if (degree < 2) throw PreconditionError("map degree must be >= 2, got " + std::to_string(degree));
  const std::set<std::string> marked(marked_points.begin(), marked_points.end());
  if (marked.size() != marked_points.size()) throw InputError("marked_points: duplicate label");

  CurveTable t;
  t.degree_ = degree;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].id.empty()) throw InputError("classes[" + std::to_string(i) + "].id: empty id");
    if (!t.index_.emplace(classes[i].id, i).second)
      throw InputError("classes[" + std::to_string(i) + "].id: duplicate id '" + classes[i].id + "'");
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const std::string where = "classes[" + std::to_string(i) + "]";
    unsigned long row_degree = 0;
    for (std::size_t k = 0; k < c.preimages.size(); ++k) {
      const auto& comp = c.preimages[k];
      if (comp.degree < 1) throw InputError(where + ".preimages[" + std::to_string(k) + "].degree: must be >= 1");
      if (comp.kind == TargetKind::Class && !t.index_.contains(comp.target))
        throw InputError(where + ".preimages[" + std::to_string(k) + "].target: unknown class '" + comp.target + "'");
      row_degree += comp.degree;
    }
    if (row_degree > degree)
      throw PreconditionError(where + ": preimage degrees sum to " + std::to_string(row_degree) +
                              ", more than the map degree " + std::to_string(degree));
    if (c.partition) {
      std::set<std::string> seen;
      for (const auto* side : {&c.partition->first, &c.partition->second})
        for (const auto& label : *side) {
          if (!marked.contains(label)) throw InputError(where + ".partition: unknown marked point '" + label + "'");
          if (!seen.insert(label).second) throw InputError(where + ".partition: point '" + label + "' on both sides");
        }
      if (seen.size() != marked.size())
        throw PreconditionError(where + ".partition: sides do not cover the marked set");
      if (c.partition->first.size() < 2 || c.partition->second.size() < 2)
        throw PreconditionError(where + ".partition: a side has fewer than two marked points (curve not essential)");
    }
  }
  t.marked_points_ = std::move(marked_points);
  t.classes_ = std::move(classes);
  return t;
}

std::size_t CurveTable::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown curve class '" + id + "'");
  return it->second;
}

std::vector<std::string> CurveTable::all_ids() const {
  std::vector<std::string> ids;
  for (const auto& c : classes_) ids.push_back(c.id);
  return ids;
}

bool CurveTable::has_untracked() const {
  for (const auto& c : classes_)
    for (const auto& comp : c.preimages)
      if (comp.kind == TargetKind::Untracked) return true;
  return false;
}

namespace {

// Position of every class of gamma in the table, rejecting duplicates.
std::unordered_map<std::string, std::size_t> positions(const CurveTable& table, const Multicurve& gamma) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    table.index_of(gamma[i]);
    if (!pos.emplace(gamma[i], i).second) throw InputError("multicurve lists '" + gamma[i] + "' twice");
  }
  return pos;
}

Multicurve select(const Multicurve& gamma, std::span<const std::size_t> idx) {
  Multicurve out;
  for (std::size_t i : idx) out.push_back(gamma[i]);
  return out;
}

bool strongly_connected(const NonnegMatrix& m) { return is_irreducible(m); }

}  // namespace

NonnegMatrix thurston_matrix(const CurveTable& table, const Multicurve& gamma) {
  const auto pos = positions(table, gamma);
  std::vector<std::vector<Rational>> rows(gamma.size(), std::vector<Rational>(gamma.size()));
  for (std::size_t j = 0; j < gamma.size(); ++j)
    for (const auto& comp : table.classes()[table.index_of(gamma[j])].preimages) {
      if (comp.kind != TargetKind::Class) continue;
      const auto it = pos.find(comp.target);
      if (it == pos.end()) continue;
      rows[it->second][j] += Rational(1, comp.degree);
    }
  return NonnegMatrix::from_rows(rows);
}

Verdict is_invariant(const CurveTable& table, const Multicurve& gamma) {
  const auto pos = positions(table, gamma);
  bool untracked = false;
  for (const auto& id : gamma)
    for (const auto& comp : table.classes()[table.index_of(id)].preimages) {
      if (comp.kind == TargetKind::Untracked) untracked = true;
      if (comp.kind == TargetKind::Class && !pos.contains(comp.target)) return Verdict::No;
    }
  return untracked ? Verdict::Unknown : Verdict::Yes;
}

Verdict is_completely_invariant(const CurveTable& table, const Multicurve& gamma) {
  const Verdict inv = is_invariant(table, gamma);
  if (inv != Verdict::Yes) return inv;
  std::set<std::string> covered;
  for (const auto& id : gamma)
    for (const auto& comp : table.classes()[table.index_of(id)].preimages)
      if (comp.kind == TargetKind::Class) covered.insert(comp.target);
  return covered.size() == gamma.size() ? Verdict::Yes : Verdict::No;
}

MulticurveClass classify_multicurve(const CurveTable& table, const Multicurve& gamma) {
  MulticurveClass out{spectral_radius_class(thurston_matrix(table, gamma)), false};
  out.obstruction = out.spectral.tag != SpectralTag::BelowOne;
  return out;
}

std::optional<std::vector<Rational>> is_simple_obstruction(const CurveTable& table, const Multicurve& gamma) {
  return exists_positive_subinvariant_vector(thurston_matrix(table, gamma));
}

Multicurve extract_simple_core(const CurveTable& table, const Multicurve& gamma) {
  if (!classify_multicurve(table, gamma).obstruction)
    throw PreconditionError("extract_simple_core: multicurve is not a Thurston obstruction");

  Multicurve current = gamma;
  for (;;) {
    const NonnegMatrix m = thurston_matrix(table, current);
    const auto blocks = scc_partition(m).blocks();
    std::optional<std::vector<std::size_t>> removable;
    for (const auto& block : blocks) {
      // A block is closed when no edge leaves it.
      bool sink = true;
      for (std::size_t i : block)
        for (std::size_t j = 0; j < m.size() && sink; ++j)
          if (m.has_edge(i, j) && std::find(block.begin(), block.end(), j) == block.end()) sink = false;
      if (sink && LeadingEigenvalue(m.principal(block)).compare(Rational(1)) < 0) {
        removable = block;
        break;
      }
    }
    if (!removable) return current;
    Multicurve next;
    for (std::size_t i = 0; i < current.size(); ++i)
      if (std::find(removable->begin(), removable->end(), i) == removable->end()) next.push_back(current[i]);
    current = std::move(next);
  }
}

std::vector<Multicurve> find_levy_cycles(const CurveTable& table) {
  constexpr std::size_t cycle_limit = 100000;
  const std::size_t n = table.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& comp : table.classes()[j].preimages)
      if (comp.kind == TargetKind::Class && comp.degree == 1) adj[j][table.index_of(comp.target)] = true;

  std::vector<Multicurve> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  // Cycles through `start` whose other vertices all exceed it.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (w == start) {
        Multicurve c;
        for (std::size_t u : path) c.push_back(table.classes()[u].id);
        cycles.push_back(std::move(c));
        if (cycles.size() > cycle_limit) throw ResourceLimitError("more than 100000 Levy cycles");
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        extend(start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  return cycles;
}

std::vector<Multicurve> find_minimal_obstructions(const CurveTable& table, std::size_t subset_cap) {
  const std::size_t n = table.size();
  if (n > subset_cap)
    throw ResourceLimitError("table has " + std::to_string(n) + " classes, above the subset cap " +
                             std::to_string(subset_cap));
  if (n > 63) throw ResourceLimitError("minimal-obstruction search supports at most 63 classes");

  const Multicurve ids = table.all_ids();
  const NonnegMatrix full = thurston_matrix(table, ids);
  std::vector<std::uint64_t> found;

  const auto members = [&](std::uint64_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) idx.push_back(i);
    return idx;
  };

  for (std::size_t k = 1; k <= n; ++k) {
    // k-subsets in lexicographic order of their sorted index lists.
    std::vector<std::uint64_t> level;
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
      std::uint64_t mask = 0;
      for (std::size_t i : comb) mask |= std::uint64_t{1} << i;
      const bool dominated = std::any_of(found.begin(), found.end(), [&](std::uint64_t f) { return (f & mask) == f; });
      if (!dominated) level.push_back(mask);
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }

    std::vector<char> hit(level.size(), 0);
    parallel_for(level.size(), [&](std::size_t i) {
      const NonnegMatrix sub = full.principal(members(level[i]));
      // A minimal obstruction is irreducible: otherwise one of its diagonal
      // blocks already carries the leading eigenvalue.
      if (!strongly_connected(sub)) return;
      hit[i] = LeadingEigenvalue(sub).compare(Rational(1)) >= 0;
    });
    for (std::size_t i = 0; i < level.size(); ++i)
      if (hit[i]) found.push_back(level[i]);
  }

  std::vector<Multicurve> out;
  for (std::uint64_t mask : found) out.push_back(select(ids, members(mask)));
  return out;
}

namespace {

ComponentVerdict check_component(const DecompositionComponent& comp) {
  ComponentVerdict v{comp.label, comp.kind, CandidateVerdict::Accept, {}, std::nullopt, std::nullopt};
  switch (comp.kind) {
    case DecompositionComponent::Kind::Homeomorphism:
      v.reason = "homeomorphism first-return map: accepted without a finite certificate";
      return v;

    case DecompositionComponent::Kind::TwoTwoTwoTwo: {
      const TorusQuotientMap map = TorusQuotientMap::normalize(comp.action, comp.marked_points);
      if (auto canonical = canonical_obstruction_2222(map)) {
        v.verdict = CandidateVerdict::Reject;
        v.reason = "homology action has distinct integer eigenvalues " + std::to_string(canonical->d1) + " < " +
                   std::to_string(canonical->d2) + "; slope " + canonical->slope.to_string() +
                   " is a canonical obstruction of the first-return map";
        v.canonical_slope = std::move(canonical);
        return v;
      }
      if (!comp.table) {
        v.reason = "eigenvalues equal or non-integer; no component table supplied for the two-and-two check";
        return v;
      }
      const CurveTable& t = *comp.table;
      const Multicurve all = t.all_ids();
      if (!all.empty() && classify_multicurve(t, all).obstruction) {
        const Multicurve core = extract_simple_core(t, all);
        for (const auto& id : core) {
          const auto& cls = t.classes()[t.index_of(id)];
          if (!cls.partition)
            throw InputError("component '" + comp.label + "': class '" + id +
                             "' lies in a simple obstruction but has no partition data");
          if (cls.partition->first.size() != 2 || cls.partition->second.size() != 2) {
            v.verdict = CandidateVerdict::Reject;
            v.reason = "class '" + id + "' of a simple obstruction does not split the marked points two and two";
            v.obstruction = core;
            return v;
          }
        }
      }
      if (t.has_untracked()) {
        v.verdict = CandidateVerdict::Inconclusive;
        v.reason = "component table has untracked preimages; simple obstructions may be missed";
        return v;
      }
      v.reason = "eigenvalues equal or non-integer; every simple obstruction in the table splits two and two";
      return v;
    }

    case DecompositionComponent::Kind::Other: {
      if (!comp.table) throw InputError("component '" + comp.label + "': type 'other' requires a curve table");
      const CurveTable& t = *comp.table;
      const Multicurve all = t.all_ids();
      if (!all.empty() && classify_multicurve(t, all).obstruction) {
        v.verdict = CandidateVerdict::Reject;
        v.obstruction = extract_simple_core(t, all);
        v.reason = "first-return map has a Thurston obstruction in its table";
        return v;
      }
      if (t.has_untracked()) {
        v.verdict = CandidateVerdict::Inconclusive;
        v.reason = "no obstruction among tracked classes, but the table has untracked preimages";
        return v;
      }
      v.reason = "no Thurston obstruction among the supplied classes";
      return v;
    }
  }
  return v;
}

}  // namespace

CanonicalCheck check_canonical_candidate(const CurveTable& table, const Multicurve& gamma,
                                         std::span<const DecompositionComponent> decomposition) {
  if (gamma.empty()) throw InputError("canonical candidate must be a nonempty multicurve");
  if (decomposition.empty()) throw InputError("decomposition: missing entries for the periodic components");
  if (decomposition.size() > gamma.size() + 1)
    throw PreconditionError("decomposition lists " + std::to_string(decomposition.size()) +
                            " components, but a multicurve of " + std::to_string(gamma.size()) +
                            " curves has at most " + std::to_string(gamma.size() + 1));

  CanonicalCheck out;
  const NonnegMatrix m = thurston_matrix(table, gamma);
  out.candidate_class = classify_multicurve(table, gamma);
  out.simple_certificate = exists_positive_subinvariant_vector(m);
  if (!out.simple_certificate)
    if (auto witness = find_closed_subset_below_one(m)) out.non_simple_witness = select(gamma, *witness);
  out.completely_invariant = is_completely_invariant(table, gamma);

  if (!out.candidate_class.obstruction) out.reasons.push_back("candidate is not a Thurston obstruction (lambda < 1)");
  else if (!out.simple_certificate) out.reasons.push_back("candidate is not a simple obstruction");
  if (out.completely_invariant == Verdict::No) out.reasons.push_back("candidate is not completely invariant");
  if (!out.reasons.empty()) {
    out.verdict = CandidateVerdict::Reject;
    return out;
  }
  if (out.completely_invariant == Verdict::Unknown) {
    out.reasons.push_back("complete invariance undecided: candidate rows have untracked preimages");
    out.verdict = CandidateVerdict::Inconclusive;
    return out;
  }

  bool inconclusive = false;
  bool rejected = false;
  for (const auto& comp : decomposition) {
    out.components.push_back(check_component(comp));
    rejected = rejected || out.components.back().verdict == CandidateVerdict::Reject;
    inconclusive = inconclusive || out.components.back().verdict == CandidateVerdict::Inconclusive;
    if (out.components.back().verdict != CandidateVerdict::Accept)
      out.reasons.push_back("component '" + comp.label + "': " + out.components.back().reason);
  }
  out.verdict = rejected ? CandidateVerdict::Reject
                : inconclusive ? CandidateVerdict::Inconclusive
                               : CandidateVerdict::Accept;
  if (out.verdict == CandidateVerdict::Accept)
    out.reasons.push_back("certified relative to the supplied tables");
  return out;
}

ObstructionReport analyze_table(const CurveTable& table, const Multicurve& gamma, std::size_t subset_cap) {
  ObstructionReport r;
  r.multicurve = gamma.empty() ? table.all_ids() : gamma;
  r.matrix = thurston_matrix(table, r.multicurve);
  r.classification = classify_multicurve(table, r.multicurve);
  r.invariant = is_invariant(table, r.multicurve);
  r.completely_invariant = is_completely_invariant(table, r.multicurve);
  r.simple_certificate = exists_positive_subinvariant_vector(r.matrix);
  if (!r.simple_certificate) r.non_simple_witness = find_closed_subset_below_one(r.matrix);
  if (r.classification.obstruction) r.simple_core = extract_simple_core(table, r.multicurve);
  r.levy_cycles = find_levy_cycles(table);
  r.minimal_obstructions = find_minimal_obstructions(table, subset_cap);
  return r;
}

}  // namespace thurston
