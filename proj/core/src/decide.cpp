#include "autgroup/decide.hpp"

#include <algorithm>
#include <map>

#include "autgroup/error.hpp"

namespace autgroup {

BoundedAnalysis analyze_bounded(const MealyAutomaton& a) {
  if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "automaton is not invertible");
  BoundedAnalysis out;
  out.input = a;
  out.minimal = minimize(ensure_trivial_state(minimize(a)));
  if (!is_bounded(out.minimal)) throw Error(ErrorKind::NotBounded, "automaton is not bounded");
  out.circuit = minimize(circuit_part(out.minimal));
  out.is_circuit = out.circuit.num_states() == out.minimal.num_states();
  out.post_critical = analyze_post_critical(out.circuit);
  if (!out.post_critical.empty()) {
    out.chain = stabilize(out.post_critical, a.alphabet_size());
    out.re = build_re(*out.chain, a.alphabet());
    out.r = build_r(*out.re, *out.chain, out.post_critical.e_pairs);
  }
  return out;
}

FinitenessReport decide_finite(const BoundedAnalysis& analysis) {
  FinitenessReport rep;
  if (!analysis.has_machines()) {
    rep.finite = true;
    rep.trivial_circuit = true;
    return rep;
  }
  rep.witness = find_accepting_lasso(*analysis.re);
  rep.finite = !rep.witness;
  return rep;
}

FinitenessReport decide_finite(const MealyAutomaton& a) { return decide_finite(analyze_bounded(a)); }

namespace {

void require_circuit(const BoundedAnalysis& analysis) {
  if (!analysis.is_circuit) {
    throw Error(ErrorKind::Unsupported, "automaton differs from its circuit part");
  }
}

}  // namespace

bool decide_level_transitive(const BoundedAnalysis& analysis) {
  require_circuit(analysis);
  if (!analysis.has_machines()) return false;
  const auto& r = *analysis.r;
  const std::size_t all = analysis.post_critical.size();
  for (std::size_t s = 0; s < r.num_states(); ++s) {
    const auto& st = r.state(s);
    if (st.sink) continue;
    if (st.label.size() != all) return false;
    for (Letter x = 0; x < r.alphabet().size(); ++x) {
      if (r.state(r.next(s, x)).sink) return false;
    }
  }
  return true;
}

bool decide_level_transitive(const MealyAutomaton& a) {
  return decide_level_transitive(analyze_bounded(a));
}

OrbitVerdict classify_omega_orbit(const BoundedAnalysis& analysis, const OmegaWordSpec& w) {
  require_circuit(analysis);
  w.validate();
  const std::size_t k = analysis.input.alphabet_size();
  for (const auto* part : {&w.preperiod, &w.period}) {
    for (Letter x : *part) {
      if (x >= k) throw Error(ErrorKind::Domain, "letter outside the alphabet");
    }
  }
  OrbitVerdict v;
  v.lasso.stem = w.preperiod;
  if (!analysis.has_machines()) {
    v.lasso.cycle = w.period;
    return v;
  }
  const auto& r = *analysis.r;
  std::size_t s = r.initial();
  std::size_t step = 0;
  auto advance = [&](Letter x) {
    const bool acc = r.edge_accepting(s, x);
    s = r.next(s, x);
    ++step;
    if (acc) v.last_accepting_step = step;
    return acc;
  };
  for (Letter x : w.preperiod) advance(x);

  // State at each period boundary until one repeats.
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> accepting_per_period;
  while (!seen.count(s)) {
    seen.emplace(s, accepting_per_period.size());
    std::size_t count = 0;
    for (Letter x : w.period) count += advance(x);
    accepting_per_period.push_back(count);
  }
  const std::size_t first = seen[s];
  for (std::size_t i = 0; i < first; ++i) {
    v.lasso.stem.insert(v.lasso.stem.end(), w.period.begin(), w.period.end());
  }
  for (std::size_t i = first; i < accepting_per_period.size(); ++i) {
    v.lasso.cycle.insert(v.lasso.cycle.end(), w.period.begin(), w.period.end());
    v.cycle_accepting_edges += accepting_per_period[i];
  }
  v.finite = v.cycle_accepting_edges == 0;
  if (!v.finite) v.last_accepting_step = 0;
  return v;
}

OrbitVerdict classify_omega_orbit(const MealyAutomaton& a, const OmegaWordSpec& w) {
  return classify_omega_orbit(analyze_bounded(a), w);
}

PostCriticalClass classify_postcritical(const BoundedAnalysis& analysis, const EvPeriodicWord& p) {
  require_circuit(analysis);
  const auto index = analysis.post_critical.index_of(p);
  if (!index) throw Error(ErrorKind::Domain, "word is not post-critical");
  const auto& re = *analysis.re;
  const auto hot = reachable_from_accepting_cycles(re);
  for (std::size_t s = 0; s < re.num_states(); ++s) {
    const auto& part = re.state(s).part;
    if (hot[s] && std::binary_search(part.begin(), part.end(), *index)) {
      return PostCriticalClass::Unbounded;
    }
  }
  return PostCriticalClass::Bounded;
}

PostCriticalClass classify_postcritical(const MealyAutomaton& a, const EvPeriodicWord& p) {
  return classify_postcritical(analyze_bounded(a), p);
}

}  // namespace autgroup
