#include "compcat/fibration.hpp"

#include <algorithm>
#include <functional>

namespace compcat {

bool is_cartesian(const FinFunctor& p, const MorId& m) {
  const FinCategory& total = p.dom;
  const FinCategory& base = p.cod;
  const Mor& mm = total.mor(m);
  for (const auto& z : total.objects) {
    for (const MorId& psi : total.hom(z, mm.dst)) {
      for (const MorId& w : base.hom(p.on_obj(z), p.on_obj(mm.src))) {
        if (base.compose(p.on_mor(m), w) != p.on_mor(psi)) continue;
        int fillers = 0;
        for (const MorId& theta : total.hom(z, mm.src))
          if (p.on_mor(theta) == w && total.compose(m, theta) == psi) ++fillers;
        if (fillers != 1) return false;
      }
    }
  }
  return true;
}

std::vector<MorId> cartesian_lifts(const FinFunctor& p, const MorId& f, const ObjId& y) {
  std::vector<MorId> out;
  for (const MorId& m : p.dom.mors_into(y))
    if (p.on_mor(m) == f && is_cartesian(p, m)) out.push_back(m);
  return out;
}

namespace {

// (f, y) pairs needing a lift: f a base morphism, y over dst f.
std::vector<std::pair<MorId, ObjId>> lift_pairs(const FinFunctor& p) {
  std::vector<std::pair<MorId, ObjId>> out;
  for (const auto& f : p.cod.morphisms)
    for (const auto& y : p.dom.objects)
      if (p.on_obj(y) == f.dst) out.push_back({f.id, y});
  return out;
}

void require_functor(const FinFunctor& p) {
  if (!validate_functor(p).ok()) throw Error("NotAFunctor", "projection fails functor laws");
}

}  // namespace

bool is_discrete_fibration(const FinFunctor& p) {
  require_functor(p);
  for (const auto& [f, y] : lift_pairs(p)) {
    int lifts = 0;
    for (const MorId& m : p.dom.mors_into(y))
      if (p.on_mor(m) == f) ++lifts;
    if (lifts != 1) return false;
  }
  return true;
}

FibrationReport fibration_report(const FinFunctor& p, long long split_budget) {
  require_functor(p);
  FibrationReport rep;
  rep.fibration = true;
  rep.discrete = is_discrete_fibration(p);

  for (const auto& [f, y] : lift_pairs(p)) {
    if (cartesian_lifts(p, f, y).empty()) {
      rep.fibration = false;
      rep.witness_failures.push_back("no cartesian lift of " + f + " into " + y);
    }
  }

  if (!rep.fibration) {
    rep.splittable = false;
    return rep;
  }
  try {
    rep.splittable = find_split_cleaving(p, split_budget).has_value();
  } catch (const BudgetExceeded&) {
    rep.splittable = std::nullopt;
  }
  return rep;
}

const MorId& Cleaving::at(const MorId& f, const ObjId& y) const {
  auto it = lift.find({f, y});
  if (it == lift.end()) throw Error("UnknownMorphism", "no lift for (" + f + ", " + y + ")");
  return it->second;
}

Cleaving compute_cleaving(const FinFunctor& p) {
  require_functor(p);
  Cleaving c;
  for (const auto& [f, y] : lift_pairs(p)) {
    if (p.cod.is_identity(f)) {
      c.lift[{f, y}] = p.dom.id_of(y);  // identities are always cartesian
      continue;
    }
    std::vector<MorId> lifts = cartesian_lifts(p, f, y);
    if (lifts.empty()) throw Error("NotAFibration", "no cartesian lift of " + f + " into " + y);
    c.lift[{f, y}] = lifts.front();
  }
  return c;
}

bool is_split(const FinFunctor& p, const Cleaving& c) {
  const FinCategory& base = p.cod;
  const FinCategory& total = p.dom;
  for (const auto& [key, m] : c.lift) {
    if (base.is_identity(key.first) && m != total.id_of(key.second)) return false;
  }
  for (const auto& f : base.morphisms) {
    for (const auto& g : base.morphisms) {
      if (g.dst != f.src) continue;  // f after g
      for (const auto& y : total.objects) {
        if (p.on_obj(y) != f.dst) continue;
        const MorId& top = c.at(f.id, y);
        const ObjId& mid = total.mor(top).src;
        const MorId& bottom = c.at(g.id, mid);
        if (c.at(base.compose(f.id, g.id), y) != total.compose(top, bottom)) return false;
      }
    }
  }
  return true;
}

std::optional<Cleaving> find_split_cleaving(const FinFunctor& p, long long budget) {
  require_functor(p);
  const FinCategory& base = p.cod;
  const FinCategory& total = p.dom;

  std::vector<std::pair<MorId, ObjId>> pairs;
  std::map<std::pair<MorId, ObjId>, std::vector<MorId>> candidates;
  Cleaving c;
  for (const auto& [f, y] : lift_pairs(p)) {
    if (base.is_identity(f)) {
      c.lift[{f, y}] = total.id_of(y);
      continue;
    }
    auto lifts = cartesian_lifts(p, f, y);
    if (lifts.empty()) return std::nullopt;  // not even a fibration
    // canonical cleaving first: the least lift heads the candidate list
    candidates[{f, y}] = std::move(lifts);
    pairs.push_back({f, y});
  }

  long long visited = 0;

  // all composition constraints whose three entries are assigned must agree
  auto consistent = [&]() -> bool {
    for (const auto& f : base.morphisms) {
      for (const auto& g : base.morphisms) {
        if (g.dst != f.src) continue;
        for (const auto& y : total.objects) {
          if (p.on_obj(y) != f.dst) continue;
          auto top = c.lift.find({f.id, y});
          if (top == c.lift.end()) continue;
          auto bottom = c.lift.find({g.id, total.mor(top->second).src});
          if (bottom == c.lift.end()) continue;
          auto whole = c.lift.find({base.compose(f.id, g.id), y});
          if (whole == c.lift.end()) continue;
          if (whole->second != total.compose(top->second, bottom->second)) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(size_t)> assign = [&](size_t i) -> bool {
    if (++visited > budget) throw BudgetExceeded(visited, "split cleaving search");
    if (i == pairs.size()) return consistent() && is_split(p, c);
    for (const MorId& m : candidates[pairs[i]]) {
      c.lift[pairs[i]] = m;
      if (consistent() && assign(i + 1)) return true;
      c.lift.erase(pairs[i]);
    }
    return false;
  };

  if (assign(0)) return c;
  return std::nullopt;
}

PullbackFibration pullback_fibration(const FinFunctor& p, const FinFunctor& f) {
  require_functor(p);
  require_functor(f);
  if (!p.cod.equal(f.cod)) throw Error("EndpointMismatch", "pullback legs target different bases");

  PullbackFibration out;
  FinCategory& t = out.total;
  std::map<ObjId, std::pair<ObjId, ObjId>> opairs;
  std::map<MorId, std::pair<MorId, MorId>> mpairs;

  for (const auto& d : f.dom.objects)
    for (const auto& x : p.dom.objects)
      if (f.on_obj(d) == p.on_obj(x)) {
        ObjId o = pair_id(d, x);
        t.objects.push_back(o);
        opairs[o] = {d, x};
      }
  for (const auto& u : f.dom.morphisms)
    for (const auto& m : p.dom.morphisms)
      if (f.on_mor(u.id) == p.on_mor(m.id)) {
        MorId id = pair_id(u.id, m.id);
        t.morphisms.push_back({id, pair_id(u.src, m.src), pair_id(u.dst, m.dst)});
        mpairs[id] = {u.id, m.id};
      }
  for (const auto& [o, pr] : opairs)
    t.identity[o] = pair_id(f.dom.id_of(pr.first), p.dom.id_of(pr.second));
  for (const auto& [mid, mp] : mpairs) {
    for (const auto& [nid, np] : mpairs) {
      if (f.dom.mor(np.first).dst != f.dom.mor(mp.first).src) continue;
      if (p.dom.mor(np.second).dst != p.dom.mor(mp.second).src) continue;
      t.composition[{mid, nid}] = pair_id(f.dom.compose(mp.first, np.first),
                                          p.dom.compose(mp.second, np.second));
    }
  }
  t.normalize();

  out.proj.dom = t;
  out.proj.cod = f.dom;
  out.to_fiber.dom = t;
  out.to_fiber.cod = p.dom;
  for (const auto& [o, pr] : opairs) {
    out.proj.obj_map[o] = pr.first;
    out.to_fiber.obj_map[o] = pr.second;
  }
  for (const auto& [m, pr] : mpairs) {
    out.proj.mor_map[m] = pr.first;
    out.to_fiber.mor_map[m] = pr.second;
  }
  return out;
}

}  // namespace compcat
