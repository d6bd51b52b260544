#include "compcat/presheaf.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "compcat/fibration.hpp"
#include "compcat/ids.hpp"

namespace compcat {

void FinPresheaf::normalize() {
  base.normalize();
  for (auto it = at.begin(); it != at.end();) {
    std::sort(it->second.begin(), it->second.end());
    if (it->second.empty())
      it = at.erase(it);
    else
      ++it;
  }
}

const std::vector<ElemId>& FinPresheaf::elems(const ObjId& o) const {
  static const std::vector<ElemId> none;
  auto it = at.find(o);
  return it == at.end() ? none : it->second;
}

bool FinPresheaf::has_elem(const ObjId& o, const ElemId& e) const {
  const auto& es = elems(o);
  return std::find(es.begin(), es.end(), e) != es.end();
}

ElemId FinPresheaf::action(const MorId& f, const ElemId& e) const {
  auto it = act.find({f, e});
  if (it == act.end()) throw Error("UnknownAction", "no action for (" + f + ", " + e + ")");
  return it->second;
}

bool FinPresheaf::equal(const FinPresheaf& other) const {
  return base.equal(other.base) && at == other.at && act == other.act;
}

Checked<FinPresheaf> validate_presheaf(const FinPresheaf& raw) {
  ValidationReport rep;
  Checked<FinCategory> base = validate_category(raw.base);
  if (!base.ok()) {
    for (const auto& v : base.report.violations) rep.add("InvalidBase", v.code + ": " + v.detail);
    return checked_fail<FinPresheaf>(rep);
  }
  FinPresheaf p = raw;
  p.normalize();
  const FinCategory& c = p.base;

  for (const auto& [o, es] : p.at) {
    if (!c.has_object(o)) rep.add("DanglingRef", "elements listed at unknown object " + o);
    std::set<ElemId> seen;
    for (const auto& e : es)
      if (!seen.insert(e).second) rep.add("DuplicateElement", e + " at " + o);
  }
  if (!rep.ok()) return checked_fail<FinPresheaf>(rep);

  for (const auto& f : c.morphisms) {
    for (const auto& e : p.elems(f.dst)) {
      auto it = p.act.find({f.id, e});
      if (it == p.act.end()) {
        rep.add("MissingAction", "(" + f.id + ", " + e + ")");
        continue;
      }
      if (!p.has_elem(f.src, it->second))
        rep.add("ActionEndpoints",
                "(" + f.id + ", " + e + ") lands at " + it->second + " outside " + f.src);
    }
  }
  for (const auto& [key, v] : p.act) {
    (void)v;
    if (!c.has_mor(key.first) || !p.has_elem(c.mor(key.first).dst, key.second))
      rep.add("SpuriousAction", "(" + key.first + ", " + key.second + ")");
  }
  if (!rep.ok()) return checked_fail<FinPresheaf>(rep);

  for (const auto& [o, es] : p.at)
    for (const auto& e : es)
      if (p.action(c.id_of(o), e) != e) rep.add("IdentityAction", "at (" + o + ", " + e + ")");

  // contravariance: act(f * g) = act(g) after act(f)
  for (const auto& f : c.morphisms) {
    for (const auto& g : c.morphisms) {
      if (g.dst != f.src) continue;
      MorId fg = c.compose(f.id, g.id);
      for (const auto& e : p.elems(f.dst))
        if (p.action(fg, e) != p.action(g.id, p.action(f.id, e)))
          rep.add("ActionComposition", "(" + f.id + " after " + g.id + ") at " + e);
    }
  }
  if (!rep.ok()) return checked_fail<FinPresheaf>(rep);
  return checked_ok(std::move(p));
}

ElemId PresheafMap::apply(const ObjId& o, const ElemId& e) const {
  auto ito = components.find(o);
  if (ito != components.end()) {
    auto ite = ito->second.find(e);
    if (ite != ito->second.end()) return ite->second;
  }
  throw Error("UnknownElement", "no component value for " + e + " at " + o);
}

Checked<PresheafMap> validate_presheaf_map(const PresheafMap& raw) {
  ValidationReport rep;
  Checked<FinPresheaf> src = validate_presheaf(raw.src);
  Checked<FinPresheaf> dst = validate_presheaf(raw.dst);
  if (!src.ok()) rep.add("InvalidPresheaf", "source: " + src.report.violations.front().code);
  if (!dst.ok()) rep.add("InvalidPresheaf", "target: " + dst.report.violations.front().code);
  if (!rep.ok()) return checked_fail<PresheafMap>(rep);

  PresheafMap m = raw;
  m.src = *src;
  m.dst = *dst;
  if (!m.src.base.equal(m.dst.base)) {
    rep.add("BaseMismatch", "source and target live over different bases");
    return checked_fail<PresheafMap>(rep);
  }
  const FinCategory& c = m.src.base;

  for (const auto& [o, comp] : m.components) {
    if (!c.has_object(o)) {
      rep.add("DanglingRef", "component at unknown object " + o);
      continue;
    }
    for (const auto& [e, v] : comp) {
      if (!m.src.has_elem(o, e))
        rep.add("SpuriousComponent", e + " at " + o);
      else if (!m.dst.has_elem(o, v))
        rep.add("ComponentEndpoints", e + " at " + o + " maps to unknown " + v);
    }
  }
  for (const auto& o : c.objects) {
    auto ito = m.components.find(o);
    for (const auto& e : m.src.elems(o))
      if (ito == m.components.end() || !ito->second.count(e))
        rep.add("MissingComponent", e + " at " + o);
  }
  if (!rep.ok()) return checked_fail<PresheafMap>(rep);

  for (const auto& f : c.morphisms)
    for (const auto& e : m.src.elems(f.dst))
      if (m.dst.action(f.id, m.apply(f.dst, e)) != m.apply(f.src, m.src.action(f.id, e)))
        rep.add("NaturalityFailure", "at (" + f.id + ", " + e + ")");
  if (!rep.ok()) return checked_fail<PresheafMap>(rep);
  return checked_ok(std::move(m));
}

bool presheaf_map_is_iso(const PresheafMap& m) {
  for (const auto& o : m.src.base.objects) {
    std::set<ElemId> image;
    for (const auto& e : m.src.elems(o)) image.insert(m.apply(o, e));
    if (image.size() != m.src.elems(o).size()) return false;
    if (image.size() != m.dst.elems(o).size()) return false;
  }
  return true;
}

PresheafMap identity_presheaf_map(const FinPresheaf& p) {
  PresheafMap m;
  m.src = p;
  m.dst = p;
  for (const auto& [o, es] : p.at)
    for (const auto& e : es) m.components[o][e] = e;
  return m;
}

PresheafMap compose_presheaf_maps(const PresheafMap& g, const PresheafMap& f) {
  PresheafMap m;
  m.src = f.src;
  m.dst = g.dst;
  for (const auto& [o, es] : f.src.at)
    for (const auto& e : es) m.components[o][e] = g.apply(o, f.apply(o, e));
  return m;
}

FinPresheaf yoneda(const FinCategory& c, const ObjId& obj) {
  if (!c.has_object(obj)) throw Error("UnknownObject", obj);
  FinPresheaf p;
  p.base = c;
  for (const auto& x : c.objects) p.at[x] = c.hom(x, obj);
  for (const auto& f : c.morphisms)
    for (const auto& u : c.hom(f.dst, obj)) p.act[{f.id, u}] = c.compose(u, f.id);
  p.normalize();
  return p;
}

PresheafMap yoneda_map(const FinPresheaf& p, const ObjId& obj, const ElemId& e) {
  if (!p.has_elem(obj, e)) throw Error("UnknownElement", e + " at " + obj);
  PresheafMap m;
  m.src = yoneda(p.base, obj);
  m.dst = p;
  for (const auto& x : p.base.objects)
    for (const auto& f : p.base.hom(x, obj)) m.components[x][f] = p.action(f, e);
  return m;
}

FinPresheaf constant_presheaf(const FinCategory& base, const std::vector<ElemId>& elems) {
  FinPresheaf p;
  p.base = base;
  for (const auto& x : base.objects) p.at[x] = elems;
  for (const auto& f : base.morphisms)
    for (const auto& e : elems) p.act[{f.id, e}] = e;
  p.normalize();
  return p;
}

FinFunctor grothendieck(const FinPresheaf& praw) {
  Checked<FinPresheaf> v = validate_presheaf(praw);
  if (!v.ok()) throw Error("InvalidPresheaf", v.report.to_string());
  const FinPresheaf& p = *v;
  const FinCategory& c = p.base;

  FinFunctor out;
  out.cod = c;
  FinCategory total;
  for (const auto& x : c.objects)
    for (const auto& e : p.elems(x)) {
      ObjId o = pair_id(x, e);
      total.objects.push_back(o);
      out.obj_map[o] = x;
    }
  for (const auto& f : c.morphisms)
    for (const auto& e : p.elems(f.dst)) {
      MorId m = pair_id(f.id, e);
      total.morphisms.push_back({m, pair_id(f.src, p.action(f.id, e)), pair_id(f.dst, e)});
      out.mor_map[m] = f.id;
      if (c.is_identity(f.id)) total.identity[pair_id(f.dst, e)] = m;
    }
  // (f, e) after (g, act(f, e)) is (f * g, e); these are all composable pairs
  for (const auto& f : c.morphisms)
    for (const auto& e : p.elems(f.dst))
      for (const auto& g : c.morphisms) {
        if (g.dst != f.src) continue;
        total.composition[{pair_id(f.id, e), pair_id(g.id, p.action(f.id, e))}] =
            pair_id(c.compose(f.id, g.id), e);
      }
  total.normalize();
  out.dom = total;

  if (!validate_category(out.dom).ok() || !validate_functor(out).ok() ||
      !is_discrete_fibration(out))
    throw Error("PostconditionFailure", "element projection is not a discrete fibration");
  return out;
}

FinPresheaf fibration_to_presheaf(const FinFunctor& p) {
  if (!validate_functor(p).ok()) throw Error("NotAFunctor", "projection fails functor laws");
  if (!is_discrete_fibration(p))
    throw Error("NotDiscrete", "some (f, y) has lift count different from 1");
  FinPresheaf out;
  out.base = p.cod;
  for (const auto& y : p.dom.objects) out.at[p.on_obj(y)].push_back(y);
  for (const auto& f : p.cod.morphisms)
    for (const auto& y : p.dom.objects) {
      if (p.on_obj(y) != f.dst) continue;
      for (const MorId& m : p.dom.mors_into(y))
        if (p.on_mor(m) == f.id) {
          out.act[{f.id, y}] = p.dom.mor(m).src;
          break;
        }
    }
  out.normalize();
  return out;
}

namespace {

// Naturality of a partial phi at f, vacuous unless both ends are assigned:
// act(f, phi(u)) = phi(u * f) for all u: dst f -> obj.
bool natural_at(const FinPresheaf& p, const ObjId& obj,
                const std::map<ObjId, std::map<ElemId, ElemId>>& phi, const Mor& f) {
  auto itd = phi.find(f.dst);
  auto its = phi.find(f.src);
  if (itd == phi.end() || its == phi.end()) return true;
  for (const auto& u : p.base.hom(f.dst, obj))
    if (p.action(f.id, itd->second.at(u)) != its->second.at(p.base.compose(u, f.id)))
      return false;
  return true;
}

}  // namespace

std::optional<Representation> is_representable(const FinPresheaf& praw, long long budget) {
  Checked<FinPresheaf> v = validate_presheaf(praw);
  if (!v.ok()) throw Error("InvalidPresheaf", v.report.to_string());
  const FinPresheaf& p = *v;
  const FinCategory& c = p.base;
  long long attempts = 0;

  for (const auto& obj : c.objects) {
    bool sizes_ok = true;
    for (const auto& x : c.objects)
      if (c.hom(x, obj).size() != p.elems(x).size()) {
        sizes_ok = false;
        break;
      }
    if (!sizes_ok) continue;

    // assign component bijections object by object, least permutation first
    std::map<ObjId, std::map<ElemId, ElemId>> phi;
    std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
      if (idx == c.objects.size()) return true;
      const ObjId& x = c.objects[idx];
      std::vector<MorId> homs = c.hom(x, obj);
      std::vector<ElemId> targets = p.elems(x);
      if (homs.empty()) {
        if (++attempts > budget) throw BudgetExceeded(attempts, "representability search");
        phi.emplace(x, std::map<ElemId, ElemId>{});
        if (assign(idx + 1)) return true;
        phi.erase(x);
        return false;
      }
      do {
        if (++attempts > budget) throw BudgetExceeded(attempts, "representability search");
        std::map<ElemId, ElemId> comp;
        for (size_t i = 0; i < homs.size(); ++i) comp[homs[i]] = targets[i];
        phi[x] = std::move(comp);
        bool ok = true;
        for (const auto& f : c.morphisms) {
          if (f.src != x && f.dst != x) continue;
          if (!natural_at(p, obj, phi, f)) {
            ok = false;
            break;
          }
        }
        if (ok && assign(idx + 1)) return true;
      } while (std::next_permutation(targets.begin(), targets.end()));
      phi.erase(x);
      return false;
    };
    if (assign(0)) {
      Representation r;
      r.obj = obj;
      r.iso.src = yoneda(c, obj);
      r.iso.dst = p;
      for (auto& [x, comp] : phi)
        if (!comp.empty()) r.iso.components[x] = std::move(comp);
      return r;
    }
  }
  return std::nullopt;
}

PresheafPullback presheaf_pullback(const PresheafMap& fraw, const PresheafMap& graw) {
  Checked<PresheafMap> f = validate_presheaf_map(fraw);
  Checked<PresheafMap> g = validate_presheaf_map(graw);
  if (!f.ok()) throw Error("InvalidPresheafMap", f.report.to_string());
  if (!g.ok()) throw Error("InvalidPresheafMap", g.report.to_string());
  if (!f->dst.equal(g->dst)) throw Error("EndpointMismatch", "maps must share their target");
  const FinCategory& c = f->src.base;

  PresheafPullback out;
  out.apex.base = c;
  for (const auto& x : c.objects)
    for (const auto& a : f->src.elems(x))
      for (const auto& b : g->src.elems(x))
        if (f->apply(x, a) == g->apply(x, b)) {
          ElemId e = pair_id(a, b);
          out.apex.at[x].push_back(e);
          out.to_left.components[x][e] = a;
          out.to_right.components[x][e] = b;
        }
  for (const auto& m : c.morphisms)
    for (const auto& a : f->src.elems(m.dst))
      for (const auto& b : g->src.elems(m.dst))
        if (f->apply(m.dst, a) == g->apply(m.dst, b))
          out.apex.act[{m.id, pair_id(a, b)}] =
              pair_id(f->src.action(m.id, a), g->src.action(m.id, b));
  out.apex.normalize();
  out.to_left.src = out.apex;
  out.to_left.dst = f->src;
  out.to_right.src = out.apex;
  out.to_right.dst = g->src;
  return out;
}

}  // namespace compcat
