#include "compcat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace compcat {

namespace {

const Mor* find_mor(const FinCategory& c, const MorId& m) {
  for (const auto& mm : c.morphisms)
    if (mm.id == m) return &mm;
  return nullptr;
}

}  // namespace

void FinCategory::normalize() {
  std::sort(objects.begin(), objects.end());
  std::sort(morphisms.begin(), morphisms.end(),
            [](const Mor& a, const Mor& b) { return a.id < b.id; });
}

bool FinCategory::has_object(const ObjId& x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

bool FinCategory::has_mor(const MorId& m) const { return find_mor(*this, m) != nullptr; }

const Mor& FinCategory::mor(const MorId& m) const {
  const Mor* p = find_mor(*this, m);
  if (!p) throw Error("UnknownMorphism", m);
  return *p;
}

const MorId& FinCategory::id_of(const ObjId& x) const {
  auto it = identity.find(x);
  if (it == identity.end()) throw Error("UnknownObject", x);
  return it->second;
}

bool FinCategory::is_identity(const MorId& m) const {
  const Mor& mm = mor(m);
  auto it = identity.find(mm.src);
  return it != identity.end() && it->second == m;
}

const MorId& FinCategory::compose(const MorId& g, const MorId& f) const {
  auto it = composition.find({g, f});
  if (it == composition.end()) throw Error("NotComposable", g + " after " + f);
  return it->second;
}

std::vector<MorId> FinCategory::hom(const ObjId& x, const ObjId& y) const {
  std::vector<MorId> out;
  for (const auto& m : morphisms)
    if (m.src == x && m.dst == y) out.push_back(m.id);
  return out;
}

std::vector<MorId> FinCategory::mors_into(const ObjId& y) const {
  std::vector<MorId> out;
  for (const auto& m : morphisms)
    if (m.dst == y) out.push_back(m.id);
  return out;
}

std::vector<MorId> FinCategory::mors_from(const ObjId& x) const {
  std::vector<MorId> out;
  for (const auto& m : morphisms)
    if (m.src == x) out.push_back(m.id);
  return out;
}

bool FinCategory::is_iso(const MorId& m) const { return inverse(m).has_value(); }

std::optional<MorId> FinCategory::inverse(const MorId& m) const {
  const Mor& mm = mor(m);
  for (const MorId& n : hom(mm.dst, mm.src)) {
    if (compose(n, m) == id_of(mm.src) && compose(m, n) == id_of(mm.dst)) return n;
  }
  return std::nullopt;
}

bool FinCategory::objects_isomorphic(const ObjId& x, const ObjId& y) const {
  if (x == y) return true;
  for (const MorId& m : hom(x, y))
    if (is_iso(m)) return true;
  return false;
}

bool FinCategory::equal(const FinCategory& other) const {
  return objects == other.objects && identity == other.identity &&
         composition == other.composition &&
         morphisms.size() == other.morphisms.size() &&
         std::equal(morphisms.begin(), morphisms.end(), other.morphisms.begin(),
                    [](const Mor& a, const Mor& b) {
                      return a.id == b.id && a.src == b.src && a.dst == b.dst;
                    });
}

Checked<FinCategory> validate_category(const FinCategory& raw) {
  ValidationReport r;
  FinCategory c = raw;
  c.normalize();

  std::set<ObjId> objs;
  for (const auto& o : c.objects)
    if (!objs.insert(o).second) r.add("DuplicateObject", o);

  std::set<MorId> mors;
  for (const auto& m : c.morphisms) {
    if (!mors.insert(m.id).second) r.add("DuplicateMorphism", m.id);
    if (!objs.count(m.src)) r.add("DanglingRef", "src of " + m.id + ": " + m.src);
    if (!objs.count(m.dst)) r.add("DanglingRef", "dst of " + m.id + ": " + m.dst);
  }
  if (!r.ok()) return checked_fail<FinCategory>(r);

  for (const auto& o : c.objects) {
    auto it = c.identity.find(o);
    if (it == c.identity.end()) {
      r.add("MissingIdentity", o);
      continue;
    }
    if (!mors.count(it->second)) {
      r.add("DanglingRef", "identity of " + o + ": " + it->second);
      continue;
    }
    const Mor& im = c.mor(it->second);
    if (im.src != o || im.dst != o)
      r.add("IdentityNotEndo", o + " has identity " + it->second);
  }
  for (const auto& [o, m] : c.identity)
    if (!objs.count(o)) r.add("DanglingRef", "identity table names object " + o);
  if (!r.ok()) return checked_fail<FinCategory>(r);

  // composition totality: defined exactly on composable pairs
  for (const auto& g : c.morphisms) {
    for (const auto& f : c.morphisms) {
      bool composable = (f.dst == g.src);
      auto it = c.composition.find({g.id, f.id});
      if (composable && it == c.composition.end()) {
        r.add("MissingComposite", g.id + " after " + f.id);
      } else if (!composable && it != c.composition.end()) {
        r.add("SpuriousComposite", g.id + " after " + f.id);
      } else if (composable) {
        if (!mors.count(it->second)) {
          r.add("DanglingRef", "composite " + g.id + " after " + f.id + ": " + it->second);
          continue;
        }
        const Mor& gf = c.mor(it->second);
        if (gf.src != f.src || gf.dst != g.dst)
          r.add("CompositeEndpoints", g.id + " after " + f.id + " = " + it->second);
      }
    }
  }
  if (!r.ok()) return checked_fail<FinCategory>(r);

  for (const auto& m : c.morphisms) {
    if (c.compose(m.id, c.id_of(m.src)) != m.id)
      r.add("LawViolation", "right identity at " + m.id);
    if (c.compose(c.id_of(m.dst), m.id) != m.id)
      r.add("LawViolation", "left identity at " + m.id);
  }

  // associativity over all composable triples h*(g*f) = (h*g)*f
  for (const auto& f : c.morphisms) {
    for (const MorId& g : c.mors_from(f.dst)) {
      const MorId& gf = c.compose(g, f.id);
      for (const MorId& h : c.mors_from(c.mor(g).dst)) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f.id)) {
          r.add("LawViolation",
                "associativity at (" + h + ", " + g + ", " + f.id + ")");
        }
      }
    }
  }

  if (!r.ok()) return checked_fail<FinCategory>(r);
  return checked_ok(std::move(c));
}

// -- functors -----------------------------------------------------------------

const ObjId& FinFunctor::on_obj(const ObjId& x) const {
  auto it = obj_map.find(x);
  if (it == obj_map.end()) throw Error("UnknownObject", "functor has no image for " + x);
  return it->second;
}

const MorId& FinFunctor::on_mor(const MorId& m) const {
  auto it = mor_map.find(m);
  if (it == mor_map.end()) throw Error("UnknownMorphism", "functor has no image for " + m);
  return it->second;
}

bool FinFunctor::equal_tables(const FinFunctor& other) const {
  return obj_map == other.obj_map && mor_map == other.mor_map;
}

Checked<FinFunctor> validate_functor(const FinFunctor& raw) {
  ValidationReport r;
  const FinCategory& c = raw.dom;
  const FinCategory& d = raw.cod;

  for (const auto& o : c.objects) {
    auto it = raw.obj_map.find(o);
    if (it == raw.obj_map.end())
      r.add("MissingImage", "object " + o);
    else if (!d.has_object(it->second))
      r.add("DanglingRef", "image of object " + o + ": " + it->second);
  }
  for (const auto& m : c.morphisms) {
    auto it = raw.mor_map.find(m.id);
    if (it == raw.mor_map.end())
      r.add("MissingImage", "morphism " + m.id);
    else if (!d.has_mor(it->second))
      r.add("DanglingRef", "image of morphism " + m.id + ": " + it->second);
  }
  if (!r.ok()) return checked_fail<FinFunctor>(r);

  for (const auto& m : c.morphisms) {
    const Mor& im = d.mor(raw.on_mor(m.id));
    if (im.src != raw.on_obj(m.src) || im.dst != raw.on_obj(m.dst))
      r.add("LawViolation", "endpoints of image of " + m.id);
  }
  if (!r.ok()) return checked_fail<FinFunctor>(r);

  for (const auto& o : c.objects)
    if (raw.on_mor(c.id_of(o)) != d.id_of(raw.on_obj(o)))
      r.add("LawViolation", "identity at " + o);

  for (const auto& f : c.morphisms) {
    for (const MorId& g : c.mors_from(f.dst)) {
      if (raw.on_mor(c.compose(g, f.id)) != d.compose(raw.on_mor(g), raw.on_mor(f.id)))
        r.add("LawViolation", "composition at (" + g + ", " + f.id + ")");
    }
  }

  if (!r.ok()) return checked_fail<FinFunctor>(r);
  return checked_ok(raw);
}

FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor f;
  f.dom = c;
  f.cod = c;
  for (const auto& o : c.objects) f.obj_map[o] = o;
  for (const auto& m : c.morphisms) f.mor_map[m.id] = m.id;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& [x, y] : f.obj_map) h.obj_map[x] = g.on_obj(y);
  for (const auto& [m, n] : f.mor_map) h.mor_map[m] = g.on_mor(n);
  return h;
}

FunctorReport functor_report(const FinFunctor& f) {
  FunctorReport rep;
  const FinCategory& c = f.dom;
  const FinCategory& d = f.cod;

  rep.full = true;
  rep.faithful = true;
  for (const auto& x : c.objects) {
    for (const auto& y : c.objects) {
      std::vector<MorId> dom_hom = c.hom(x, y);
      std::vector<MorId> images;
      for (const MorId& m : dom_hom) images.push_back(f.on_mor(m));
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end())
        rep.faithful = false;
      for (const MorId& n : d.hom(f.on_obj(x), f.on_obj(y)))
        if (!std::binary_search(images.begin(), images.end(), n)) rep.full = false;
    }
  }

  rep.ess_surjective = true;
  for (const auto& z : d.objects) {
    bool hit = false;
    for (const auto& x : c.objects)
      if (d.objects_isomorphic(f.on_obj(x), z)) { hit = true; break; }
    if (!hit) { rep.ess_surjective = false; break; }
  }

  std::set<ObjId> obj_images;
  for (const auto& x : c.objects) obj_images.insert(f.on_obj(x));
  rep.injective_on_objects = obj_images.size() == c.objects.size();
  rep.surjective_on_objects = obj_images.size() == d.objects.size();

  rep.equivalence = rep.full && rep.faithful && rep.ess_surjective;

  std::set<MorId> mor_images;
  for (const auto& m : c.morphisms) mor_images.insert(f.on_mor(m.id));
  rep.isomorphism = rep.injective_on_objects && rep.surjective_on_objects &&
                    mor_images.size() == c.morphisms.size() &&
                    mor_images.size() == d.morphisms.size();
  return rep;
}

std::vector<FinFunctor> enumerate_functors(const FinCategory& dom, const FinCategory& cod,
                                           long long budget) {
  if (!cod.objects.empty() || dom.objects.empty()) {
    long long count = 1;
    for (size_t i = 0; i < dom.objects.size(); ++i) {
      count *= static_cast<long long>(cod.objects.size());
      if (count > budget) throw BudgetExceeded(count, "functor object-maps");
    }
  }
  std::vector<FinFunctor> out;
  if (dom.objects.empty()) {
    FinFunctor f;
    f.dom = dom;
    f.cod = cod;
    out.push_back(std::move(f));
    return out;
  }
  if (cod.objects.empty()) return out;

  std::vector<MorId> free_mors;  // non-identity morphisms, sorted (table order)
  for (const auto& m : dom.morphisms)
    if (!dom.is_identity(m.id)) free_mors.push_back(m.id);

  std::map<ObjId, ObjId> obj_map;
  std::map<MorId, MorId> mor_map;

  // true when every fully-assigned composition constraint holds
  auto consistent = [&](const MorId& just_set) -> bool {
    const Mor& jm = dom.mor(just_set);
    for (const auto& m : dom.morphisms) {
      if (!mor_map.count(m.id)) continue;
      if (m.dst == jm.src) {  // just_set after m
        auto it = mor_map.find(dom.compose(just_set, m.id));
        if (it != mor_map.end() &&
            it->second != cod.compose(mor_map[just_set], mor_map[m.id]))
          return false;
      }
      if (jm.dst == m.src) {  // m after just_set
        auto it = mor_map.find(dom.compose(m.id, just_set));
        if (it != mor_map.end() &&
            it->second != cod.compose(mor_map[m.id], mor_map[just_set]))
          return false;
      }
    }
    return true;
  };

  std::function<void(size_t)> assign_mor = [&](size_t i) {
    if (i == free_mors.size()) {
      FinFunctor f;
      f.dom = dom;
      f.cod = cod;
      f.obj_map = obj_map;
      f.mor_map = mor_map;
      if (validate_functor(f).ok()) out.push_back(std::move(f));
      return;
    }
    const Mor& m = dom.mor(free_mors[i]);
    for (const MorId& n : cod.hom(obj_map[m.src], obj_map[m.dst])) {
      mor_map[m.id] = n;
      if (consistent(m.id)) assign_mor(i + 1);
      mor_map.erase(m.id);
    }
  };

  std::function<void(size_t)> assign_obj = [&](size_t i) {
    if (i == dom.objects.size()) {
      mor_map.clear();
      for (const auto& o : dom.objects)
        mor_map[dom.id_of(o)] = cod.id_of(obj_map[o]);
      assign_mor(0);
      return;
    }
    for (const auto& z : cod.objects) {
      obj_map[dom.objects[i]] = z;
      assign_obj(i + 1);
    }
    obj_map.erase(dom.objects[i]);
  };

  assign_obj(0);
  return out;
}

// -- natural transformations ---------------------------------------------------

const MorId& FinNatTrans::at(const ObjId& x) const {
  auto it = components.find(x);
  if (it == components.end()) throw Error("UnknownObject", "no component at " + x);
  return it->second;
}

Checked<FinNatTrans> validate_nattrans(const FinNatTrans& raw) {
  ValidationReport r;
  const FinCategory& c = raw.source.dom;
  const FinCategory& d = raw.source.cod;

  if (!raw.source.dom.equal(raw.target.dom) || !raw.source.cod.equal(raw.target.cod))
    r.add("EndpointMismatch", "source and target functors have different (co)domains");
  if (!r.ok()) return checked_fail<FinNatTrans>(r);

  for (const auto& x : c.objects) {
    auto it = raw.components.find(x);
    if (it == raw.components.end()) {
      r.add("MissingImage", "component at " + x);
      continue;
    }
    if (!d.has_mor(it->second)) {
      r.add("DanglingRef", "component at " + x + ": " + it->second);
      continue;
    }
    const Mor& m = d.mor(it->second);
    if (m.src != raw.source.on_obj(x) || m.dst != raw.target.on_obj(x))
      r.add("ComponentEndpoints", "component at " + x);
  }
  if (!r.ok()) return checked_fail<FinNatTrans>(r);

  for (const auto& m : c.morphisms) {
    const MorId& lhs = d.compose(raw.at(m.dst), raw.source.on_mor(m.id));
    const MorId& rhs = d.compose(raw.target.on_mor(m.id), raw.at(m.src));
    if (lhs != rhs) r.add("NaturalityFailure", "at " + m.id);
  }

  if (!r.ok()) return checked_fail<FinNatTrans>(r);
  return checked_ok(raw);
}

bool nattrans_is_iso(const FinNatTrans& t) {
  for (const auto& [x, m] : t.components)
    if (!t.source.cod.is_iso(m)) return false;
  return true;
}

// -- arrow category -------------------------------------------------------------

std::string arrow_square_id(const MorId& u, const MorId& v, const MorId& f, const MorId& g) {
  return join_ids("sq", {u, v, f, g});
}

const Square& ArrowCategory::square(const MorId& m) const {
  auto it = squares.find(m);
  if (it == squares.end()) throw Error("UnknownMorphism", "not an arrow-category morphism: " + m);
  return it->second;
}

std::optional<MorId> ArrowCategory::square_id(const MorId& u, const MorId& v, const MorId& f,
                                              const MorId& g) const {
  MorId id = arrow_square_id(u, v, f, g);
  if (squares.count(id)) return id;
  return std::nullopt;
}

ArrowCategory arrow_category(const FinCategory& c) {
  ArrowCategory arr;
  FinCategory& a = arr.cat;
  for (const auto& m : c.morphisms) a.objects.push_back(m.id);

  for (const auto& f : c.morphisms) {
    for (const auto& g : c.morphisms) {
      for (const MorId& u : c.hom(f.src, g.src)) {
        for (const MorId& v : c.hom(f.dst, g.dst)) {
          if (c.compose(g.id, u) != c.compose(v, f.id)) continue;
          MorId id = arrow_square_id(u, v, f.id, g.id);
          a.morphisms.push_back({id, f.id, g.id});
          arr.squares[id] = {u, v, f.id, g.id};
        }
      }
    }
  }
  for (const auto& m : c.morphisms)
    a.identity[m.id] = arrow_square_id(c.id_of(m.src), c.id_of(m.dst), m.id, m.id);

  for (const auto& [sid, s] : arr.squares) {
    for (const auto& [tid, t] : arr.squares) {
      if (s.g != t.f) continue;  // t after s
      a.composition[{tid, sid}] =
          arrow_square_id(c.compose(t.u, s.u), c.compose(t.v, s.v), s.f, t.g);
    }
  }
  a.normalize();

  arr.dom_functor.dom = a;
  arr.dom_functor.cod = c;
  arr.cod_functor.dom = a;
  arr.cod_functor.cod = c;
  for (const auto& m : c.morphisms) {
    arr.dom_functor.obj_map[m.id] = m.src;
    arr.cod_functor.obj_map[m.id] = m.dst;
  }
  for (const auto& [sid, s] : arr.squares) {
    arr.dom_functor.mor_map[sid] = s.u;
    arr.cod_functor.mor_map[sid] = s.v;
  }
  return arr;
}

FinFunctor arrow_functor(const FinFunctor& f, const ArrowCategory& arr_dom,
                         const ArrowCategory& arr_cod) {
  FinFunctor af;
  af.dom = arr_dom.cat;
  af.cod = arr_cod.cat;
  for (const auto& o : arr_dom.cat.objects) af.obj_map[o] = f.on_mor(o);
  for (const auto& [sid, s] : arr_dom.squares)
    af.mor_map[sid] =
        arrow_square_id(f.on_mor(s.u), f.on_mor(s.v), f.on_mor(s.f), f.on_mor(s.g));
  return af;
}

// -- pullbacks, terminal objects ------------------------------------------------

bool cone_commutes(const FinCategory& c, const MorId& f, const MorId& g, const Cone& cone) {
  const Mor& fm = c.mor(f);
  const Mor& gm = c.mor(g);
  const Mor& lf = c.mor(cone.leg_f);
  const Mor& lg = c.mor(cone.leg_g);
  if (lf.src != cone.apex || lg.src != cone.apex) return false;
  if (lf.dst != fm.src || lg.dst != gm.src) return false;
  return c.compose(f, cone.leg_f) == c.compose(g, cone.leg_g);
}

bool is_pullback_cone(const FinCategory& c, const MorId& f, const MorId& g, const Cone& cone) {
  if (c.mor(f).dst != c.mor(g).dst) throw Error("NonCospan", f + ", " + g);
  if (!cone_commutes(c, f, g, cone)) return false;
  const ObjId& a = c.mor(f).src;
  const ObjId& b = c.mor(g).src;
  for (const auto& q : c.objects) {
    std::vector<MorId> to_apex = c.hom(q, cone.apex);
    for (const MorId& p : c.hom(q, a)) {
      for (const MorId& r : c.hom(q, b)) {
        if (c.compose(f, p) != c.compose(g, r)) continue;
        int fillers = 0;
        for (const MorId& m : to_apex) {
          if (c.compose(cone.leg_f, m) == p && c.compose(cone.leg_g, m) == r) ++fillers;
        }
        if (fillers != 1) return false;
      }
    }
  }
  return true;
}

std::optional<Cone> pullback(const FinCategory& c, const MorId& f, const MorId& g) {
  const Mor& fm = c.mor(f);
  const Mor& gm = c.mor(g);
  if (fm.dst != gm.dst) throw Error("NonCospan", f + ", " + g);
  for (const auto& apex : c.objects) {
    for (const MorId& lf : c.hom(apex, fm.src)) {
      for (const MorId& lg : c.hom(apex, gm.src)) {
        Cone cone{apex, lf, lg};
        if (!cone_commutes(c, f, g, cone)) continue;
        if (is_pullback_cone(c, f, g, cone)) return cone;
      }
    }
  }
  return std::nullopt;
}

std::optional<ObjId> terminal_object(const FinCategory& c) {
  for (const auto& t : c.objects) {
    bool terminal = true;
    for (const auto& x : c.objects) {
      if (c.hom(x, t).size() != 1) { terminal = false; break; }
    }
    if (terminal) return t;
  }
  return std::nullopt;
}

bool is_lex(const FinCategory& c) {
  if (!terminal_object(c)) return false;
  for (const auto& f : c.morphisms) {
    for (const auto& g : c.morphisms) {
      if (f.dst != g.dst) continue;
      if (!pullback(c, f.id, g.id)) return false;
    }
  }
  return true;
}

// -- generators -------------------------------------------------------------------

FinCategory poset_category(const std::vector<ObjId>& elements,
                           const std::vector<std::pair<ObjId, ObjId>>& leq) {
  std::set<std::pair<ObjId, ObjId>> rel(leq.begin(), leq.end());
  std::set<ObjId> elems(elements.begin(), elements.end());
  if (elems.size() != elements.size()) throw Error("NotAPartialOrder", "duplicate elements");
  for (const auto& [x, y] : rel)
    if (!elems.count(x) || !elems.count(y))
      throw Error("NotAPartialOrder", "relation names unknown element (" + x + ", " + y + ")");
  for (const auto& x : elements) rel.insert({x, x});
  for (const auto& [x, y] : rel) {
    if (rel.count({y, x}) && x != y)
      throw Error("NotAPartialOrder", "antisymmetry fails at (" + x + ", " + y + ")");
    for (const auto& z : elements)
      if (rel.count({y, z}) && !rel.count({x, z}))
        throw Error("NotAPartialOrder",
                    "transitivity fails at (" + x + ", " + y + ", " + z + ")");
  }

  FinCategory c;
  c.objects = elements;
  auto mid = [](const ObjId& x, const ObjId& y) { return join_ids("le", {x, y}); };
  for (const auto& [x, y] : rel) c.morphisms.push_back({mid(x, y), x, y});
  for (const auto& x : elements) c.identity[x] = mid(x, x);
  for (const auto& [x, y] : rel)
    for (const auto& [y2, z] : rel)
      if (y == y2) c.composition[{mid(y, z), mid(x, y)}] = mid(x, z);
  c.normalize();
  return c;
}

FinCategory free_category_on_dag(const std::vector<ObjId>& vertices,
                                 const std::vector<DagEdge>& edges) {
  std::set<ObjId> verts(vertices.begin(), vertices.end());
  for (const auto& e : edges)
    if (!verts.count(e.src) || !verts.count(e.dst))
      throw Error("CyclicGraph", "edge " + e.id + " names unknown vertex");

  // Kahn check; cycles make the path category infinite.
  std::map<ObjId, int> indeg;
  for (const auto& v : vertices) indeg[v] = 0;
  for (const auto& e : edges) indeg[e.dst]++;
  std::vector<ObjId> queue;
  for (const auto& [v, d] : indeg)
    if (d == 0) queue.push_back(v);
  size_t seen = 0;
  while (!queue.empty()) {
    ObjId v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& e : edges)
      if (e.src == v && --indeg[e.dst] == 0) queue.push_back(e.dst);
  }
  if (seen != vertices.size()) throw Error("CyclicGraph", "graph has a cycle");

  struct Path {
    ObjId start;
    ObjId end;
    std::vector<std::string> edges;  // diagram order: first edge first
  };
  auto path_id = [](const Path& p) {
    std::vector<std::string> parts{p.start};
    parts.insert(parts.end(), p.edges.begin(), p.edges.end());
    return join_ids("path", parts);
  };

  // grow paths breadth-first; terminates because the graph is acyclic
  std::vector<Path> all;
  for (const auto& v : vertices) all.push_back({v, v, {}});
  size_t head = 0;
  while (head < all.size()) {
    Path p = all[head++];
    for (const auto& e : edges) {
      if (e.src != p.end) continue;
      Path q = p;
      q.edges.push_back(e.id);
      q.end = e.dst;
      all.push_back(q);
    }
  }

  FinCategory c;
  c.objects = vertices;
  for (const auto& p : all) c.morphisms.push_back({path_id(p), p.start, p.end});
  for (const auto& v : vertices) c.identity[v] = path_id({v, v, {}});
  for (const auto& p : all) {
    for (const auto& q : all) {
      if (q.start != p.end) continue;
      Path pq = p;  // q after p: concatenate in diagram order
      pq.edges.insert(pq.edges.end(), q.edges.begin(), q.edges.end());
      pq.end = q.end;
      c.composition[{path_id(q), path_id(p)}] = path_id(pq);
    }
  }
  c.normalize();
  return c;
}

FinCategory monoid_category(const std::vector<std::string>& elements, const std::string& unit,
                            const std::map<std::pair<std::string, std::string>, std::string>& table) {
  std::set<std::string> elems(elements.begin(), elements.end());
  if (!elems.count(unit)) throw Error("NotAMonoid", "unit not an element");
  for (const auto& a : elements)
    for (const auto& b : elements) {
      auto it = table.find({a, b});
      if (it == table.end()) throw Error("NotAMonoid", "product missing for (" + a + ", " + b + ")");
      if (!elems.count(it->second)) throw Error("NotAMonoid", "product escapes elements");
    }
  for (const auto& a : elements) {
    if (table.at({unit, a}) != a || table.at({a, unit}) != a)
      throw Error("NotAMonoid", "unit laws fail at " + a);
    for (const auto& b : elements)
      for (const auto& c : elements)
        if (table.at({table.at({a, b}), c}) != table.at({a, table.at({b, c})}))
          throw Error("NotAMonoid", "associativity fails at (" + a + ", " + b + ", " + c + ")");
  }

  FinCategory c;
  ObjId star = "*";
  c.objects = {star};
  for (const auto& a : elements) c.morphisms.push_back({a, star, star});
  c.identity[star] = unit;
  // arrow composition g after f means "g follows f"; monoid table is (a, b) = a*b
  for (const auto& a : elements)
    for (const auto& b : elements) c.composition[{a, b}] = table.at({a, b});
  c.normalize();
  return c;
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  FinCategory p;
  for (const auto& x : c.objects)
    for (const auto& y : d.objects) p.objects.push_back(pair_id(x, y));
  for (const auto& f : c.morphisms)
    for (const auto& g : d.morphisms)
      p.morphisms.push_back({pair_id(f.id, g.id), pair_id(f.src, g.src), pair_id(f.dst, g.dst)});
  for (const auto& x : c.objects)
    for (const auto& y : d.objects)
      p.identity[pair_id(x, y)] = pair_id(c.id_of(x), d.id_of(y));
  for (const auto& [cf, cg] : c.composition)
    for (const auto& [df, dg] : d.composition)
      p.composition[{pair_id(cf.first, df.first), pair_id(cf.second, df.second)}] =
          pair_id(cg, dg);
  p.normalize();
  return p;
}

FinCategory opposite_category(const FinCategory& c) {
  FinCategory o;
  o.objects = c.objects;
  for (const auto& m : c.morphisms) o.morphisms.push_back({m.id, m.dst, m.src});
  o.identity = c.identity;
  for (const auto& [gf, h] : c.composition) o.composition[{gf.second, gf.first}] = h;
  o.normalize();
  return o;
}

}  // namespace compcat
