#include "tensorloc/formal.hpp"

#include <algorithm>

namespace tensorloc {

ValidationReport FormalMonad::validate() const {
  ValidationReport rep;
  const int nz = zi->size();
  for (int u = 0; u < nz; ++u) rep.merge(check_monad(monads[u]), "T|u/");
  for (int u = 0; u < nz; ++u)
    for (int v = 0; v < nz; ++v) {
      if (!lower[u][v]) continue;
      const Functor& low = *lower[u][v];
      const FinCategory& dv = restrictions[v]->cat();
      // (9): object-level equality T|u(A) = T|v(A)
      for (Obj a = 0; a < dv.object_count(); ++a) {
        Obj tu = monads[u].carrier.on_object(a);
        Obj tv = monads[v].carrier.on_object(a);
        if (tu == kNoObj || tv == kNoObj) {
          rep.skip("formal/objects");
          continue;
        }
        if (tu != tv)
          rep.fail("formal/objects", "T|u(A) ≠ T|v(A) at '" + dv.object_name(a) +
                                         "'");
        else
          rep.pass("formal/objects");
      }
      // (10): T|u(lower f) = lower(T|v f)
      for (Mor f = 0; f < dv.morphism_count(); ++f) {
        Mor lf = low.defined_on_morphism(f) ? low.on_morphism(f) : kNoMor;
        Mor tvf = monads[v].carrier.on_morphism(f);
        Mor ltvf = tvf == kNoMor || !low.defined_on_morphism(tvf)
                       ? kNoMor
                       : low.on_morphism(tvf);
        Mor tulf = lf == kNoMor ? kNoMor : monads[u].carrier.on_morphism(lf);
        if (ltvf == kNoMor || tulf == kNoMor) {
          rep.skip("formal/naturality");
          continue;
        }
        if (ltvf != tulf)
          rep.fail("formal/naturality",
                   "T|u(lower f) ≠ lower(T|v f) at " + dv.describe(f));
        else
          rep.pass("formal/naturality");
      }
      // (8): unit and multiplication squares against the lower functor
      for (Obj a = 0; a < dv.object_count(); ++a) {
        Mor ev = monads[v].unit[a];
        Mor eu = monads[u].unit[a];
        Mor lev = ev == kNoMor || !low.defined_on_morphism(ev)
                      ? kNoMor
                      : low.on_morphism(ev);
        if (lev == kNoMor || eu == kNoMor)
          rep.skip("formal/unit-square");
        else if (lev != eu)
          rep.fail("formal/unit-square",
                   "lower(η|v) ≠ η|u at '" + dv.object_name(a) + "'");
        else
          rep.pass("formal/unit-square");
        Mor mv = monads[v].mult[a];
        Mor mu = monads[u].mult[a];
        Mor lmv = mv == kNoMor || !low.defined_on_morphism(mv)
                      ? kNoMor
                      : low.on_morphism(mv);
        if (lmv == kNoMor || mu == kNoMor)
          rep.skip("formal/mult-square");
        else if (lmv != mu)
          rep.fail("formal/mult-square",
                   "lower(μ|v) ≠ μ|u at '" + dv.object_name(a) + "'");
        else
          rep.pass("formal/mult-square");
      }
    }
  return rep;
}

FormalMonad localisable_to_formal(const LocalisableMonad& lm) {
  FormalMonad fm;
  fm.base = lm.smc;
  fm.zi = lm.zi;
  const int nz = lm.zi->size();
  for (int u = 0; u < nz; ++u) {
    fm.restrictions.push_back(std::make_unique<RestrictionCategory>(
        build_restriction(*lm.smc, lm.zi->elements[u])));
  }
  for (int u = 0; u < nz; ++u)
    fm.monads.push_back(restrict_monad(lm, u, *fm.restrictions[u]));
  fm.lower.assign(nz, std::vector<std::optional<Functor>>(nz));
  for (int u = 0; u < nz; ++u)
    for (int v = 0; v < nz; ++v) {
      if (!lm.zi->leq(u, v)) continue;
      RestrictionFunctors adj =
          build_adjunction(*lm.smc, *fm.restrictions[u], *fm.restrictions[v],
                           lm.zi->leq_witness[u][v]);
      fm.lower[u][v] = adj.lower;
    }
  return fm;
}

namespace {

// Strength per the adjunction composite (the v = 1 case of the general
// definition): ε_{T|1(A⊗U)} ∘ F(T|u(η_{A}))
Mor assemble_strength(const FormalMonad& fm, const RestrictionFunctors& adj,
                      int u, Obj a) {
  const RestrictionCategory& c1 = *fm.restrictions[fm.zi->table.top];
  const SmcStructure& s = *fm.base;
  const FinCategory& d1 = c1.cat();
  Mor eta = adj.unit_nat.defined_at(a) ? adj.unit_nat.component(a) : kNoMor;
  if (eta == kNoMor) return kNoMor;
  Mor tu_eta = fm.monads[u].carrier.on_morphism(eta);
  if (tu_eta == kNoMor || !adj.upper.defined_on_morphism(tu_eta)) return kNoMor;
  Mor leg1 = adj.upper.on_morphism(tu_eta);
  Obj au = s.tensor_obj(a, fm.zi->elements[u].dom);
  if (au == kNoObj) return kNoMor;
  Obj t1_au = fm.monads[fm.zi->table.top].carrier.on_object(au);
  if (t1_au == kNoObj) return kNoMor;
  Mor eps = adj.counit_nat.defined_at(t1_au) ? adj.counit_nat.component(t1_au)
                                             : kNoMor;
  if (eps == kNoMor) return kNoMor;
  return d1.compose_or_none(eps, leg1);
}

}  // namespace

LocalisableMonad formal_to_localisable(const FormalMonad& fm) {
  const SmcStructure& s = *fm.base;
  const FinCategory& c = s.base();
  const int top = fm.zi->table.top;
  const RestrictionCategory& c1 = *fm.restrictions[top];
  const MonadData& t1 = fm.monads[top];

  // transport T|1 back to the base along the strict identification C|1 = C
  MonadData m(&c);
  for (Obj a = 0; a < c.object_count(); ++a) {
    Obj ta = t1.carrier.on_object(a);
    if (ta != kNoObj) m.carrier.map_object(a, ta);
  }
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Mor r = c1.restricted(c.dom(f), c.cod(f), f);
    if (r == kNoMor) continue;
    Mor tf = t1.carrier.on_morphism(r);
    if (tf != kNoMor) m.carrier.map_morphism(f, c1.base_of[tf]);
  }
  for (Obj a = 0; a < c.object_count(); ++a) {
    if (t1.unit[a] != kNoMor) m.unit[a] = c1.base_of[t1.unit[a]];
    if (t1.mult[a] != kNoMor) m.mult[a] = c1.base_of[t1.mult[a]];
  }

  StrengthFamily str(c.object_count(), fm.zi->size());
  for (int u = 0; u < fm.zi->size(); ++u) {
    RestrictionFunctors adj =
        build_adjunction(s, *fm.restrictions[u], *fm.restrictions[top],
                         fm.zi->leq_witness[u][top]);
    for (Obj a = 0; a < c.object_count(); ++a) {
      Mor in_c1 = assemble_strength(fm, adj, u, a);
      if (in_c1 != kNoMor) str.set(a, u, c1.base_of[in_c1]);
    }
  }
  return make_localisable(s, *fm.zi, std::move(m), std::move(str));
}

namespace {

// Proof-level identities of the bijection theorem: the chain of composite
// equalities rewriting T|1(f^C) ∘ str to (T|u f)^C, asserted per line.
bool proof_chain_holds(const FormalMonad& fm, const RestrictionFunctors& adj,
                       int u, Mor f_cu, std::string* detail) {
  const int top = fm.zi->table.top;
  const RestrictionCategory& cu = *fm.restrictions[u];
  const RestrictionCategory& c1 = *fm.restrictions[top];
  const FinCategory& d1 = c1.cat();
  const FinCategory& du = cu.cat();
  const MonadData& t1 = fm.monads[top];
  const MonadData& tu = fm.monads[u];
  auto fail = [&](const char* line) {
    if (detail)
      *detail = std::string(line) + " fails at u-morphism " + du.describe(f_cu);
    return false;
  };

  Obj a = du.dom(f_cu), b = du.cod(f_cu);
  // f^C := ε_B ∘ F(f) in C|1
  if (!adj.upper.defined_on_morphism(f_cu)) return true;  // outside fragment
  Mor Ff = adj.upper.on_morphism(f_cu);
  Mor eps_b = adj.counit_nat.defined_at(b) ? adj.counit_nat.component(b) : kNoMor;
  if (eps_b == kNoMor) return true;
  Mor f_c = d1.compose_or_none(eps_b, Ff);
  if (f_c == kNoMor) return true;

  Mor t1_fc = t1.carrier.on_morphism(f_c);
  Mor str_a = assemble_strength(fm, adj, u, a);
  if (t1_fc == kNoMor || str_a == kNoMor) return true;
  Mor line13 = d1.compose_or_none(t1_fc, str_a);
  if (line13 == kNoMor) return true;

  // unfolded definition: T₁ε_B ∘ T₁Ff ∘ ε_{T₁FGA} ∘ F T_u η_{GA}
  Mor eta_ga = adj.unit_nat.defined_at(a) ? adj.unit_nat.component(a) : kNoMor;
  if (eta_ga == kNoMor) return true;
  Mor tu_eta = tu.carrier.on_morphism(eta_ga);
  if (tu_eta == kNoMor || !adj.upper.defined_on_morphism(tu_eta)) return true;
  Mor F_tu_eta = adj.upper.on_morphism(tu_eta);
  Obj fga = adj.upper.on_object(a);
  Obj t1_fga = t1.carrier.on_object(fga);
  if (t1_fga == kNoObj) return true;
  Mor eps_t1fga = adj.counit_nat.defined_at(t1_fga)
                      ? adj.counit_nat.component(t1_fga)
                      : kNoMor;
  Mor t1_Ff = t1.carrier.on_morphism(Ff);
  Mor t1_eps_b = t1.carrier.on_morphism(eps_b);
  if (eps_t1fga == kNoMor || t1_Ff == kNoMor || t1_eps_b == kNoMor) return true;
  Mor rhs13 = d1.compose_or_none(eps_t1fga, F_tu_eta);
  rhs13 = rhs13 == kNoMor ? kNoMor : d1.compose_or_none(t1_Ff, rhs13);
  rhs13 = rhs13 == kNoMor ? kNoMor : d1.compose_or_none(t1_eps_b, rhs13);
  if (rhs13 == kNoMor) return true;
  if (line13 != rhs13) return fail("(13) definition unfold");

  // (14): naturality of ε twice: ε_{T₁B} ∘ FG T₁ε_B ∘ FG T₁Ff ∘ F T_u η_{GA}
  Obj t1b = t1.carrier.on_object(b);
  if (t1b == kNoObj) return true;
  Mor eps_t1b = adj.counit_nat.defined_at(t1b) ? adj.counit_nat.component(t1b)
                                               : kNoMor;
  if (eps_t1b == kNoMor) return true;
  auto FG = [&](Mor g) -> Mor {
    Mor lg = adj.lower.defined_on_morphism(g) ? adj.lower.on_morphism(g) : kNoMor;
    if (lg == kNoMor || !adj.upper.defined_on_morphism(lg)) return kNoMor;
    return adj.upper.on_morphism(lg);
  };
  Mor fg_t1_eps = FG(t1_eps_b);
  Mor fg_t1_ff = FG(t1_Ff);
  if (fg_t1_eps == kNoMor || fg_t1_ff == kNoMor) return true;
  Mor rhs14 = d1.compose_or_none(fg_t1_ff, F_tu_eta);
  rhs14 = rhs14 == kNoMor ? kNoMor : d1.compose_or_none(fg_t1_eps, rhs14);
  rhs14 = rhs14 == kNoMor ? kNoMor : d1.compose_or_none(eps_t1b, rhs14);
  if (rhs14 == kNoMor) return true;
  if (rhs13 != rhs14) return fail("(14) counit naturality");

  // (15): by (10), G T₁ = T_u G: ε_{T₁B} ∘ F T_u Gε_B ∘ F T_u GFf ∘ F T_u η_{GA}
  auto F_Tu_G = [&](Mor g) -> Mor {
    Mor lg = adj.lower.defined_on_morphism(g) ? adj.lower.on_morphism(g) : kNoMor;
    if (lg == kNoMor) return kNoMor;
    Mor tug = tu.carrier.on_morphism(lg);
    if (tug == kNoMor || !adj.upper.defined_on_morphism(tug)) return kNoMor;
    return adj.upper.on_morphism(tug);
  };
  Mor ftug_eps = F_Tu_G(eps_b);
  Mor ftug_ff = F_Tu_G(Ff);
  if (ftug_eps == kNoMor || ftug_ff == kNoMor) return true;
  Mor rhs15 = d1.compose_or_none(ftug_ff, F_tu_eta);
  rhs15 = rhs15 == kNoMor ? kNoMor : d1.compose_or_none(ftug_eps, rhs15);
  rhs15 = rhs15 == kNoMor ? kNoMor : d1.compose_or_none(eps_t1b, rhs15);
  if (rhs15 == kNoMor) return true;
  if (rhs14 != rhs15) return fail("(15) formal naturality");

  // (16): η naturality: ε_{T₁B} ∘ F T_u Gε_B ∘ F T_u η_{GB} ∘ F T_u f
  Mor eta_gb = adj.unit_nat.defined_at(b) ? adj.unit_nat.component(b) : kNoMor;
  if (eta_gb == kNoMor) return true;
  Mor tu_eta_gb = tu.carrier.on_morphism(eta_gb);
  Mor tu_f = tu.carrier.on_morphism(f_cu);
  if (tu_eta_gb == kNoMor || tu_f == kNoMor ||
      !adj.upper.defined_on_morphism(tu_eta_gb) ||
      !adj.upper.defined_on_morphism(tu_f))
    return true;
  Mor rhs16 = d1.compose_or_none(adj.upper.on_morphism(tu_eta_gb),
                                 adj.upper.on_morphism(tu_f));
  rhs16 = rhs16 == kNoMor ? kNoMor : d1.compose_or_none(ftug_eps, rhs16);
  rhs16 = rhs16 == kNoMor ? kNoMor : d1.compose_or_none(eps_t1b, rhs16);
  if (rhs16 == kNoMor) return true;
  if (rhs15 != rhs16) return fail("(16) unit naturality");

  // (17): zigzag Gε∘ηG = id: ε_{T₁B} ∘ F T_u f
  Mor rhs17 = d1.compose_or_none(eps_t1b, adj.upper.on_morphism(tu_f));
  if (rhs17 == kNoMor) return true;
  if (rhs16 != rhs17) return fail("(17) triangle identity");

  // (18): definition of (T_u f)^C
  Mor lhs18 = d1.compose_or_none(
      adj.counit_nat.defined_at(t1b) ? adj.counit_nat.component(t1b) : kNoMor,
      adj.upper.on_morphism(tu_f));
  if (lhs18 != rhs17) return fail("(18) definition of f^C");
  return true;
}

}  // namespace

bool roundtrip_localisable(const LocalisableMonad& lm, std::string* detail) {
  FormalMonad fm = localisable_to_formal(lm);
  auto rep = fm.validate();
  if (!rep.ok()) {
    if (detail) *detail = "formal monad invalid: " + rep.summary();
    return false;
  }
  LocalisableMonad back = formal_to_localisable(fm);
  if (!back.report.ok()) {
    if (detail) *detail = "reassembled strength fails: " + back.report.summary();
    return false;
  }
  if (!back.monad.equal_tables(lm.monad)) {
    if (detail) *detail = "monad tables differ after the round trip";
    return false;
  }
  if (!back.strength.equal_tables(lm.strength)) {
    if (detail) *detail = "strength tables differ after the round trip";
    return false;
  }
  // proof-level identities per u and per C|u morphism
  const int top = fm.zi->table.top;
  for (int u = 0; u < fm.zi->size(); ++u) {
    if (!fm.zi->leq(u, top)) continue;
    RestrictionFunctors adj =
        build_adjunction(*fm.base, *fm.restrictions[u], *fm.restrictions[top],
                         fm.zi->leq_witness[u][top]);
    const FinCategory& du = fm.restrictions[u]->cat();
    for (Mor f = 0; f < du.morphism_count(); ++f)
      if (!proof_chain_holds(fm, adj, u, f, detail)) return false;
  }
  return true;
}

bool roundtrip_formal(const FormalMonad& fm, std::string* detail) {
  LocalisableMonad lm = formal_to_localisable(fm);
  if (!lm.report.ok()) {
    if (detail) *detail = "formal→loc strength fails: " + lm.report.summary();
    return false;
  }
  FormalMonad fm2 = localisable_to_formal(lm);
  for (int u = 0; u < fm.zi->size(); ++u) {
    if (!fm2.monads[u].carrier.equal_tables(fm.monads[u].carrier)) {
      if (detail)
        *detail = "carrier of T|u differs after the round trip at u index " +
                  std::to_string(u);
      return false;
    }
    if (fm2.monads[u].unit != fm.monads[u].unit ||
        fm2.monads[u].mult != fm.monads[u].mult) {
      if (detail)
        *detail = "unit/mult of T|u differ after the round trip at u index " +
                  std::to_string(u);
      return false;
    }
  }
  return true;
}

bool MonoidalPoset::unit_is_initial() const {
  if (unit < 0) return false;
  for (int i = 0; i < order.n; ++i)
    if (!order.le(unit, i)) return false;
  return true;
}

MonoidalPoset MonoidalPoset::join_semilattice(const SemilatticeTable& t) {
  MonoidalPoset p;
  p.order = t;
  p.tensor.assign(t.n, std::vector<int>(t.n, -1));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      if (t.join[i][j] < 0)
        throw MalformedTable("index poset lacks a join; not a join-semilattice");
      p.tensor[i][j] = t.join[i][j];
    }
  if (!t.bottom)
    throw MalformedTable("join-semilattice index needs a bottom as unit");
  p.unit = *t.bottom;
  return p;
}

namespace {

bool monad_map_ok(const FinCategory& c, const MonadData& s, const MonadData& t,
                  const std::vector<Mor>& lam, std::string law,
                  ValidationReport& rep) {
  bool all = true;
  for (Obj a = 0; a < c.object_count(); ++a) {
    Mor la = lam[a];
    if (la == kNoMor) {
      rep.skip(law);
      continue;
    }
    // naturality
    // (checked against both carriers over all morphisms below)
    Mor eta_s = s.unit[a], eta_t = t.unit[a];
    if (eta_s == kNoMor || eta_t == kNoMor) {
      rep.skip(law);
    } else {
      Mor lhs = c.compose_or_none(la, eta_s);
      if (lhs == kNoMor)
        rep.skip(law);
      else if (lhs != eta_t) {
        rep.fail(law, "λ∘η_u ≠ η_v at '" + c.object_name(a) + "'");
        all = false;
      } else {
        rep.pass(law);
      }
    }
    Mor mu_s = s.mult[a], mu_t = t.mult[a];
    Obj ta = t.carrier.on_object(a);
    Mor la_tva = ta == kNoObj ? kNoMor : lam[ta];
    Mor s_la = s.carrier.on_morphism(la);
    if (mu_s == kNoMor || mu_t == kNoMor || la_tva == kNoMor || s_la == kNoMor) {
      rep.skip(law);
      continue;
    }
    Mor lhs = c.compose_or_none(la, mu_s);
    Mor mid = c.compose_or_none(la_tva, s_la);
    Mor rhs = mid == kNoMor ? kNoMor : c.compose_or_none(mu_t, mid);
    if (lhs == kNoMor || rhs == kNoMor) {
      rep.skip(law);
    } else if (lhs != rhs) {
      rep.fail(law, "λ∘μ_u ≠ μ_v∘(λ⋆λ) at '" + c.object_name(a) + "'");
      all = false;
    } else {
      rep.pass(law);
    }
  }
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Obj a = c.dom(f), b = c.cod(f);
    Mor sf = s.carrier.on_morphism(f);
    Mor tf = t.carrier.on_morphism(f);
    if (lam[a] == kNoMor || lam[b] == kNoMor || sf == kNoMor || tf == kNoMor) {
      rep.skip(law + "/natural");
      continue;
    }
    Mor lhs = c.compose_or_none(lam[b], sf);
    Mor rhs = c.compose_or_none(tf, lam[a]);
    if (lhs == kNoMor || rhs == kNoMor)
      rep.skip(law + "/natural");
    else if (lhs != rhs) {
      rep.fail(law + "/natural", "level map not natural at " + c.describe(f));
      all = false;
    } else {
      rep.pass(law + "/natural");
    }
  }
  return all;
}

}  // namespace

ValidationReport check_indexed(const IndexedMonad& im) {
  ValidationReport rep;
  const FinCategory& c = *im.cat;
  const int n = im.index.order.n;
  for (int u = 0; u < n; ++u) rep.merge(check_monad(im.monads[u]), "indexed/");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!im.index.order.le(u, v)) continue;
      monad_map_ok(c, im.monads[u], im.monads[v], im.level[u][v],
                   "indexed/level", rep);
      // functoriality of levels along u ≤ v ≤ w
      for (int w = 0; w < n; ++w) {
        if (!im.index.order.le(v, w)) continue;
        for (Obj a = 0; a < c.object_count(); ++a) {
          Mor uv = im.level[u][v][a], vw = im.level[v][w][a],
              uw = im.level[u][w][a];
          if (uv == kNoMor || vw == kNoMor || uw == kNoMor) {
            rep.skip("indexed/level-compose");
            continue;
          }
          Mor comp = c.compose_or_none(vw, uv);
          if (comp == kNoMor)
            rep.skip("indexed/level-compose");
          else if (comp != uw)
            rep.fail("indexed/level-compose",
                     "level maps do not compose at '" + c.object_name(a) + "'");
          else
            rep.pass("indexed/level-compose");
        }
      }
    }
  return rep;
}

ValidationReport check_graded(const GradedMonad& gm) {
  ValidationReport rep;
  const FinCategory& c = *gm.cat;
  const int n = gm.index.order.n;
  for (int u = 0; u < n; ++u) rep.merge(gm.functors[u].validate(), "graded/");
  // unit typing + naturality: η : Id ⇒ T_unit
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Obj a = c.dom(f), b = c.cod(f);
    Mor tf = gm.functors[gm.index.unit].on_morphism(f);
    if (gm.unit[a] == kNoMor || gm.unit[b] == kNoMor || tf == kNoMor) {
      rep.skip("graded/unit-natural");
      continue;
    }
    Mor lhs = c.compose_or_none(gm.unit[b], f);
    Mor rhs = c.compose_or_none(tf, gm.unit[a]);
    if (lhs == kNoMor || rhs == kNoMor)
      rep.skip("graded/unit-natural");
    else if (lhs != rhs)
      rep.fail("graded/unit-natural", "η not natural at " + c.describe(f));
    else
      rep.pass("graded/unit-natural");
  }
  // multiplication: naturality in A, unitality, associativity
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int uv = gm.index.tensor[u][v];
      const Functor& Tu = gm.functors[u];
      const Functor& Tv = gm.functors[v];
      for (Mor f = 0; f < c.morphism_count(); ++f) {
        Obj a = c.dom(f), b = c.cod(f);
        Mor tvf = Tv.on_morphism(f);
        Mor tutvf = tvf == kNoMor ? kNoMor : Tu.on_morphism(tvf);
        Mor tuvf = gm.functors[uv].on_morphism(f);
        if (tutvf == kNoMor || tuvf == kNoMor || gm.mult[u][v][a] == kNoMor ||
            gm.mult[u][v][b] == kNoMor) {
          rep.skip("graded/mult-natural");
          continue;
        }
        Mor lhs = c.compose_or_none(gm.mult[u][v][b], tutvf);
        Mor rhs = c.compose_or_none(tuvf, gm.mult[u][v][a]);
        if (lhs == kNoMor || rhs == kNoMor)
          rep.skip("graded/mult-natural");
        else if (lhs != rhs)
          rep.fail("graded/mult-natural", "μ_{u,v} not natural at " + c.describe(f));
        else
          rep.pass("graded/mult-natural");
      }
    }
  const int e = gm.index.unit;
  for (int u = 0; u < n; ++u) {
    if (gm.index.tensor[e][u] != u || gm.index.tensor[u][e] != u) {
      rep.fail("graded/strict-unit", "index unit is not strict");
      continue;
    }
    for (Obj a = 0; a < c.object_count(); ++a) {
      Obj tua = gm.functors[u].on_object(a);
      if (tua == kNoObj) {
        rep.skip("graded/unitality");
        continue;
      }
      Mor eta_tu = gm.unit[tua];
      Mor left = eta_tu == kNoMor || gm.mult[e][u][a] == kNoMor
                     ? kNoMor
                     : c.compose_or_none(gm.mult[e][u][a], eta_tu);
      Mor teta = gm.unit[a] == kNoMor ? kNoMor
                                      : gm.functors[u].on_morphism(gm.unit[a]);
      Mor right = teta == kNoMor || gm.mult[u][e][a] == kNoMor
                      ? kNoMor
                      : c.compose_or_none(gm.mult[u][e][a], teta);
      if (left == kNoMor || right == kNoMor) {
        rep.skip("graded/unitality");
        continue;
      }
      if (left != c.identity(tua) || right != c.identity(tua))
        rep.fail("graded/unitality",
                 "graded unit laws fail at grade " + std::to_string(u) +
                     ", object '" + c.object_name(a) + "'");
      else
        rep.pass("graded/unitality");
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        int uv = gm.index.tensor[u][v];
        int vw = gm.index.tensor[v][w];
        int uvw = gm.index.tensor[uv][w];
        if (uvw != gm.index.tensor[u][vw]) {
          rep.fail("graded/strict-assoc", "index tensor not associative");
          continue;
        }
        for (Obj a = 0; a < c.object_count(); ++a) {
          Obj twa = gm.functors[w].on_object(a);
          if (twa == kNoObj) {
            rep.skip("graded/assoc");
            continue;
          }
          Mor lhs1 = gm.mult[u][v][twa];
          Mor lhs2 = gm.mult[uv][w][a];
          Mor rhs1 = gm.mult[v][w][a] == kNoMor
                         ? kNoMor
                         : gm.functors[u].on_morphism(gm.mult[v][w][a]);
          Mor rhs2 = gm.mult[u][vw][a];
          if (lhs1 == kNoMor || lhs2 == kNoMor || rhs1 == kNoMor ||
              rhs2 == kNoMor) {
            rep.skip("graded/assoc");
            continue;
          }
          Mor lhs = c.compose_or_none(lhs2, lhs1);
          Mor rhs = c.compose_or_none(rhs2, rhs1);
          if (lhs == kNoMor || rhs == kNoMor)
            rep.skip("graded/assoc");
          else if (lhs != rhs)
            rep.fail("graded/assoc",
                     "graded associativity fails at grades (" +
                         std::to_string(u) + "," + std::to_string(v) + "," +
                         std::to_string(w) + "), object '" + c.object_name(a) +
                         "'");
          else
            rep.pass("graded/assoc");
        }
      }
  // level maps natural and compatible with μ
  for (int u = 0; u < n; ++u)
    for (int u2 = 0; u2 < n; ++u2) {
      if (!gm.index.order.le(u, u2)) continue;
      for (int v = 0; v < n; ++v)
        for (int v2 = 0; v2 < n; ++v2) {
          if (!gm.index.order.le(v, v2)) continue;
          int uv = gm.index.tensor[u][v];
          int u2v2 = gm.index.tensor[u2][v2];
          for (Obj a = 0; a < c.object_count(); ++a) {
            Obj tva = gm.functors[v].on_object(a);
            Obj tv2a = gm.functors[v2].on_object(a);
            if (tva == kNoObj || tv2a == kNoObj) {
              rep.skip("graded/mult-monotone");
              continue;
            }
            Mor lv = gm.level[v][v2][a];
            Mor lu = lv == kNoMor ? kNoMor : gm.level[u][u2][tv2a];
            Mor tu_lv = lv == kNoMor ? kNoMor : gm.functors[u].on_morphism(lv);
            if (lu == kNoMor || tu_lv == kNoMor ||
                gm.mult[u2][v2][a] == kNoMor || gm.mult[u][v][a] == kNoMor ||
                gm.level[uv][u2v2][a] == kNoMor) {
              rep.skip("graded/mult-monotone");
              continue;
            }
            Mor horizontal = c.compose_or_none(lu, tu_lv);
            Mor lhs = horizontal == kNoMor
                          ? kNoMor
                          : c.compose_or_none(gm.mult[u2][v2][a], horizontal);
            Mor rhs = c.compose_or_none(gm.level[uv][u2v2][a], gm.mult[u][v][a]);
            if (lhs == kNoMor || rhs == kNoMor)
              rep.skip("graded/mult-monotone");
            else if (lhs != rhs)
              rep.fail("graded/mult-monotone",
                       "μ is not monotone in the grades at '" +
                           c.object_name(a) + "'");
            else
              rep.pass("graded/mult-monotone");
          }
        }
    }
  return rep;
}

GradedMonad indexed_to_graded(const IndexedMonad& im) {
  if (!im.index.unit_is_initial())
    throw MalformedTable("indexed→graded needs an initial tensor unit");
  const FinCategory& c = *im.cat;
  const int n = im.index.order.n;
  GradedMonad g;
  g.cat = im.cat;
  g.index = im.index;
  for (int u = 0; u < n; ++u) g.functors.push_back(im.monads[u].carrier);
  g.unit = im.monads[im.index.unit].unit;
  g.level = im.level;
  g.mult.assign(n, std::vector<std::vector<Mor>>(
                       n, std::vector<Mor>(c.object_count(), kNoMor)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int uv = im.index.tensor[u][v];
      for (Obj a = 0; a < c.object_count(); ++a) {
        // T_u T_v A -> T_{uv} T_v A -> T_{uv} T_{uv} A -> T_{uv} A
        Obj tva = im.monads[v].carrier.on_object(a);
        if (tva == kNoObj) continue;
        Mor first = im.level[u][uv][tva];
        Mor lv = im.level[v][uv][a];
        Mor second = lv == kNoMor ? kNoMor : im.monads[uv].carrier.on_morphism(lv);
        Mor mu = im.monads[uv].mult[a];
        if (first == kNoMor || second == kNoMor || mu == kNoMor) continue;
        Mor comp = c.compose_or_none(second, first);
        comp = comp == kNoMor ? kNoMor : c.compose_or_none(mu, comp);
        g.mult[u][v][a] = comp;
      }
    }
  return g;
}

IndexedMonad graded_to_indexed(const GradedMonad& gm) {
  if (!gm.index.has_codiagonals())
    throw MalformedTable("graded→indexed needs codiagonals u⊗u ≤ u");
  const FinCategory& c = *gm.cat;
  const int n = gm.index.order.n;
  IndexedMonad im;
  im.cat = gm.cat;
  im.index = gm.index;
  im.level = gm.level;
  for (int u = 0; u < n; ++u) {
    MonadData m(&c);
    m.carrier = gm.functors[u];
    for (Obj a = 0; a < c.object_count(); ++a) {
      // η̄_{u,A} = level_{0≤u} ∘ η_A
      Mor eta = gm.unit[a];
      Mor lv = gm.level[gm.index.unit][u][a];
      if (eta != kNoMor && lv != kNoMor) m.unit[a] = c.compose_or_none(lv, eta);
      // μ̄_{u,A} = T_∇ ∘ μ_{u,u,A}, with T_∇ the level map for u⊗u ≤ u
      int uu = gm.index.tensor[u][u];
      Mor mu = gm.mult[u][u][a];
      Mor nabla = gm.level[uu][u][a];
      if (mu != kNoMor && nabla != kNoMor) m.mult[a] = c.compose_or_none(nabla, mu);
    }
    im.monads.push_back(std::move(m));
  }
  return im;
}

bool graded_indexed_roundtrip(const IndexedMonad& im, std::string* detail) {
  GradedMonad g = indexed_to_graded(im);
  auto grep = check_graded(g);
  if (!grep.ok()) {
    if (detail) *detail = "induced graded monad invalid: " + grep.summary();
    return false;
  }
  IndexedMonad back = graded_to_indexed(g);
  auto irep = check_indexed(back);
  if (!irep.ok()) {
    if (detail) *detail = "induced indexed monad invalid: " + irep.summary();
    return false;
  }
  const int n = im.index.order.n;
  for (int u = 0; u < n; ++u) {
    if (!back.monads[u].carrier.equal_tables(im.monads[u].carrier) ||
        back.monads[u].unit != im.monads[u].unit ||
        back.monads[u].mult != im.monads[u].mult) {
      if (detail)
        *detail = "indexed→graded→indexed differs at grade " + std::to_string(u);
      return false;
    }
  }
  GradedMonad g2 = indexed_to_graded(back);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g2.mult[u][v] != g.mult[u][v]) {
        if (detail)
          *detail = "graded→indexed→graded differs at grades (" +
                    std::to_string(u) + "," + std::to_string(v) + ")";
        return false;
      }
  if (g2.unit != g.unit) {
    if (detail) *detail = "graded unit differs after the round trip";
    return false;
  }
  return true;
}

IndexedMonad join_closure_indexed(const FinCategory& ecat,
                                  const MonoidalPoset& poset) {
  const int n = poset.order.n;
  if (ecat.object_count() != n)
    throw MalformedTable("index category does not match the poset");
  IndexedMonad im;
  im.cat = &ecat;
  im.index = poset;
  auto arrow = [&](int i, int j) {
    const auto& h = ecat.hom(i, j);
    return h.empty() ? kNoMor : h[0];
  };
  for (int u = 0; u < n; ++u) {
    MonadData m(&ecat);
    for (Obj a = 0; a < n; ++a) m.carrier.map_object(a, poset.order.join[a][u]);
    for (Mor f = 0; f < ecat.morphism_count(); ++f)
      m.carrier.map_morphism(
          f, arrow(m.carrier.on_object(ecat.dom(f)),
                   m.carrier.on_object(ecat.cod(f))));
    for (Obj a = 0; a < n; ++a) {
      m.unit[a] = arrow(a, m.carrier.on_object(a));
      m.mult[a] = ecat.identity(m.carrier.on_object(a));
    }
    im.monads.push_back(std::move(m));
  }
  im.level.assign(n, std::vector<std::vector<Mor>>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      im.level[u][v].assign(n, kNoMor);
      if (!poset.order.le(u, v)) continue;
      for (Obj a = 0; a < n; ++a)
        im.level[u][v][a] = arrow(im.monads[u].carrier.on_object(a),
                                  im.monads[v].carrier.on_object(a));
    }
  return im;
}

}  // namespace tensorloc
