#include "tensorloc/monad.hpp"

#include <algorithm>
#include <string>

namespace tensorloc {

ValidationReport check_monad(const MonadData& m) {
  ValidationReport rep;
  const FinCategory& c = *m.cat;
  rep.merge(m.carrier.validate(), "carrier/");

  auto T_obj = [&](Obj a) { return m.carrier.on_object(a); };
  auto T_mor = [&](Mor f) { return m.carrier.on_morphism(f); };

  for (Obj a = 0; a < c.object_count(); ++a) {
    Mor eta = m.unit[a];
    if (eta == kNoMor) {
      rep.skip("monad/unit-typing");
    } else if (T_obj(a) == kNoObj || c.dom(eta) != a || c.cod(eta) != T_obj(a)) {
      rep.fail("monad/unit-typing",
               "η at '" + c.object_name(a) + "' has wrong endpoints");
    } else {
      rep.pass("monad/unit-typing");
    }
    Mor mu = m.mult[a];
    if (mu == kNoMor) {
      rep.skip("monad/mult-typing");
      continue;
    }
    Obj ta = T_obj(a);
    Obj tta = ta == kNoObj ? kNoObj : T_obj(ta);
    if (ta == kNoObj || tta == kNoObj || c.dom(mu) != tta || c.cod(mu) != ta)
      rep.fail("monad/mult-typing",
               "μ at '" + c.object_name(a) + "' has wrong endpoints");
    else
      rep.pass("monad/mult-typing");
  }

  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Obj a = c.dom(f), b = c.cod(f);
    Mor tf = T_mor(f);
    if (tf != kNoMor && m.unit[a] != kNoMor && m.unit[b] != kNoMor) {
      Mor lhs = c.compose_or_none(m.unit[b], f);
      Mor rhs = c.compose_or_none(tf, m.unit[a]);
      if (lhs == kNoMor || rhs == kNoMor)
        rep.skip("monad/unit-natural");
      else if (lhs != rhs)
        rep.fail("monad/unit-natural", "η not natural at " + c.describe(f));
      else
        rep.pass("monad/unit-natural");
    } else {
      rep.skip("monad/unit-natural");
    }
    Mor ttf = tf == kNoMor ? kNoMor : T_mor(tf);
    if (ttf != kNoMor && m.mult[a] != kNoMor && m.mult[b] != kNoMor) {
      Mor lhs = c.compose_or_none(m.mult[b], ttf);
      Mor rhs = c.compose_or_none(tf, m.mult[a]);
      if (lhs == kNoMor || rhs == kNoMor)
        rep.skip("monad/mult-natural");
      else if (lhs != rhs)
        rep.fail("monad/mult-natural", "μ not natural at " + c.describe(f));
      else
        rep.pass("monad/mult-natural");
    } else {
      rep.skip("monad/mult-natural");
    }
  }

  for (Obj a = 0; a < c.object_count(); ++a) {
    Obj ta = T_obj(a);
    Mor mu = m.mult[a];
    if (ta == kNoObj || mu == kNoMor) {
      rep.skip("monad/unit-law");
      rep.skip("monad/assoc");
      continue;
    }
    Mor eta_ta = m.unit[ta];
    if (eta_ta == kNoMor) {
      rep.skip("monad/unit-law");
    } else {
      Mor left = c.compose_or_none(mu, eta_ta);
      if (left == kNoMor)
        rep.skip("monad/unit-law");
      else if (left != c.identity(ta))
        rep.fail("monad/unit-law", "μ∘ηT ≠ id at '" + c.object_name(a) + "'");
      else
        rep.pass("monad/unit-law");
    }
    Mor teta = m.unit[a] == kNoMor ? kNoMor : T_mor(m.unit[a]);
    if (teta == kNoMor) {
      rep.skip("monad/unit-law");
    } else {
      Mor right = c.compose_or_none(mu, teta);
      if (right == kNoMor)
        rep.skip("monad/unit-law");
      else if (right != c.identity(ta))
        rep.fail("monad/unit-law", "μ∘Tη ≠ id at '" + c.object_name(a) + "'");
      else
        rep.pass("monad/unit-law");
    }
    Mor mu_ta = m.mult[ta];
    Mor tmu = T_mor(mu);
    if (mu_ta == kNoMor || tmu == kNoMor) {
      rep.skip("monad/assoc");
    } else {
      Mor lhs = c.compose_or_none(mu, mu_ta);
      Mor rhs = c.compose_or_none(mu, tmu);
      if (lhs == kNoMor || rhs == kNoMor)
        rep.skip("monad/assoc");
      else if (lhs != rhs)
        rep.fail("monad/assoc", "μ∘μT ≠ μ∘Tμ at '" + c.object_name(a) + "'");
      else
        rep.pass("monad/assoc");
    }
  }
  return rep;
}

ValidationReport check_monad_morphism_report(const MonadMorphism& mm) {
  ValidationReport rep;
  const MonadData& s = *mm.source;
  const MonadData& t = *mm.target;
  const FinCategory& cs = *s.cat;
  const FinCategory& ct = *t.cat;
  const Functor& F = mm.functor;
  rep.merge(F.validate(), "functor/");

  // typing: lax φ_A : T(F A) -> F(S A); oplax ψ_A : F(S A) -> T(F A)
  for (Obj a = 0; a < cs.object_count(); ++a) {
    Mor comp = mm.transform.at(a);
    if (comp == kNoMor || !F.defined_on_object(a)) {
      rep.skip("morphism/typing");
      continue;
    }
    Obj fa = F.on_object(a);
    Obj sa = s.carrier.on_object(a);
    Obj tfa = t.carrier.on_object(fa);
    Obj fsa = sa == kNoObj ? kNoObj : F.on_object(sa);
    if (tfa == kNoObj || fsa == kNoObj) {
      rep.skip("morphism/typing");
      continue;
    }
    Obj want_dom = mm.lax ? tfa : fsa;
    Obj want_cod = mm.lax ? fsa : tfa;
    if (ct.dom(comp) != want_dom || ct.cod(comp) != want_cod)
      rep.fail("morphism/typing",
               "component at '" + cs.object_name(a) + "' has wrong endpoints");
    else
      rep.pass("morphism/typing");
  }

  for (Mor f = 0; f < cs.morphism_count(); ++f) {
    Obj a = cs.dom(f), b = cs.cod(f);
    Mor pa = mm.transform.at(a), pb = mm.transform.at(b);
    Mor ff = F.defined_on_morphism(f) ? F.on_morphism(f) : kNoMor;
    Mor sf = s.carrier.on_morphism(f);
    Mor fsf = sf == kNoMor ? kNoMor : F.on_morphism(sf);
    Mor tff = ff == kNoMor ? kNoMor : t.carrier.on_morphism(ff);
    if (pa == kNoMor || pb == kNoMor || fsf == kNoMor || tff == kNoMor) {
      rep.skip("morphism/natural");
      continue;
    }
    Mor lhs, rhs;
    if (mm.lax) {
      lhs = ct.compose_or_none(pb, tff);  // φ_B ∘ T F f
      rhs = ct.compose_or_none(fsf, pa);  // F S f ∘ φ_A
    } else {
      lhs = ct.compose_or_none(pb, fsf);  // ψ_B ∘ F S f
      rhs = ct.compose_or_none(tff, pa);  // T F f ∘ ψ_A
    }
    if (lhs == kNoMor || rhs == kNoMor)
      rep.skip("morphism/natural");
    else if (lhs != rhs)
      rep.fail("morphism/natural", "transform not natural at " + cs.describe(f));
    else
      rep.pass("morphism/natural");
  }

  // unit diagram: lax  φ_A ∘ η^T_{F A} = F(η^S_A)
  //               oplax ψ_A ∘ F(η^S_A) = η^T_{F A}
  for (Obj a = 0; a < cs.object_count(); ++a) {
    Mor comp = mm.transform.at(a);
    if (comp == kNoMor || !F.defined_on_object(a)) {
      rep.skip("morphism/unit");
      continue;
    }
    Obj fa = F.on_object(a);
    Mor eta_t = t.unit.at(fa);
    Mor eta_s = s.unit.at(a);
    Mor feta = eta_s == kNoMor ? kNoMor : F.on_morphism(eta_s);
    if (eta_t == kNoMor || feta == kNoMor) {
      rep.skip("morphism/unit");
      continue;
    }
    Mor lhs = mm.lax ? ct.compose_or_none(comp, eta_t)
                     : ct.compose_or_none(comp, feta);
    Mor rhs = mm.lax ? feta : eta_t;
    if (lhs == kNoMor)
      rep.skip("morphism/unit");
    else if (lhs != rhs)
      rep.fail("morphism/unit", "unit diagram fails at '" + cs.object_name(a) + "'");
    else
      rep.pass("morphism/unit");
  }

  // multiplication diagram:
  //   lax   φ_A ∘ μ^T_{F A} = F(μ^S_A) ∘ φ_{S A} ∘ T(φ_A)
  //   oplax ψ_A ∘ F(μ^S_A) = μ^T_{F A} ∘ T(ψ_A) ∘ ψ_{S A}
  for (Obj a = 0; a < cs.object_count(); ++a) {
    Mor comp = mm.transform.at(a);
    if (comp == kNoMor || !F.defined_on_object(a)) {
      rep.skip("morphism/mult");
      continue;
    }
    Obj fa = F.on_object(a);
    Obj sa = s.carrier.on_object(a);
    Mor mu_t = t.mult.at(fa);
    Mor mu_s = s.mult.at(a);
    Mor fmu = mu_s == kNoMor ? kNoMor : F.on_morphism(mu_s);
    Mor comp_sa = sa == kNoObj ? kNoMor : mm.transform.at(sa);
    Mor tcomp = t.carrier.on_morphism(comp);
    if (mu_t == kNoMor || fmu == kNoMor || comp_sa == kNoMor || tcomp == kNoMor) {
      rep.skip("morphism/mult");
      continue;
    }
    Mor lhs, rhs;
    if (mm.lax) {
      lhs = ct.compose_or_none(comp, mu_t);
      rhs = ct.compose_or_none(comp_sa, tcomp);
      rhs = rhs == kNoMor ? kNoMor : ct.compose_or_none(fmu, rhs);
    } else {
      lhs = ct.compose_or_none(comp, fmu);
      rhs = ct.compose_or_none(tcomp, comp_sa);
      rhs = rhs == kNoMor ? kNoMor : ct.compose_or_none(mu_t, rhs);
    }
    if (lhs == kNoMor || rhs == kNoMor)
      rep.skip("morphism/mult");
    else if (lhs != rhs)
      rep.fail("morphism/mult",
               "multiplication diagram fails at '" + cs.object_name(a) + "'");
    else
      rep.pass("morphism/mult");
  }
  return rep;
}

bool check_monad_morphism(const MonadMorphism& mm) {
  return check_monad_morphism_report(mm).ok();
}

MonadMorphism compose_monad_morphisms(const MonadMorphism& outer,
                                      const MonadMorphism& inner) {
  if (outer.lax != inner.lax)
    throw TypeMismatch("cannot compose lax with oplax monad morphism");
  if (inner.target != outer.source)
    throw TypeMismatch("monad morphism composition endpoint mismatch");
  MonadMorphism r;
  r.source = inner.source;
  r.target = outer.target;
  r.lax = outer.lax;
  r.functor = Functor::composed(outer.functor, inner.functor);
  const FinCategory& ct = *outer.target->cat;
  const FinCategory& cs = *inner.source->cat;
  r.transform.assign(cs.object_count(), kNoMor);
  for (Obj a = 0; a < cs.object_count(); ++a) {
    Mor pa = inner.transform.at(a);
    if (pa == kNoMor || !inner.functor.defined_on_object(a)) continue;
    Obj ga = inner.functor.on_object(a);
    Mor qa = outer.transform.at(ga);
    Mor gpa = outer.functor.on_morphism(pa);
    if (qa == kNoMor || gpa == kNoMor) continue;
    // lax: G(φ_A) ∘ φ'_{G A}; oplax: ψ'_{G A} ∘ G(ψ_A)
    Mor comp = r.lax ? ct.compose_or_none(gpa, qa) : ct.compose_or_none(qa, gpa);
    r.transform[a] = comp;
  }
  return r;
}

int AlgebraCategory::algebra_index(Obj b, Mor theta) const {
  for (std::size_t i = 0; i < algebras.size(); ++i)
    if (algebras[i].first == b && algebras[i].second == theta)
      return static_cast<int>(i);
  return -1;
}

AlgebraCategory build_em_category(const MonadData& m, std::int64_t candidate_cap) {
  const FinCategory& c = *m.cat;
  AlgebraCategory em;
  em.cat = std::make_unique<FinCategory>();
  std::int64_t candidates = 0;
  for (Obj b = 0; b < c.object_count(); ++b) {
    Obj tb = m.carrier.on_object(b);
    if (tb == kNoObj || m.unit[b] == kNoMor || m.mult[b] == kNoMor) continue;
    candidates += static_cast<std::int64_t>(c.hom(tb, b).size());
    if (candidates > candidate_cap)
      throw SizeLimit("EM candidate enumeration exceeds cap of " +
                      std::to_string(candidate_cap));
    for (Mor theta : c.hom(tb, b)) {
      if (c.compose_or_none(theta, m.unit[b]) != c.identity(b)) continue;
      Mor ttheta = m.carrier.on_morphism(theta);
      if (ttheta == kNoMor) continue;
      Mor lhs = c.compose_or_none(theta, m.mult[b]);
      Mor rhs = c.compose_or_none(theta, ttheta);
      if (lhs == kNoMor || rhs == kNoMor || lhs != rhs) continue;
      em.algebras.push_back({b, theta});
      em.cat->add_object("em_" + c.object_name(b) + "_" + c.morphism_name(theta));
    }
  }
  struct Hom {
    int src, dst;
    Mor base;
  };
  std::vector<Hom> homs;
  for (std::size_t i = 0; i < em.algebras.size(); ++i)
    for (std::size_t j = 0; j < em.algebras.size(); ++j) {
      auto [b, theta] = em.algebras[i];
      auto [b2, theta2] = em.algebras[j];
      for (Mor h : c.hom(b, b2)) {
        Mor th = m.carrier.on_morphism(h);
        if (th == kNoMor) continue;
        if (c.compose_or_none(h, theta) != c.compose_or_none(theta2, th))
          continue;
        homs.push_back({static_cast<int>(i), static_cast<int>(j), h});
      }
    }
  std::vector<Mor> ids(em.algebras.size(), kNoMor);
  em.base_of.reserve(homs.size());
  for (const auto& h : homs) {
    Mor f = em.cat->add_morphism("emm" + std::to_string(em.base_of.size()) + "_" +
                                     c.morphism_name(h.base),
                                 h.src, h.dst);
    em.base_of.push_back(h.base);
    if (h.src == h.dst && h.base == c.identity(em.algebras[h.src].first))
      ids[h.src] = f;
  }
  for (std::size_t i = 0; i < em.algebras.size(); ++i)
    em.cat->set_identity(static_cast<Obj>(i), ids[i]);
  for (std::size_t f = 0; f < homs.size(); ++f)
    for (std::size_t g = 0; g < homs.size(); ++g) {
      if (homs[g].src != homs[f].dst) continue;
      Mor base = c.compose_or_none(homs[g].base, homs[f].base);
      if (base == kNoMor) continue;
      for (std::size_t k = 0; k < homs.size(); ++k)
        if (homs[k].src == homs[f].src && homs[k].dst == homs[g].dst &&
            homs[k].base == base) {
          em.cat->set_compose(static_cast<Mor>(g), static_cast<Mor>(f),
                              static_cast<Mor>(k));
          break;
        }
    }
  em.cat->finalize();

  em.forgetful = Functor(em.cat.get(), &c);
  for (std::size_t i = 0; i < em.algebras.size(); ++i)
    em.forgetful.map_object(static_cast<Obj>(i), em.algebras[i].first);
  for (std::size_t f = 0; f < homs.size(); ++f)
    em.forgetful.map_morphism(static_cast<Mor>(f), homs[f].base);

  em.free_functor = Functor(&c, em.cat.get());
  for (Obj b = 0; b < c.object_count(); ++b) {
    Obj tb = m.carrier.on_object(b);
    if (tb == kNoObj || m.mult[b] == kNoMor) continue;
    int idx = em.algebra_index(tb, m.mult[b]);
    if (idx >= 0) em.free_functor.map_object(b, idx);
  }
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Mor tf = m.carrier.on_morphism(f);
    if (tf == kNoMor) continue;
    if (!em.free_functor.defined_on_object(c.dom(f)) ||
        !em.free_functor.defined_on_object(c.cod(f)))
      continue;
    int src = em.free_functor.on_object(c.dom(f));
    int dst = em.free_functor.on_object(c.cod(f));
    for (std::size_t k = 0; k < homs.size(); ++k)
      if (homs[k].src == src && homs[k].dst == dst && homs[k].base == tf) {
        em.free_functor.map_morphism(f, static_cast<Mor>(k));
        break;
      }
  }
  return em;
}

Mor KleisliCategory::from_base(Obj a, Obj b, Mor base) const {
  for (Mor f : cat->hom(a, b))
    if (base_of[f] == base) return f;
  return kNoMor;
}

KleisliCategory build_kleisli(const MonadData& m) {
  const FinCategory& c = *m.cat;
  KleisliCategory kl;
  kl.cat = std::make_unique<FinCategory>();
  for (Obj a = 0; a < c.object_count(); ++a)
    kl.cat->add_object("kl_" + c.object_name(a));
  struct Hom {
    Obj src, dst;
    Mor base;
  };
  std::vector<Hom> homs;
  for (Obj a = 0; a < c.object_count(); ++a)
    for (Obj b = 0; b < c.object_count(); ++b) {
      Obj tb = m.carrier.on_object(b);
      if (tb == kNoObj) continue;
      for (Mor f : c.hom(a, tb)) homs.push_back({a, b, f});
    }
  std::vector<Mor> ids(c.object_count(), kNoMor);
  bool fragment = false;
  for (const auto& h : homs) {
    Mor f = kl.cat->add_morphism("klm" + std::to_string(kl.base_of.size()) + "_" +
                                     c.morphism_name(h.base),
                                 h.src, h.dst);
    kl.base_of.push_back(h.base);
    if (h.src == h.dst && h.base == m.unit[h.src]) ids[h.src] = f;
  }
  for (Obj a = 0; a < c.object_count(); ++a) {
    if (ids[a] == kNoMor) {
      fragment = true;
      continue;
    }
    kl.cat->set_identity(a, ids[a]);
  }
  // g⊙f = μ ∘ T(g) ∘ f
  for (std::size_t f = 0; f < homs.size(); ++f)
    for (std::size_t g = 0; g < homs.size(); ++g) {
      if (homs[g].src != homs[f].dst) continue;
      Mor tg = m.carrier.on_morphism(homs[g].base);
      Mor mu = m.mult[homs[g].dst];
      if (tg == kNoMor || mu == kNoMor) {
        fragment = true;
        continue;
      }
      Mor mid = c.compose_or_none(tg, homs[f].base);
      Mor base = mid == kNoMor ? kNoMor : c.compose_or_none(mu, mid);
      if (base == kNoMor) {
        fragment = true;
        continue;
      }
      bool found = false;
      for (std::size_t k = 0; k < homs.size(); ++k)
        if (homs[k].src == homs[f].src && homs[k].dst == homs[g].dst &&
            homs[k].base == base) {
          kl.cat->set_compose(static_cast<Mor>(g), static_cast<Mor>(f),
                              static_cast<Mor>(k));
          found = true;
          break;
        }
      if (!found) fragment = true;
    }
  if (fragment || c.is_fragment()) kl.cat->mark_fragment();
  kl.cat->finalize();

  kl.free_functor = Functor(&c, kl.cat.get());
  for (Obj a = 0; a < c.object_count(); ++a) kl.free_functor.map_object(a, a);
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Mor eta = m.unit[c.cod(f)];
    if (eta == kNoMor) continue;
    Mor base = c.compose_or_none(eta, f);
    if (base == kNoMor) continue;
    Mor g = kl.from_base(c.dom(f), c.cod(f), base);
    if (g != kNoMor) kl.free_functor.map_morphism(f, g);
  }
  kl.forgetful = Functor(kl.cat.get(), &c);
  for (Obj a = 0; a < c.object_count(); ++a) {
    Obj ta = m.carrier.on_object(a);
    if (ta != kNoObj) kl.forgetful.map_object(a, ta);
  }
  for (Mor f = 0; f < kl.cat->morphism_count(); ++f) {
    Obj b = kl.cat->cod(f);
    Mor tbase = m.carrier.on_morphism(kl.base_of[f]);
    Mor mu = m.mult[b];
    if (tbase == kNoMor || mu == kNoMor) continue;
    Mor r = c.compose_or_none(mu, tbase);
    if (r != kNoMor) kl.forgetful.map_morphism(f, r);
  }
  return kl;
}

Functor induced_algebra_functor(const MonadMorphism& lax,
                                const AlgebraCategory& alg_s,
                                const AlgebraCategory& alg_t) {
  if (!lax.lax) throw TypeMismatch("induced algebra functor needs a lax morphism");
  const FinCategory& ct = *lax.target->cat;
  Functor r(alg_s.cat.get(), alg_t.cat.get());
  for (std::size_t i = 0; i < alg_s.algebras.size(); ++i) {
    auto [b, theta] = alg_s.algebras[i];
    if (!lax.functor.defined_on_object(b)) continue;
    Obj fb = lax.functor.on_object(b);
    Mor ftheta = lax.functor.on_morphism(theta);
    Mor phi = lax.transform.at(b);
    if (ftheta == kNoMor || phi == kNoMor) continue;
    Mor theta2 = ct.compose_or_none(ftheta, phi);
    if (theta2 == kNoMor) continue;
    int idx = alg_t.algebra_index(fb, theta2);
    if (idx >= 0) r.map_object(static_cast<Obj>(i), idx);
  }
  for (Mor f = 0; f < alg_s.cat->morphism_count(); ++f) {
    Mor base = alg_s.base_of[f];
    Mor fbase = lax.functor.on_morphism(base);
    if (fbase == kNoMor) continue;
    Obj sa = alg_s.cat->dom(f), sb = alg_s.cat->cod(f);
    if (!r.defined_on_object(sa) || !r.defined_on_object(sb)) continue;
    for (Mor g : alg_t.cat->hom(r.on_object(sa), r.on_object(sb)))
      if (alg_t.base_of[g] == fbase) {
        r.map_morphism(f, g);
        break;
      }
  }
  return r;
}

Functor induced_kleisli_functor(const MonadMorphism& oplax,
                                const KleisliCategory& kl_s,
                                const KleisliCategory& kl_t) {
  if (oplax.lax)
    throw TypeMismatch("induced Kleisli functor needs an oplax morphism");
  const FinCategory& ct = *oplax.target->cat;
  Functor r(kl_s.cat.get(), kl_t.cat.get());
  for (Obj a = 0; a < kl_s.cat->object_count(); ++a)
    if (oplax.functor.defined_on_object(a))
      r.map_object(a, oplax.functor.on_object(a));
  for (Mor f = 0; f < kl_s.cat->morphism_count(); ++f) {
    Obj a = kl_s.cat->dom(f), b = kl_s.cat->cod(f);
    Mor fbase = oplax.functor.on_morphism(kl_s.base_of[f]);
    Mor psi = oplax.transform.at(b);
    if (fbase == kNoMor || psi == kNoMor) continue;
    Mor base = ct.compose_or_none(psi, fbase);
    if (base == kNoMor) continue;
    if (!r.defined_on_object(a) || !r.defined_on_object(b)) continue;
    Mor g = kl_t.from_base(r.on_object(a), r.on_object(b), base);
    if (g != kNoMor) r.map_morphism(f, g);
  }
  return r;
}

ValidationReport check_comonad(const ComonadData& w) {
  ValidationReport rep;
  const FinCategory& c = *w.cat;
  rep.merge(w.carrier.validate(), "carrier/");
  auto W_obj = [&](Obj a) { return w.carrier.on_object(a); };
  auto W_mor = [&](Mor f) { return w.carrier.on_morphism(f); };

  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Obj a = c.dom(f), b = c.cod(f);
    Mor wf = W_mor(f);
    if (wf != kNoMor && w.counit[a] != kNoMor && w.counit[b] != kNoMor) {
      Mor lhs = c.compose_or_none(f, w.counit[a]);
      Mor rhs = c.compose_or_none(w.counit[b], wf);
      if (lhs == kNoMor || rhs == kNoMor)
        rep.skip("comonad/counit-natural");
      else if (lhs != rhs)
        rep.fail("comonad/counit-natural", "ε not natural at " + c.describe(f));
      else
        rep.pass("comonad/counit-natural");
    } else {
      rep.skip("comonad/counit-natural");
    }
    Mor wwf = wf == kNoMor ? kNoMor : W_mor(wf);
    if (wwf != kNoMor && w.comult[a] != kNoMor && w.comult[b] != kNoMor) {
      Mor lhs = c.compose_or_none(wwf, w.comult[a]);
      Mor rhs = c.compose_or_none(w.comult[b], wf);
      if (lhs == kNoMor || rhs == kNoMor)
        rep.skip("comonad/comult-natural");
      else if (lhs != rhs)
        rep.fail("comonad/comult-natural", "δ not natural at " + c.describe(f));
      else
        rep.pass("comonad/comult-natural");
    } else {
      rep.skip("comonad/comult-natural");
    }
  }
  for (Obj a = 0; a < c.object_count(); ++a) {
    Obj wa = W_obj(a);
    Mor delta = w.comult[a];
    if (wa == kNoObj || delta == kNoMor) {
      rep.skip("comonad/counit-law");
      rep.skip("comonad/coassoc");
      continue;
    }
    Mor eps_wa = w.counit[wa];
    Mor weps = w.counit[a] == kNoMor ? kNoMor : W_mor(w.counit[a]);
    if (eps_wa == kNoMor || weps == kNoMor) {
      rep.skip("comonad/counit-law");
    } else {
      Mor l = c.compose_or_none(eps_wa, delta);
      Mor r = c.compose_or_none(weps, delta);
      if (l == kNoMor || r == kNoMor)
        rep.skip("comonad/counit-law");
      else if (l != c.identity(wa) || r != c.identity(wa))
        rep.fail("comonad/counit-law",
                 "εW∘δ or Wε∘δ ≠ id at '" + c.object_name(a) + "'");
      else
        rep.pass("comonad/counit-law");
    }
    Mor delta_wa = w.comult[wa];
    Mor wdelta = W_mor(delta);
    if (delta_wa == kNoMor || wdelta == kNoMor) {
      rep.skip("comonad/coassoc");
    } else {
      Mor l = c.compose_or_none(delta_wa, delta);
      Mor r = c.compose_or_none(wdelta, delta);
      if (l == kNoMor || r == kNoMor)
        rep.skip("comonad/coassoc");
      else if (l != r)
        rep.fail("comonad/coassoc", "δW∘δ ≠ Wδ∘δ at '" + c.object_name(a) + "'");
      else
        rep.pass("comonad/coassoc");
    }
  }
  return rep;
}

}  // namespace tensorloc
