#include "doctest.h"

#include <vector>

#include "tensorloc/restriction.hpp"
#include "tensorloc/zoo.hpp"

using namespace tensorloc;

namespace {

struct ChainSetup {
  SmcCategory lat;
  ZiSemilattice zi;
  int bottom = -1, mid = -1, top = -1;

  ChainSetup() : lat(zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(3))) {
    zi = zi_semilattice(lat.smc);
    const FinCategory& c = lat.category();
    for (int i = 0; i < zi.size(); ++i) {
      auto n = c.object_name(zi.elements[i].dom);
      if (n == "c0") bottom = i;
      if (n == "c1") mid = i;
      if (n == "c2") top = i;
    }
  }
};

}  // namespace

TEST_CASE("C|1 is isomorphic to C") {
  ChainSetup cs;
  auto r = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  CHECK(r.cat().validate().ok());
  CHECK(r.smc().validate().ok());
  // hom-sets coincide with the base: A⊗I = A
  const FinCategory& base = cs.lat.category();
  CHECK(r.cat().morphism_count() == base.morphism_count());
  for (Obj a = 0; a < base.object_count(); ++a)
    for (Obj b = 0; b < base.object_count(); ++b)
      CHECK(r.cat().hom(a, b).size() == base.hom(a, b).size());
}

TEST_CASE("C|0 at the absorbing bottom has singleton hom-sets") {
  ChainSetup cs;
  auto r = build_restriction(cs.lat.smc, cs.zi.elements[cs.bottom]);
  CHECK(r.cat().validate().ok());
  // hom(A⊗0, B) = hom(0, B): exactly the morphisms out of the bottom
  const FinCategory& base = cs.lat.category();
  for (Obj a = 0; a < base.object_count(); ++a)
    for (Obj b = 0; b < base.object_count(); ++b)
      CHECK(r.cat().hom(a, b).size() == 1);
}

TEST_CASE("C|a of the chain collapses to the downset of a") {
  ChainSetup cs;
  auto r = build_restriction(cs.lat.smc, cs.zi.elements[cs.mid]);
  CHECK(r.cat().validate().ok());
  CHECK(r.smc().validate().ok());
  // hom(A,B) in C|a = hom(A∧a, B): nonempty iff A∧a ≤ B
  const FinCategory& base = cs.lat.category();
  auto leq = zoo::SemilatticeSpec::chain(3).leq;
  for (Obj a = 0; a < base.object_count(); ++a)
    for (Obj b = 0; b < base.object_count(); ++b) {
      int meet = std::min(a, 1);
      CHECK(r.cat().hom(a, b).size() == (leq[meet][b] ? 1u : 0u));
    }
  // Remark-style witnesses compose to identities both ways
  for (Obj a = 0; a < base.object_count(); ++a) {
    Mor to = r.iso_to_tensor[a];
    Mor from = r.iso_from_tensor[a];
    REQUIRE(to != kNoMor);
    REQUIRE(from != kNoMor);
    CHECK(r.cat().compose(from, to) == r.cat().identity(a));
    CHECK(r.cat().compose(to, from) == r.cat().identity(r.cat().cod(to)));
  }
}

TEST_CASE("adjunction between C|a and C|1 validates") {
  ChainSetup cs;
  auto ca = build_restriction(cs.lat.smc, cs.zi.elements[cs.mid]);
  auto c1 = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  Mor m = cs.zi.leq_witness[cs.mid][cs.top];
  auto adj = build_adjunction(cs.lat.smc, ca, c1, m);
  CHECK(adj.lower.validate().ok());
  CHECK(adj.upper.validate().ok());
  auto rep = check_adjunction(adj);
  CHECK(rep.ok());
  CHECK(rep.counts().at("unit-iso").checked > 0);
  auto oplax = check_oplax_structure(adj, ca, c1);
  CHECK(oplax.ok());

  // lower functor is order-restriction to the downset of a: it maps the
  // C|1 morphism A -> B to A∧a -> B
  const FinCategory& base = cs.lat.category();
  for (Mor f = 0; f < c1.cat().morphism_count(); ++f) {
    if (!adj.lower.defined_on_morphism(f)) continue;
    Mor g = adj.lower.on_morphism(f);
    CHECK(ca.cat().dom(g) == c1.cat().dom(f));
    CHECK(ca.cat().cod(g) == c1.cat().cod(f));
  }
  (void)base;
}

TEST_CASE("u = v = 1 gives an identity-like adjunction") {
  ChainSetup cs;
  auto c1 = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  Mor m = cs.zi.leq_witness[cs.top][cs.top];
  auto adj = build_adjunction(cs.lat.smc, c1, c1, m);
  CHECK(check_adjunction(adj).ok());
  // unit and counit components are identities
  for (Obj a = 0; a < c1.cat().object_count(); ++a) {
    CHECK(adj.unit_nat.component(a) == c1.cat().identity(a));
    CHECK(adj.counit_nat.component(a) == c1.cat().identity(a));
  }
}

TEST_CASE("build_adjunction rejects a non-witness") {
  ChainSetup cs;
  auto ca = build_restriction(cs.lat.smc, cs.zi.elements[cs.mid]);
  auto c0 = build_restriction(cs.lat.smc, cs.zi.elements[cs.bottom]);
  // m : a -> 0 does not exist; use an unrelated morphism id_a as a fake
  Mor fake = cs.lat.category().identity(cs.zi.elements[cs.mid].dom);
  CHECK_THROWS_AS(build_adjunction(cs.lat.smc, ca, c0, fake), NotLeq);
}

TEST_CASE("comonad -⊗U and its co-Kleisli identification with C|u") {
  ChainSetup cs;
  auto ca = build_restriction(cs.lat.smc, cs.zi.elements[cs.mid]);
  auto c1 = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  Mor m = cs.zi.leq_witness[cs.mid][cs.top];
  auto w = comonad_tensor_u(cs.lat.smc, ca, c1, m);
  CHECK(check_comonad(w).ok());
  // comonad on the chain: x ↦ x∧a
  for (Obj a = 0; a < c1.cat().object_count(); ++a)
    CHECK(w.carrier.on_object(a) == std::min<int>(a, 1));

  auto iso = cokleisli_iso(cs.lat.smc, ca, c1, m, w);
  CHECK(iso.cokleisli->validate().ok());
  CHECK(iso.to_restriction.validate().ok());
  CHECK(iso.from_restriction.validate().ok());
  // identity on objects, mutually inverse
  Functor round1 = Functor::composed(iso.to_restriction, iso.from_restriction);
  CHECK(round1.equal_tables(Functor::identity(ca.cat())));
  Functor round2 = Functor::composed(iso.from_restriction, iso.to_restriction);
  CHECK(round2.equal_tables(Functor::identity(*iso.cokleisli)));
}

TEST_CASE("u = 1: comonad is the identity comonad, co-Kleisli is the base") {
  ChainSetup cs;
  auto c1 = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  Mor m = cs.zi.leq_witness[cs.top][cs.top];
  auto w = comonad_tensor_u(cs.lat.smc, c1, c1, m);
  CHECK(check_comonad(w).ok());
  for (Obj a = 0; a < c1.cat().object_count(); ++a)
    CHECK(w.carrier.on_object(a) == a);
  auto iso = cokleisli_iso(cs.lat.smc, c1, c1, m, w);
  CHECK(iso.cokleisli->morphism_count() == c1.cat().morphism_count());
}

TEST_CASE("decomposition identities for 0 ≤ a ≤ 1 on the chain") {
  ChainSetup cs;
  auto c0 = build_restriction(cs.lat.smc, cs.zi.elements[cs.bottom]);
  auto ca = build_restriction(cs.lat.smc, cs.zi.elements[cs.mid]);
  auto c1 = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  const FinCategory& base = cs.lat.category();
  Mor m_0a = cs.zi.leq_witness[cs.bottom][cs.mid];
  Mor m_a1 = cs.zi.leq_witness[cs.mid][cs.top];
  Mor m_01 = base.compose(m_a1, m_0a);  // compatible witness choice
  std::string why;
  CHECK(check_decomposition(cs.lat.smc, c0, ca, c1, m_0a, m_a1, m_01, &why));
  CHECK(why.empty());
}

TEST_CASE("decomposition identities on the 2^2 lattice") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::powerset(2));
  auto zi = zi_semilattice(lat.smc);
  const FinCategory& base = lat.category();
  int bot = -1, atom = -1, top = -1;
  for (int i = 0; i < zi.size(); ++i) {
    auto n = base.object_name(zi.elements[i].dom);
    if (n == "s00") bot = i;
    if (n == "s10") atom = i;
    if (n == "s11") top = i;
  }
  auto cb = build_restriction(lat.smc, zi.elements[bot]);
  auto ca = build_restriction(lat.smc, zi.elements[atom]);
  auto ct = build_restriction(lat.smc, zi.elements[top]);
  Mor m1 = zi.leq_witness[bot][atom];
  Mor m2 = zi.leq_witness[atom][top];
  Mor m3 = base.compose(m2, m1);
  std::string why;
  CHECK(check_decomposition(lat.smc, cb, ca, ct, m1, m2, m3, &why));
}

TEST_CASE("trivial decomposition u = v = w = 1") {
  ChainSetup cs;
  auto c1 = build_restriction(cs.lat.smc, cs.zi.elements[cs.top]);
  Mor m = cs.zi.leq_witness[cs.top][cs.top];
  std::string why;
  CHECK(check_decomposition(cs.lat.smc, c1, c1, c1, m, m, m, &why));
}
