#include "doctest.h"

#include <vector>

#include "tensorloc/monad.hpp"
#include "tensorloc/zoo.hpp"

using namespace tensorloc;

namespace {

MonadData identity_monad(const FinCategory& c) {
  MonadData m(&c);
  m.carrier = Functor::identity(c);
  for (Obj a = 0; a < c.object_count(); ++a) {
    m.unit[a] = c.identity(a);
    m.mult[a] = c.identity(a);
  }
  return m;
}

}  // namespace

TEST_CASE("identity monad validates; EM and Kleisli mirror the base") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(3));
  const FinCategory& c = lat.category();
  MonadData m = identity_monad(c);
  auto rep = check_monad(m);
  CHECK(rep.ok());
  CHECK(rep.total_skipped() == 0);

  auto em = build_em_category(m);
  CHECK(em.cat->validate().ok());
  CHECK(em.algebras.size() == static_cast<std::size_t>(c.object_count()));
  CHECK(em.cat->morphism_count() == c.morphism_count());
  CHECK(em.forgetful.validate().ok());
  CHECK(em.free_functor.validate().ok());

  auto kl = build_kleisli(m);
  CHECK(kl.cat->validate().ok());
  CHECK(kl.cat->morphism_count() == c.morphism_count());
  CHECK(kl.free_functor.validate().ok());
  CHECK(kl.forgetful.validate().ok());
}

TEST_CASE("closure operator on a chain is a monad") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  std::vector<int> cl{0, 2, 2};  // 0↦0, a↦1, 1↦1
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto rep = check_monad(m);
  CHECK(rep.ok());
  CHECK(rep.total_skipped() == 0);
}

TEST_CASE("invalid closures are rejected") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  std::vector<int> deflationary{0, 0, 2};
  CHECK_THROWS_AS(zoo::build_closure_monad(lat, spec, deflationary),
                  InvalidClosure);
  std::vector<int> non_idem{1, 2, 2};
  CHECK_THROWS_AS(zoo::build_closure_monad(lat, spec, non_idem), InvalidClosure);
}

TEST_CASE("EM algebras of the chain closure are its fixed points") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  const FinCategory& c = lat.category();
  std::vector<int> cl{0, 2, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);

  // independent oracle: θ : cl(b) -> b exists in the poset iff cl(b) ≤ b,
  // i.e. iff b is a fixed point; algebra laws are automatic in a thin
  // category once typed
  std::vector<Obj> expected;
  for (int b = 0; b < spec.size(); ++b)
    if (cl[b] == b) expected.push_back(b);

  auto em = build_em_category(m);
  REQUIRE(em.algebras.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(em.algebras[i].first == expected[i]);
  CHECK(em.cat->validate().ok());
  for (Obj b = 0; b < c.object_count(); ++b) {
    if (!em.free_functor.defined_on_object(b)) continue;
    CHECK(em.forgetful.on_object(em.free_functor.on_object(b)) ==
          m.carrier.on_object(b));
  }
}

TEST_CASE("Kleisli of the chain closure validates with composition") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  std::vector<int> cl{0, 2, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto kl = build_kleisli(m);
  CHECK(kl.cat->validate().ok());
  const FinCategory& c = lat.category();
  for (Obj a = 0; a < c.object_count(); ++a)
    for (Obj b = 0; b < c.object_count(); ++b) {
      std::size_t expect = spec.leq[a][cl[b]] ? 1 : 0;
      CHECK(kl.cat->hom(a, b).size() == expect);
    }
  CHECK(kl.free_functor.validate().ok());
  CHECK(kl.forgetful.validate().ok());
}

TEST_CASE("identity monad morphism validates and induces identity on algebras") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(3));
  const FinCategory& c = lat.category();
  MonadData m = identity_monad(c);
  MonadMorphism mm;
  mm.source = &m;
  mm.target = &m;
  mm.functor = Functor::identity(c);
  mm.lax = true;
  mm.transform.assign(c.object_count(), kNoMor);
  for (Obj a = 0; a < c.object_count(); ++a) mm.transform[a] = c.identity(a);
  CHECK(check_monad_morphism(mm));

  auto em = build_em_category(m);
  Functor ind = induced_algebra_functor(mm, em, em);
  CHECK(ind.validate().ok());
  CHECK(ind.equal_tables(Functor::identity(*em.cat)));
}

TEST_CASE("comonad checker accepts the identity comonad") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(2));
  const FinCategory& c = lat.category();
  ComonadData w(&c);
  w.carrier = Functor::identity(c);
  for (Obj a = 0; a < c.object_count(); ++a) {
    w.counit[a] = c.identity(a);
    w.comult[a] = c.identity(a);
  }
  CHECK(check_comonad(w).ok());
}

TEST_CASE("interior operator is a comonad on a chain") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  const FinCategory& c = lat.category();
  std::vector<int> interior{0, 0, 2};  // deflationary, idempotent, monotone
  ComonadData w(&c);
  for (Obj a = 0; a < c.object_count(); ++a) w.carrier.map_object(a, interior[a]);
  for (Mor f = 0; f < c.morphism_count(); ++f)
    w.carrier.map_morphism(f,
                           c.hom(interior[c.dom(f)], interior[c.cod(f)]).at(0));
  for (Obj a = 0; a < c.object_count(); ++a) {
    w.counit[a] = c.hom(interior[a], a).at(0);
    w.comult[a] = c.identity(interior[a]);
  }
  CHECK(check_comonad(w).ok());
}
