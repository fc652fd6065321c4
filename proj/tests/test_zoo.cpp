#include "doctest.h"

#include <vector>

#include "tensorloc/localisable.hpp"
#include "tensorloc/zoo.hpp"

using namespace tensorloc;

TEST_CASE("skeletal tuple category at carriers ≤ 3 has ZI = 2^2") {
  auto inst = zoo::build_tuple_category(2, 3);
  CHECK(inst.cat().validate().ok());
  CHECK(inst.smc().validate().ok());
  auto zi = zi_semilattice(inst.smc());
  REQUIRE(zi.size() == 4);
  CHECK(zi.table.order_isomorphic_to(*zoo::SemilatticeSpec::powerset(2).table()));
  CHECK_FALSE(is_local(zi));
}

TEST_CASE("skeletal finite sets (single coordinate) have classes {0, 1}") {
  auto inst = zoo::build_tuple_category(1, 3);
  auto zi = zi_semilattice(inst.smc());
  CHECK(zi.size() == 2);
  CHECK(is_local(zi));
}

TEST_CASE("tuple categories are stiff with universal joins") {
  auto inst = zoo::build_tuple_category(2, 2);
  auto zi = zi_semilattice(inst.smc());
  auto stiff = is_stiff(inst.smc(), zi);
  CHECK(stiff.stiff);
  auto uj = has_universal_joins(inst.smc(), zi);
  CHECK(uj.holds);
}

TEST_CASE("2-element monoid in skeletal finite sets") {
  auto inst = zoo::build_tuple_category(1, 2);
  const FinCategory& c = inst.cat();
  Obj two = inst.object({2});
  Obj four = inst.object({4});
  REQUIRE(two != kNoObj);
  REQUIRE(four != kNoObj);
  // Z/2: mult table on pairs (a,b) -> a xor b; unit picks 0
  Mor mult = kNoMor;
  for (Mor f : c.hom(four, two)) {
    bool is_xor = true;
    // recover the function from the interned tables via composition with
    // global elements: instead decode by name-free approach: apply to points
    // through hom(1, ...) is heavy; identify by checking the table positions
    // directly using the world's card encoding (a*2+b)
    // position p = a*2+b must map to a^b
    // we cannot read tables through the engine, so test via monoid laws below
    (void)f;
    (void)is_xor;
    break;
  }
  // locate the xor multiplication by testing check_monoid over all candidates
  Obj unit_obj = inst.smc().unit();
  int monoids_found = 0;
  for (Mor cand : c.hom(four, two))
    for (Mor e : c.hom(unit_obj, two)) {
      MonoidObject m{two, cand, e};
      try {
        if (check_monoid(inst.smc(), m)) monoids_found++;
      } catch (const TensorlocError&) {
      }
    }
  // monoid structures on a 2-element set: Z/2 and the two absorption
  // monoids contribute; at least Z/2 and AND-with-unit-1 exist
  CHECK(monoids_found >= 2);
  (void)mult;
}

TEST_CASE("planted non-associative multiplication table fails check_monoid") {
  auto inst = zoo::build_tuple_category(1, 2);
  const FinCategory& c = inst.cat();
  Obj two = inst.object({2});
  Obj four = inst.object({4});
  Obj unit_obj = inst.smc().unit();
  int failures = 0;
  for (Mor cand : c.hom(four, two))
    for (Mor e : c.hom(unit_obj, two)) {
      MonoidObject m{two, cand, e};
      try {
        if (!check_monoid(inst.smc(), m)) failures++;
      } catch (const TensorlocError&) {
      }
    }
  CHECK(failures > 0);  // most multiplication tables are not monoids
}

TEST_CASE("2-bit state monad fragment: laws hold everywhere they are defined") {
  auto inst = zoo::build_state_monad(2, {2, 2}, 2);
  CHECK(inst.world.cat().validate().ok());
  CHECK(inst.world.smc().validate().ok());
  REQUIRE(inst.zi.size() == 4);

  auto rep = check_monad(inst.monad);
  CHECK(rep.ok());
  CHECK(inst.deep_laws.ok());

  auto ax = check_localisable(inst.world.smc(), inst.zi, inst.monad,
                              inst.strength);
  INFO(ax.summary());
  CHECK(ax.ok());
  for (const auto& a : ax.axioms) CHECK(a.checked > 0);
}

TEST_CASE("2-bit state monad is commutative; a planted twist is caught") {
  auto inst = zoo::build_state_monad(2, {2, 2}, 2);
  auto lm = make_localisable(inst.world.smc(), inst.zi, inst.monad,
                             inst.strength);
  REQUIRE(lm.report.ok());
  auto comm = check_commutative(lm);
  CHECK(comm.commutative);

  // plant an order-sensitive strength: twist one entry by a nontrivial
  // interned endomorphism of its domain
  const FinCategory& c = inst.world.cat();
  LocalisableMonad planted = lm;
  bool twisted = false;
  for (Obj a = 0; a < c.object_count() && !twisted; ++a)
    for (int u = 0; u < inst.zi.size() && !twisted; ++u) {
      Mor e = planted.strength.at(a, u);
      if (e == kNoMor) continue;
      if (u == inst.zi.top()) continue;  // keep eq(1) intact
      for (Mor g : c.hom(c.dom(e), c.dom(e))) {
        if (g == c.identity(c.dom(e))) continue;
        Mor twisted_mor = c.compose_or_none(e, g);
        if (twisted_mor != kNoMor && twisted_mor != e) {
          planted.strength.set(a, u, twisted_mor);
          twisted = true;
          break;
        }
      }
    }
  REQUIRE(twisted);
  auto ax = check_localisable(*lm.smc, *lm.zi, planted.monad, planted.strength);
  bool axiom_failed = !ax.ok();
  auto comm2 = check_commutative(planted);
  CHECK((axiom_failed || !comm2.commutative));
  if (!comm2.commutative) CHECK(!comm2.counterexample.empty());
}

TEST_CASE("state monad restricts to the coordinate state monad") {
  auto inst = zoo::build_state_monad(2, {2, 2}, 2);
  auto lm = make_localisable(inst.world.smc(), inst.zi, inst.monad,
                             inst.strength);
  REQUIRE(lm.report.ok());
  // find u = (1,0)
  int u10 = -1;
  for (int i = 0; i < inst.zi.size(); ++i) {
    const auto& card = inst.world.cards[inst.zi.elements[i].dom];
    if (card == zoo::Card{1, 0}) u10 = i;
  }
  REQUIRE(u10 >= 0);
  auto cu = build_restriction(inst.world.smc(), inst.zi.elements[u10]);
  MonadData tu = restrict_monad(lm, u10, cu);
  auto rep = check_monad(tu);
  INFO(rep.summary());
  CHECK(rep.ok());
  // object action zeroes coordinate 2: T|u(A) = T(A), and A ≅ A⊗U in C|u
  // drops the second coordinate; compare against the directly built n=1
  // instance on the first coordinate through cardinalities
  auto direct = zoo::build_state_monad(1, {2}, 2);
  for (Obj a = 0; a < cu.cat().object_count(); ++a) {
    const auto& card = inst.world.cards[a];
    Obj ta = tu.carrier.on_object(a);
    if (ta == kNoObj) continue;
    Obj direct_a = direct.world.object({card[0]});
    if (direct_a == kNoObj) continue;
    Obj direct_ta = direct.monad.carrier.on_object(direct_a);
    if (direct_ta == kNoObj) continue;
    // first coordinate of T(A) matches the single-coordinate T
    CHECK(inst.world.cards[ta][0] == direct.world.cards[direct_ta][0]);
  }
}

TEST_CASE("restriction monad morphisms validate on the state fragment") {
  auto inst = zoo::build_state_monad(2, {2, 2}, 2);
  auto lm = make_localisable(inst.world.smc(), inst.zi, inst.monad,
                             inst.strength);
  int u10 = -1, top = inst.zi.top();
  for (int i = 0; i < inst.zi.size(); ++i)
    if (inst.world.cards[inst.zi.elements[i].dom] == zoo::Card{1, 0}) u10 = i;
  REQUIRE(u10 >= 0);
  REQUIRE(inst.zi.leq(u10, top));
  auto cu = build_restriction(inst.world.smc(), inst.zi.elements[u10]);
  auto cv = build_restriction(inst.world.smc(), inst.zi.elements[top]);
  MonadData tu = restrict_monad(lm, u10, cu);
  MonadData tv = restrict_monad(lm, top, cv);
  auto adj = build_adjunction(inst.world.smc(), cu, cv,
                              inst.zi.leq_witness[u10][top]);
  CHECK(check_adjunction(adj).ok());
  auto mm = restriction_monad_morphism(lm, u10, top, cu, cv, tu, tv, adj);
  auto lax_rep = check_monad_morphism_report(mm.lax);
  INFO(lax_rep.summary());
  CHECK(lax_rep.ok());
  auto oplax_rep = check_monad_morphism_report(mm.oplax);
  INFO(oplax_rep.summary());
  CHECK(oplax_rep.ok());
  CHECK(mm.localisable_square_ok);
}

TEST_CASE("nonempty powerset monad fragment validates in-table to depth 3") {
  auto inst = zoo::build_powerset_monad(2, true);
  CHECK(inst.world.cat().validate().ok());
  auto rep = check_monad(inst.monad);
  CHECK(rep.ok());
  CHECK(rep.counts().at("monad/assoc").checked > 0);
  CHECK(inst.deep_laws.ok());
  auto ax = check_localisable(inst.world.smc(), inst.zi, inst.monad,
                              inst.strength);
  CHECK(ax.ok());
}

TEST_CASE("full powerset Kleisli morphisms are relations") {
  auto inst = zoo::build_powerset_monad(2, false);
  REQUIRE(check_monad(inst.monad).ok());
  auto kl = build_kleisli(inst.monad);
  CHECK(kl.cat->validate().ok());
  const FinCategory& c = inst.world.cat();
  Obj two = inst.world.object({2});
  REQUIRE(two != kNoObj);
  // hom_Kl(2,2) = functions 2 -> P(2): |P(2)|^2 = 16 = relations on 2×2
  CHECK(kl.cat->hom(two, two).size() == 16);
  (void)c;
}

TEST_CASE("planted twisted multiplication is reported with its object") {
  auto inst = zoo::build_state_monad(2, {2, 2}, 1);
  REQUIRE(check_monad(inst.monad).ok());
  const FinCategory& c = inst.world.cat();
  MonadData planted = inst.monad;
  bool twisted = false;
  std::string where;
  for (Obj a = 0; a < c.object_count() && !twisted; ++a) {
    Mor mu = planted.mult[a];
    if (mu == kNoMor) continue;
    for (Mor g : c.hom(c.dom(mu), c.dom(mu))) {
      if (g == c.identity(c.dom(mu))) continue;
      Mor t = c.compose_or_none(mu, g);
      if (t != kNoMor && t != mu) {
        planted.mult[a] = t;
        where = c.object_name(a);
        twisted = true;
        break;
      }
    }
  }
  REQUIRE(twisted);
  auto rep = check_monad(planted);
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& v : rep.violations())
    if (v.detail.find(where) != std::string::npos) named = true;
  CHECK(named);
}
