#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "tensorloc/category.hpp"

namespace tensorloc {

/// Monad as tables: carrier endofunctor with unit and multiplication
/// components indexed by object. On fragments, components may be absent
/// (kNoMor); checkers skip and count the affected law instances.
struct MonadData {
  const FinCategory* cat = nullptr;
  Functor carrier;
  std::vector<Mor> unit;  // η_A : A -> T(A)
  std::vector<Mor> mult;  // μ_A : T²(A) -> T(A)

  MonadData() = default;
  explicit MonadData(const FinCategory* c)
      : cat(c), carrier(c, c),
        unit(c->object_count(), kNoMor),
        mult(c->object_count(), kNoMor) {}

  Mor unit_at(Obj a) const { return unit.at(a); }
  Mor mult_at(Obj a) const { return mult.at(a); }
  bool equal_tables(const MonadData& other) const {
    return carrier.equal_tables(other.carrier) && unit == other.unit &&
           mult == other.mult;
  }
};

ValidationReport check_monad(const MonadData& m);

/// Lax monad morphism (F, φ: T∘F ⇒ F∘S) from monad S on F's source to monad T
/// on F's target; oplax has ψ: F∘S ⇒ T∘F instead.
struct MonadMorphism {
  const MonadData* source = nullptr;  // S
  const MonadData* target = nullptr;  // T
  Functor functor;                    // F : source cat -> target cat
  std::vector<Mor> transform;         // component at each source object
  bool lax = true;
};

ValidationReport check_monad_morphism_report(const MonadMorphism& mm);
bool check_monad_morphism(const MonadMorphism& mm);

/// Composite of two lax (or two oplax) monad morphisms along matching monads.
MonadMorphism compose_monad_morphisms(const MonadMorphism& outer,
                                      const MonadMorphism& inner);

/// Eilenberg–Moore category: objects are algebra pairs (B, θ).
struct AlgebraCategory {
  std::unique_ptr<FinCategory> cat;
  std::vector<std::pair<Obj, Mor>> algebras;  // aligned with cat object ids
  std::vector<Mor> base_of;                   // EM morphism -> underlying C-mor
  Functor forgetful;                          // EM -> C
  Functor free_functor;                       // C -> EM

  int algebra_index(Obj b, Mor theta) const;
};
AlgebraCategory build_em_category(const MonadData& m,
                                  std::int64_t candidate_cap = 1000000);

/// Kleisli category: objects of C, hom(A,B) = hom_C(A, T(B)).
struct KleisliCategory {
  std::unique_ptr<FinCategory> cat;
  std::vector<Mor> base_of;  // Kleisli morphism -> underlying C-mor A -> T(B)
  std::vector<std::vector<Mor>> kleisli_of;  // [A][pos in hom(A,TB)] unused; see impl
  Functor free_functor;  // C -> Kl
  Functor forgetful;     // Kl -> C, A ↦ T(A)

  Mor from_base(Obj a, Obj b, Mor base) const;  // kNoMor when absent
};
KleisliCategory build_kleisli(const MonadData& m);

/// Lax morphism (F, φ): S -> T induces Alg(S) -> Alg(T), (B,θ) ↦ (FB, Fθ∘φ_B).
Functor induced_algebra_functor(const MonadMorphism& lax,
                                const AlgebraCategory& alg_s,
                                const AlgebraCategory& alg_t);

/// Oplax morphism (F, ψ): S -> T induces Kl(S) -> Kl(T), f ↦ ψ_B ∘ F(f).
Functor induced_kleisli_functor(const MonadMorphism& oplax,
                                const KleisliCategory& kl_s,
                                const KleisliCategory& kl_t);

/// Comonad as tables (used for −⊗U and its co-Kleisli identification).
struct ComonadData {
  const FinCategory* cat = nullptr;
  Functor carrier;
  std::vector<Mor> counit;  // ε_A : W(A) -> A
  std::vector<Mor> comult;  // δ_A : W(A) -> W²(A)

  ComonadData() = default;
  explicit ComonadData(const FinCategory* c)
      : cat(c), carrier(c, c),
        counit(c->object_count(), kNoMor),
        comult(c->object_count(), kNoMor) {}
};

ValidationReport check_comonad(const ComonadData& w);

}  // namespace tensorloc
