#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "tensorloc/central.hpp"
#include "tensorloc/monad.hpp"
#include "tensorloc/monoidal.hpp"

namespace tensorloc {

/// C|u: objects of C, hom(A,B) = hom_C(A⊗U, B). Morphisms are the base ids
/// tagged with their declared C|u endpoints; equality within a hom-set is
/// base-id equality.
struct RestrictionCategory {
  const SmcStructure* base_smc = nullptr;
  CentralIdempotent u;
  SmcCategory derived;

  std::vector<Mor> base_of;             // derived morphism -> base morphism
  std::vector<Mor> iso_to_tensor;       // A -> A⊗U in C|u (Remark-style witness)
  std::vector<Mor> iso_from_tensor;     // A⊗U -> A in C|u

  const FinCategory& cat() const { return *derived.cat; }
  const SmcStructure& smc() const { return derived.smc; }

  /// Derived morphism with declared endpoints (a, b) carrying base morphism f
  /// (f : a⊗U -> b in the base); kNoMor when not materialized.
  Mor restricted(Obj a, Obj b, Mor base) const;
  /// Canonical embedding of a base morphism g : A -> B as a C|u morphism,
  /// g ∘ (A⊗u) : A⊗U -> B.
  Mor from_base(Mor g) const;

 private:
  friend RestrictionCategory build_restriction(const SmcStructure&,
                                               const CentralIdempotent&);
  std::unordered_map<std::uint64_t, std::unordered_map<Mor, Mor>> index_;
};

/// Prop-2.5-style construction. Throws MissingInverse when (A⊗U⊗u) has no
/// two-sided inverse for some object A with materialized tables.
RestrictionCategory build_restriction(const SmcStructure& s,
                                      const CentralIdempotent& u);

/// Adjunction  upper : C|u ⇄ C|v : lower  for u ≤ v with witness m.
struct RestrictionFunctors {
  Functor lower;             // C|v -> C|u : A ↦ A, f ↦ f∘(A⊗m)
  Functor upper;             // C|u -> C|v : A ↦ A⊗U
  NatTransform unit_nat;     // Id ⇒ lower∘upper (an isomorphism)
  NatTransform counit_nat;   // upper∘lower ⇒ Id
  // oplax monoidal structure of upper: F(A)⊗F(B) -> F(A⊗B) in C|v
  std::unordered_map<std::uint64_t, Mor> oplax_compare;
  Mor oplax_unit = kNoMor;   // I -> F(I) in C|v
};

/// Throws NotLeq when m is not a witness of u ≤ v.
RestrictionFunctors build_adjunction(const SmcStructure& s,
                                     const RestrictionCategory& cu,
                                     const RestrictionCategory& cv, Mor m);

/// Triangle identities + unit-isomorphism check.
ValidationReport check_adjunction(const RestrictionFunctors& adj);

/// Oplax coherence of the upper functor on materialized pairs/triples.
ValidationReport check_oplax_structure(const RestrictionFunctors& adj,
                                       const RestrictionCategory& cu,
                                       const RestrictionCategory& cv);

/// Comonad −⊗U on C|v for u ≤ v (v may be the top; pass the restriction at v).
ComonadData comonad_tensor_u(const SmcStructure& s, const RestrictionCategory& cu,
                             const RestrictionCategory& cv, Mor m);

/// Co-Kleisli category of −⊗U on C|v together with the identity-on-objects
/// functor pair identifying it with C|u.
struct CoKleisliIso {
  std::unique_ptr<FinCategory> cokleisli;
  std::vector<Mor> base_of;   // co-Kleisli morphism -> C|v morphism W(A) -> B
  Functor to_restriction;     // coKl -> C|u
  Functor from_restriction;   // C|u -> coKl
};
CoKleisliIso cokleisli_iso(const SmcStructure& s, const RestrictionCategory& cu,
                           const RestrictionCategory& cv, Mor m,
                           const ComonadData& w);

/// The three functor decomposition identities for u ≤ v ≤ w.
bool check_decomposition(const SmcStructure& s, const RestrictionCategory& cu,
                         const RestrictionCategory& cv,
                         const RestrictionCategory& cw, Mor m_uv, Mor m_vw,
                         Mor m_uw, std::string* detail = nullptr);

}  // namespace tensorloc
