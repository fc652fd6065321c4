#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorloc/central.hpp"
#include "tensorloc/localisable.hpp"
#include "tensorloc/monad.hpp"
#include "tensorloc/monoidal.hpp"

namespace tensorloc::zoo {

/// Finite meet-semilattice presented by element names and order.
struct SemilatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(elements.size()); }
  std::optional<SemilatticeTable> table() const {
    return SemilatticeTable::from_leq(size(), leq);
  }

  static SemilatticeSpec chain(int n);          // 0 < 1 < ... < n-1
  static SemilatticeSpec powerset(int n_atoms); // 2^n, named by bitmask
};

/// A meet-semilattice (L,∧,1) as a strict SMC: one morphism per u ≤ v,
/// tensor = meet, unit = top.
SmcCategory build_semilattice_category(const SemilatticeSpec& spec);

/// A bare poset as a thin category (no monoidal structure required).
std::unique_ptr<FinCategory> build_poset_category(const SemilatticeSpec& spec);

/// Closure operator on L as a monad: closure[i] is the index of the closure
/// of element i. Throws InvalidClosure unless monotone, inflationary and
/// idempotent.
MonadData build_closure_monad(const SmcCategory& lcat, const SemilatticeSpec& spec,
                              const std::vector<int>& closure);

/// All meet-semilattices (with top) on up to max_size labeled elements,
/// enumerated by transitive relations over a fixed linear extension.
std::vector<SemilatticeSpec> all_semilattices(int max_size);

/// All join-semilattices (with bottom) on up to max_size elements; same
/// enumeration, dual filter.
std::vector<SemilatticeSpec> all_join_semilattices(int max_size);

/// All closure operators on a semilattice.
std::vector<std::vector<int>> all_closure_operators(const SemilatticeSpec& spec);

/// Closure criterion of the closure-operator example: ū∧v ≤ closure(u∧v)
/// for all u,v. Returns the first violating pair if any.
std::optional<std::pair<int, int>> closure_criterion_violation(
    const SemilatticeSpec& spec, const std::vector<int>& closure);

/// --- Skeletal Set^n fragments -------------------------------------------
///
/// Objects are tuples of cardinalities with mixed-radix products, so tensor
/// is strictly associative on the nose. Fragments intern only the objects a
/// construction needs; tensor tables are partial outside the fragment.

using Card = std::vector<std::int64_t>;

struct TupleInstance {
  int n = 0;
  SmcCategory bundle;
  std::vector<Card> cards;                      // object id -> cardinalities
  std::map<Card, Obj> obj_of_card;

  Obj object(const Card& c) const {
    auto it = obj_of_card.find(c);
    return it == obj_of_card.end() ? kNoObj : it->second;
  }
  const FinCategory& cat() const { return bundle.category(); }
  const SmcStructure& smc() const { return bundle.smc; }
};

/// Full subcategory of Set^n on carriers ≤ cap per coordinate; tensor entries
/// materialized when the product stays ≤ cap. Suited to ZI/stiffness work.
TupleInstance build_tuple_category(int n, int carrier_cap);

/// State monad T = S ⊸ (−×S) on a Set^n fragment. The interned fragment is
/// closed to depth two (T² objects); associativity at depth three is
/// verified externally with transient function tables and recorded in
/// deep_laws.
struct StateMonadInstance {
  TupleInstance world;
  ZiSemilattice zi;
  MonadData monad;
  StrengthFamily strength;      // by currying the evaluation
  ValidationReport deep_laws;   // depth-3 unit/associativity verification
  Card state;

  // internal-hom plumbing: S ⊸ X objects and evaluation maps, by object id
  std::map<Obj, Obj> exp_obj;   // X -> S⊸X (where materialized)
  std::map<Obj, Mor> eval_mor;  // X -> ev : (S⊸X)⊗S -> X
};
StateMonadInstance build_state_monad(int n, const Card& state, int carrier_cap = 2);

/// Powerset-style monad fragment on Set^1 (full or nonempty powerset),
/// interned to depth two over base carriers ≤ base_cap.
struct PowersetInstance {
  TupleInstance world;
  ZiSemilattice zi;
  MonadData monad;
  StrengthFamily strength;  // identities for the nonempty variant
  ValidationReport deep_laws;
  bool nonempty = true;
};
PowersetInstance build_powerset_monad(int base_cap, bool nonempty);

/// --- Trace category (free construction with silent actions) --------------

struct TraceInstance {
  SmcCategory bundle;                 // the trace category fragment C
  SmcCategory component1, component2; // the two component fragments C_i
  ZiSemilattice zi;
  int u1 = -1, u2 = -1;               // ZI indices of (I,0) and (0,I)
  MonoidObject monoid;                // M = (M1, M2)
  MonadData writer;                   // M ⊗ −
  StrengthFamily writer_strength;
  ValidationReport confluence;        // critical-pair check at the bound
  int length_bound = 3;

  // full subcategory of C|u_i on (A,0)-objects is isomorphic to C_i; these
  // give the object correspondences
  std::vector<Obj> comp1_embedding;   // C1 object -> C object (A,0)
  std::vector<Obj> comp2_embedding;
};
TraceInstance build_trace_category(int length_bound = 3);

/// --- Chain processes: [chain_k, FinSet] with pointwise nonempty powerset --

struct ChainProcessInstance {
  int k = 0;
  SmcCategory bundle;                 // functor-category fragment
  std::unique_ptr<FinCategory> index; // the chain poset as a category
  ZiSemilattice zi;
  FunctorCategoryZi lemma_zi;         // per the pointwise-tensor lemma
  MonadData monad;                    // pointwise nonempty powerset
  StrengthFamily strength;            // identities
  ValidationReport deep_laws;
  std::vector<std::vector<std::int64_t>> stage_sizes;  // object id -> sizes
};
ChainProcessInstance build_chain_process(int k, int stage_cap = 2);

}  // namespace tensorloc::zoo
