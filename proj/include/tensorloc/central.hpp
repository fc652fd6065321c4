#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorloc/monoidal.hpp"

namespace tensorloc {

/// Abstract finite meet-semilattice: order, meets, top, optional bottom and
/// joins. Used both for ZI(C) and for the index posets of graded monads.
struct SemilatticeTable {
  int n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;  // -1 where no least upper bound exists
  int top = -1;
  std::optional<int> bottom;

  bool le(int i, int j) const { return leq[i][j]; }
  bool has_all_joins() const;

  /// Order-derived data (meets/joins where they exist, top/bottom when
  /// present) from a reflexive/antisymmetric/transitive relation; nullopt
  /// when the relation is not a partial order.
  static std::optional<SemilatticeTable> poset_from_leq(
      int n, const std::vector<std::vector<bool>>& leq);

  /// As poset_from_leq, but additionally requires a top element and all
  /// binary meets (the meet-semilattice case).
  static std::optional<SemilatticeTable> from_leq(
      int n, const std::vector<std::vector<bool>>& leq);

  /// Exhaustive search for an order isomorphism (sizes are tiny).
  bool order_isomorphic_to(const SemilatticeTable& other) const;
};

/// u : U -> I with invertible U⊗u = u⊗U.
struct CentralIdempotent {
  Obj dom = kNoObj;
  Mor mor = kNoMor;
  Mor inv_witness = kNoMor;
};

/// ZI(C): identification-class representatives with order witnesses and the
/// semilattice structure on classes.
struct ZiSemilattice {
  std::vector<CentralIdempotent> elements;
  /// leq_witness[i][j]: some m with u_i = u_j ∘ m, kNoMor when u_i ≰ u_j.
  std::vector<std::vector<Mor>> leq_witness;
  SemilatticeTable table;
  std::vector<std::string> notes;  // e.g. witness multiplicity observations

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int i, int j) const { return leq_witness[i][j] != kNoMor; }
  int top() const { return table.top; }
  int meet(int i, int j) const { return table.meet[i][j]; }

  /// Identification class of an arbitrary central idempotent, or -1.
  int class_of(const SmcStructure& s, Obj dom, Mor mor) const;
};

/// Candidate check: is (U, u) a central idempotent? Returns the inverse
/// witness when it is.
std::optional<Mor> central_idempotent_witness(const SmcStructure& s, Mor u);

/// One representative per identification class, canonicalized by
/// lexicographically least domain object name (then morphism name).
std::vector<CentralIdempotent> enumerate_central_idempotents(const SmcStructure& s);

ZiSemilattice zi_semilattice(const SmcStructure& s);

struct StiffnessReport {
  bool stiff = false;
  std::string counterexample;  // empty when stiff
};
StiffnessReport is_stiff(const SmcStructure& s, const ZiSemilattice& zi);

struct UniversalJoinsReport {
  bool holds = false;
  std::string counterexample;
};
UniversalJoinsReport has_universal_joins(const SmcStructure& s, const ZiSemilattice& zi);

/// u ∨ v = 1 implies u = 1 or v = 1, over pairs whose join exists.
bool is_local(const ZiSemilattice& zi);

/// Principal prime filters ↑w of the semilattice: proper (excludes the
/// bottom-generated improper filter when a bottom exists) and join-prime.
/// Returned as the generating element index w of each filter.
std::vector<int> meet_prime_points(const ZiSemilattice& zi);

/// Least open containing the point: the filter generator itself.
inline int least_open_of_point(const ZiSemilattice&, int point_generator) {
  return point_generator;
}

/// ZI[index, target] ≅ [index, ZI(target)] per the functor-category lemma.
struct FunctorCategoryZi {
  /// element i = monotone assignment: index object -> class index in target_zi
  std::vector<std::vector<int>> functors;
  SemilatticeTable table;  // pointwise order/meet structure
  const ZiSemilattice* target_zi = nullptr;
};
FunctorCategoryZi functor_category_zi(const FinCategory& index,
                                      const SmcStructure& target,
                                      const ZiSemilattice& target_zi);

}  // namespace tensorloc
