#ifndef STARSEM_ENUMERATION_HPP
#define STARSEM_ENUMERATION_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "starsem/caps.hpp"
#include "starsem/membership.hpp"
#include "starsem/ptransform.hpp"

namespace starsem {

/// Streams the members of a family for a fixed n, each exactly once, in the
/// order of the text codec. Generation walks the tree of domain extensions
/// guided by the characterization predicate (every restriction of a member is
/// a member, so the walk never leaves the family); nothing is filtered out of
/// a global sweep. Runs in memory bounded by the current element only.
class FamilyEnumerator {
public:
  FamilyEnumerator(Family family, int n, const Caps& caps = {});

  /// Next member in codec order, or nothing when exhausted.
  std::optional<PartialTransformation> next();

  Family family() const { return family_; }
  int n() const { return n_; }

private:
  Family family_;
  int n_;
  bool started_ = false;
  bool done_ = false;
  PartialTransformation cur_;
  std::vector<std::pair<int, int>> stack_;  // chosen (point, value) pairs
  int cx_ = 0, cy_ = 0;                     // next candidate pair
};

/// Materialized family in codec order.
std::vector<PartialTransformation> enumerate_family(Family family, int n,
                                                    const Caps& caps = {});

/// Independent enumeration path: sweeps all (n+1)^n partial transformations
/// and keeps the ones accepted by the definitional edge-check oracle.
/// Returned in codec order.
std::vector<PartialTransformation> enumerate_by_filter(Family family, int n,
                                                       const Caps& caps = {});

/// Exact closed-form cardinality of the family, arbitrary precision.
mpz_class cardinality(Family family, int n);

/// One row of the counting report: closed form vs constructive enumeration.
struct FamilyCensus {
  Family family;
  int n;
  mpz_class formula_count;
  mpz_class enumerated_count;
  bool match;
};

FamilyCensus census(Family family, int n, const Caps& caps = {});

/// The partial automorphisms split into the partial permutations of the outer
/// vertices, their zeta lifts, the rank-two maps swapping the centre in and
/// out, and the rank-one maps moving the centre. Pairwise disjoint; the union
/// is the whole family.
struct PautDecomposition {
  std::vector<PartialTransformation> outer_perms;       // I(Omega_{n-1})
  std::vector<PartialTransformation> lifted_perms;      // I(Omega_{n-1}) zeta
  std::vector<PartialTransformation> centre_swaps;      // (0 i / j 0)
  std::vector<PartialTransformation> centre_rank_one;   // (0 / i), (i / 0)
};

PautDecomposition decompose_paut(int n, const Caps& caps = {});

/// The injective partial endomorphisms split into the partial automorphisms
/// and the non-regular part (centre missing from the domain but hit by the
/// image, rank at least two).
struct IendDecomposition {
  std::vector<PartialTransformation> paut_part;
  std::vector<PartialTransformation> r0_part;
};

IendDecomposition decompose_iend(int n, const Caps& caps = {});

/// Elements with a two-sided inverse inside the family, found by searching
/// the family itself for the inverse. Always the permutations of the vertex
/// set fixing the centre, of size (n-1)! for n >= 3.
std::vector<PartialTransformation> units(Family family, int n,
                                         const Caps& caps = {});

}  // namespace starsem

#endif  // STARSEM_ENUMERATION_HPP
