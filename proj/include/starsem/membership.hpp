#ifndef STARSEM_MEMBERSHIP_HPP
#define STARSEM_MEMBERSHIP_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "starsem/ptransform.hpp"

namespace starsem {

/// The six partial-endomorphism monoids of the star graph, plus three
/// auxiliary families used in decompositions and oracles.
enum class Family {
  PwEnd,  // partial weak endomorphisms
  PEnd,   // partial endomorphisms
  PsEnd,  // partial strong endomorphisms
  PswEnd, // partial strong weak endomorphisms
  IEnd,   // injective partial endomorphisms
  PAut,   // partial automorphisms
  // auxiliary
  PT,     // all partial transformations of the vertex set
  Isym,   // symmetric inverse monoid (all partial permutations)
  TwoPT,  // maps on the outer vertices together with their zeta lifts
};

inline constexpr std::array<Family, 6> kPrimaryFamilies = {
    Family::PwEnd, Family::PEnd,  Family::PsEnd,
    Family::PswEnd, Family::IEnd, Family::PAut};

inline constexpr std::array<Family, 9> kAllFamilies = {
    Family::PwEnd, Family::PEnd, Family::PsEnd, Family::PswEnd, Family::IEnd,
    Family::PAut,  Family::PT,   Family::Isym,  Family::TwoPT};

bool is_primary(Family f);
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Ground-truth membership: quantifies the defining edge condition of the
/// chosen variant over all vertex pairs in the domain, with the star graph's
/// edge set {{0,i} : 1 <= i <= n-1}. Injective families additionally require
/// injectivity (and, for partial automorphisms, an edge-preserving inverse).
bool is_member_definitional(Family f, const PartialTransformation& a);

/// Production membership test via the closed characterizations (one of a few
/// mutually disjoint conditions on how the map treats the centre vertex).
/// Agrees with is_member_definitional on every input; the test suite sweeps
/// that equivalence exhaustively.
bool is_member(Family f, const PartialTransformation& a);

/// All primary families containing `a`.
std::vector<Family> classify(const PartialTransformation& a);

}  // namespace starsem

#endif  // STARSEM_MEMBERSHIP_HPP
