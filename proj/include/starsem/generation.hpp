#ifndef STARSEM_GENERATION_HPP
#define STARSEM_GENERATION_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "starsem/caps.hpp"
#include "starsem/membership.hpp"
#include "starsem/ptransform.hpp"

namespace starsem {

/// The standard generators, defined for n >= 3. Lower-case letters act on the
/// outer vertices only; the 0-subscripted ones are their lifts fixing the
/// centre.
struct GeneratorCatalog {
  int n;

  PartialTransformation a;   // 1 -> 2, 2 -> 1, i -> i otherwise (outer only)
  PartialTransformation b;   // i -> i+1 cyclically on the outer vertices
  PartialTransformation e;   // 1 -> 1, 2 -> 1, i -> i otherwise (outer only)
  PartialTransformation f;   // identity on {2, ..., n-1}
  PartialTransformation a0;  // lift of a
  PartialTransformation b0;  // lift of b
  PartialTransformation e0;  // lift of e
  PartialTransformation f0;  // lift of f
  PartialTransformation c;   // 1 -> 0, i -> i otherwise (centre not in domain)
  PartialTransformation c0;  // lift of c
  PartialTransformation d;   // identity on the outer vertices
  PartialTransformation z;   // 0 -> 1, every outer vertex -> 0
  PartialTransformation z0;  // lift of z: everything -> 0
  PartialTransformation e1;  // identity on {0, ..., n-2}
  PartialTransformation z1;  // 0 -> 1, 1 -> 0

  static GeneratorCatalog for_n(int n);
};

/// Monoid closure of a generating set inside the partial transformations on
/// the full vertex set: the smallest set containing the identity and the
/// generators that is closed under composition. Computed by breadth-first
/// expansion of the right Cayley graph, so `depth` is the longest shortest
/// factorization over the generators.
struct ClosureResult {
  std::vector<PartialTransformation> elements;  // codec order
  std::size_t products_evaluated = 0;
  int depth = 0;
};

/// Thrown when a closure grows past the configured element bound; carries the
/// number of distinct elements found so far.
class closure_cap_error : public std::runtime_error {
public:
  closure_cap_error(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_count(partial) {}
  std::size_t partial_count;
};

ClosureResult closure(int n, std::span<const PartialTransformation> generators,
                      const Caps& caps = {});

/// The named generating set of the family: the general set for n >= 4,
/// the smaller special set for n = 3. Throws for n < 3.
std::vector<PartialTransformation> named_generating_set(Family family, int n);

/// Checks that the named set really generates: every generator is a member,
/// the closure has exactly the closed-form cardinality, and every closure
/// element passes the membership test.
struct GeneratorCheck {
  Family family = Family::PwEnd;
  int n = 0;
  std::vector<PartialTransformation> generators;
  std::size_t closure_size = 0;
  mpz_class expected_size;
  bool generators_member = false;
  bool closure_within_family = false;
  bool size_matches = false;

  bool ok() const {
    return generators_member && closure_within_family && size_matches;
  }
};

GeneratorCheck verify_generators(Family family, int n, const Caps& caps = {});

/// Exhaustive search over all k-subsets of the family for one that generates
/// the whole monoid (the identity is free, per the monoid rank convention).
/// Returns the lexicographically first witness or certifies none exists.
/// Throws when the subset space exceeds the configured bound.
struct RankSearchResult {
  Family family = Family::PwEnd;
  int n = 0;
  int k = 0;
  std::size_t family_size = 0;
  // position of the witness in lexicographic subset order, or the full
  // count of subsets when no witness exists; deterministic across jobs
  unsigned long long subsets_examined = 0;
  std::optional<std::vector<PartialTransformation>> witness;
};

RankSearchResult rank_search(Family family, int n, int k, const Caps& caps = {},
                             int jobs = 1);

/// Rank certificate: a witness at size `rank` and an exhaustive refutation at
/// every smaller size.
struct RankCertificate {
  Family family = Family::PwEnd;
  int n = 0;
  int rank = 0;
  unsigned long long subsets_examined = 0;  // total across all levels
  std::vector<RankSearchResult> levels;
  std::optional<std::vector<PartialTransformation>> witness;
  double runtime_ms = 0.0;
};

RankCertificate certify_rank(Family family, int n, const Caps& caps = {},
                             int jobs = 1);

/// Scan of all factor pairs of the ambient family for products equal to one
/// of the targets with a factor outside the submonoid. An empty result
/// certifies that the targets only factor through the submonoid, the
/// observation behind the rank lower bounds.
struct FactorizationViolation {
  PartialTransformation left, right, product;
};

std::vector<FactorizationViolation> factorization_violations(
    Family ambient, int n, std::span<const PartialTransformation> targets,
    Family submonoid, const Caps& caps = {});

}  // namespace starsem

#endif  // STARSEM_GENERATION_HPP
