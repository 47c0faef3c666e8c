#ifndef STARSEM_GREENS_HPP
#define STARSEM_GREENS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "starsem/caps.hpp"
#include "starsem/enumeration.hpp"
#include "starsem/membership.hpp"
#include "starsem/ptransform.hpp"

namespace starsem {

enum class GreensRelation { R, L, H, J };

std::string_view relation_name(GreensRelation rel);
std::optional<GreensRelation> relation_from_name(std::string_view name);

/// Formula classifier for Green's relations, dispatched on the family:
/// the regular families (PsEnd, PswEnd, PAut) use equality of kernels and
/// images, the others use the kernel/image criteria refined by how the
/// centre vertex sits in domain and image; H is always the meet of R and L,
/// which in the non-regular families is strictly finer than kernel and image
/// equality. Inputs must belong to the family and share n, otherwise
/// std::invalid_argument.
bool related(GreensRelation rel, Family family, const PartialTransformation& a,
             const PartialTransformation& b);

/// Regularity by the closed criterion: the centre is in the domain, or the
/// image is exactly {0}, or the centre is missed by the image.
bool is_regular(Family family, const PartialTransformation& a);

/// Ideal-based ground truth for Green's relations and regularity on a fully
/// materialized family: two elements are R-related iff each lies in the
/// other's principal right ideal, dually for L, H is the meet, and J is
/// computed as the composition R after L (J = D in a finite monoid). The
/// quantifiers range over the family itself; the identity belongs to every
/// family, which the constructor asserts.
class GreensOracle {
public:
  GreensOracle(Family family, int n, const Caps& caps = {});

  Family family() const { return family_; }
  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<PartialTransformation>& elements() const { return elems_; }
  const PartialTransformation& element(int i) const {
    return elems_[static_cast<std::size_t>(i)];
  }

  /// Index of a member in codec order; throws for non-members.
  int index_of(const PartialTransformation& a) const;
  /// Index of element(i) * element(j).
  int product(int i, int j) const {
    return mul_[static_cast<std::size_t>(i) * elems_.size() +
                static_cast<std::size_t>(j)];
  }

  bool related(GreensRelation rel, int i, int j) const;
  bool related(GreensRelation rel, const PartialTransformation& a,
               const PartialTransformation& b) const;

  /// Some b in the family with a * b * a == a, if one exists.
  std::optional<PartialTransformation> regular_witness(
      const PartialTransformation& a) const;
  /// The same search restricted to the partial automorphisms.
  std::optional<PartialTransformation> regular_witness_in_paut(
      const PartialTransformation& a) const;

private:
  bool bit(const std::vector<std::uint64_t>& rel, int i, int j) const;

  Family family_;
  int n_;
  std::vector<PartialTransformation> elems_;
  std::unordered_map<PartialTransformation, int> index_;
  std::vector<std::int32_t> mul_;
  std::size_t words_;
  std::vector<std::uint64_t> r_rel_, l_rel_;
  std::vector<int> paut_indices_;
};

/// One-shot oracle variants; building a GreensOracle directly is cheaper for
/// sweeps.
bool related_oracle(GreensRelation rel, Family family,
                    const PartialTransformation& a,
                    const PartialTransformation& b, const Caps& caps = {});

std::pair<bool, std::optional<PartialTransformation>> is_regular_oracle(
    Family family, const PartialTransformation& a, const Caps& caps = {});

/// Summary of one J-class in the egg-box presentation.
struct EggBoxClass {
  PartialTransformation representative;  // codec-minimal member
  std::size_t size = 0;
  std::size_t r_classes = 0;
  std::size_t l_classes = 0;
  std::size_t h_size = 0;    // size of the representative's H-class
  bool rectangular = false;  // r_classes * l_classes * h_size == size
  bool regular = false;
  int rank = 0;
  bool zero_in_dom = false;
  bool zero_in_image = false;
};

struct EggBoxReport {
  Family family;
  int n;
  std::size_t total_size = 0;
  std::vector<EggBoxClass> classes;  // in codec order of representatives
};

EggBoxReport egg_box(Family family, int n, const Caps& caps = {});

}  // namespace starsem

#endif  // STARSEM_GREENS_HPP
