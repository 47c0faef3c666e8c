#include "starsem/greens.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace starsem {

namespace {

void require_member(Family family, const PartialTransformation& a) {
  if (!is_member(family, a))
    throw std::invalid_argument("'" + a.to_string() + "' is not a member of " +
                                std::string(family_name(family)));
}

void require_same_n(const PartialTransformation& a,
                    const PartialTransformation& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("transformations live on different vertex sets");
}

bool uses_kernel_image_form(Family family) {
  // the regular families, where R and L are plain kernel/image equality
  return family == Family::PsEnd || family == Family::PswEnd ||
         family == Family::PAut;
}

bool related_r(Family family, const PartialTransformation& a,
               const PartialTransformation& b) {
  if (uses_kernel_image_form(family)) return kernel(a) == kernel(b);
  if (family == Family::IEnd) {
    // injective form: kernels are the singletons of the domain
    if (a.dom_mask() != b.dom_mask()) return false;
    if (a.dom_size() <= 1) return true;
    bool za = a.image_mask() & 1u, zb = b.image_mask() & 1u;
    if (za != zb) return false;
    if (!za) return true;
    std::uint32_t pa = a.preimage_mask(0), pb = b.preimage_mask(0);
    return pa == pb || a.dom_mask() == (pa | pb);
  }
  KernelPartition ka = kernel(a);
  if (ka != kernel(b)) return false;
  if (a.rank() <= 1) return true;
  bool za = a.image_mask() & 1u, zb = b.image_mask() & 1u;
  if (za != zb) return false;
  if (!za) return true;
  // the preimages of 0 under a and b are blocks of the common kernel; they
  // either coincide or must be its only two blocks (a symmetric condition)
  return a.preimage_mask(0) == b.preimage_mask(0) || ka.size() == 2;
}

bool related_l(Family family, const PartialTransformation& a,
               const PartialTransformation& b) {
  if (a.image_mask() != b.image_mask()) return false;
  if (uses_kernel_image_form(family)) return true;
  if (a.rank() <= 1) return true;
  return a.defined(0) == b.defined(0);
}

bool related_h(Family family, const PartialTransformation& a,
               const PartialTransformation& b) {
  // the meet of R and L. In the regular families this is exactly equality
  // of kernel and image. In the others that simpler description is wrong:
  // above rank two, two maps missing the centre in the domain but hitting
  // it in the image can share kernel and image yet fail to be R-related.
  return related_r(family, a, b) && related_l(family, a, b);
}

bool related_j(Family family, const PartialTransformation& a,
               const PartialTransformation& b) {
  if (a.rank() != b.rank()) return false;
  if (a.rank() <= 1) return true;
  if (a.defined(0) != b.defined(0)) return false;
  if (uses_kernel_image_form(family)) return true;  // image condition drops out
  return (a.image_mask() & 1u) == (b.image_mask() & 1u);
}

}  // namespace

std::string_view relation_name(GreensRelation rel) {
  switch (rel) {
    case GreensRelation::R: return "R";
    case GreensRelation::L: return "L";
    case GreensRelation::H: return "H";
    case GreensRelation::J: return "J";
  }
  return "?";
}

std::optional<GreensRelation> relation_from_name(std::string_view name) {
  if (name == "R") return GreensRelation::R;
  if (name == "L") return GreensRelation::L;
  if (name == "H") return GreensRelation::H;
  if (name == "J") return GreensRelation::J;
  return std::nullopt;
}

bool related(GreensRelation rel, Family family, const PartialTransformation& a,
             const PartialTransformation& b) {
  require_same_n(a, b);
  require_member(family, a);
  require_member(family, b);
  switch (rel) {
    case GreensRelation::R: return related_r(family, a, b);
    case GreensRelation::L: return related_l(family, a, b);
    case GreensRelation::H: return related_h(family, a, b);
    case GreensRelation::J: return related_j(family, a, b);
  }
  return false;
}

bool is_regular(Family family, const PartialTransformation& a) {
  require_member(family, a);
  std::uint32_t im = a.image_mask();
  return a.defined(0) || im == 1u || (im & 1u) == 0;
}

GreensOracle::GreensOracle(Family family, int n, const Caps& caps)
    : family_(family), n_(n) {
  if (n > caps.greens_oracle)
    throw std::invalid_argument("the ideal-based oracle is capped at n <= " +
                                std::to_string(caps.greens_oracle) +
                                ", got n = " + std::to_string(n));
  elems_ = enumerate_family(family, n, caps);
  const std::size_t m = elems_.size();
  index_.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i)
    index_.emplace(elems_[i], static_cast<int>(i));

  if (!index_.count(PartialTransformation::identity(n)))
    throw std::logic_error("family does not contain the identity");

  mul_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto it = index_.find(compose(elems_[i], elems_[j]));
      if (it == index_.end())
        throw std::logic_error("family is not closed under composition");
      mul_[i * m + j] = it->second;
    }

  // principal ideal membership, then the mutual-containment relations
  words_ = (m + 63) / 64;
  std::vector<std::uint64_t> r_ideal(m * words_, 0), l_ideal(m * words_, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto p = static_cast<std::size_t>(mul_[i * m + j]);
      r_ideal[i * words_ + p / 64] |= 1ull << (p % 64);
      l_ideal[j * words_ + p / 64] |= 1ull << (p % 64);
    }
  auto test = [&](const std::vector<std::uint64_t>& v, std::size_t i,
                  std::size_t j) {
    return (v[i * words_ + j / 64] >> (j % 64)) & 1ull;
  };
  r_rel_.assign(m * words_, 0);
  l_rel_.assign(m * words_, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (test(r_ideal, i, j) && test(r_ideal, j, i))
        r_rel_[i * words_ + j / 64] |= 1ull << (j % 64);
      if (test(l_ideal, i, j) && test(l_ideal, j, i))
        l_rel_[i * words_ + j / 64] |= 1ull << (j % 64);
    }

  for (std::size_t i = 0; i < m; ++i)
    if (is_member(Family::PAut, elems_[i]))
      paut_indices_.push_back(static_cast<int>(i));
}

int GreensOracle::index_of(const PartialTransformation& a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    throw std::invalid_argument("'" + a.to_string() + "' is not a member of " +
                                std::string(family_name(family_)));
  return it->second;
}

bool GreensOracle::bit(const std::vector<std::uint64_t>& rel, int i,
                       int j) const {
  return (rel[static_cast<std::size_t>(i) * words_ +
              static_cast<std::size_t>(j) / 64] >>
          (static_cast<std::size_t>(j) % 64)) &
         1ull;
}

bool GreensOracle::related(GreensRelation rel, int i, int j) const {
  switch (rel) {
    case GreensRelation::R: return bit(r_rel_, i, j);
    case GreensRelation::L: return bit(l_rel_, i, j);
    case GreensRelation::H: return bit(r_rel_, i, j) && bit(l_rel_, i, j);
    case GreensRelation::J: {
      // J = D: some mu with i R mu and mu L j
      const std::uint64_t* ri = &r_rel_[static_cast<std::size_t>(i) * words_];
      const std::uint64_t* lj = &l_rel_[static_cast<std::size_t>(j) * words_];
      for (std::size_t w = 0; w < words_; ++w)
        if (ri[w] & lj[w]) return true;
      return false;
    }
  }
  return false;
}

bool GreensOracle::related(GreensRelation rel, const PartialTransformation& a,
                           const PartialTransformation& b) const {
  return related(rel, index_of(a), index_of(b));
}

std::optional<PartialTransformation> GreensOracle::regular_witness(
    const PartialTransformation& a) const {
  const int i = index_of(a);
  const std::size_t m = elems_.size();
  for (std::size_t j = 0; j < m; ++j)
    if (mul_[static_cast<std::size_t>(
                 mul_[static_cast<std::size_t>(i) * m + j]) *
                 m +
             static_cast<std::size_t>(i)] == i)
      return elems_[j];
  return std::nullopt;
}

std::optional<PartialTransformation> GreensOracle::regular_witness_in_paut(
    const PartialTransformation& a) const {
  const int i = index_of(a);
  const std::size_t m = elems_.size();
  for (int j : paut_indices_)
    if (mul_[static_cast<std::size_t>(
                 mul_[static_cast<std::size_t>(i) * m +
                      static_cast<std::size_t>(j)]) *
                 m +
             static_cast<std::size_t>(i)] == i)
      return elems_[static_cast<std::size_t>(j)];
  return std::nullopt;
}

bool related_oracle(GreensRelation rel, Family family,
                    const PartialTransformation& a,
                    const PartialTransformation& b, const Caps& caps) {
  require_same_n(a, b);
  GreensOracle oracle(family, a.n(), caps);
  return oracle.related(rel, a, b);
}

std::pair<bool, std::optional<PartialTransformation>> is_regular_oracle(
    Family family, const PartialTransformation& a, const Caps& caps) {
  GreensOracle oracle(family, a.n(), caps);
  auto witness = oracle.regular_witness(a);
  return {witness.has_value(), witness};
}

EggBoxReport egg_box(Family family, int n, const Caps& caps) {
  if (n > caps.enum_filter)
    throw std::invalid_argument("the egg-box report is capped at n <= " +
                                std::to_string(caps.enum_filter) +
                                ", got n = " + std::to_string(n));
  const auto elems = enumerate_family(family, n, caps);

  EggBoxReport report{family, n, elems.size(), {}};
  std::vector<std::vector<const PartialTransformation*>> members;
  for (const auto& a : elems) {
    bool placed = false;
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      if (related_j(family, report.classes[c].representative, a)) {
        members[c].push_back(&a);
        placed = true;
        break;
      }
    }
    if (!placed) {
      EggBoxClass cls;
      cls.representative = a;  // codec-minimal: elements arrive in codec order
      report.classes.push_back(cls);
      members.push_back({&a});
    }
  }

  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    EggBoxClass& cls = report.classes[c];
    const auto& cm = members[c];
    cls.size = cm.size();
    cls.rank = cls.representative.rank();
    cls.zero_in_dom = cls.representative.defined(0);
    cls.zero_in_image = cls.representative.image_mask() & 1u;
    cls.regular = is_regular(family, cls.representative);

    // R refines kernel equality and L refines image equality, so bucket
    // first and only scan representatives inside a bucket
    std::map<std::vector<std::uint32_t>, std::vector<const PartialTransformation*>>
        by_kernel;
    for (auto* a : cm) by_kernel[kernel(*a).blocks].push_back(a);
    for (auto& [key, bucket] : by_kernel) {
      std::vector<const PartialTransformation*> reps;
      for (auto* a : bucket) {
        bool found = false;
        for (auto* r : reps)
          if (related_r(family, *r, *a)) {
            found = true;
            break;
          }
        if (!found) reps.push_back(a);
      }
      cls.r_classes += reps.size();
    }

    std::map<std::uint32_t, std::vector<const PartialTransformation*>> by_image;
    for (auto* a : cm) by_image[a->image_mask()].push_back(a);
    for (auto& [key, bucket] : by_image) {
      std::vector<const PartialTransformation*> reps;
      for (auto* a : bucket) {
        bool found = false;
        for (auto* r : reps)
          if (related_l(family, *r, *a)) {
            found = true;
            break;
          }
        if (!found) reps.push_back(a);
      }
      cls.l_classes += reps.size();
    }

    for (auto* a : cm)
      if (related_h(family, cls.representative, *a)) ++cls.h_size;
    cls.rectangular = cls.r_classes * cls.l_classes * cls.h_size == cls.size;
  }
  return report;
}

}  // namespace starsem
