#include "starsem/membership.hpp"

namespace starsem {

namespace {

// Edge test for the star graph: {u, v} is an edge iff one endpoint is the
// centre and the other is not.
inline bool star_edge(int u, int v) { return u != v && (u == 0 || v == 0); }

enum class EdgeVariant { Weak, Plain, Strong, StrongWeak };

bool edge_condition(EdgeVariant variant, const PartialTransformation& a) {
  std::uint32_t dom = a.dom_mask();
  for (std::uint32_t mu = dom; mu; mu &= mu - 1) {
    int u = __builtin_ctz(mu);
    int au = a.value(u);
    for (std::uint32_t mv = mu & (mu - 1); mv; mv &= mv - 1) {
      int v = __builtin_ctz(mv);
      int av = a.value(v);
      bool e = star_edge(u, v);
      bool ei = star_edge(au, av);
      switch (variant) {
        case EdgeVariant::Plain:
          if (e && !ei) return false;
          break;
        case EdgeVariant::Weak:
          if (e && au != av && !ei) return false;
          break;
        case EdgeVariant::Strong:
          if (e != ei) return false;
          break;
        case EdgeVariant::StrongWeak:
          if ((e && au != av) != ei) return false;
          break;
      }
    }
  }
  return true;
}

bool in_two_pt(const PartialTransformation& a) {
  std::uint32_t omega = outer_mask(a.n());
  bool lifted = a.defined(0) && a.value(0) == 0 &&
                (a.image_mask_on(omega) & 1u) == 0;
  bool plain = (a.dom_mask() & 1u) == 0 && (a.image_mask() & 1u) == 0;
  return lifted || plain;
}

}  // namespace

bool is_primary(Family f) {
  switch (f) {
    case Family::PT:
    case Family::Isym:
    case Family::TwoPT:
      return false;
    default:
      return true;
  }
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::PwEnd: return "PwEnd";
    case Family::PEnd: return "PEnd";
    case Family::PsEnd: return "PsEnd";
    case Family::PswEnd: return "PswEnd";
    case Family::IEnd: return "IEnd";
    case Family::PAut: return "PAut";
    case Family::PT: return "PT";
    case Family::Isym: return "I";
    case Family::TwoPT: return "2PT";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  if (name == "Isym") return Family::Isym;
  if (name == "TwoPT") return Family::TwoPT;
  return std::nullopt;
}

bool is_member_definitional(Family f, const PartialTransformation& a) {
  switch (f) {
    case Family::PwEnd:
      return edge_condition(EdgeVariant::Weak, a);
    case Family::PEnd:
      return edge_condition(EdgeVariant::Plain, a);
    case Family::PsEnd:
      return edge_condition(EdgeVariant::Strong, a);
    case Family::PswEnd:
      return edge_condition(EdgeVariant::StrongWeak, a);
    case Family::IEnd:
      return a.is_injective() && edge_condition(EdgeVariant::Plain, a);
    case Family::PAut:
      // by definition: a partial permutation whose inverse is also a
      // partial endomorphism
      return a.is_injective() && edge_condition(EdgeVariant::Plain, a) &&
             edge_condition(EdgeVariant::Plain, a.inverse());
    case Family::PT:
      return true;
    case Family::Isym:
      return a.is_injective();
    case Family::TwoPT:
      return in_two_pt(a);
  }
  return false;
}

bool is_member(Family f, const PartialTransformation& a) {
  const std::uint32_t omega = outer_mask(a.n());
  const bool has0 = a.defined(0);
  const int v0 = has0 ? a.value(0) : -1;

  switch (f) {
    case Family::PwEnd: {
      if (!has0 || v0 == 0) return true;
      // image contained in {0, 0a}
      std::uint32_t im = a.image_mask();
      return (im & ~(1u | (1u << v0))) == 0;
    }
    case Family::PEnd: {
      if (!has0) return true;
      std::uint32_t oim = a.image_mask_on(omega);
      if (v0 == 0) return (oim & 1u) == 0;       // outer vertices stay outer
      return (oim & ~1u) == 0;                   // outer vertices go to 0
    }
    case Family::PsEnd: {
      std::uint32_t im = a.image_mask();
      if (!has0) return im == 1u || (im & 1u) == 0;
      std::uint32_t oim = a.image_mask_on(omega);
      if (v0 == 0) return (oim & 1u) == 0;
      return (oim & ~1u) == 0;
    }
    case Family::PswEnd: {
      std::uint32_t im = a.image_mask();
      if (!has0) return im == 1u || (im & 1u) == 0;
      std::uint32_t oim = a.image_mask_on(omega);
      if (v0 == 0) return im == 1u || (oim & 1u) == 0;
      return im == (1u << v0) || oim == 1u;
    }
    case Family::IEnd: {
      if (!a.is_injective()) return false;
      if (!has0 || v0 == 0) return true;
      return (a.image_mask_on(omega) & ~1u) == 0;
    }
    case Family::PAut: {
      if (!a.is_injective()) return false;
      std::uint32_t im = a.image_mask();
      if (!has0) return im == 1u || (im & 1u) == 0;
      if (v0 == 0) return true;
      return (a.image_mask_on(omega) & ~1u) == 0;
    }
    case Family::PT:
      return true;
    case Family::Isym:
      return a.is_injective();
    case Family::TwoPT:
      return in_two_pt(a);
  }
  return false;
}

std::vector<Family> classify(const PartialTransformation& a) {
  std::vector<Family> out;
  for (Family f : kPrimaryFamilies)
    if (is_member(f, a)) out.push_back(f);
  return out;
}

}  // namespace starsem
