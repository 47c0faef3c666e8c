#include "starsem/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starsem {

namespace {

void check_enum_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw std::invalid_argument(std::string(what) + " is capped at n <= " +
                                std::to_string(cap) + ", got n = " +
                                std::to_string(n));
  if (n < 1)
    throw std::invalid_argument("vertex count must be positive, got " +
                                std::to_string(n));
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class fact(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace

FamilyEnumerator::FamilyEnumerator(Family family, int n, const Caps& caps)
    : family_(family), n_(n), cur_(PartialTransformation()) {
  check_enum_cap(n, caps.enum_constructive, "constructive enumeration");
  cur_ = PartialTransformation::empty(n);
}

std::optional<PartialTransformation> FamilyEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return cur_;  // the empty map belongs to every family
  }
  for (;;) {
    while (cx_ < n_) {
      if (cy_ >= n_) {
        ++cx_;
        cy_ = 0;
        continue;
      }
      int x = cx_, y = cy_++;
      PartialTransformation ext = cur_.extended(x, y);
      if (is_member(family_, ext)) {
        stack_.emplace_back(x, y);
        cur_ = ext;
        cx_ = x + 1;
        cy_ = 0;
        return cur_;
      }
    }
    if (stack_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    auto [px, py] = stack_.back();
    stack_.pop_back();
    cur_ = cur_.restricted(~(1u << px));
    cx_ = px;
    cy_ = py + 1;
  }
}

std::vector<PartialTransformation> enumerate_family(Family family, int n,
                                                    const Caps& caps) {
  FamilyEnumerator en(family, n, caps);
  std::vector<PartialTransformation> out;
  while (auto a = en.next()) out.push_back(*a);
  return out;
}

std::vector<PartialTransformation> enumerate_by_filter(Family family, int n,
                                                       const Caps& caps) {
  check_enum_cap(n, caps.enum_filter, "filter enumeration");
  std::vector<PartialTransformation> out;
  // odometer over the (n+1)^n assignments: digit n means undefined
  std::vector<int> digit(static_cast<std::size_t>(n), n);
  for (;;) {
    PartialTransformation a = PartialTransformation::empty(n);
    for (int x = 0; x < n; ++x)
      if (digit[static_cast<std::size_t>(x)] < n)
        a = a.extended(x, digit[static_cast<std::size_t>(x)]);
    if (is_member_definitional(family, a)) out.push_back(a);
    int x = 0;
    while (x < n && digit[static_cast<std::size_t>(x)] == 0) {
      digit[static_cast<std::size_t>(x)] = n;
      ++x;
    }
    if (x == n) break;
    --digit[static_cast<std::size_t>(x)];
  }
  std::sort(out.begin(), out.end(), codec_less);
  return out;
}

mpz_class cardinality(Family family, int n) {
  if (n < 1)
    throw std::invalid_argument("vertex count must be positive, got " +
                                std::to_string(n));
  const auto un = static_cast<unsigned long>(n);
  switch (family) {
    case Family::PwEnd:
      return 2 * pow_ui(un + 1, un - 1) + (n - 1) * pow_ui(3, un - 1);
    case Family::PEnd:
      return pow_ui(un + 1, un - 1) + pow_ui(un, un - 1) +
             (n - 1) * pow_ui(2, un - 1);
    case Family::PsEnd:
      return 2 * pow_ui(un, un - 1) + n * pow_ui(2, un - 1) - 1;
    case Family::PswEnd:
      return 2 * pow_ui(un, un - 1) + n * pow_ui(2, un) - n - 1;
    case Family::PAut: {
      mpz_class sum = 0;
      for (unsigned long k = 1; k + 1 <= un; ++k)
        sum += binom(un - 1, k) * binom(un - 1, k) * fact(k);
      return 1 + n * n + 2 * sum;
    }
    case Family::IEnd: {
      mpz_class sum = 0;
      for (unsigned long k = 2; k + 1 <= un; ++k)
        sum += (binom(un, k) + binom(un - 1, k)) * binom(un - 1, k) * fact(k);
      return 3 + 3 * n * n - 4 * n + sum;
    }
    case Family::PT:
      return pow_ui(un + 1, un);
    case Family::Isym: {
      mpz_class sum = 0;
      for (unsigned long k = 0; k <= un; ++k)
        sum += binom(un, k) * binom(un, k) * fact(k);
      return sum;
    }
    case Family::TwoPT:
      return 2 * pow_ui(un, un - 1);
  }
  throw std::invalid_argument("unknown family");
}

FamilyCensus census(Family family, int n, const Caps& caps) {
  FamilyCensus c{family, n, cardinality(family, n), 0, false};
  FamilyEnumerator en(family, n, caps);
  unsigned long long count = 0;
  while (en.next()) ++count;
  c.enumerated_count = mpz_class(static_cast<unsigned long>(count));
  c.match = (c.enumerated_count == c.formula_count);
  return c;
}

PautDecomposition decompose_paut(int n, const Caps& caps) {
  check_enum_cap(n, caps.enum_constructive, "decomposition");
  PautDecomposition d;
  const std::uint32_t omega = outer_mask(n);
  for (const auto& a : enumerate_family(Family::Isym, n, caps)) {
    if ((a.dom_mask() & ~omega) == 0 && (a.image_mask() & ~omega) == 0) {
      d.outer_perms.push_back(a);
      d.lifted_perms.push_back(a.zeta_lift());
    }
  }
  std::sort(d.lifted_perms.begin(), d.lifted_perms.end(), codec_less);
  for (int j = 1; j < n; ++j)
    for (int i = 1; i < n; ++i)
      d.centre_swaps.push_back(PartialTransformation::make(n, {{0, j}, {i, 0}}));
  std::sort(d.centre_swaps.begin(), d.centre_swaps.end(), codec_less);
  for (int i = 1; i < n; ++i) {
    d.centre_rank_one.push_back(PartialTransformation::make(n, {{0, i}}));
    d.centre_rank_one.push_back(PartialTransformation::make(n, {{i, 0}}));
  }
  std::sort(d.centre_rank_one.begin(), d.centre_rank_one.end(), codec_less);
  return d;
}

IendDecomposition decompose_iend(int n, const Caps& caps) {
  check_enum_cap(n, caps.enum_constructive, "decomposition");
  IendDecomposition d;
  d.paut_part = enumerate_family(Family::PAut, n, caps);
  for (const auto& a : enumerate_family(Family::Isym, n, caps))
    if (!a.defined(0) && (a.image_mask() & 1u) && a.rank() >= 2)
      d.r0_part.push_back(a);
  return d;
}

std::vector<PartialTransformation> units(Family family, int n, const Caps& caps) {
  check_enum_cap(n, caps.enum_constructive, "the unit search");
  const auto elems = enumerate_family(family, n, caps);
  const auto id = PartialTransformation::identity(n);
  const std::uint32_t full = full_mask(n);
  std::vector<PartialTransformation> out;
  for (const auto& a : elems) {
    // a two-sided invertible element must be a permutation of the whole
    // vertex set; for those, search the family for an inverse
    if (a.dom_mask() != full || a.image_mask() != full) continue;
    for (const auto& b : elems) {
      if (compose(a, b) == id && compose(b, a) == id) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

}  // namespace starsem
