#include <doctest.h>

#include <algorithm>
#include <set>

#include "starsem/membership.hpp"
#include "test_util.hpp"

using namespace starsem;
using test::all_partial_transformations;

namespace {

PartialTransformation pt(const char* codec) {
  return PartialTransformation::parse(codec);
}

std::set<Family> classify_set(const PartialTransformation& a) {
  auto v = classify(a);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) {
    auto parsed = family_from_name(family_name(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK(!family_from_name("nope").has_value());
  CHECK(is_primary(Family::PwEnd));
  CHECK(!is_primary(Family::TwoPT));
}

TEST_CASE("membership on the spot examples") {
  SUBCASE("everything on two vertices is a weak and strong weak endomorphism") {
    for (const auto& a : all_partial_transformations(2)) {
      CHECK(is_member(Family::PwEnd, a));
      CHECK(is_member(Family::PswEnd, a));
    }
  }

  SUBCASE("the empty map is everywhere") {
    for (int n = 1; n <= 5; ++n)
      for (Family f : kAllFamilies)
        CHECK(is_member(f, PartialTransformation::empty(n)));
  }

  SUBCASE("a map avoiding the centre in its domain preserves edges vacuously") {
    for (int n = 3; n <= 6; ++n) {
      auto a = PartialTransformation::make(n, {{1, 1}, {2, 0}});
      CHECK(is_member(Family::PEnd, a));
      CHECK(classify_set(a) ==
            std::set<Family>{Family::PwEnd, Family::PEnd, Family::IEnd});
    }
  }

  SUBCASE("z is a strong endomorphism, c is plain but not strong") {
    CHECK(is_member(Family::PsEnd, pt("n=4; 0->1 1->0 2->0 3->0")));
    CHECK(is_member(Family::PsEnd, pt("n=6; 0->1 1->0 2->0 3->0 4->0 5->0")));
    auto c = pt("n=4; 1->0 2->2 3->3");
    CHECK(is_member(Family::PEnd, c));
    CHECK_FALSE(is_member(Family::PsEnd, c));
  }

  SUBCASE("constant maps") {
    // over all nonempty X and all y: member of PswEnd always, of PsEnd and
    // PEnd exactly when 0 is not in X or X is a singleton
    const int n = 4;
    for (std::uint32_t X = 1; X <= full_mask(n); ++X)
      for (int y = 0; y < n; ++y) {
        PartialTransformation a = PartialTransformation::empty(n);
        for (std::uint32_t m = X; m; m &= m - 1)
          a = a.extended(__builtin_ctz(m), y);
        CHECK(is_member(Family::PswEnd, a));
        CHECK(is_member(Family::PwEnd, a));
        bool strong_ok = !(X & 1u) || __builtin_popcount(X) == 1;
        CHECK(is_member(Family::PsEnd, a) == strong_ok);
        CHECK(is_member(Family::PEnd, a) == strong_ok);
        if (__builtin_popcount(X) == 1) CHECK(is_member(Family::PAut, a));
      }
  }

  SUBCASE("classification of the identity and of the all-to-centre map") {
    for (int n = 2; n <= 6; ++n) {
      CHECK(classify_set(PartialTransformation::identity(n)) ==
            std::set<Family>(kPrimaryFamilies.begin(), kPrimaryFamilies.end()));
      PartialTransformation z0 = PartialTransformation::empty(n);
      for (int x = 0; x < n; ++x) z0 = z0.extended(x, 0);
      auto fams = classify_set(z0);
      CHECK(fams.count(Family::PswEnd));
      CHECK_FALSE(fams.count(Family::PsEnd));
    }
  }
}

TEST_CASE("characterizations agree with the definitional oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_partial_transformations(n))
      for (Family f : kAllFamilies)
        REQUIRE(is_member(f, a) == is_member_definitional(f, a));
}

TEST_CASE("inclusion lattice of the six families") {
  auto implies = [](bool p, bool q) { return !p || q; };
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_partial_transformations(n)) {
      bool paut = is_member(Family::PAut, a);
      bool psend = is_member(Family::PsEnd, a);
      bool pswend = is_member(Family::PswEnd, a);
      bool pwend = is_member(Family::PwEnd, a);
      bool pend = is_member(Family::PEnd, a);
      bool iend = is_member(Family::IEnd, a);
      REQUIRE(implies(paut, psend));
      REQUIRE(implies(psend, pswend));
      REQUIRE(implies(pswend, pwend));
      REQUIRE(implies(psend, pend));
      REQUIRE(implies(pend, pwend));
      REQUIRE(implies(paut, iend));
      REQUIRE(implies(iend, pend));
      // the injective families against the ambient inverse monoid
      REQUIRE(implies(paut, is_member(Family::Isym, a)));
      REQUIRE(iend == (pend && is_member(Family::Isym, a)));
      REQUIRE(implies(is_member(Family::TwoPT, a), psend));
    }
}

TEST_CASE("families are closed under composition, PAut under inverse") {
  const int n = 3;
  auto all = all_partial_transformations(n);
  for (Family f : kAllFamilies) {
    std::vector<PartialTransformation> members;
    for (const auto& a : all)
      if (is_member(f, a)) members.push_back(a);
    for (const auto& a : members)
      for (const auto& b : members) REQUIRE(is_member(f, compose(a, b)));
    if (f == Family::PAut || f == Family::Isym)
      for (const auto& a : members) REQUIRE(is_member(f, a.inverse()));
  }
}

TEST_CASE("small star graphs degenerate as expected") {
  SUBCASE("one vertex: every family is {empty, 0->0}") {
    for (const auto& a : all_partial_transformations(1))
      for (Family f : kPrimaryFamilies) CHECK(is_member(f, a));
  }

  SUBCASE("two vertices: the strong families shrink to partial permutations") {
    for (const auto& a : all_partial_transformations(2)) {
      bool inj = a.is_injective();
      CHECK(is_member(Family::PEnd, a) == inj);
      CHECK(is_member(Family::IEnd, a) == inj);
      CHECK(is_member(Family::PAut, a) == inj);
      CHECK(is_member(Family::PsEnd, a) == inj);
    }
  }
}
