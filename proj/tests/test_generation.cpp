#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "starsem/generation.hpp"
#include "starsem/enumeration.hpp"

using namespace starsem;

namespace {

PartialTransformation pt(const char* codec) {
  return PartialTransformation::parse(codec);
}

std::set<PartialTransformation, bool (*)(const PartialTransformation&,
                                         const PartialTransformation&)>
as_set(const std::vector<PartialTransformation>& v) {
  return {v.begin(), v.end(), &codec_less};
}

}  // namespace

TEST_CASE("the generator catalog matches its defining tables") {
  CHECK_THROWS_AS(GeneratorCatalog::for_n(2), std::invalid_argument);

  SUBCASE("n = 5, written out") {
    auto g = GeneratorCatalog::for_n(5);
    CHECK(g.a == pt("n=5; 1->2 2->1 3->3 4->4"));
    CHECK(g.b == pt("n=5; 1->2 2->3 3->4 4->1"));
    CHECK(g.e == pt("n=5; 1->1 2->1 3->3 4->4"));
    CHECK(g.f == pt("n=5; 2->2 3->3 4->4"));
    CHECK(g.a0 == pt("n=5; 0->0 1->2 2->1 3->3 4->4"));
    CHECK(g.b0 == pt("n=5; 0->0 1->2 2->3 3->4 4->1"));
    CHECK(g.e0 == pt("n=5; 0->0 1->1 2->1 3->3 4->4"));
    CHECK(g.f0 == pt("n=5; 0->0 2->2 3->3 4->4"));
    CHECK(g.c == pt("n=5; 1->0 2->2 3->3 4->4"));
    CHECK(g.c0 == pt("n=5; 0->0 1->0 2->2 3->3 4->4"));
    CHECK(g.d == pt("n=5; 1->1 2->2 3->3 4->4"));
    CHECK(g.z == pt("n=5; 0->1 1->0 2->0 3->0 4->0"));
    CHECK(g.z0 == pt("n=5; 0->0 1->0 2->0 3->0 4->0"));
    CHECK(g.e1 == pt("n=5; 0->0 1->1 2->2 3->3"));
    CHECK(g.z1 == pt("n=5; 0->1 1->0"));
  }

  SUBCASE("the subscripted maps are exactly the lifts") {
    for (int n = 3; n <= 6; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      CHECK(g.a0 == g.a.zeta_lift());
      CHECK(g.b0 == g.b.zeta_lift());
      CHECK(g.e0 == g.e.zeta_lift());
      CHECK(g.f0 == g.f.zeta_lift());
      CHECK(g.c0 == g.c.zeta_lift());
      CHECK(g.z0 == g.z.zeta_lift());
      CHECK(g.d == PartialTransformation::partial_identity(n, outer_mask(n)));
    }
  }

  SUBCASE("memberships used throughout") {
    for (int n = 3; n <= 5; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      for (const auto& x : {g.a0, g.b0, g.e0, g.f0, g.d, g.z})
        CHECK(is_member(Family::PsEnd, x));
      CHECK(is_member(Family::PEnd, g.c));
      CHECK(is_member(Family::PwEnd, g.c0));
      CHECK(is_member(Family::PswEnd, g.z0));
      CHECK(is_member(Family::PAut, g.e1));
      CHECK(is_member(Family::PAut, g.z1));
      CHECK_FALSE(is_member(Family::PsEnd, g.c));
      CHECK_FALSE(is_member(Family::PEnd, g.c0));
      CHECK_FALSE(is_member(Family::PsEnd, g.z0));
    }
  }
}

TEST_CASE("closure basics") {
  SUBCASE("no generators: just the identity") {
    auto cl = closure(4, {});
    REQUIRE(cl.elements.size() == 1);
    CHECK(cl.elements[0] == PartialTransformation::identity(4));
    CHECK(cl.depth == 0);
  }

  SUBCASE("generators on the outer vertices reach every outer map") {
    // the generated monoid is all of PT on the n-1 outer vertices; the
    // ambient identity is adjoined on top of it by convention
    for (int n = 4; n <= 5; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      std::vector<PartialTransformation> gens{g.a, g.b, g.e, g.f};
      auto cl = closure(n, gens);
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(n - 1));
      REQUIRE(mpz_class(static_cast<unsigned long>(cl.elements.size())) ==
              expected + 1);
      const auto omega = outer_mask(n);
      std::size_t outer_count = 0;
      for (const auto& x : cl.elements) {
        if (x == PartialTransformation::identity(n)) continue;
        ++outer_count;
        REQUIRE((x.dom_mask() & ~omega) == 0);
        REQUIRE((x.image_mask() & ~omega) == 0);
      }
      REQUIRE(mpz_class(static_cast<unsigned long>(outer_count)) == expected);
    }
  }

  SUBCASE("the lifted quadruple generates the lifted copy") {
    for (int n = 4; n <= 5; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      std::vector<PartialTransformation> gens{g.a0, g.b0, g.e0, g.f0};
      auto cl = closure(n, gens);
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(n - 1));
      REQUIRE(mpz_class(static_cast<unsigned long>(cl.elements.size())) ==
              expected);
      const auto omega = outer_mask(n);
      for (const auto& x : cl.elements) {
        REQUIRE(x.defined(0));
        REQUIRE(x.value(0) == 0);
        REQUIRE((x.image_mask_on(omega) & 1u) == 0);
      }
    }
  }

  SUBCASE("adding the outer identity doubles it") {
    for (int n = 4; n <= 5; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      std::vector<PartialTransformation> gens{g.a0, g.b0, g.e0, g.f0, g.d};
      auto cl = closure(n, gens);
      REQUIRE(mpz_class(static_cast<unsigned long>(cl.elements.size())) ==
              cardinality(Family::TwoPT, n));
      for (const auto& x : cl.elements)
        REQUIRE(is_member(Family::TwoPT, x));
    }
  }

  SUBCASE("closure contains its input and is closed") {
    auto gens = named_generating_set(Family::PsEnd, 3);
    auto cl = closure(3, gens);
    auto set = as_set(cl.elements);
    CHECK(set.count(PartialTransformation::identity(3)));
    for (const auto& g : gens) CHECK(set.count(g));
    for (const auto& x : cl.elements)
      for (const auto& g : gens) REQUIRE(set.count(compose(x, g)));
    CHECK(cl.products_evaluated > 0);
    CHECK(cl.depth >= 1);
  }

  SUBCASE("idempotent and monotone") {
    auto gens = named_generating_set(Family::PsEnd, 3);
    auto cl = closure(3, gens);
    auto again = closure(3, cl.elements);
    CHECK(again.elements == cl.elements);

    std::vector<PartialTransformation> fewer(gens.begin(), gens.end() - 1);
    auto sub = closure(3, fewer);
    auto super = as_set(cl.elements);
    for (const auto& x : sub.elements) REQUIRE(super.count(x));
  }

  SUBCASE("the element bound rejects with a partial count") {
    Caps tight;
    tight.closure_elements = 10;
    auto gens = named_generating_set(Family::PwEnd, 4);
    CHECK_THROWS_AS(closure(4, gens, tight), closure_cap_error);
    try {
      closure(4, gens, tight);
    } catch (const closure_cap_error& e) {
      CHECK(e.partial_count > 10);
    }
  }

  SUBCASE("mismatched vertex counts are rejected") {
    std::vector<PartialTransformation> gens{PartialTransformation::empty(3)};
    CHECK_THROWS_AS(closure(4, gens), std::invalid_argument);
  }
}

TEST_CASE("named generating sets") {
  CHECK_THROWS_AS(named_generating_set(Family::PsEnd, 2), std::invalid_argument);

  auto g3 = GeneratorCatalog::for_n(3);
  CHECK(named_generating_set(Family::PAut, 3) ==
        std::vector<PartialTransformation>{g3.a0, g3.d, g3.z1});
  CHECK(named_generating_set(Family::PsEnd, 3).size() == 4);
  CHECK(named_generating_set(Family::PwEnd, 4).size() == 7);
  CHECK(named_generating_set(Family::PsEnd, 5).size() == 6);
  CHECK(named_generating_set(Family::IEnd, 4).size() == 6);

  SUBCASE("each named set generates its family") {
    for (Family f : kPrimaryFamilies)
      for (int n = 3; n <= 5; ++n) {
        auto check = verify_generators(f, n);
        CHECK(check.generators_member);
        CHECK(check.closure_within_family);
        CHECK(check.size_matches);
        REQUIRE(check.ok());
      }
  }

  SUBCASE("a frozen closure size") {
    auto check = verify_generators(Family::PswEnd, 4);
    CHECK(check.closure_size == 187);
  }
}

TEST_CASE("exhaustive rank search at n = 3") {
  SUBCASE("no pair generates the partial automorphisms") {
    auto result = rank_search(Family::PAut, 3, 2);
    CHECK_FALSE(result.witness.has_value());
    CHECK(result.family_size == 22);
    CHECK(result.subsets_examined == 231);  // C(22, 2)
  }

  SUBCASE("a triple does") {
    auto result = rank_search(Family::PAut, 3, 3);
    REQUIRE(result.witness.has_value());
    auto cl = closure(3, *result.witness);
    CHECK(cl.elements.size() == 22);
  }

  SUBCASE("strong endomorphisms need four") {
    CHECK_FALSE(rank_search(Family::PsEnd, 3, 3).witness.has_value());
    auto found = rank_search(Family::PsEnd, 3, 4);
    REQUIRE(found.witness.has_value());
    CHECK(closure(3, *found.witness).elements.size() == 29);
  }

  SUBCASE("the injective endomorphisms need four") {
    CHECK_FALSE(rank_search(Family::IEnd, 3, 3).witness.has_value());
    CHECK(rank_search(Family::IEnd, 3, 4).witness.has_value());
  }

  SUBCASE("parallel search returns the same certificate") {
    auto serial = rank_search(Family::PAut, 3, 3, {}, 1);
    auto parallel = rank_search(Family::PAut, 3, 3, {}, 4);
    REQUIRE(serial.witness.has_value());
    REQUIRE(parallel.witness.has_value());
    CHECK(*serial.witness == *parallel.witness);
    CHECK(serial.subsets_examined == parallel.subsets_examined);

    auto none_serial = rank_search(Family::PAut, 3, 2, {}, 1);
    auto none_parallel = rank_search(Family::PAut, 3, 2, {}, 4);
    CHECK(none_serial.subsets_examined == none_parallel.subsets_examined);
  }

  SUBCASE("the subset bound is enforced") {
    Caps tight;
    tight.rank_subsets = 10;
    CHECK_THROWS_AS(rank_search(Family::PAut, 3, 2, tight),
                    std::invalid_argument);
  }

  SUBCASE("full certificates for the small families") {
    auto paut = certify_rank(Family::PAut, 3);
    CHECK(paut.rank == 3);
    REQUIRE(paut.levels.size() == 3);
    CHECK_FALSE(paut.levels[0].witness.has_value());
    CHECK_FALSE(paut.levels[1].witness.has_value());
    REQUIRE(paut.witness.has_value());
    CHECK(closure(3, *paut.witness).elements.size() == 22);

    CHECK(certify_rank(Family::PsEnd, 3).rank == 4);
    CHECK(certify_rank(Family::IEnd, 3).rank == 4);
  }
}

TEST_CASE("factorization confinement behind the rank lower bounds") {
  auto high_rank_targets = [](int n) {
    auto g = GeneratorCatalog::for_n(n);
    return std::vector<PartialTransformation>{g.a0, g.b0, g.e0, g.f0, g.d};
  };

  SUBCASE("within the strong endomorphisms at n = 4, nothing escapes") {
    auto targets = high_rank_targets(4);
    CHECK(factorization_violations(Family::PsEnd, 4, targets, Family::TwoPT)
              .empty());
  }

  SUBCASE("at n = 3 the confinement genuinely fails for e0 and f0") {
    auto g = GeneratorCatalog::for_n(3);
    auto targets = high_rank_targets(3);
    auto violations =
        factorization_violations(Family::PsEnd, 3, targets, Family::TwoPT);
    REQUIRE_FALSE(violations.empty());

    bool z_squared_is_e0 = false;
    for (const auto& v : violations) {
      // only the two rank-two lifted generators can be reached from outside
      REQUIRE((v.product == g.e0 || v.product == g.f0));
      if (v.left == g.z && v.right == g.z && v.product == g.e0)
        z_squared_is_e0 = true;
    }
    CHECK(z_squared_is_e0);
    CHECK(compose(g.z, g.z) == g.e0);
  }

  SUBCASE("the strong weak monoid confines its generators to the strong one") {
    for (int n = 3; n <= 4; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      std::vector<PartialTransformation> targets{g.a0, g.b0, g.e0,
                                                 g.f0, g.d,  g.z};
      CHECK(factorization_violations(Family::PswEnd, n, targets, Family::PsEnd)
                .empty());
    }
  }

  SUBCASE("the plain monoid confines its generators to the strong one") {
    for (int n = 3; n <= 4; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      std::vector<PartialTransformation> targets{g.a0, g.b0, g.e0,
                                                 g.f0, g.d,  g.z};
      CHECK(factorization_violations(Family::PEnd, n, targets, Family::PsEnd)
                .empty());
    }
  }

  SUBCASE("the injective monoid confines its generators to the automorphisms") {
    for (int n = 3; n <= 4; ++n) {
      auto g = GeneratorCatalog::for_n(n);
      std::vector<PartialTransformation> targets{g.a0, g.b0, g.e1, g.d, g.z1};
      CHECK(factorization_violations(Family::IEnd, n, targets, Family::PAut)
                .empty());
    }
  }
}
