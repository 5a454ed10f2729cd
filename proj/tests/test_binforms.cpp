#include "doctest.h"
#include "support.hpp"
#include "wedgemap/binforms.hpp"
#include "wedgemap/errors.hpp"

using namespace wedgemap;
using wedgemap::testing::equivalent_by_search;
using wedgemap::testing::Rng;

namespace {

using Q = BinaryQuadraticForm;

Reason reason_of(auto&& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.reason();
  }
  FAIL("expected a MathError");
  return Reason::Internal;
}

Q reduced(const Q& q) { return reduce_definite(q).form; }

}  // namespace

TEST_SUITE("binforms") {
  TEST_CASE("discriminants") {
    CHECK(disc({1, 1, 6}) == -23);
    CHECK(disc({2, 1, 3}) == -23);
    CHECK(disc({4, -11, 9}) == -23);
  }

  TEST_CASE("reduce_definite worked values") {
    auto r = reduce_definite({2, -1, 3});
    CHECK(r.form == Q{2, -1, 3});
    CHECK(r.transform == IntMatrix::identity(2));
    r = reduce_definite({4, -11, 9});
    CHECK(r.form == Q{2, -1, 3});
    CHECK(det(r.transform) == 1);
    CHECK(transform({4, -11, 9}, r.transform) == r.form);
    CHECK(reduced({1, 1, 6}) == Q{1, 1, 6});
    CHECK(reason_of([] { reduce_definite({1, 3, 1}); }) == Reason::NotDefinite);
    CHECK(reason_of([] { reduce_definite({-1, 1, -6}); }) == Reason::NotDefinite);
  }

  TEST_CASE("reduce_definite: boundary cases") {
    CHECK(reduced({2, -2, 3}) == Q{2, 2, 3});
    CHECK(reduced({3, -1, 3}) == Q{3, 1, 3});
    CHECK(reduced({1, 0, 1}) == Q{1, 0, 1});
  }

  TEST_CASE("reduce_definite agrees with the equivalence search oracle") {
    Rng rng(30);
    for (int t = 0; t < 400; ++t) {
      Q q{rng.uniform(1, 30), rng.uniform(-30, 30), 0};
      q.c = rng.uniform(1, 30);
      if (disc(q) >= 0) continue;
      IntMatrix T = rng.unimodular(2, 6);
      Q moved = transform(q, T);
      auto r = reduce_definite(moved);
      CHECK(is_reduced_definite(r.form));
      CHECK(det(r.transform) == 1);
      CHECK(transform(moved, r.transform) == r.form);
      CHECK(r.form == reduced(q));
      CHECK(equivalent_by_search(moved, r.form));
    }
  }

  TEST_CASE("equivalent_definite") {
    CHECK(equivalent_definite({4, -11, 9}, {2, -1, 3}));
    CHECK_FALSE(equivalent_definite({2, 1, 3}, {2, -1, 3}));
    CHECK_FALSE(equivalent_by_search({2, 1, 3}, {2, -1, 3}));
    CHECK(equivalent_definite({2, 1, 3}, {2, 1, 3}));
    CHECK(reason_of([] { equivalent_definite({1, 1, 6}, {1, 0, 1}); }) == Reason::DiscriminantMismatch);
  }

  TEST_CASE("reduced_forms") {
    CHECK(reduced_forms(-23) == std::vector<Q>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
    CHECK(reduced_forms(-4) == std::vector<Q>{{1, 0, 1}});
    CHECK(reduced_forms(-3) == std::vector<Q>{{1, 1, 1}});
    CHECK(reason_of([] { reduced_forms(-5); }) == Reason::InvalidDiscriminant);
    // Known class numbers.
    CHECK(reduced_forms(-20).size() == 2);
    CHECK(reduced_forms(-47).size() == 5);
    CHECK(reduced_forms(-71).size() == 7);
    CHECK(reduced_forms(-163).size() == 1);
    CHECK(reduced_forms(-84).size() == 4);
  }

  TEST_CASE("compose_arndt worked chain for D=-23") {
    auto c = compose_arndt({2, 1, 3}, {2, 1, 3});
    CHECK(c.witness.x1 == 1);
    CHECK(c.witness.x2 == -3);
    CHECK(c.witness.lambda == IntVector{0, 0, 1});
    CHECK(c.form == Q{4, -11, 9});
    CHECK(c.witness.cube_form == Q{9, -11, 4});
    CHECK(reduced(c.form) == Q{2, -1, 3});

    CHECK(reduced(compose_arndt({1, 1, 6}, {2, 1, 3}).form) == Q{2, 1, 3});
    CHECK(reduced(compose_arndt({2, 1, 3}, {2, -1, 3}).form) == Q{1, 1, 6});
  }

  TEST_CASE("compose_arndt errors") {
    CHECK(reason_of([] { compose_arndt({1, 1, 6}, {1, 0, 1}); }) == Reason::DiscriminantMismatch);
    CHECK(reason_of([] { compose_arndt({2, 2, 2}, {1, 0, 3}); }) == Reason::NonPrimitive);
    CHECK(reason_of([] { compose_arndt({0, 1, 1}, {1, 1, 0}); }) == Reason::ZeroLeadingCoefficient);
  }

  TEST_CASE("compose_arndt: x1 > 1 case") {
    // gcd(a2, a3, (b2+b3)/2) > 1 when composing a form with itself and a | b.
    Q f{3, 3, 5};  // D = 9 - 60 = -51
    auto c = compose_arndt(f, f);
    CHECK(c.witness.x1 == 3);
    CHECK(disc(c.form) == -51);
    CHECK(is_primitive(c.form));
    // Independent square via Dirichlet after moving to a coprime representative.
    Q g = transform(f, IntMatrix::from_rows({{1, 1}, {1, 2}}));
    CHECK(reduced(compose_dirichlet(f, g)) == reduced(c.form));
  }

  TEST_CASE("compose_dirichlet") {
    CHECK(reduced(compose_dirichlet({2, 1, 3}, {2, 1, 3})) ==
          reduced(compose_arndt({2, 1, 3}, {2, 1, 3}).form));
    CHECK(reduced(compose_dirichlet({1, 1, 6}, {2, -1, 3})) == Q{2, -1, 3});
    CHECK(reduced(compose_dirichlet({3, 1, 2}, {2, 1, 3})) ==
          reduced(compose_arndt({3, 1, 2}, {2, 1, 3}).form));
    CHECK(reason_of([] { compose_dirichlet({3, 3, 5}, {3, 3, 5}); }) == Reason::CongruencePrecondition);
  }

  TEST_CASE("composition is class-well-defined and matches the search oracle") {
    Rng rng(31);
    for (long D : {-23L, -47L, -56L, -71L, -104L, -164L}) {
      auto forms = reduced_forms(D);
      for (const auto& f : forms)
        for (const auto& g : forms) {
          Q base = reduced(compose_arndt(f, g).form);
          for (int t = 0; t < 5; ++t) {
            Q f2 = transform(f, rng.unimodular(2, 3));
            Q g2 = transform(g, rng.unimodular(2, 3));
            Q comp = compose_arndt(f2, g2).form;
            CHECK(disc(comp) == D);
            CHECK(is_primitive(comp));
            CHECK(reduced(comp) == base);
            CHECK(equivalent_by_search(base, comp));
          }
        }
    }
  }

  TEST_CASE("indefinite discriminants compose to the right discriminant") {
    Rng rng(32);
    int done = 0;
    while (done < 200) {
      Q f{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
      Q g{rng.uniform(-20, 20), 0, 0};
      Integer D = disc(f);
      if (D <= 0 || f.a == 0 || g.a == 0 || !is_primitive(f)) continue;
      Integer s = sqrt(D);
      if (s * s == D) continue;
      // Pick b with b^2 == D mod 4a, then c.
      bool found = false;
      for (Integer b = 0; b < 2 * abs(g.a) && !found; ++b) {
        Integer num = b * b - D;
        Integer den = 4 * g.a;
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
          g.b = b;
          g.c = num / den;
          found = true;
        }
      }
      if (!found || !is_primitive(g)) continue;
      Q c = compose_arndt(f, g).form;
      CHECK(disc(c) == D);
      CHECK(is_primitive(c));
      ++done;
    }
  }
}
