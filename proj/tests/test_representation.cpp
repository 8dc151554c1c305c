#include <catch_amalgamated.hpp>

#include "support/random_instances.hpp"
#include "twistcoh/goeritz.hpp"
#include "twistcoh/representation.hpp"

using namespace twistcoh;

namespace {
  IntMatrix columns(std::vector<IntVector> const& images) {
    return IntMatrix::from_columns(images.size(), images);
  }
}  // namespace

TEST_CASE("coefficient rings", "[representation]") {
  CHECK(CoefficientRing::parse("Z").is_integers());
  CHECK(CoefficientRing::parse("Z/4").modulus() == 4);
  CHECK(CoefficientRing::parse(" Z/12 ") == CoefficientRing::integers_mod(12));
  CHECK_THROWS(CoefficientRing::parse("Z/1"));
  CHECK_THROWS(CoefficientRing::parse("Z/0"));
  CHECK_THROWS(CoefficientRing::parse("Q"));
  CHECK_THROWS(CoefficientRing::integers_mod(1));

  auto z6 = CoefficientRing::integers_mod(6);
  CHECK(z6.reduce(Integer(-1)) == 5);
  CHECK(z6.is_unit(5));
  CHECK_FALSE(z6.is_unit(3));
  CHECK(z6.inverse(5) == 5);
  CHECK(z6.reduces_to(CoefficientRing::integers_mod(3)));
  CHECK_FALSE(z6.reduces_to(CoefficientRing::integers_mod(4)));
  CHECK_FALSE(z6.reduces_to(CoefficientRing::integers()));
  CHECK(to_string(z6) == "Z/6");
}

TEST_CASE("evaluate_word on the Goeritz data", "[representation]") {
  auto e   = goeritz_e2();
  auto rep = e.representation;
  auto w   = [&](std::string_view s) { return parse_word(s, rep.alphabet()); };

  CHECK(evaluate_word(rep, w("d"))
        == columns({{-1, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, -1}}));
  CHECK(evaluate_word(rep, w("")) == IntMatrix::identity(4));
  CHECK(evaluate_word(rep, w("d^3")) == IntMatrix::identity(4));
  CHECK(evaluate_word(rep, w("b")) == IntMatrix::diagonal(IntVector{1, -1, 1, -1}));
  // gamma sends y1 to -y2.
  CHECK(evaluate_word(rep, w("g")).column(2) == IntVector{0, 0, 0, -1});
  CHECK(evaluate_word(rep, w("d^-1")) * evaluate_word(rep, w("d")) == IntMatrix::identity(4));
}

TEST_CASE("evaluate_group_ring", "[representation]") {
  auto rep = goeritz_e2().representation;
  auto a   = rep.alphabet();
  auto one = GroupRingElement::one(a);
  auto ga  = GroupRingElement::from_word(Word::generator(a, 0));
  CHECK(evaluate_group_ring(rep, one + ga).is_zero());
  CHECK(evaluate_group_ring(rep, GroupRingElement::zero(a)) == IntMatrix(4, 4));
  auto d3 = GroupRingElement::from_word(Word::generator(a, 3, 3));
  CHECK(evaluate_group_ring(rep, one - d3).is_zero());
  CHECK(evaluate_group_ring(rep, ga + ga) == IntMatrix::scalar(4, -2));
}

TEST_CASE("check_relators_trivial", "[representation]") {
  auto e = goeritz_e2();
  CHECK(check_relators_trivial(e.representation, e.presentation).empty());

  auto a   = make_alphabet({"a"});
  auto bad = Representation::unchecked(a, CoefficientRing::integers(), 2,
                                       {IntMatrix::scalar(2, 2)});
  auto report = check_relators_trivial(bad, Presentation(a, {parse_word("a^2", a)}));
  CHECK_FALSE(report.ok());
  CHECK(report.count(Diagnostic::Severity::error) == 2);

  auto fine = Representation(a, CoefficientRing::integers(), 1, {IntMatrix{{-1}}});
  CHECK(check_relators_trivial(fine, Presentation(a, {})).empty());
}

TEST_CASE("check_bilinear_form_preserved", "[representation]") {
  auto e = goeritz_e2();
  REQUIRE(e.form);
  CHECK(check_bilinear_form_preserved(e.representation, *e.form).empty());

  auto alph = e.representation.alphabet();
  auto id   = IntMatrix::identity(4);
  Representation trivial(alph, CoefficientRing::integers(), 4, {id, id, id, id});
  CHECK(check_bilinear_form_preserved(trivial, IntMatrix{{1, 2, 3, 4}, {0, 5, 0, 0},
                                                          {7, 0, 0, 1}, {0, 0, 9, 2}})
            .empty());

  Representation scaled(alph, CoefficientRing::integers_mod(5), 4,
                        {IntMatrix::diagonal(IntVector{2, 1, 1, 1}), id, id, id});
  auto report = check_bilinear_form_preserved(scaled, *e.form);
  CHECK(report.count(Diagnostic::Severity::error) == 1);
  CHECK_THROWS_AS(check_bilinear_form_preserved(scaled, IntMatrix::identity(3)),
                  DimensionError);
}

TEST_CASE("construction rejects singular or misshapen actions", "[representation]") {
  auto a = make_alphabet({"a", "b"});
  auto z = CoefficientRing::integers();
  try {
    Representation(a, z, 2, {IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 1}}});
    FAIL("expected NotInvertible");
  } catch (NotInvertible const& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("'b'"));
  }
  // det 2 is a unit mod 3 but not mod 4.
  IntMatrix m{{2, 0}, {0, 1}};
  CHECK_NOTHROW(Representation(a, CoefficientRing::integers_mod(3), 2, {m, m}));
  CHECK_THROWS_AS(Representation(a, CoefficientRing::integers_mod(4), 2, {m, m}),
                  NotInvertible);
  CHECK_THROWS_AS(Representation(a, z, 2, {IntMatrix::identity(2)}), DimensionError);
  CHECK_THROWS_AS(Representation(a, z, 2, {IntMatrix::identity(2), IntMatrix::identity(3)}),
                  DimensionError);
}

TEST_CASE("inverses over Z/n", "[representation]") {
  auto      z7 = CoefficientRing::integers_mod(7);
  IntMatrix m{{3, 1}, {2, 5}};
  auto      inv = inverse_over(z7, m);
  CHECK(z7.reduce(m * inv) == IntMatrix::identity(2));
  CHECK_THROWS_AS(inverse_over(CoefficientRing::integers(), m), NotInvertible);
}

TEST_CASE("evaluation is multiplicative on random words", "[representation][property]") {
  testing::Rng rng(0x5eed0007);
  for (std::size_t i = 0; i < testing::property_instances; ++i) {
    auto ring = testing::random_ring(rng);
    auto inst = testing::random_instance(rng, ring);
    auto const& rep  = inst.representation;
    auto        alph = rep.alphabet();
    Word        u    = testing::random_word(rng, alph, 8);
    Word        v    = testing::random_word(rng, alph, 8);
    INFO("u = " << to_string(u) << ", v = " << to_string(v) << ", ring " << to_string(ring));
    CHECK(evaluate_word(rep, u * v) == ring.reduce(evaluate_word(rep, u) * evaluate_word(rep, v)));
    CHECK(ring.reduce(evaluate_word(rep, invert(u)) * evaluate_word(rep, u))
          == IntMatrix::identity(rep.rank()));
    CHECK(check_relators_trivial(rep, inst.presentation).empty());
  }
}

TEST_CASE("contragredient", "[representation]") {
  auto rep  = goeritz_e2().representation;
  auto dual = rep.contragredient();
  for (std::size_t g = 0; g < rep.generator_count(); ++g) {
    CHECK(dual.action(g).transposed() * rep.action(g) == IntMatrix::identity(4));
  }
  CHECK(dual.contragredient() == rep);
}
