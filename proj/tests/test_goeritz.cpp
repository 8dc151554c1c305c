#include <catch_amalgamated.hpp>

#include "twistcoh/goeritz.hpp"
#include "twistcoh/homology.hpp"
#include "twistcoh/textformat.hpp"

using namespace twistcoh;

namespace {
  std::vector<NamedExample> all_examples() {
    std::vector<NamedExample> out{goeritz_e2()};
    for (auto& e : toy_examples()) {
      out.push_back(std::move(e));
    }
    return out;
  }
}  // namespace

TEST_CASE("Goeritz data", "[goeritz]") {
  auto e = goeritz_e2();
  CHECK(e.name == "e2");
  CHECK(e.presentation.alphabet()->names() == std::vector<std::string>{"a", "b", "g", "d"});
  REQUIRE(e.presentation.relator_count() == 8);
  std::vector<std::string> relators;
  for (auto const& r : e.presentation.relators()) {
    relators.push_back(to_string(r));
  }
  CHECK(relators
        == std::vector<std::string>{"a a", "b b", "d d d", "a g a g", "a d a d^-1",
                                    "a b a b^-1", "g b g b^-1 a^-1", "g d d g d^-1"});

  auto const& rep = e.representation;
  CHECK(rep.ring().is_integers());
  CHECK(rep.action(0) == -IntMatrix::identity(4));
  CHECK(rep.action(1) == IntMatrix::diagonal(IntVector{1, -1, 1, -1}));
  // gamma: x1 -> -x2, x2 -> -x1, y1 -> -y2, y2 -> -y1.
  CHECK(rep.action(2).column(0) == IntVector{0, -1, 0, 0});
  CHECK(rep.action(2).column(1) == IntVector{-1, 0, 0, 0});
  CHECK(rep.action(2).column(2) == IntVector{0, 0, 0, -1});
  CHECK(rep.action(2).column(3) == IntVector{0, 0, -1, 0});
  // delta: x1 -> -x1 + x2, x2 -> -x1, y1 -> y2, y2 -> -y1 - y2.
  CHECK(rep.action(3).column(0) == IntVector{-1, 1, 0, 0});
  CHECK(rep.action(3).column(1) == IntVector{-1, 0, 0, 0});
  CHECK(rep.action(3).column(2) == IntVector{0, 0, 0, 1});
  CHECK(rep.action(3).column(3) == IntVector{0, 0, -1, -1});

  REQUIRE(e.form);
  CHECK(*e.form == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
  REQUIRE(e.kerf);
  CHECK(e.kerf->rows() == 4);
  CHECK(e.kerf->cols() == 16);

  CHECK(e.expected.at("h1 Z") == AbelianGroupStructure{0, {2, 2}});
  CHECK(e.expected.at("h0 Z").is_trivial());
  CHECK(e.expected.at("coh1 Z").is_trivial());
  CHECK(e.expected.at("coh1 Z/2") == AbelianGroupStructure{0, {2, 2}});
}

TEST_CASE("every example is well formed", "[goeritz]") {
  for (auto const& e : all_examples()) {
    INFO(e.name);
    CHECK(validate(e.presentation).ok());
    CHECK(check_relators_trivial(e.representation, e.presentation).empty());
    if (e.form) {
      CHECK(check_bilinear_form_preserved(e.representation, *e.form).empty());
    }
    CHECK(e.representation.ring().is_integers());
  }
}

TEST_CASE("every expectation is reproduced", "[goeritz]") {
  for (auto const& e : all_examples()) {
    for (auto const& [key, want] : e.expected) {
      INFO(e.name << ": " << key);
      auto        space = key.find(' ');
      std::string comp  = key.substr(0, space);
      auto        rep   = e.representation.change_ring(CoefficientRing::parse(key.substr(space + 1)));
      AbelianGroupStructure got;
      if (comp == "h0") {
        got = coinvariants(rep);
      } else if (comp == "h1") {
        got = h1_homology(e.presentation, rep);
      } else {
        got = h1_cohomology(e.presentation, rep).h1;
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("examples survive export and re-import", "[goeritz]") {
  for (auto const& e : all_examples()) {
    INFO(e.name);
    std::string  text = to_text(e);
    NamedExample back = parse_input_file(text);
    CHECK(back.name == e.name);
    CHECK(back.presentation.alphabet()->names() == e.presentation.alphabet()->names());
    std::vector<std::string> a, b;
    for (auto const& r : e.presentation.relators()) {
      a.push_back(to_string(r));
    }
    for (auto const& r : back.presentation.relators()) {
      b.push_back(to_string(r));
    }
    CHECK(a == b);
    CHECK(back.representation.actions() == e.representation.actions());
    CHECK(back.representation.ring() == e.representation.ring());
    CHECK(back.ring == e.ring);
    CHECK(back.form == e.form);
    CHECK(back.kerf == e.kerf);
    CHECK(back.expected == e.expected);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("example lookup", "[goeritz]") {
  CHECK(find_example("e2").has_value());
  CHECK(find_example("c2_sign").has_value());
  CHECK_FALSE(find_example("e3").has_value());
  CHECK(example_names().front() == "e2");
  CHECK(example_names().size() == 1 + toy_examples().size());
}
