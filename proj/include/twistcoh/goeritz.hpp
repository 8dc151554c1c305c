#pragma once

// Built-in examples. The main one is the genus-2 Goeritz group of the
// 3-sphere acting on H_1 of the genus-2 Heegaard surface: generators
// (a, b, g, d) for the four standard mapping classes alpha, beta, gamma,
// delta, module basis (x1, x2, y1, y2).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "words.hpp"

namespace twistcoh {

  // Key for NamedExample::expected, e.g. "h1 Z" or "coh1 Z/2".
  inline std::string expectation_key(std::string_view        computation,
                                     CoefficientRing const& ring) {
    return std::string(computation) + " " + to_string(ring);
  }

  struct NamedExample {
    std::string                                  name;
    Presentation                                 presentation;
    Representation                               representation;
    std::optional<IntMatrix>                     form;
    std::optional<IntMatrix>                     kerf;
    std::map<std::string, AbelianGroupStructure> expected;
    // Default coefficients for computations. The representation itself is
    // kept over Z whenever its matrices are invertible there.
    CoefficientRing ring = CoefficientRing::integers();
  };

  namespace detail {
    // Matrix whose columns are the given images of the basis vectors.
    inline IntMatrix from_images(std::vector<IntVector> const& images) {
      return IntMatrix::from_columns(images.size(), images);
    }
  }  // namespace detail

  inline NamedExample goeritz_e2() {
    auto alphabet = make_alphabet({"a", "b", "g", "d"});
    auto w        = [&](std::string_view s) { return parse_word(s, alphabet); };

    // alpha^2 = beta^2 = delta^3 = (alpha gamma)^2 = 1,
    // alpha delta alpha = delta, alpha beta alpha = beta,
    // gamma beta gamma = alpha beta, delta = gamma delta^2 gamma.
    std::vector<Word> relators{w("a^2"),
                               w("b^2"),
                               w("d^3"),
                               w("a g a g"),
                               w("a d a d^-1"),
                               w("a b a b^-1"),
                               w("g b g b^-1 a^-1"),
                               w("g d d g d^-1")};

    IntMatrix const alpha = -IntMatrix::identity(4);
    IntMatrix const beta  = detail::from_images(
        {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    // x1 -> -x2, x2 -> -x1, y1 -> -y2, y2 -> -y1
    IntMatrix const gamma = detail::from_images(
        {{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}});
    // x1 -> -x1 + x2, x2 -> -x1, y1 -> y2, y2 -> -y1 - y2
    IntMatrix const delta = detail::from_images(
        {{-1, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, -1}});

    // Intersection pairing with x_i . y_i = 1.
    IntMatrix const form{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};

    // f(d) = (d(d)_1 - d(a)_1, d(g)_2 - d(b)_2, d(g)_3 - d(a)_3,
    //         d(b)_4 - d(d)_4), columns ordered (d(a), d(b), d(g), d(d)).
    IntMatrix kerf(4, 16);
    auto      col = [](std::size_t gen, std::size_t coord) { return gen * 4 + coord; };
    kerf(0, col(3, 0)) = 1;
    kerf(0, col(0, 0)) = -1;
    kerf(1, col(2, 1)) = 1;
    kerf(1, col(1, 1)) = -1;
    kerf(2, col(2, 2)) = 1;
    kerf(2, col(0, 2)) = -1;
    kerf(3, col(1, 3)) = 1;
    kerf(3, col(3, 3)) = -1;

    AbelianGroupStructure const trivial;
    AbelianGroupStructure const klein{0, {2, 2}};
    auto const                  z  = CoefficientRing::integers();
    auto const                  z2 = CoefficientRing::integers_mod(2);

    return {"e2",
            Presentation(alphabet, std::move(relators)),
            Representation(alphabet, z, 4, {alpha, beta, gamma, delta}),
            form,
            kerf,
            {{expectation_key("h0", z), trivial},
             {expectation_key("h1", z), klein},
             {expectation_key("coh1", z), trivial},
             {expectation_key("coh1", z2), klein}}};
  }

  // Explicit generators of H^1 over Z/2 for the e2 example, in the form
  //   d(a) = 0, d(b) = s(-x1 + x2) + t(y1 + y2), d(g) = s(x1 + x2),
  //   d(d) = -s x2 + t y2,
  // for (s, t) = (1, 0) and (0, 1). Coordinates are reduced mod 2.
  inline std::vector<IntVector> goeritz_e2_reference_cocycles() {
    auto cocycle = [](int s, int t) {
      IntVector v{0, 0, 0, 0, -s, s, t, t, s, s, 0, 0, 0, -s, 0, t};
      for (auto& x : v) {
        x = floor_mod(x, 2);
      }
      return v;
    };
    return {cocycle(1, 0), cocycle(0, 1)};
  }

  inline std::vector<NamedExample> toy_examples() {
    auto const z  = CoefficientRing::integers();
    auto const z2 = CoefficientRing::integers_mod(2);
    auto const z3 = CoefficientRing::integers_mod(3);

    std::vector<NamedExample> out;

    {
      // Free group F_2, trivial module Z: H_1 = H^1 = Z^2.
      auto ab = make_alphabet({"a", "b"});
      out.push_back({"free2",
                     Presentation(ab, {}),
                     Representation(ab, z, 1, {IntMatrix{{1}}, IntMatrix{{1}}}),
                     std::nullopt,
                     std::nullopt,
                     {{expectation_key("h0", z), {1, {}}},
                      {expectation_key("h1", z), {2, {}}},
                      {expectation_key("coh1", z), {2, {}}},
                      {expectation_key("coh1", z2), {0, {2, 2}}}}});
    }
    {
      // <a | a^2> acting on Z by -1. Z^1 = Z (any d(a) = m, since
      // (1 + a) acts as 0), B^1 = {(a - 1)u} = 2Z, so H^1 = Z/2.
      auto a = make_alphabet({"a"});
      out.push_back({"c2_sign",
                     Presentation(a, {parse_word("a^2", a)}),
                     Representation(a, z, 1, {IntMatrix{{-1}}}),
                     std::nullopt,
                     std::nullopt,
                     {{expectation_key("h0", z), {0, {2}}},
                      {expectation_key("h1", z), {}},
                      {expectation_key("coh1", z), {0, {2}}},
                      {expectation_key("coh1", z2), {0, {2}}}}});
    }
    {
      // <a | a^3> acting trivially on Z: H_1 = Z/3, H^1(Z) = Hom(Z/3, Z) = 0.
      auto a = make_alphabet({"a"});
      out.push_back({"c3_trivial",
                     Presentation(a, {parse_word("a^3", a)}),
                     Representation(a, z, 1, {IntMatrix{{1}}}),
                     std::nullopt,
                     std::nullopt,
                     {{expectation_key("h0", z), {1, {}}},
                      {expectation_key("h1", z), {0, {3}}},
                      {expectation_key("coh1", z), {}},
                      {expectation_key("coh1", z3), {0, {3}}}}});
    }
    {
      // <a | a>: the trivial group. H_0 is the module itself.
      auto a = make_alphabet({"a"});
      out.push_back({"trivial",
                     Presentation(a, {parse_word("a", a)}),
                     Representation(a, z, 1, {IntMatrix{{1}}}),
                     std::nullopt,
                     std::nullopt,
                     {{expectation_key("h0", z), {1, {}}},
                      {expectation_key("h1", z), {}},
                      {expectation_key("coh1", z), {}},
                      {expectation_key("coh1", z2), {}}}});
    }
    return out;
  }

  inline std::optional<NamedExample> find_example(std::string_view name) {
    if (name == "e2") {
      return goeritz_e2();
    }
    for (auto& e : toy_examples()) {
      if (e.name == name) {
        return std::move(e);
      }
    }
    return std::nullopt;
  }

  inline std::vector<std::string> example_names() {
    std::vector<std::string> names{"e2"};
    for (auto const& e : toy_examples()) {
      names.push_back(e.name);
    }
    return names;
  }

}  // namespace twistcoh
