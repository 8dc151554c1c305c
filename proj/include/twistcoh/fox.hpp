#pragma once

// Free differential calculus on Z[F]. The derivative d/dg is the additive
// map with dg/dg = 1, dh/dg = 0 (h != g) and d(uv)/dg = du/dg + u dv/dg;
// evaluating it under a representation linearises the cocycle condition
// d(uv) = d(u) + u d(v) along each relator.

#include <cstddef>
#include <string_view>

#include "errors.hpp"
#include "group_ring.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "words.hpp"

namespace twistcoh {

  inline GroupRingElement fox_derivative(Word const& w, std::size_t generator) {
    if (generator >= w.alphabet()->size()) {
      throw AlphabetMismatch("generator index " + std::to_string(generator)
                             + " is not in the alphabet");
    }
    GroupRingElement out(w.alphabet());
    Word             prefix = Word::identity(w.alphabet());
    for (auto const& l : w.letters()) {
      Word next = prefix;
      next.push(l);
      if (l.generator == generator) {
        // d(g)/dg = 1 contributes the prefix; d(g^-1)/dg = -g^-1 contributes
        // -(prefix g^-1), which is the next prefix.
        if (l.sign > 0) {
          out.add(prefix, 1);
        } else {
          out.add(next, -1);
        }
      }
      prefix = std::move(next);
    }
    return out;
  }

  inline GroupRingElement fox_derivative(Word const& w, std::string_view generator) {
    auto g = w.alphabet()->index_of(generator);
    if (!g) {
      throw AlphabetMismatch("generator '" + std::string(generator)
                             + "' is not in the alphabet");
    }
    return fox_derivative(w, *g);
  }

  // sum_g (dw/dg)(g - 1) == w - 1 in Z[F].
  inline bool fundamental_identity_check(Word const& w) {
    auto const&      alphabet = w.alphabet();
    GroupRingElement lhs(alphabet);
    GroupRingElement one = GroupRingElement::one(alphabet);
    for (std::size_t g = 0; g < alphabet->size(); ++g) {
      GroupRingElement g_minus_one
          = GroupRingElement::from_word(Word::generator(alphabet, g)) - one;
      lhs += fox_derivative(w, g) * g_minus_one;
    }
    return lhs == GroupRingElement::from_word(w) - one;
  }

  inline bool fundamental_identity_check(Word const& w, AlphabetPtr const& alphabet) {
    if (!same_alphabet(w.alphabet(), alphabet)) {
      throw AlphabetMismatch();
    }
    return fundamental_identity_check(w);
  }

  // Block matrix J, block (relator r, generator g) = rho(dr/dg). A vector
  // d = (d(g_1), ..., d(g_k)) extends to a crossed homomorphism exactly
  // when J d = 0 over the ring.
  inline IntMatrix cocycle_matrix(Presentation const& p, Representation const& rep) {
    if (!same_alphabet(p.alphabet(), rep.alphabet())) {
      throw AlphabetMismatch("presentation and representation use different "
                             "alphabets");
    }
    std::size_t const n = rep.rank();
    std::size_t const k = p.generator_count();
    IntMatrix         j(p.relator_count() * n, k * n);
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      for (std::size_t g = 0; g < k; ++g) {
        j.set_block(r * n, g * n,
                    evaluate_group_ring(rep, fox_derivative(p.relators()[r], g)));
      }
    }
    return j;
  }

}  // namespace twistcoh
