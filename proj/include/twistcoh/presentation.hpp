#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diagnostics.hpp"
#include "errors.hpp"
#include "words.hpp"

namespace twistcoh {

  // Finitely presented group: generators plus relators, each relator a word
  // that is declared equal to the identity. Relator order is preserved and
  // fixes the row layout of every matrix built from the presentation.
  class Presentation {
   public:
    Presentation(AlphabetPtr alphabet, std::vector<Word> relators)
        : _alphabet(std::move(alphabet)), _relators(std::move(relators)) {
      for (auto const& r : _relators) {
        if (!same_alphabet(r.alphabet(), _alphabet)) {
          throw AlphabetMismatch("relator is over a different alphabet");
        }
      }
    }

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::size_t generator_count() const noexcept {
      return _alphabet->size();
    }
    std::size_t relator_count() const noexcept {
      return _relators.size();
    }

    friend bool operator==(Presentation const& a, Presentation const& b) {
      return same_alphabet(a._alphabet, b._alphabet) && a._relators == b._relators;
    }

   private:
    AlphabetPtr       _alphabet;
    std::vector<Word> _relators;
  };

  // Each equation u = v becomes the relator u v^-1.
  inline Presentation
  from_equations(AlphabetPtr const&                       alphabet,
                 std::vector<std::pair<Word, Word>> const& equations) {
    std::vector<Word> relators;
    relators.reserve(equations.size());
    for (auto const& [lhs, rhs] : equations) {
      if (!same_alphabet(lhs.alphabet(), alphabet)
          || !same_alphabet(rhs.alphabet(), alphabet)) {
        throw AlphabetMismatch("equation side is over a different alphabet");
      }
      relators.push_back(multiply(lhs, invert(rhs)));
    }
    return Presentation(alphabet, std::move(relators));
  }

  inline DiagnosticReport validate(Presentation const& p) {
    DiagnosticReport   report;
    auto const&        names = p.alphabet()->names();
    std::set<std::string> seen;
    for (auto const& n : names) {
      if (!seen.insert(n).second) {
        report.error("duplicate generator name '" + n + "'");
      }
    }
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      auto const& r = p.relators()[i];
      if (r.empty()) {
        report.warn("relator " + std::to_string(i) + " is trivial");
      }
      for (auto const& l : r.letters()) {
        if (l.generator >= names.size()) {
          report.error("relator " + std::to_string(i) + " uses generator index "
                       + std::to_string(l.generator) + ", alphabet has "
                       + std::to_string(names.size()));
          break;
        }
      }
    }
    return report;
  }

}  // namespace twistcoh
