#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagnostics.hpp"
#include "errors.hpp"
#include "group_ring.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "words.hpp"

namespace twistcoh {

  // Z (modulus 0) or Z/n with n >= 2.
  class CoefficientRing {
   public:
    CoefficientRing() = default;

    explicit CoefficientRing(Integer modulus) : _modulus(std::move(modulus)) {
      if (_modulus < 0 || _modulus == 1) {
        throw Error("coefficient ring modulus must be 0 or at least 2, got "
                    + to_string(_modulus));
      }
    }

    static CoefficientRing integers() {
      return CoefficientRing();
    }
    static CoefficientRing integers_mod(Integer n) {
      return CoefficientRing(std::move(n));
    }

    // "Z" or "Z/n" with n >= 2, surrounding blanks ignored.
    static CoefficientRing parse(std::string_view text) {
      auto const blank = [](char c) { return c == ' ' || c == '\t'; };
      while (!text.empty() && blank(text.front())) {
        text.remove_prefix(1);
      }
      while (!text.empty() && blank(text.back())) {
        text.remove_suffix(1);
      }
      if (text == "Z") {
        return integers();
      }
      if (text.starts_with("Z/") && text.size() > 2
          && std::all_of(text.begin() + 2, text.end(), [](char c) {
               return c >= '0' && c <= '9';
             })) {
        Integer const n(std::string(text.substr(2)));
        if (n >= 2) {
          return CoefficientRing(n);
        }
      }
      throw ParseError("expected ring 'Z' or 'Z/n', got '" + std::string(text) + "'",
                       0,
                       1);
    }

    Integer const& modulus() const noexcept {
      return _modulus;
    }
    bool is_integers() const noexcept {
      return _modulus == 0;
    }

    Integer reduce(Integer const& x) const {
      return is_integers() ? x : floor_mod(x, _modulus);
    }
    IntMatrix reduce(IntMatrix const& m) const {
      return m.reduced(_modulus);
    }
    IntVector reduce(IntVector v) const {
      for (auto& x : v) {
        x = reduce(x);
      }
      return v;
    }

    bool is_unit(Integer const& x) const {
      if (is_integers()) {
        return x == 1 || x == -1;
      }
      return gcd(x, _modulus) == 1;
    }

    Integer inverse(Integer const& x) const {
      if (!is_unit(x)) {
        throw NotInvertible(to_string(x) + " is not a unit in " + to_string(*this));
      }
      return is_integers() ? x : inverse_mod(x, _modulus);
    }

    // Z/m -> Z/n is a ring map when n divides m (every ring maps from Z).
    bool reduces_to(CoefficientRing const& target) const {
      if (target.is_integers()) {
        return is_integers();
      }
      return is_integers() || _modulus % target._modulus == 0;
    }

    friend std::string to_string(CoefficientRing const& r) {
      return r.is_integers() ? std::string("Z") : "Z/" + to_string(r._modulus);
    }

    friend bool operator==(CoefficientRing const&, CoefficientRing const&) = default;

   private:
    Integer _modulus = 0;
  };

  // Inverse over the ring via the adjugate.
  inline IntMatrix inverse_over(CoefficientRing const& ring, IntMatrix const& m) {
    Integer det = ring.reduce(determinant(m));
    if (!ring.is_unit(det)) {
      throw NotInvertible("matrix " + to_string(m)
                          + " has determinant " + to_string(det)
                          + ", not a unit in " + to_string(ring));
    }
    return ring.reduce(ring.inverse(det) * adjugate(m));
  }

  // Free module A^rank with a left action of the free group on an alphabet:
  // one matrix per generator, columns are images of basis vectors, and the
  // word g h acts as matrix(g) * matrix(h).
  class Representation {
   public:
    Representation(AlphabetPtr            alphabet,
                   CoefficientRing        ring,
                   std::size_t            rank,
                   std::vector<IntMatrix> action)
        : Representation(std::move(alphabet), std::move(ring), rank, std::move(action), true) {}

    // Skips the invertibility check; inverse letters then cannot be
    // evaluated. For diagnosing broken input only.
    static Representation unchecked(AlphabetPtr            alphabet,
                                    CoefficientRing        ring,
                                    std::size_t            rank,
                                    std::vector<IntMatrix> action) {
      return Representation(std::move(alphabet), std::move(ring), rank, std::move(action), false);
    }

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    CoefficientRing const& ring() const noexcept {
      return _ring;
    }
    std::size_t rank() const noexcept {
      return _rank;
    }
    std::size_t generator_count() const noexcept {
      return _action.size();
    }
    IntMatrix const& action(std::size_t g) const {
      return _action.at(g);
    }
    std::vector<IntMatrix> const& actions() const noexcept {
      return _action;
    }
    bool has_inverses() const noexcept {
      return _inverse.size() == _action.size();
    }
    IntMatrix const& inverse_action(std::size_t g) const {
      if (!has_inverses()) {
        throw NotInvertible("representation was built unchecked; inverses "
                            "are unavailable");
      }
      return _inverse.at(g);
    }

    // Reduction to a quotient ring (Z -> Z/n, or Z/m -> Z/n with n | m).
    Representation change_ring(CoefficientRing const& target) const {
      if (!_ring.reduces_to(target)) {
        throw PreconditionError("cannot change coefficients from " + to_string(_ring)
                                + " to " + to_string(target));
      }
      return Representation(_alphabet, target, _rank, _action);
    }

    // Hom(M, A) with (g phi)(m) = phi(g^-1 m): generator g acts by
    // (matrix(g)^-1)^T in the dual basis.
    Representation contragredient() const {
      std::vector<IntMatrix> dual;
      for (std::size_t g = 0; g < _action.size(); ++g) {
        dual.push_back(inverse_action(g).transposed());
      }
      return Representation(_alphabet, _ring, _rank, std::move(dual));
    }

    friend bool operator==(Representation const& a, Representation const& b) {
      return same_alphabet(a._alphabet, b._alphabet) && a._ring == b._ring
             && a._rank == b._rank && a._action == b._action;
    }

   private:
    Representation(AlphabetPtr            alphabet,
                   CoefficientRing        ring,
                   std::size_t            rank,
                   std::vector<IntMatrix> action,
                   bool                   checked)
        : _alphabet(std::move(alphabet)),
          _ring(std::move(ring)),
          _rank(rank),
          _action(std::move(action)) {
      if (_rank == 0) {
        throw DimensionError("representation rank must be positive");
      }
      if (_action.size() != _alphabet->size()) {
        throw DimensionError("representation has " + std::to_string(_action.size())
                             + " matrices for " + std::to_string(_alphabet->size())
                             + " generators");
      }
      for (std::size_t g = 0; g < _action.size(); ++g) {
        auto& m = _action[g];
        if (m.rows() != _rank || m.cols() != _rank) {
          throw DimensionError("action of '" + _alphabet->name(g) + "' is "
                               + std::to_string(m.rows()) + "x"
                               + std::to_string(m.cols()) + ", expected "
                               + std::to_string(_rank) + "x" + std::to_string(_rank));
        }
        m = _ring.reduce(m);
      }
      if (checked) {
        for (std::size_t g = 0; g < _action.size(); ++g) {
          try {
            _inverse.push_back(inverse_over(_ring, _action[g]));
          } catch (NotInvertible const& e) {
            throw NotInvertible("action of '" + _alphabet->name(g)
                                + "' is not invertible: " + e.what());
          }
        }
      }
    }

    AlphabetPtr            _alphabet;
    CoefficientRing        _ring;
    std::size_t            _rank;
    std::vector<IntMatrix> _action;
    std::vector<IntMatrix> _inverse;
  };

  inline IntMatrix evaluate_word(Representation const& rep, Word const& w) {
    if (!same_alphabet(rep.alphabet(), w.alphabet())) {
      throw AlphabetMismatch("word and representation use different alphabets");
    }
    IntMatrix m = IntMatrix::identity(rep.rank());
    for (auto const& l : w.letters()) {
      if (l.generator >= rep.generator_count()) {
        throw AlphabetMismatch("letter index out of range");
      }
      m = rep.ring().reduce(
          m * (l.sign > 0 ? rep.action(l.generator) : rep.inverse_action(l.generator)));
    }
    return m;
  }

  inline IntMatrix evaluate_group_ring(Representation const& rep,
                                       GroupRingElement const& e) {
    if (!same_alphabet(rep.alphabet(), e.alphabet())) {
      throw AlphabetMismatch("group ring element and representation use "
                             "different alphabets");
    }
    IntMatrix m = IntMatrix::zero(rep.rank(), rep.rank());
    for (auto const& [w, c] : e.terms()) {
      m += c * evaluate_word(rep, w);
    }
    return rep.ring().reduce(m);
  }

  // Every relator must act as the identity; non-invertible generators are
  // reported too, since the action is then not a group action.
  inline DiagnosticReport check_relators_trivial(Representation const& rep,
                                                 Presentation const&   p) {
    DiagnosticReport report;
    if (!same_alphabet(rep.alphabet(), p.alphabet())) {
      throw AlphabetMismatch("presentation and representation use different "
                             "alphabets");
    }
    if (!rep.has_inverses()) {
      for (std::size_t g = 0; g < rep.generator_count(); ++g) {
        if (!rep.ring().is_unit(rep.ring().reduce(determinant(rep.action(g))))) {
          report.error("action of '" + rep.alphabet()->name(g)
                       + "' is not invertible over " + to_string(rep.ring()));
        }
      }
    }
    IntMatrix const id = IntMatrix::identity(rep.rank());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      auto const& r = p.relators()[i];
      try {
        IntMatrix m = evaluate_word(rep, r);
        if (m != id) {
          report.error("relator " + std::to_string(i) + " (" + to_string(r)
                       + ") acts as " + to_string(m)
                       + ", not the identity");
        }
      } catch (Error const& e) {
        report.error("relator " + std::to_string(i) + " (" + to_string(r)
                     + ") cannot be evaluated: " + e.what());
      }
    }
    return report;
  }

  // Checks M_g^T * form * M_g == form over the ring for every generator.
  inline DiagnosticReport check_bilinear_form_preserved(Representation const& rep,
                                                        IntMatrix const& form) {
    if (form.rows() != rep.rank() || form.cols() != rep.rank()) {
      throw DimensionError("bilinear form must be rank x rank");
    }
    DiagnosticReport report;
    IntMatrix const  f = rep.ring().reduce(form);
    for (std::size_t g = 0; g < rep.generator_count(); ++g) {
      auto const& m = rep.action(g);
      if (rep.ring().reduce(m.transposed() * f * m) != f) {
        report.error("action of '" + rep.alphabet()->name(g)
                     + "' does not preserve the form");
      }
    }
    return report;
  }

}  // namespace twistcoh
