#pragma once

#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "integer.hpp"
#include "words.hpp"

namespace twistcoh {

  // Element of the integral group ring Z[F] of a free group: a finite formal
  // sum of reduced words with nonzero integer coefficients.
  class GroupRingElement {
   public:
    using Terms = std::map<Word, Integer>;

    explicit GroupRingElement(AlphabetPtr alphabet)
        : _alphabet(std::move(alphabet)) {}

    static GroupRingElement zero(AlphabetPtr alphabet) {
      return GroupRingElement(std::move(alphabet));
    }

    static GroupRingElement one(AlphabetPtr const& alphabet) {
      return from_word(Word::identity(alphabet));
    }

    static GroupRingElement from_word(Word const& w, Integer coefficient = 1) {
      GroupRingElement e(w.alphabet());
      e.add(w, coefficient);
      return e;
    }

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    Integer coefficient(Word const& w) const {
      auto it = _terms.find(w);
      return it == _terms.end() ? Integer(0) : it->second;
    }

    void add(Word const& w, Integer const& coefficient) {
      if (!same_alphabet(w.alphabet(), _alphabet)) {
        throw AlphabetMismatch();
      }
      if (coefficient == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(w, coefficient);
      if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    GroupRingElement& operator+=(GroupRingElement const& other) {
      for (auto const& [w, c] : other._terms) {
        add(w, c);
      }
      return *this;
    }
    GroupRingElement& operator-=(GroupRingElement const& other) {
      for (auto const& [w, c] : other._terms) {
        add(w, -c);
      }
      return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b) {
      return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, GroupRingElement const& b) {
      return a -= b;
    }

    friend GroupRingElement operator*(GroupRingElement const& a,
                                      GroupRingElement const& b) {
      if (!same_alphabet(a._alphabet, b._alphabet)) {
        throw AlphabetMismatch();
      }
      GroupRingElement out(a._alphabet);
      for (auto const& [u, cu] : a._terms) {
        for (auto const& [v, cv] : b._terms) {
          out.add(multiply(u, v), cu * cv);
        }
      }
      return out;
    }

    // Linear extension of w -> w^-1 (an anti-automorphism of Z[F]).
    GroupRingElement conjugate() const {
      GroupRingElement out(_alphabet);
      for (auto const& [w, c] : _terms) {
        out.add(invert(w), c);
      }
      return out;
    }

    friend bool operator==(GroupRingElement const& a, GroupRingElement const& b) {
      return same_alphabet(a._alphabet, b._alphabet) && a._terms == b._terms;
    }

   private:
    AlphabetPtr _alphabet;
    Terms       _terms;
  };

  // "1 + a d - 2 b^-1"; zero prints as "0".
  inline std::string to_string(GroupRingElement const& e) {
    if (e.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [w, c] : e.terms()) {
      Integer mag = abs(c);
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (w.empty()) {
        out += to_string(mag);
      } else {
        if (mag != 1) {
          out += to_string(mag) + " ";
        }
        out += to_string(w);
      }
    }
    return out;
  }

}  // namespace twistcoh
