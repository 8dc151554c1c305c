#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace twistcoh {

  // Tokens of letters, digits and underscores, not starting with a digit.
  inline bool is_valid_generator_name(std::string_view name) {
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  // Ordered list of generator names. Duplicate names are representable so
  // that presentation validation can report them; lookups return the first
  // match.
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
      for (auto const& n : _names) {
        if (!is_valid_generator_name(n)) {
          throw ParseError("invalid generator name '" + n + "'", 0, 0);
        }
      }
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<std::size_t> index_of(std::string_view name) const {
      auto it = std::find(_names.begin(), _names.end(), name);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - _names.begin());
    }

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::vector<std::string> _names;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  inline AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<Alphabet const>(std::move(names));
  }

  inline bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  struct Letter {
    std::size_t generator;
    int         sign;  // +1 or -1

    Letter inverse() const noexcept {
      return {generator, -sign};
    }

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  // Element of the free group on an alphabet, always freely reduced.
  class Word {
   public:
    explicit Word(AlphabetPtr alphabet) : _alphabet(std::move(alphabet)) {}

    // Letters are reduced on construction. Generator indices are not range
    // checked here; presentation validation reports out-of-range letters.
    Word(AlphabetPtr alphabet, std::vector<Letter> const& letters)
        : _alphabet(std::move(alphabet)) {
      for (auto const& l : letters) {
        push(l);
      }
    }

    static Word identity(AlphabetPtr alphabet) {
      return Word(std::move(alphabet));
    }

    // g^exponent for a generator index (range checked).
    static Word generator(AlphabetPtr const& alphabet,
                          std::size_t        index,
                          int                exponent = 1) {
      if (index >= alphabet->size()) {
        throw AlphabetMismatch("generator index " + std::to_string(index)
                               + " is outside the alphabet");
      }
      Word w(alphabet);
      int  sign = exponent < 0 ? -1 : 1;
      for (int i = 0; i < exponent * sign; ++i) {
        w.push({index, sign});
      }
      return w;
    }

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    // Appends one letter, cancelling against the last letter if needed.
    void push(Letter const& l) {
      if (l.sign != 1 && l.sign != -1) {
        throw Error("letter sign must be +1 or -1");
      }
      if (!_letters.empty() && _letters.back() == l.inverse()) {
        _letters.pop_back();
      } else {
        _letters.push_back(l);
      }
    }

    bool is_freely_reduced() const {
      for (std::size_t i = 0; i + 1 < _letters.size(); ++i) {
        if (_letters[i + 1] == _letters[i].inverse()) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Word const& u, Word const& v) {
      return u._letters == v._letters && same_alphabet(u._alphabet, v._alphabet);
    }

    // Lexicographic on letters; only used to key maps.
    friend bool operator<(Word const& u, Word const& v) {
      return u._letters < v._letters;
    }

   private:
    AlphabetPtr         _alphabet;
    std::vector<Letter> _letters;
  };

  inline Word multiply(Word const& u, Word const& v) {
    if (!same_alphabet(u.alphabet(), v.alphabet())) {
      throw AlphabetMismatch();
    }
    Word out = u;
    for (auto const& l : v.letters()) {
      out.push(l);
    }
    return out;
  }

  inline Word operator*(Word const& u, Word const& v) {
    return multiply(u, v);
  }

  inline Word invert(Word const& w) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    return Word(w.alphabet(), letters);
  }

  inline Word power(Word const& w, int k) {
    Word base = k < 0 ? invert(w) : w;
    Word out  = Word::identity(w.alphabet());
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      out = out * base;
    }
    return out;
  }

  // Canonical form: `name` and `name^-1` tokens separated by single spaces;
  // the identity prints as the empty string.
  inline std::string to_string(Word const& w) {
    std::string out;
    for (auto const& l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += w.alphabet()->name(l.generator);
      if (l.sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  // Whitespace-separated tokens `name`, `name^-1` or `name^k` (k != 0).
  // Errors report the 1-based token index.
  inline Word parse_word(std::string_view text, AlphabetPtr const& alphabet) {
    Word               w(alphabet);
    std::istringstream in{std::string(text)};
    std::string        token;
    std::size_t        index = 0;
    while (in >> token) {
      ++index;
      auto        caret = token.find('^');
      std::string name  = token.substr(0, caret);
      auto        g     = alphabet->index_of(name);
      if (!g) {
        throw ParseError("unknown generator '" + name + "'", 0, index);
      }
      int exponent = 1;
      if (caret != std::string::npos) {
        std::string_view digits(token);
        digits.remove_prefix(caret + 1);
        auto [end, ec]
            = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
        if (ec != std::errc() || end != digits.data() + digits.size()
            || exponent == 0) {
          throw ParseError("malformed exponent in '" + token + "'", 0, index);
        }
      }
      int sign = exponent < 0 ? -1 : 1;
      for (int i = 0; i < exponent * sign; ++i) {
        w.push({*g, sign});
      }
    }
    return w;
  }

}  // namespace twistcoh
