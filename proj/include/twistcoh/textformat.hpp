#pragma once

// Line-oriented input format:
//
//   name: e2                               (optional)
//   generators: a b g d
//   relator: a a                           (one per line, or)
//   relation: a d a = d
//   ring: Z                                (or Z/n; default Z)
//   rank: 4
//   action a: [-1 0 0 0; 0 -1 0 0; 0 0 -1 0; 0 0 0 -1]
//   form: [...]                            (optional)
//   kerf: [...]                            (optional)
//   expect h1: Z/2 + Z/2                   (optional; ring defaults to Z)
//   expect coh1 Z/2: Z/2 + Z/2
//
// Matrices are written row by row, rows separated by ';', so the columns
// are the images of the basis vectors. '#' starts a comment.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "goeritz.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "words.hpp"

namespace twistcoh {

  namespace detail {

    inline bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    // A view into one input line that remembers its starting column.
    struct Field {
      std::string_view text;
      std::size_t      column;  // 1-based column of text[0]

      Field trimmed() const {
        Field f = *this;
        while (!f.text.empty() && is_space(f.text.front())) {
          f.text.remove_prefix(1);
          ++f.column;
        }
        while (!f.text.empty() && is_space(f.text.back())) {
          f.text.remove_suffix(1);
        }
        return f;
      }

      Field sub(std::size_t pos, std::size_t len = std::string_view::npos) const {
        return {text.substr(pos, len), column + pos};
      }
    };

    // Whitespace-separated tokens with their columns.
    inline std::vector<Field> tokens(Field f) {
      std::vector<Field> out;
      std::size_t        i = 0;
      while (i < f.text.size()) {
        while (i < f.text.size() && is_space(f.text[i])) {
          ++i;
        }
        std::size_t start = i;
        while (i < f.text.size() && !is_space(f.text[i])) {
          ++i;
        }
        if (start < i) {
          out.push_back(f.sub(start, i - start));
        }
      }
      return out;
    }

    inline Integer parse_integer(Field f, std::size_t line) {
      std::string_view s = f.text;
      std::size_t      i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) {
        throw ParseError("expected an integer, got '" + std::string(s) + "'", line, f.column);
      }
      for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
          throw ParseError("expected an integer, got '" + std::string(s) + "'",
                           line,
                           f.column);
        }
      }
      Integer value(std::string(s.substr(i)));
      return s[0] == '-' ? Integer(-value) : value;
    }

    // "[r11 r12; r21 r22]"
    inline IntMatrix parse_matrix(Field f, std::size_t line) {
      f = f.trimmed();
      if (f.text.size() < 2 || f.text.front() != '[' || f.text.back() != ']') {
        throw ParseError("expected a matrix in brackets", line, f.column);
      }
      Field                             body = f.sub(1, f.text.size() - 2);
      std::vector<std::vector<Integer>> rows;
      std::size_t                       start = 0;
      while (true) {
        auto  semi = body.text.find(';', start);
        Field row  = body.sub(start, semi == std::string_view::npos ? semi : semi - start);
        std::vector<Integer> entries;
        for (auto const& t : tokens(row)) {
          entries.push_back(parse_integer(t, line));
        }
        if (!rows.empty() && entries.size() != rows.front().size()) {
          throw DimensionError("line " + std::to_string(line)
                               + ": matrix rows have different lengths");
        }
        rows.push_back(std::move(entries));
        if (semi == std::string_view::npos) {
          break;
        }
        start = semi + 1;
      }
      if (rows.size() == 1 && rows.front().empty()) {
        return IntMatrix();
      }
      IntMatrix m(rows.size(), rows.front().size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    inline Word parse_word_field(Field f, AlphabetPtr const& alphabet, std::size_t line) {
      auto toks = tokens(f);
      try {
        return parse_word(f.text, alphabet);
      } catch (ParseError const& e) {
        std::size_t column = e.position() >= 1 && e.position() <= toks.size()
                                 ? toks[e.position() - 1].column
                                 : f.column;
        std::string what = e.what();
        // Drop the "token N: " prefix; the line/column replaces it.
        auto colon = what.find(": ");
        throw ParseError(colon == std::string::npos ? what : what.substr(colon + 2),
                         line,
                         column);
      }
    }

    inline std::string matrix_literal(IntMatrix const& m) {
      std::string out = "[";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i != 0) {
          out += "; ";
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (j != 0) {
            out += ' ';
          }
          out += to_string(m(i, j));
        }
      }
      return out + "]";
    }

  }  // namespace detail

  // Parses and validates a whole input file. Syntax and name errors raise
  // ParseError with line and column; wrong matrix shapes raise
  // DimensionError and singular actions NotInvertible, both naming the line.
  // The `ring:` line becomes NamedExample::ring; actions stay over Z unless
  // they are only invertible over that ring.
  inline NamedExample parse_input_file(std::string_view text) {
    using detail::Field;

    std::string                  name;
    AlphabetPtr                  alphabet;
    std::vector<Word>            relators;
    CoefficientRing              ring;
    std::optional<std::size_t>   rank;
    std::size_t                  rank_line = 0;
    std::map<std::size_t, std::pair<IntMatrix, std::size_t>> actions;  // gen -> (matrix, line)
    std::optional<std::pair<IntMatrix, std::size_t>> form, kerf;
    std::map<std::string, AbelianGroupStructure>       expected;

    auto require_generators = [&](std::size_t line, std::size_t column) {
      if (!alphabet) {
        throw ParseError("'generators:' must come first", line, column);
      }
    };

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto             eol = text.find('\n', pos);
      std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
      pos                  = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      if (!raw.empty() && raw.back() == '\r') {
        raw.remove_suffix(1);
      }
      Field line = Field{raw, 1}.trimmed();
      if (line.text.empty()) {
        continue;
      }
      auto colon = line.text.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'key: value'", line_no, line.column);
      }
      Field key   = line.sub(0, colon).trimmed();
      Field value = line.sub(colon + 1).trimmed();
      auto  key_tokens = detail::tokens(key);
      if (key_tokens.empty()) {
        throw ParseError("missing key before ':'", line_no, line.column);
      }
      std::string_view const head = key_tokens.front().text;

      if (head == "name" && key_tokens.size() == 1) {
        name = std::string(value.text);
      } else if (head == "generators" && key_tokens.size() == 1) {
        if (alphabet) {
          throw ParseError("generators declared twice", line_no, key.column);
        }
        std::vector<std::string> names;
        for (auto const& t : detail::tokens(value)) {
          if (!is_valid_generator_name(t.text)) {
            throw ParseError("invalid generator name '" + std::string(t.text) + "'",
                             line_no,
                             t.column);
          }
          names.emplace_back(t.text);
        }
        alphabet = make_alphabet(std::move(names));
      } else if (head == "relator" && key_tokens.size() == 1) {
        require_generators(line_no, key.column);
        relators.push_back(detail::parse_word_field(value, alphabet, line_no));
      } else if (head == "relation" && key_tokens.size() == 1) {
        require_generators(line_no, key.column);
        auto eq = value.text.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("relation needs '='", line_no, value.column);
        }
        Word lhs = detail::parse_word_field(value.sub(0, eq), alphabet, line_no);
        Word rhs = detail::parse_word_field(value.sub(eq + 1), alphabet, line_no);
        relators.push_back(multiply(lhs, invert(rhs)));
      } else if (head == "ring" && key_tokens.size() == 1) {
        try {
          ring = CoefficientRing::parse(value.text);
        } catch (Error const& e) {
          throw ParseError(e.what(), line_no, value.column);
        }
      } else if (head == "rank" && key_tokens.size() == 1) {
        Integer r = detail::parse_integer(value, line_no);
        if (r <= 0) {
          throw ParseError("rank must be positive", line_no, value.column);
        }
        rank      = static_cast<std::size_t>(r);
        rank_line = line_no;
      } else if (head == "action" && key_tokens.size() == 2) {
        require_generators(line_no, key.column);
        auto g = alphabet->index_of(key_tokens[1].text);
        if (!g) {
          throw ParseError("unknown generator '" + std::string(key_tokens[1].text) + "'",
                           line_no,
                           key_tokens[1].column);
        }
        actions[*g] = {detail::parse_matrix(value, line_no), line_no};
      } else if (head == "form" && key_tokens.size() == 1) {
        form = std::pair{detail::parse_matrix(value, line_no), line_no};
      } else if (head == "kerf" && key_tokens.size() == 1) {
        kerf = std::pair{detail::parse_matrix(value, line_no), line_no};
      } else if (head == "expect" && (key_tokens.size() == 2 || key_tokens.size() == 3)) {
        std::string_view computation = key_tokens[1].text;
        if (computation != "h0" && computation != "h1" && computation != "coh1") {
          throw ParseError("unknown computation '" + std::string(computation) + "'",
                           line_no,
                           key_tokens[1].column);
        }
        CoefficientRing expect_ring;
        if (key_tokens.size() == 3) {
          try {
            expect_ring = CoefficientRing::parse(key_tokens[2].text);
          } catch (Error const& e) {
            throw ParseError(e.what(), line_no, key_tokens[2].column);
          }
        }
        try {
          expected[expectation_key(computation, expect_ring)]
              = parse_abelian_group(value.text);
        } catch (ParseError const& e) {
          throw ParseError(e.what(), line_no, value.column);
        }
      } else {
        throw ParseError("unknown key '" + std::string(key.text) + "'", line_no, key.column);
      }
    }

    if (!alphabet) {
      throw ParseError("missing 'generators:' line", line_no, 1);
    }
    if (!rank) {
      throw ParseError("missing 'rank:' line", line_no, 1);
    }
    std::vector<IntMatrix> matrices;
    for (std::size_t g = 0; g < alphabet->size(); ++g) {
      auto it = actions.find(g);
      if (it == actions.end()) {
        throw ParseError("missing action for generator '" + alphabet->name(g) + "'",
                         line_no,
                         1);
      }
      auto const& [m, where] = it->second;
      if (m.rows() != *rank || m.cols() != *rank) {
        throw DimensionError("line " + std::to_string(where) + ": action of '"
                             + alphabet->name(g) + "' is " + std::to_string(m.rows())
                             + "x" + std::to_string(m.cols()) + ", rank is "
                             + std::to_string(*rank) + " (line "
                             + std::to_string(rank_line) + ")");
      }
      matrices.push_back(m);
    }
    // Over Z when possible, so the same file serves every coefficient ring.
    auto const z       = CoefficientRing::integers();
    bool       over_z  = true;
    for (std::size_t g = 0; g < alphabet->size(); ++g) {
      over_z = over_z && z.is_unit(determinant(matrices[g]));
    }
    CoefficientRing const rep_ring = over_z ? z : ring;
    for (std::size_t g = 0; g < alphabet->size(); ++g) {
      try {
        inverse_over(rep_ring, matrices[g]);
      } catch (NotInvertible const&) {
        throw NotInvertible("line " + std::to_string(actions[g].second) + ": action of '"
                            + alphabet->name(g) + "' is not invertible over "
                            + to_string(ring));
      }
    }
    if (form && (form->first.rows() != *rank || form->first.cols() != *rank)) {
      throw DimensionError("line " + std::to_string(form->second) + ": form must be "
                           + std::to_string(*rank) + "x" + std::to_string(*rank));
    }
    std::size_t const unknowns = alphabet->size() * *rank;
    if (kerf && (kerf->first.rows() != *rank || kerf->first.cols() != unknowns)) {
      throw DimensionError("line " + std::to_string(kerf->second) + ": kerf must be "
                           + std::to_string(*rank) + "x" + std::to_string(unknowns));
    }

    NamedExample out{name,
                     Presentation(alphabet, std::move(relators)),
                     Representation(alphabet, rep_ring, *rank, std::move(matrices)),
                     std::nullopt,
                     std::nullopt,
                     std::move(expected),
                     ring};
    if (form) {
      out.form = form->first;
    }
    if (kerf) {
      out.kerf = kerf->first;
    }
    return out;
  }

  inline std::string to_text(NamedExample const& e) {
    std::ostringstream os;
    auto const&        alphabet = *e.presentation.alphabet();
    if (!e.name.empty()) {
      os << "name: " << e.name << '\n';
    }
    os << "generators:";
    for (auto const& n : alphabet.names()) {
      os << ' ' << n;
    }
    os << '\n';
    for (auto const& r : e.presentation.relators()) {
      os << "relator: " << to_string(r) << '\n';
    }
    os << "ring: " << to_string(e.ring) << '\n';
    os << "rank: " << e.representation.rank() << '\n';
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      os << "action " << alphabet.name(g) << ": "
         << detail::matrix_literal(e.representation.action(g)) << '\n';
    }
    if (e.form) {
      os << "form: " << detail::matrix_literal(*e.form) << '\n';
    }
    if (e.kerf) {
      os << "kerf: " << detail::matrix_literal(*e.kerf) << '\n';
    }
    for (auto const& [key, value] : e.expected) {
      auto        space       = key.find(' ');
      std::string computation = key.substr(0, space);
      std::string ring        = key.substr(space + 1);
      os << "expect " << computation;
      if (ring != "Z") {
        os << ' ' << ring;
      }
      os << ": " << to_string(value) << '\n';
    }
    return os.str();
  }

}  // namespace twistcoh
