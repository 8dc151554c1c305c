#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcoh {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text. `line` is 0 when the input has no line structure
  // (a single word); `position` is a 1-based token or column index.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t position)
        : Error(locate(what, line, position)),
          _line(line),
          _position(position) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t position() const noexcept {
      return _position;
    }

   private:
    static std::string locate(std::string const& what,
                              std::size_t        line,
                              std::size_t        position) {
      if (line == 0) {
        return "token " + std::to_string(position) + ": " + what;
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(position) + ": " + what;
    }

    std::size_t _line;
    std::size_t _position;
  };

  class AlphabetMismatch : public Error {
   public:
    AlphabetMismatch() : Error("operands are over different alphabets") {}
    explicit AlphabetMismatch(std::string const& what) : Error(what) {}
  };

  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  class NotInvertible : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A consistency check that can only fail through a bug in this library.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace twistcoh
