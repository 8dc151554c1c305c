#pragma once

// Exact linear algebra over Z: Smith normal form with unimodular
// transforms, kernels, lattice solving and lattice quotients. Everything
// downstream (cocycles, homology, ring changes) is reduced to these.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace twistcoh {

  // U * A * V == D, with U and V unimodular and D diagonal, nonnegative,
  // d_1 | d_2 | ... . `U_inverse` is maintained alongside U so callers can
  // map quotient generators back to the original coordinates.
  struct SnfResult {
    IntMatrix U;
    IntMatrix U_inverse;
    IntMatrix D;
    IntMatrix V;

    // Number of nonzero diagonal entries.
    std::size_t rank() const {
      std::size_t r = 0;
      while (r < D.rows() && r < D.cols() && D(r, r) != 0) {
        ++r;
      }
      return r;
    }

    std::vector<Integer> diagonal() const {
      std::vector<Integer> d;
      for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) {
        d.push_back(D(i, i));
      }
      return d;
    }
  };

  namespace detail {

    // Nonzero entry of minimal absolute value in D[t.., t..]; ties go to
    // the lowest (row, col) in row-major order.
    inline std::optional<std::pair<std::size_t, std::size_t>>
    snf_pivot(IntMatrix const& d, std::size_t t) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer                                            best_abs;
      for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) {
            continue;
          }
          Integer a = abs(d(i, j));
          if (!best || a < best_abs) {
            best     = {i, j};
            best_abs = std::move(a);
          }
        }
      }
      return best;
    }

    class SnfWorker {
     public:
      explicit SnfWorker(IntMatrix const& a)
          : _r{IntMatrix::identity(a.rows()),
               IntMatrix::identity(a.rows()),
               a,
               IntMatrix::identity(a.cols())} {}

      SnfResult run() && {
        auto&             d = _r.D;
        std::size_t const n = std::min(d.rows(), d.cols());
        for (std::size_t t = 0; t < n; ++t) {
          if (!settle_pivot(t)) {
            break;
          }
          if (d(t, t) < 0) {
            negate_row(t);
          }
        }
        return std::move(_r);
      }

     private:
      // Brings a pivot to (t, t) and clears row t and column t, repeating
      // until the pivot divides every entry of the trailing submatrix.
      bool settle_pivot(std::size_t t) {
        auto& d = _r.D;
        while (true) {
          auto pivot = snf_pivot(d, t);
          if (!pivot) {
            return false;
          }
          swap_rows(t, pivot->first);
          swap_cols(t, pivot->second);

          bool remainder = false;
          for (std::size_t i = t + 1; i < d.rows(); ++i) {
            if (d(i, t) != 0) {
              Integer q = d(i, t) / d(t, t);
              add_row_multiple(i, t, -q);
              remainder = remainder || d(i, t) != 0;
            }
          }
          for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d(t, j) != 0) {
              Integer q = d(t, j) / d(t, t);
              add_col_multiple(j, t, -q);
              remainder = remainder || d(t, j) != 0;
            }
          }
          if (remainder) {
            continue;
          }
          auto bad = non_divisible_row(t);
          if (!bad) {
            return true;
          }
          add_row_multiple(t, *bad, 1);
        }
      }

      std::optional<std::size_t> non_divisible_row(std::size_t t) const {
        auto const& d = _r.D;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d(i, j) % d(t, t) != 0) {
              return i;
            }
          }
        }
        return std::nullopt;
      }

      void swap_rows(std::size_t a, std::size_t b) {
        _r.D.swap_rows(a, b);
        _r.U.swap_rows(a, b);
        _r.U_inverse.swap_cols(a, b);
      }
      void swap_cols(std::size_t a, std::size_t b) {
        _r.D.swap_cols(a, b);
        _r.V.swap_cols(a, b);
      }
      void add_row_multiple(std::size_t dst, std::size_t src, Integer const& k) {
        _r.D.add_row_multiple(dst, src, k);
        _r.U.add_row_multiple(dst, src, k);
        _r.U_inverse.add_col_multiple(src, dst, -k);
      }
      void add_col_multiple(std::size_t dst, std::size_t src, Integer const& k) {
        _r.D.add_col_multiple(dst, src, k);
        _r.V.add_col_multiple(dst, src, k);
      }
      void negate_row(std::size_t i) {
        _r.D.negate_row(i);
        _r.U.negate_row(i);
        _r.U_inverse.negate_col(i);
      }

      SnfResult _r;
    };

  }  // namespace detail

  inline SnfResult snf(IntMatrix const& a) {
    return detail::SnfWorker(a).run();
  }

  // Columns form a basis of {v : A v = 0}; the span is saturated because the
  // columns are taken from the unimodular V.
  inline IntMatrix kernel_basis(IntMatrix const& a) {
    auto              s = snf(a);
    std::size_t const r = s.rank();
    return s.V.block(0, r, a.cols(), a.cols() - r);
  }

  // x with B x = t if t lies in the column lattice of B.
  inline std::optional<IntVector> solve_in_lattice(IntMatrix const& b,
                                                   IntVector const& t) {
    if (t.size() != b.rows()) {
      throw DimensionError("solve_in_lattice: target has length "
                           + std::to_string(t.size()) + ", expected "
                           + std::to_string(b.rows()));
    }
    auto              s = snf(b);
    std::size_t const r = s.rank();
    IntVector         c = s.U * t;
    IntVector         y(b.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < r) {
        if (c[i] % s.D(i, i) != 0) {
          return std::nullopt;
        }
        y[i] = c[i] / s.D(i, i);
      } else if (c[i] != 0) {
        return std::nullopt;
      }
    }
    return s.V * y;
  }

  // Basis (independent columns) of the lattice spanned by the columns of
  // `generators`.
  inline IntMatrix lattice_basis(IntMatrix const& generators) {
    auto              s = snf(generators);
    std::size_t const r = s.rank();
    IntMatrix         basis(generators.rows(), r);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < generators.rows(); ++i) {
        basis(i, j) = s.U_inverse(i, j) * s.D(j, j);
      }
    }
    return basis;
  }

  struct QuotientGenerator {
    IntVector vector;  // in ambient coordinates
    Integer   order;   // 0 for infinite order
  };

  struct LatticeQuotient {
    AbelianGroupStructure structure;
    // One generator per cyclic factor: torsion factors in invariant-factor
    // order first, then the free part.
    std::vector<QuotientGenerator> generators;
  };

  // (column lattice of ambient_basis) / (column lattice of subgroup_gens),
  // with generators of each cyclic factor. ambient_basis must have
  // independent columns.
  inline LatticeQuotient lattice_quotient_with_generators(
      IntMatrix const& ambient_basis,
      IntMatrix const& subgroup_gens) {
    if (ambient_basis.rows() != subgroup_gens.rows()) {
      throw DimensionError("lattice_quotient: ambient and subgroup live in "
                           "different spaces");
    }
    std::size_t const k = ambient_basis.cols();
    IntMatrix         coords(k, subgroup_gens.cols());
    if (subgroup_gens.cols() != 0) {
      auto s = snf(ambient_basis);
      if (s.rank() != k) {
        throw PreconditionError("lattice_quotient: ambient columns are not "
                                "linearly independent");
      }
    }
    for (std::size_t j = 0; j < subgroup_gens.cols(); ++j) {
      auto x = solve_in_lattice(ambient_basis, subgroup_gens.column(j));
      if (!x) {
        throw PreconditionError("lattice_quotient: subgroup generator "
                                + std::to_string(j)
                                + " is outside the ambient lattice");
      }
      for (std::size_t i = 0; i < k; ++i) {
        coords(i, j) = (*x)[i];
      }
    }

    auto const s    = snf(coords);
    auto const diag = s.diagonal();

    LatticeQuotient               out;
    std::vector<QuotientGenerator> free_part;
    for (std::size_t i = 0; i < k; ++i) {
      Integer d = i < diag.size() ? diag[i] : Integer(0);
      if (d == 1) {
        continue;
      }
      IntVector coord = s.U_inverse.column(i);
      QuotientGenerator g{ambient_basis * coord, d};
      if (d == 0) {
        ++out.structure.free_rank;
        free_part.push_back(std::move(g));
      } else {
        out.structure.torsion.push_back(d);
        out.generators.push_back(std::move(g));
      }
    }
    for (auto& g : free_part) {
      out.generators.push_back(std::move(g));
    }
    return out;
  }

  inline AbelianGroupStructure lattice_quotient(IntMatrix const& ambient_basis,
                                                IntMatrix const& subgroup_gens) {
    return lattice_quotient_with_generators(ambient_basis, subgroup_gens)
        .structure;
  }

  // Normalises Z/c_1 + Z/c_2 + ... (c_i = 0 meaning Z) to invariant factors.
  inline AbelianGroupStructure
  abelian_group_from_cyclic(std::vector<Integer> const& orders) {
    std::vector<Integer> diag;
    for (auto const& c : orders) {
      diag.push_back(abs(c));
    }
    std::size_t const n = diag.size();
    return lattice_quotient(IntMatrix::identity(n), IntMatrix::diagonal(diag));
  }

  // Inverse of to_string(AbelianGroupStructure). Accepts any cyclic
  // decomposition ("Z/2 + Z/3" normalises to Z/6).
  inline AbelianGroupStructure parse_abelian_group(std::string_view text) {
    std::vector<Integer> orders;
    std::size_t          term_index = 0;
    auto                 trim       = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    };
    auto all_digits = [](std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
    };
    while (true) {
      ++term_index;
      auto        plus = text.find('+');
      std::string_view term = trim(text.substr(0, plus));
      if (term == "0") {
        // trivial summand
      } else if (term == "Z") {
        orders.emplace_back(0);
      } else if (term.starts_with("Z^") && all_digits(term.substr(2))) {
        std::size_t k = std::stoul(std::string(term.substr(2)));
        orders.insert(orders.end(), k, Integer(0));
      } else if (term.starts_with("Z/") && all_digits(term.substr(2))) {
        Integer d(std::string(term.substr(2)));
        if (d == 0) {
          throw ParseError("Z/0 is not a valid cyclic factor", 0, term_index);
        }
        orders.push_back(d);
      } else {
        throw ParseError("expected 0, Z, Z^k or Z/d, got '" + std::string(term)
                             + "'",
                         0,
                         term_index);
      }
      if (plus == std::string_view::npos) {
        break;
      }
      text.remove_prefix(plus + 1);
    }
    return abelian_group_from_cyclic(orders);
  }

}  // namespace twistcoh
