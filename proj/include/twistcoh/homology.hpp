#pragma once

// Low-degree (co)homology of a finitely presented group with coefficients in
// a finitely generated module, read off the presentation 2-complex:
//
//   cochains  M --P--> M^gens --J--> M^relators      (H^0, H^1)
//   chains    M^relators --d2--> M^gens --d1--> M     (H_1, H_0)
//
// All computations are Z-lattice computations; coefficients in Z/n are
// handled by adjoining n * (standard basis) to relation lattices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <future>
#include <string>
#include <unordered_set>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "fox.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "representation.hpp"

namespace twistcoh {

  // ker(outgoing) / (im(incoming) + n Z^dim) over the ring, where both maps
  // have integer matrices and dim = outgoing.cols() = incoming.rows().
  struct Subquotient {
    IntMatrix             cycles_basis;  // Z-basis of the integer lifts of ker
    AbelianGroupStructure cycles;        // ker itself, as a group
    LatticeQuotient       quotient;
  };

  inline Subquotient subquotient(IntMatrix const&       outgoing,
                                 IntMatrix const&       incoming,
                                 CoefficientRing const& ring) {
    std::size_t const dim = outgoing.cols();
    if (incoming.rows() != dim) {
      throw DimensionError("subquotient: incoming map lands in dimension "
                           + std::to_string(incoming.rows()) + ", expected "
                           + std::to_string(dim));
    }
    Subquotient out;
    if (ring.is_integers()) {
      out.cycles_basis     = kernel_basis(outgoing);
      out.cycles.free_rank = out.cycles_basis.cols();
      out.quotient = lattice_quotient_with_generators(out.cycles_basis, incoming);
      return out;
    }
    Integer const& n = ring.modulus();
    IntMatrix      augmented
        = hstack({outgoing, IntMatrix::scalar(outgoing.rows(), n)}, outgoing.rows());
    IntMatrix lifts = kernel_basis(augmented);
    out.cycles_basis = lattice_basis(lifts.block(0, 0, dim, lifts.cols()));
    IntMatrix const torsion_gens = IntMatrix::scalar(dim, n);
    out.cycles = lattice_quotient(out.cycles_basis, torsion_gens);
    out.quotient = lattice_quotient_with_generators(
        out.cycles_basis, hstack({incoming, torsion_gens}, dim));
    for (auto& g : out.quotient.generators) {
      g.vector = ring.reduce(g.vector);
    }
    return out;
  }

  inline void require_relators_trivial(Presentation const& p, Representation const& rep) {
    auto report = check_relators_trivial(rep, p);
    if (!report.ok()) {
      throw PreconditionError("the cocycle condition is ill-posed: "
                              + report.entries.front().message);
    }
  }

  // Stacked (rho(g) - I) u over the generators: the principal crossed
  // homomorphism g -> g u - u as a vector in M^gens.
  struct PrincipalMap {
    IntMatrix matrix;
  };

  inline PrincipalMap principal_map(Representation const& rep) {
    std::size_t const      n = rep.rank();
    std::vector<IntMatrix> blocks;
    for (auto const& m : rep.actions()) {
      blocks.push_back(rep.ring().reduce(m - IntMatrix::identity(n)));
    }
    return {vstack(blocks, n)};
  }

  // M / span{g m - m}, generators suffice.
  inline AbelianGroupStructure coinvariants(Representation const& rep) {
    std::size_t const      n = rep.rank();
    std::vector<IntMatrix> blocks;
    for (auto const& m : rep.actions()) {
      blocks.push_back(m - IntMatrix::identity(n));
    }
    return subquotient(IntMatrix::zero(0, n), hstack(blocks, n), rep.ring())
        .quotient.structure;
  }

  struct CohomologyResult {
    CoefficientRing       ring;
    IntMatrix             z1_basis;  // columns span the integer lifts of Z^1
    AbelianGroupStructure z1;
    AbelianGroupStructure h1;
    // One cocycle per cyclic factor of h1, as (d(g_1), ..., d(g_k)).
    std::vector<QuotientGenerator> witnesses;
  };

  inline CohomologyResult h1_cohomology(Presentation const& p, Representation const& rep) {
    require_relators_trivial(p, rep);
    auto sq = subquotient(cocycle_matrix(p, rep), principal_map(rep).matrix, rep.ring());
    return {rep.ring(),
            std::move(sq.cycles_basis),
            std::move(sq.cycles),
            std::move(sq.quotient.structure),
            std::move(sq.quotient.generators)};
  }

  struct HomologyBoundaries {
    IntMatrix d1;  // rank x (gens * rank)
    IntMatrix d2;  // (gens * rank) x (relators * rank)
  };

  // M is made a right module by m.g = g^-1 m, so d2 block (g, r) is rho of
  // the conjugate of dr/dg and d1 block g is rho(g^-1) - I.
  inline HomologyBoundaries homology_boundaries(Presentation const&   p,
                                                Representation const& rep) {
    if (!same_alphabet(p.alphabet(), rep.alphabet())) {
      throw AlphabetMismatch("presentation and representation use different "
                             "alphabets");
    }
    auto const&       ring = rep.ring();
    std::size_t const n    = rep.rank();
    std::size_t const k    = p.generator_count();
    std::size_t const r    = p.relator_count();
    HomologyBoundaries b{IntMatrix(n, k * n), IntMatrix(k * n, r * n)};
    for (std::size_t g = 0; g < k; ++g) {
      b.d1.set_block(0, g * n, ring.reduce(rep.inverse_action(g) - IntMatrix::identity(n)));
      for (std::size_t i = 0; i < r; ++i) {
        b.d2.set_block(
            g * n, i * n,
            evaluate_group_ring(rep, fox_derivative(p.relators()[i], g).conjugate()));
      }
    }
    return b;
  }

  inline AbelianGroupStructure h1_homology(Presentation const& p, Representation const& rep) {
    require_relators_trivial(p, rep);
    auto b = homology_boundaries(p, rep);
    if (!rep.ring().reduce(b.d1 * b.d2).is_zero()) {
      throw InternalError("homology boundary maps do not compose to zero");
    }
    return subquotient(b.d1, b.d2, rep.ring()).quotient.structure;
  }

  // H^1 as {d in Z^1 : f d = 0}, valid when f composed with the principal
  // map is invertible (then Z^1 splits as im P + ker f).
  inline CohomologyResult kerf_reduction(Presentation const&   p,
                                         Representation const& rep,
                                         IntMatrix const&      f) {
    std::size_t const n = rep.rank();
    std::size_t const m = p.generator_count() * n;
    if (f.rows() != n || f.cols() != m) {
      throw DimensionError("f must be " + std::to_string(n) + "x" + std::to_string(m));
    }
    require_relators_trivial(p, rep);
    auto const&   ring = rep.ring();
    IntMatrix     fp   = ring.reduce(f * principal_map(rep).matrix);
    Integer const det  = ring.reduce(determinant(fp));
    if (!ring.is_unit(det)) {
      throw PreconditionError("f composed with the principal map is not invertible over "
                              + to_string(ring) + ": determinant " + to_string(det));
    }
    IntMatrix const j  = cocycle_matrix(p, rep);
    auto            sq = subquotient(vstack({j, f}, m), IntMatrix::zero(m, 0), ring);
    return {ring,
            std::move(sq.cycles_basis),
            std::move(sq.cycles),
            std::move(sq.quotient.structure),
            std::move(sq.quotient.generators)};
  }

  // Ext(h0, A) + Hom(h1, A).
  inline AbelianGroupStructure universal_coefficient_prediction(
      AbelianGroupStructure const& h0,
      AbelianGroupStructure const& h1,
      CoefficientRing const&       ring) {
    std::vector<Integer> orders;
    if (ring.is_integers()) {
      orders.insert(orders.end(), h1.free_rank, Integer(0));
      orders.insert(orders.end(), h0.torsion.begin(), h0.torsion.end());
    } else {
      Integer const& n = ring.modulus();
      orders.insert(orders.end(), h1.free_rank, n);
      for (auto const& d : h1.torsion) {
        orders.push_back(gcd(d, n));
      }
      for (auto const& d : h0.torsion) {
        orders.push_back(gcd(d, n));
      }
    }
    return abelian_group_from_cyclic(orders);
  }

  struct UctComparison {
    CoefficientRing       ring;
    AbelianGroupStructure computed;
    AbelianGroupStructure predicted;

    bool consistent() const {
      return computed == predicted;
    }
  };

  struct UctReport {
    AbelianGroupStructure      h0;
    AbelianGroupStructure      h1;
    std::vector<UctComparison> comparisons;

    bool consistent() const {
      return std::all_of(comparisons.begin(), comparisons.end(), [](auto const& c) {
        return c.consistent();
      });
    }
  };

  // Compares H^1(G; Hom(M, A)) with Ext(h0, A) + Hom(h1, A) for A = Z and
  // every Z/n. h0 and h1 are taken as given, which lets tests feed in
  // corrupted values.
  inline UctReport uct_check_with(Presentation const&          p,
                                  Representation const&        rep_z,
                                  std::vector<Integer> const&  moduli,
                                  AbelianGroupStructure const& h0,
                                  AbelianGroupStructure const& h1) {
    if (!rep_z.ring().is_integers()) {
      throw PreconditionError("uct_check needs a representation over Z");
    }
    UctReport report{h0, h1, {}};
    Representation const dual = rep_z.contragredient();
    std::vector<CoefficientRing> rings{CoefficientRing::integers()};
    for (auto const& n : moduli) {
      if (n < 2) {
        throw PreconditionError("uct_check moduli must be at least 2, got " + to_string(n));
      }
      rings.push_back(CoefficientRing::integers_mod(n));
    }
    for (auto const& ring : rings) {
      report.comparisons.push_back({ring,
                                    h1_cohomology(p, dual.change_ring(ring)).h1,
                                    universal_coefficient_prediction(h0, h1, ring)});
    }
    return report;
  }

  inline UctReport uct_check(Presentation const&         p,
                             Representation const&       rep_z,
                             std::vector<Integer> const& moduli) {
    return uct_check_with(p, rep_z, moduli, coinvariants(rep_z), h1_homology(p, rep_z));
  }

  struct BruteForceCounts {
    std::uint64_t candidates = 0;
    std::uint64_t z1_count   = 0;
    std::uint64_t b1_count   = 0;
    std::uint64_t h1_count   = 0;
  };

  inline constexpr std::size_t brute_force_dimension_limit = 20;

  // Independent count of |H^1(G; M/2M)| by enumerating every candidate
  // d in (Z/2)^(gens * rank). The range may be split across workers.
  inline BruteForceCounts brute_force_h1_mod2(Presentation const&   p,
                                              Representation const& rep,
                                              unsigned              workers = 1) {
    CoefficientRing const two = CoefficientRing::integers_mod(2);
    Representation const  rep2 = rep.change_ring(two);
    std::size_t const     n    = rep2.rank();
    std::size_t const     m    = p.generator_count() * n;
    if (m > brute_force_dimension_limit) {
      throw PreconditionError("brute force refused: " + std::to_string(m)
                              + " unknowns exceeds the limit of "
                              + std::to_string(brute_force_dimension_limit));
    }
    require_relators_trivial(p, rep2);

    IntMatrix const   j     = two.reduce(cocycle_matrix(p, rep2));
    std::size_t const words = (j.rows() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> columns(m, std::vector<std::uint64_t>(words));
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t r = 0; r < j.rows(); ++r) {
        if (j(r, c) != 0) {
          columns[c][r / 64] |= std::uint64_t{1} << (r % 64);
        }
      }
    }

    // Gray-code walk: consecutive candidates differ in one coordinate.
    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
      std::vector<std::uint64_t> acc(words, 0);
      std::uint64_t const        gray = begin ^ (begin >> 1);
      for (std::size_t bit = 0; bit < m; ++bit) {
        if ((gray >> bit) & 1U) {
          for (std::size_t w = 0; w < words; ++w) {
            acc[w] ^= columns[bit][w];
          }
        }
      }
      std::uint64_t count = 0;
      for (std::uint64_t i = begin; i < end; ++i) {
        bool zero = true;
        for (auto x : acc) {
          zero = zero && x == 0;
        }
        count += zero ? 1 : 0;
        if (i + 1 < end) {
          auto const bit = static_cast<std::size_t>(std::countr_zero(i + 1));
          for (std::size_t w = 0; w < words; ++w) {
            acc[w] ^= columns[bit][w];
          }
        }
      }
      return count;
    };

    BruteForceCounts out;
    out.candidates = std::uint64_t{1} << m;
    workers        = std::max(1U, workers);
    if (workers == 1) {
      out.z1_count = count_range(0, out.candidates);
    } else {
      std::vector<std::future<std::uint64_t>> parts;
      std::uint64_t const chunk = (out.candidates + workers - 1) / workers;
      for (std::uint64_t begin = 0; begin < out.candidates; begin += chunk) {
        std::uint64_t end = std::min(out.candidates, begin + chunk);
        parts.push_back(std::async(std::launch::async, count_range, begin, end));
      }
      for (auto& f : parts) {
        out.z1_count += f.get();
      }
    }

    IntMatrix const                 pm = principal_map(rep2).matrix;
    std::unordered_set<std::uint32_t> image;
    for (std::uint32_t u = 0; u < (std::uint32_t{1} << n); ++u) {
      std::uint32_t bits = 0;
      for (std::size_t r = 0; r < m; ++r) {
        unsigned parity = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (((u >> c) & 1U) && pm(r, c) != 0) {
            parity ^= 1U;
          }
        }
        bits |= parity << r;
      }
      image.insert(bits);
    }
    out.b1_count = image.size();
    if (out.z1_count % out.b1_count != 0) {
      throw InternalError("coboundary count does not divide cocycle count");
    }
    out.h1_count = out.z1_count / out.b1_count;
    return out;
  }

}  // namespace twistcoh
