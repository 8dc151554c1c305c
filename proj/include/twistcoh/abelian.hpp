#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "integer.hpp"

namespace twistcoh {

  // Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k in
  // invariant-factor form: every d_i >= 2 and d_i divides d_{i+1}.
  // Use abelian_group_from_cyclic (linalg.hpp) to normalise arbitrary
  // cyclic decompositions.
  struct AbelianGroupStructure {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }

    bool is_finite() const noexcept {
      return free_rank == 0;
    }

    // Group order, or nullopt for infinite groups.
    std::optional<Integer> order() const {
      if (free_rank != 0) {
        return std::nullopt;
      }
      Integer n = 1;
      for (auto const& d : torsion) {
        n *= d;
      }
      return n;
    }

    bool satisfies_invariants() const {
      for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) {
          return false;
        }
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(AbelianGroupStructure const&,
                           AbelianGroupStructure const&)
        = default;
  };

  // "0", "Z", "Z^2 + Z/4", "Z/2 + Z/2".
  inline std::string to_string(AbelianGroupStructure const& g) {
    if (g.is_trivial()) {
      return "0";
    }
    std::string out;
    auto        append = [&out](std::string const& term) {
      if (!out.empty()) {
        out += " + ";
      }
      out += term;
    };
    if (g.free_rank == 1) {
      append("Z");
    } else if (g.free_rank > 1) {
      append("Z^" + std::to_string(g.free_rank));
    }
    for (auto const& d : g.torsion) {
      append("Z/" + to_string(d));
    }
    return out;
  }

}  // namespace twistcoh
