#pragma once

#include <optional>
#include <vector>

#include "hilden/surface.hpp"

namespace hilden {

// A permutation of the n arcs together with a +-1 flip per arc (whether the
// two endpoints of the arc were exchanged). Composition follows the
// semidirect-product law: multiplying a after b flips arc i iff exactly one
// of b at i and a at b's image of i does.
struct SignedPermutation {
    std::vector<int> perm;  // 0-based: arc i -> perm[i]
    std::vector<int> signs; // +1 or -1 per source arc

    int size() const { return static_cast<int>(perm.size()); }
    static SignedPermutation identity(int n);
    bool is_identity() const;
    std::string to_text() const; // "perm: 2 1 | signs: + -"

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// a*b: b applied first (same convention as elements and permutations).
SignedPermutation signed_multiply(const SignedPermutation& a, const SignedPermutation& b);

// The permutation induced on the 2n punctures.
PuncturePermutation puncture_perm(const MappingClassElement& elem);

// Splits p into (arc permutation, flips) when p respects the pairing
// {2i-1, 2i}; empty when some pair is split.
std::optional<SignedPermutation> signed_decompose(const PuncturePermutation& p, int n);

// True iff the element fixes every puncture.
bool is_pure(const MappingClassElement& elem);

// Necessary condition for acting trivially on the closed surface's homology:
// h1_matrix is the identity. Not sufficient; documented as a screen for
// user-entered words.
bool kernel_omega_necessary(const MappingClassElement& elem);

// Brute-force closure of a permutation set under products (breadth-first).
// Test support for comparing generated images against expected subgroups.
std::vector<PuncturePermutation> permutation_closure(
    const std::vector<PuncturePermutation>& generators);

} // namespace hilden
