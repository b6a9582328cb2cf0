#pragma once

#include <optional>

#include "hilden/genword.hpp"
#include "hilden/word.hpp"

namespace hilden {

// Motion-group elements for the trivial n-component unlink, represented by
// their action on the free group F_n = <x_1..x_n>. The representation is
// faithful for this link, so identity and order questions are exact
// automorphism questions.
struct MotionAutomorphism {
    int n = 0;
    FreeAutomorphism aut;
};

enum class MotionKind {
    R, // turn circle i over:            x_i -> x_i^-1
    T, // exchange circles i, i+1:       x_i <-> x_{i+1}
    A, // pull circle i through circle k: x_i -> x_k x_i x_k^-1
};

AlphabetPtr motion_alphabet(int n);

// kind R and T use index i only (T needs i+1 <= n); kind A uses (i, k), i != k.
MotionAutomorphism goldsmith(MotionKind kind, int i, int k, int n);

MotionAutomorphism motion_identity(int n);
MotionAutomorphism operator*(const MotionAutomorphism& a, const MotionAutomorphism& b);
MotionAutomorphism motion_inverse(const MotionAutomorphism& a);
bool motion_equal(const MotionAutomorphism& a, const MotionAutomorphism& b);
bool motion_is_identity(const MotionAutomorphism& a);

// Every motion automorphism sends each x_i to a conjugate of some x_k^{+-1}.
bool motion_shape_ok(const MotionAutomorphism& a);

// Image of a Hilden word under the motion map: iota[i] -> R_i, lam[j] -> T_j,
// sik[i,k] -> A_{ik}, s[i] -> R_i^2. Any other factor throws
// unsupported_generator_error naming the offending token.
MotionAutomorphism hilden_map(const GeneratorWord& word, int n);

// Least k <= max_k with a^k = identity, if any.
std::optional<int> order_probe(const MotionAutomorphism& a, int max_k);

} // namespace hilden
