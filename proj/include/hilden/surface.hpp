#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hilden/genword.hpp"
#include "hilden/word.hpp"

namespace hilden {

// ---------------------------------------------------------------------------
// SurfaceConfig: the 2n-punctured genus-g surface. pi_1 is free on
// u_1, v_1, ..., u_g, v_g, z_1, ..., z_{2n-1} (that symbol order); the last
// puncture loop z_{2n} is the alias (z_1...z_{2n-1})^-1 * prod_j [u_j, v_j],
// so that the surface relator prod_j [u_j,v_j] = z_1...z_{2n} holds.
// ---------------------------------------------------------------------------
class SurfaceConfig {
public:
    int genus() const { return g_; }
    int arcs() const { return n_; }
    int punctures() const { return 2 * n_; }
    // Free basis alphabet, rank 2g + 2n - 1 (for n >= 1).
    const AlphabetPtr& alphabet() const { return alphabet_; }

    // Symbol indices (1-based handles/punctures).
    int u(int j) const;
    int v(int j) const;
    int z(int k) const; // k in 1..2n-1

    // z_{2n} expanded over the free basis.
    const FreeWord& alias() const { return alias_; }
    // The loop around puncture k, for k in 1..2n (k = 2n gives the alias).
    FreeWord z_word(int k) const;

    // Use make_config (or, for the plat pipeline's closed-surface case,
    // detail::make_config_unchecked) instead of constructing directly.
    SurfaceConfig(int g, int n);

private:
    int g_, n_;
    AlphabetPtr alphabet_;
    FreeWord alias_;
};

using SurfaceConfigPtr = std::shared_ptr<const SurfaceConfig>;

// g >= 0 and n >= 1 (a bridge decomposition needs at least one arc).
SurfaceConfigPtr make_config(int g, int n);

namespace detail {
// Closed-surface variant (n = 0) used by the plat pipeline when computing
// the ambient manifold's homology; not part of the public contract.
SurfaceConfigPtr make_config_unchecked(int g, int n);
} // namespace detail

// True if the two configs have the same parameters (interchangeable values).
bool same_config(const SurfaceConfigPtr& a, const SurfaceConfigPtr& b);

// ---------------------------------------------------------------------------
// PuncturePermutation: bijection of the 2n punctures. Stored 0-based;
// printed 1-based.
// ---------------------------------------------------------------------------
struct PuncturePermutation {
    std::vector<int> img; // img[i] = image of puncture i (0-based)

    static PuncturePermutation identity(int size);
    int size() const { return static_cast<int>(img.size()); }
    bool is_identity() const;
    // 1-based image lookup: where puncture k in 1..2n goes.
    int map1(int k) const;
    PuncturePermutation inverse() const;
    std::string one_line() const; // e.g. "2 1 3 4"

    friend bool operator==(const PuncturePermutation&, const PuncturePermutation&) = default;
    // (a*b).img[i] = a.img[b.img[i]] (b applied first, like the action).
    friend PuncturePermutation operator*(const PuncturePermutation& a,
                                         const PuncturePermutation& b);
};

// ---------------------------------------------------------------------------
// MappingClassElement: an automorphism representative of a mapping class,
// with its puncture permutation and the generator word it came from.
// ---------------------------------------------------------------------------
struct MappingClassElement {
    SurfaceConfigPtr config;
    FreeAutomorphism action;
    PuncturePermutation perm;
    GeneratorWord provenance;
};

MappingClassElement identity_element(const SurfaceConfigPtr& config);
// (a*b): b's automorphism applied first; provenance words concatenate a, b.
MappingClassElement operator*(const MappingClassElement& a, const MappingClassElement& b);
MappingClassElement inverse(const MappingClassElement& m);
MappingClassElement element_power(const MappingClassElement& m, int k);

// ---------------------------------------------------------------------------
// Validation: (a) each puncture loop maps to a conjugate of the loop of the
// image puncture with exponent +1; (b) the boundary relator is preserved,
// i.e. the alias loop z_{2n} also maps to the conjugate of its image loop;
// (c) the action and its backward table are honest two-sided inverses.
// ---------------------------------------------------------------------------
struct ValidationReport {
    bool pass = false;
    char clause = 0;     // 'a', 'b' or 'c' when failing
    int puncture = 0;    // failing k for clauses a/b (1-based)
    std::string witness; // offending image word, printed
    std::string message;
};

ValidationReport validate(const MappingClassElement& elem);

// Abelianized action restricted to the handle classes (z_k -> 0):
// entry [r][c] = coefficient of basis c in the image of basis r, both indexed
// u_1, v_1, ..., u_g, v_g. Identity for every Hilden-catalog element.
std::vector<std::vector<long long>> h1_matrix(const MappingClassElement& elem);

// Perms equal and actions equal up to inner automorphism. Throws
// config_error when the configs differ.
bool equal(const MappingClassElement& a, const MappingClassElement& b);

} // namespace hilden
