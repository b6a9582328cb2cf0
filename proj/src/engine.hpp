#pragma once

// Planar twist engine behind the generator catalog. The surface is modelled
// as a disc with a row of fat objects: the 2n punctures z_1..z_2n (the last
// one standing for the alias loop), then for each handle h = g..1 the two
// holes a_h, b_h of its tube. Loops are whiskers from a basepoint below the
// row; twist corridors pass above the row, so a twist region only moves the
// objects inside its ranges. Not installed; implementation detail.

#include <utility>
#include <vector>

#include "hilden/surface.hpp"

namespace hilden::engine {

// Per-config planar data: the extended letter alphabet (one letter per row
// object) and the substitution back into the surface basis.
class Context {
public:
    explicit Context(SurfaceConfigPtr cf);

    const SurfaceConfigPtr& config() const { return cf_; }
    const AlphabetPtr& galphabet() const { return galph_; }
    int row_size() const { return static_cast<int>(kinds_.size()); }

    // Row positions (0-based). Punctures sit at 0..2n-1; handle h's holes at
    // a_pos(h), b_pos(h) = a_pos(h) + 1, in descending handle order.
    int a_pos(int h) const;
    int b_pos(int h) const;
    char kind(int pos) const { return kinds_[static_cast<std::size_t>(pos)]; }
    int handle_of(int pos) const { return handle_[static_cast<std::size_t>(pos)]; }

    // Planar letter word -> surface word (z_2n to the alias, holes to their
    // boundary classes a_h -> v_h, b_h -> u_h v_h^-1 u_h^-1).
    FreeWord subst(const FreeWord& gword) const;

private:
    SurfaceConfigPtr cf_;
    AlphabetPtr galph_;
    std::vector<char> kinds_;   // 'z', 'a' or 'b' per row position
    std::vector<int> handle_;   // handle number for hole positions, 0 for z
    std::vector<FreeWord> images_; // subst image per planar letter
};

using Range = std::pair<int, int>; // inclusive row positions, lo <= hi

// Dehn twist along the convex curve enclosing the given ranges (ascending,
// disjoint), to the given power. Identity puncture permutation.
MappingClassElement multi_twist(const Context& ctx, const std::vector<Range>& ranges,
                                int sign);

// Drag the objects of range A once around range B (corridor above the row),
// composing with `frame` extra twists around A itself.
MappingClassElement push_blob(const Context& ctx, Range a, Range b, int frame);

// Artin half twist swapping punctures p, p+1 (1 <= p <= 2n-1).
MappingClassElement braid_sigma(const Context& ctx, int p, int sign = 1);

// Dehn twists along the u_j / v_j curves (they miss the puncture row).
MappingClassElement handle_twist_u(const SurfaceConfigPtr& cf, int j, int sign = 1);
MappingClassElement handle_twist_v(const SurfaceConfigPtr& cf, int j, int sign = 1);

// Row range covered by the puncture pair of arc i.
Range pair_range(int i);

// Target range for meridian slides of handle h along admissible basis curve
// b: 1..n are the puncture-pair loops, n+j (j != h) the hole pair of handle j.
Range slide_target(const Context& ctx, int h, int b);

} // namespace hilden::engine
