#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hilden/genword.hpp"
#include "hilden/surface.hpp"

namespace hilden {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Group presentations
// ---------------------------------------------------------------------------
struct GroupPresentation {
    AlphabetPtr generators;
    std::vector<FreeWord> relators; // freely and cyclically reduced

    int generator_count() const { return generators ? generators->size() : 0; }
    int relator_count() const { return static_cast<int>(relators.size()); }
};

// ---------------------------------------------------------------------------
// Integer matrices, Smith normal form, homology
// ---------------------------------------------------------------------------
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> entries; // row-major, rows*cols

    static IntegerMatrix zero(int rows, int cols);
    BigInt& at(int r, int c);
    const BigInt& at(int r, int c) const;
};

struct SNFResult {
    // Full diagonal of the Smith normal form, length min(rows, cols):
    // d_1 | d_2 | ... with nonnegative entries, zeros at the end.
    std::vector<BigInt> invariant_factors;
};

// Exact integer elimination (arbitrary precision, no overflow).
SNFResult smith_normal_form(const IntegerMatrix& m);

struct AbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion; // entries >= 2, in divisibility order

    // "0", "Z", "Z^2 ⊕ Z/3", ...
    std::string to_text() const;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// SNF of the exponent-sum matrix of the relators.
AbelianGroup abelianization(const GroupPresentation& p);

// ---------------------------------------------------------------------------
// Plat pipeline
// ---------------------------------------------------------------------------

// Configs for the plat pipeline, where n = 0 (closed gluing, no arcs) is a
// legal input: the resulting manifold has empty link.
SurfaceConfigPtr plat_config(int g, int n);

// The inclusion-induced map from the surface group into the handlebody-minus-
// arcs group: u_j -> y_j, v_j -> identity, z_{2i-1} -> m_i, z_{2i} -> m_i^-1.
// images are indexed by the surface basis symbols.
struct HandlebodyMap {
    AlphabetPtr source; // surface basis
    AlphabetPtr target; // y_1..y_g, m_1..m_n
    std::vector<FreeWord> images;
};

HandlebodyMap handlebody_images(const SurfaceConfigPtr& config);
FreeWord apply_map(const HandlebodyMap& map, const FreeWord& w);

// Presentation of the fundamental group of the plat-closure complement:
// generators y_j, m_i and their barred copies; one relator per surface basis
// element x, namely image(x) * [barred image of the mirror of (psi sigma)(x)]^-1.
// psi must use only handle-twist factors; sigma only Hilden factors.
GroupPresentation plat_presentation(const SurfaceConfigPtr& config,
                                    const GeneratorWord& psi, const GeneratorWord& sigma);

// Best-effort presentation simplification: free/cyclic relator reduction,
// trivial and duplicate relator removal, elimination of a generator that
// occurs exactly once in some relator, relator-vs-relator subword shortening.
// Deterministic; `effort` bounds the number of passes. The presented group
// (in particular its abelianization) is unchanged.
GroupPresentation tietze_simplify(const GroupPresentation& p, int effort = 64);

// H1 of the plat-closure complement.
AbelianGroup plat_homology(const SurfaceConfigPtr& config, const GeneratorWord& psi,
                           const GeneratorWord& sigma);

// Runs the pipeline for sigma and sigma*epsilon and compares H1 (plat
// closures of words in the same left coset give the same link).
struct CosetReport {
    AbelianGroup h1_sigma;
    AbelianGroup h1_sigma_epsilon;
    GroupPresentation simplified_sigma;
    GroupPresentation simplified_sigma_epsilon;
    bool h1_equal = false;
};

CosetReport coset_equivalence_check(const SurfaceConfigPtr& config, const GeneratorWord& psi,
                                    const GeneratorWord& sigma, const GeneratorWord& epsilon);

// The handle-twist word whose plat closure is the 3-sphere: tu[1] ... tu[g].
// Verified in the test suite by the defining property (trivial simplified
// presentation and H1 = 0 of the closed pipeline).
GeneratorWord psi_s3(int g);

} // namespace hilden
