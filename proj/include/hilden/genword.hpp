#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilden/errors.hpp"

namespace hilden {

// Names of the catalog generator families. Grammar tokens in comments.
enum class GeneratorKind {
    Interval,      // iota[i]   half twist exchanging the endpoints of arc i
    Exchange,      // lam[i]    exchange of arcs i, i+1
    Twist,         // s[i]      full twist around arc i (= iota[i]^2)
    SlideM,        // m[i,j]    slide arc i through handle j, meridian-wise
    SlideL,        // l[i,j]    slide arc i through handle j, longitude-wise
    SlideS,        // sik[i,k]  slide arc i around the left puncture of arc k
    SlideSP,       // sikp[i,k] slide arc i around the right puncture of arc k
    SlideT,        // t[i,k]    slide arc i around both punctures of arc k
    MeridianSlide, // mer[h,b] / merp[h,b]  slide a meridian disk of handle h
                   // around admissible basis curve b
    HandleTwistU,  // tu[j]     Dehn twist along the u_j curve (psi generator)
    HandleTwistV,  // tv[j]     Dehn twist along the v_j curve (psi generator)
};

struct GeneratorName {
    GeneratorKind kind;
    int a = 0;            // i (arc) or h (handle) or j (handle)
    int b = 0;            // j / k / basis-curve index, when the family has one
    bool primed = false;  // MeridianSlide only: mer vs merp

    friend bool operator==(const GeneratorName&, const GeneratorName&) = default;

    static GeneratorName interval(int i) { return {GeneratorKind::Interval, i, 0, false}; }
    static GeneratorName exchange(int i) { return {GeneratorKind::Exchange, i, 0, false}; }
    static GeneratorName twist(int i) { return {GeneratorKind::Twist, i, 0, false}; }
    static GeneratorName slide_m(int i, int j) { return {GeneratorKind::SlideM, i, j, false}; }
    static GeneratorName slide_l(int i, int j) { return {GeneratorKind::SlideL, i, j, false}; }
    static GeneratorName slide_s(int i, int k) { return {GeneratorKind::SlideS, i, k, false}; }
    static GeneratorName slide_sp(int i, int k) { return {GeneratorKind::SlideSP, i, k, false}; }
    static GeneratorName slide_t(int i, int k) { return {GeneratorKind::SlideT, i, k, false}; }
    static GeneratorName meridian(int h, int b, bool primed) {
        return {GeneratorKind::MeridianSlide, h, b, primed};
    }
    static GeneratorName handle_u(int j) { return {GeneratorKind::HandleTwistU, j, 0, false}; }
    static GeneratorName handle_v(int j) { return {GeneratorKind::HandleTwistV, j, 0, false}; }

    // True for the psi families (handle twists), false for Hilden families.
    bool is_handle_twist() const {
        return kind == GeneratorKind::HandleTwistU || kind == GeneratorKind::HandleTwistV;
    }
};

struct GeneratorFactor {
    GeneratorName name;
    int exponent; // +1 or -1
    friend bool operator==(const GeneratorFactor&, const GeneratorFactor&) = default;
};

struct GeneratorWord {
    std::vector<GeneratorFactor> factors;
    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
    bool empty() const { return factors.empty(); }
};

// Grammar: whitespace-separated tokens `name[indices]` optionally suffixed
// `^-1` (an integer exponent is accepted and expanded into +-1 factors).
// Indices are 1-based; 0 or negative indices are rejected at parse time,
// range checks against a config happen at evaluation time.
std::string to_token(const GeneratorName& name);
std::string to_string(const GeneratorWord& word);
GeneratorWord parse_generator_word(std::string_view text);

GeneratorWord inverse(const GeneratorWord& word);
GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b);

} // namespace hilden
