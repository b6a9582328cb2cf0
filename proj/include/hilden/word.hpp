#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilden/errors.hpp"

namespace hilden {

// ---------------------------------------------------------------------------
// Alphabet: an ordered set of named symbols. Symbols are identified by their
// 0-based position; words store positions, not strings. Alphabets are shared
// (immutable) and compared by content so that two configs built with the same
// parameters produce interoperable words.
// ---------------------------------------------------------------------------
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int sym) const;
    // Returns the symbol index, or nullopt if the name is unknown.
    std::optional<int> find(std::string_view name) const;
    // Like find(), but throws alphabet_error.
    int at(std::string_view name) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// True if the two handles denote the same alphabet (pointer fast path, then
// content comparison).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

// A single letter: symbol index and exponent (always +1 or -1 once stored).
struct Letter {
    std::int32_t sym;
    std::int32_t exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// ---------------------------------------------------------------------------
// FreeWord: a freely reduced word over an alphabet. All constructors
// normalize, so equality is plain sequence equality.
// ---------------------------------------------------------------------------
class FreeWord {
public:
    FreeWord() = default; // placeholder with no alphabet; unusable in ops
    explicit FreeWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
    FreeWord(AlphabetPtr alphabet, const std::vector<Letter>& letters);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.letters_ == b.letters_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;

    friend FreeWord multiply(const FreeWord&, const FreeWord&);
    friend FreeWord invert(const FreeWord&);
    friend class WordBuilder;
};

// Incremental reduced-word builder used by everything that concatenates.
class WordBuilder {
public:
    explicit WordBuilder(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
    void push(Letter l);
    void append(const FreeWord& w);
    void append_inverse(const FreeWord& w);
    void append_power(const FreeWord& w, int k);
    FreeWord take();

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

// Core operations. All binary operations require compatible alphabets and
// throw alphabet_error otherwise.
FreeWord reduce(const AlphabetPtr& alphabet, const std::vector<Letter>& letters);
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
FreeWord power(const FreeWord& a, int k);
// conjugate(a, c) = c a c^-1
FreeWord conjugate(const FreeWord& a, const FreeWord& c);

struct CyclicReduction {
    FreeWord core;       // cyclically reduced
    FreeWord conjugator; // a = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const FreeWord& a);

// True if a and b are conjugate in the free group (cyclic-word comparison).
bool are_conjugate(const FreeWord& a, const FreeWord& b);

// Convenience: a one-letter word.
FreeWord letter_word(const AlphabetPtr& alphabet, int sym, int exp = 1);
// The word sym_1 sym_2 ... for the given 0-based symbol indices.
FreeWord symbols_word(const AlphabetPtr& alphabet, const std::vector<int>& syms);

// Word literal syntax: whitespace-separated tokens `sym` or `sym^k` with a
// nonzero integer k (the printed form only ever uses `^-1`); the empty string
// is the identity.
std::string to_string(const FreeWord& w);
FreeWord parse_word_literal(const AlphabetPtr& alphabet, std::string_view text);

// ---------------------------------------------------------------------------
// FreeEndomorphism: symbol -> word self-map of a free group.
// ---------------------------------------------------------------------------
class FreeEndomorphism {
public:
    FreeEndomorphism() = default;
    FreeEndomorphism(AlphabetPtr alphabet, std::vector<FreeWord> images);

    static FreeEndomorphism identity(const AlphabetPtr& alphabet);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<FreeWord>& images() const { return images_; }
    const FreeWord& image(int sym) const;
    const FreeWord& image_of(std::string_view name) const;
    bool is_identity() const;

    // Replace one image (used while building tables; the result is still a
    // value object once handed out).
    void set_image(int sym, FreeWord w);

    // Value comparison: distinct alphabet instances with the same symbol
    // names are interchangeable.
    friend bool operator==(const FreeEndomorphism& a, const FreeEndomorphism& b) {
        if (a.alphabet_ != b.alphabet_) {
            if (!a.alphabet_ || !b.alphabet_) return false;
            if (!(*a.alphabet_ == *b.alphabet_)) return false;
        }
        return a.images_ == b.images_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<FreeWord> images_;
};

FreeWord apply(const FreeEndomorphism& f, const FreeWord& w);
// compose(f, g): apply g first; apply(compose(f,g), w) == apply(f, apply(g, w)).
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g);

// ---------------------------------------------------------------------------
// FreeAutomorphism: a pair of endomorphisms verified to be two-sided inverses
// at construction.
// ---------------------------------------------------------------------------
class FreeAutomorphism {
public:
    FreeAutomorphism() = default;
    // Throws automorphism_error unless forward and backward invert each other.
    FreeAutomorphism(FreeEndomorphism forward, FreeEndomorphism backward);

    static FreeAutomorphism identity(const AlphabetPtr& alphabet);
    // Trusted constructor for internally derived pairs (compose/inverse of
    // already-verified automorphisms); skips the quadratic recheck.
    static FreeAutomorphism trusted(FreeEndomorphism forward, FreeEndomorphism backward);

    const FreeEndomorphism& forward() const { return forward_; }
    const FreeEndomorphism& backward() const { return backward_; }
    const AlphabetPtr& alphabet() const { return forward_.alphabet(); }

    FreeAutomorphism inverse() const;

private:
    FreeEndomorphism forward_;
    FreeEndomorphism backward_;
    struct trusted_tag {};
    FreeAutomorphism(FreeEndomorphism f, FreeEndomorphism b, trusted_tag);
};

FreeWord apply(const FreeAutomorphism& f, const FreeWord& w);
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);

// Returns w with f(x) = w x w^-1 for every symbol x, if f is inner. The
// candidate set comes from the cyclic reduction of the image of the first
// symbol, extended by powers of that symbol (its centralizer), bounded by the
// image lengths; each candidate is verified against all symbols.
std::optional<FreeWord> is_inner(const FreeAutomorphism& f);

// True iff compose(f, g.inverse()) is inner.
bool equal_up_to_inner(const FreeAutomorphism& f, const FreeAutomorphism& g);

} // namespace hilden
