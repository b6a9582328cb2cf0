#include "hilden/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hilden {

// ---------------------------------------------------------------------------
// Alphabet
// ---------------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty())
            throw alphabet_error("alphabet symbol names must be nonempty");
        auto [_, fresh] = index_.emplace(names_[i], i);
        if (!fresh)
            throw alphabet_error("duplicate symbol name '" + names_[i] + "'");
    }
}

const std::string& Alphabet::name(int sym) const {
    if (sym < 0 || sym >= size())
        throw index_error("symbol index " + std::to_string(sym) + " out of range");
    return names_[sym];
}

std::optional<int> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Alphabet::at(std::string_view name) const {
    auto r = find(name);
    if (!r)
        throw alphabet_error("unknown symbol '" + std::string(name) + "'");
    return *r;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (!same_alphabet(a, b))
        throw alphabet_error("operands use different alphabets");
}

void require_alphabet(const AlphabetPtr& a) {
    if (!a) throw alphabet_error("word has no alphabet");
}

} // namespace

// ---------------------------------------------------------------------------
// FreeWord / WordBuilder
// ---------------------------------------------------------------------------

void WordBuilder::push(Letter l) {
    if (l.exp == 0) return;
    if (l.exp != 1 && l.exp != -1) {
        for (int i = 0; i < std::abs(l.exp); ++i)
            push({l.sym, l.exp > 0 ? 1 : -1});
        return;
    }
    if (l.sym < 0 || l.sym >= alphabet_->size())
        throw alphabet_error("letter symbol index out of range");
    if (!letters_.empty() && letters_.back().sym == l.sym &&
        letters_.back().exp == -l.exp) {
        letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

void WordBuilder::append(const FreeWord& w) {
    require_same(alphabet_, w.alphabet());
    for (const Letter& l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const FreeWord& w) {
    require_same(alphabet_, w.alphabet());
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        push({it->sym, -it->exp});
}

void WordBuilder::append_power(const FreeWord& w, int k) {
    for (int i = 0; i < std::abs(k); ++i) {
        if (k > 0)
            append(w);
        else
            append_inverse(w);
    }
}

FreeWord WordBuilder::take() {
    FreeWord w(alphabet_);
    w.letters_ = std::move(letters_);
    letters_.clear();
    return w;
}

FreeWord::FreeWord(AlphabetPtr alphabet, const std::vector<Letter>& letters)
    : alphabet_(std::move(alphabet)) {
    require_alphabet(alphabet_);
    WordBuilder b(alphabet_);
    for (const Letter& l : letters) b.push(l);
    *this = b.take();
}

FreeWord reduce(const AlphabetPtr& alphabet, const std::vector<Letter>& letters) {
    return FreeWord(alphabet, letters);
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
    require_alphabet(a.alphabet());
    require_same(a.alphabet(), b.alphabet());
    WordBuilder out(a.alphabet());
    out.append(a);
    out.append(b);
    return out.take();
}

FreeWord invert(const FreeWord& a) {
    require_alphabet(a.alphabet());
    FreeWord w(a.alphabet());
    w.letters_.reserve(a.letters().size());
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
        w.letters_.push_back({it->sym, -it->exp});
    return w;
}

FreeWord power(const FreeWord& a, int k) {
    require_alphabet(a.alphabet());
    WordBuilder out(a.alphabet());
    out.append_power(a, k);
    return out.take();
}

FreeWord conjugate(const FreeWord& a, const FreeWord& c) {
    WordBuilder out(c.alphabet());
    out.append(c);
    out.append(a);
    out.append_inverse(c);
    return out.take();
}

CyclicReduction cyclic_reduce(const FreeWord& a) {
    require_alphabet(a.alphabet());
    const auto& ls = a.letters();
    std::size_t lo = 0, hi = ls.size();
    std::vector<Letter> pre;
    while (hi - lo >= 2 && ls[lo].sym == ls[hi - 1].sym && ls[lo].exp == -ls[hi - 1].exp) {
        pre.push_back(ls[lo]);
        ++lo;
        --hi;
    }
    CyclicReduction r;
    r.core = FreeWord(a.alphabet());
    r.conjugator = FreeWord(a.alphabet(), pre);
    std::vector<Letter> core(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                             ls.begin() + static_cast<std::ptrdiff_t>(hi));
    r.core = FreeWord(a.alphabet(), core);
    return r;
}

bool are_conjugate(const FreeWord& a, const FreeWord& b) {
    require_same(a.alphabet(), b.alphabet());
    const auto ca = cyclic_reduce(a).core.letters();
    const auto cb = cyclic_reduce(b).core.letters();
    if (ca.size() != cb.size()) return false;
    if (ca.empty()) return true;
    // cb must occur in ca doubled (cyclic rotation); KMP keeps this linear
    // even for the long words the plat pipeline produces.
    std::vector<std::size_t> fail(cb.size(), 0);
    for (std::size_t i = 1, k = 0; i < cb.size(); ++i) {
        while (k > 0 && !(cb[i] == cb[k])) k = fail[k - 1];
        if (cb[i] == cb[k]) ++k;
        fail[i] = k;
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < 2 * ca.size(); ++i) {
        const Letter& c = ca[i % ca.size()];
        while (k > 0 && !(c == cb[k])) k = fail[k - 1];
        if (c == cb[k]) ++k;
        if (k == cb.size()) return true;
    }
    return false;
}

FreeWord letter_word(const AlphabetPtr& alphabet, int sym, int exp) {
    WordBuilder b(alphabet);
    b.push({sym, exp});
    return b.take();
}

FreeWord symbols_word(const AlphabetPtr& alphabet, const std::vector<int>& syms) {
    WordBuilder b(alphabet);
    for (int s : syms) b.push({s, 1});
    return b.take();
}

std::string to_string(const FreeWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << w.alphabet()->name(l.sym);
        if (l.exp != 1) os << "^" << l.exp;
    }
    return os.str();
}

FreeWord parse_word_literal(const AlphabetPtr& alphabet, std::string_view text) {
    WordBuilder b(alphabet);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::string_view tok = text.substr(start, i - start);
        std::string_view name = tok;
        int exp = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            name = tok.substr(0, caret);
            std::string_view num = tok.substr(caret + 1);
            auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), exp);
            if (ec != std::errc() || p != num.data() + num.size() || exp == 0)
                throw parse_error("bad exponent in token '" + std::string(tok) + "'", start);
        }
        auto sym = alphabet->find(name);
        if (!sym)
            throw parse_error("unknown symbol '" + std::string(name) + "'", start);
        b.push({*sym, exp});
    }
    return b.take();
}

// ---------------------------------------------------------------------------
// FreeEndomorphism
// ---------------------------------------------------------------------------

FreeEndomorphism::FreeEndomorphism(AlphabetPtr alphabet, std::vector<FreeWord> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    require_alphabet(alphabet_);
    if (static_cast<int>(images_.size()) != alphabet_->size())
        throw alphabet_error("endomorphism needs one image per symbol");
    for (const FreeWord& w : images_)
        require_same(alphabet_, w.alphabet());
}

FreeEndomorphism FreeEndomorphism::identity(const AlphabetPtr& alphabet) {
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(alphabet->size()));
    for (int s = 0; s < alphabet->size(); ++s)
        images.push_back(letter_word(alphabet, s));
    return FreeEndomorphism(alphabet, std::move(images));
}

const FreeWord& FreeEndomorphism::image(int sym) const {
    if (sym < 0 || sym >= static_cast<int>(images_.size()))
        throw index_error("symbol index " + std::to_string(sym) + " out of range");
    return images_[static_cast<std::size_t>(sym)];
}

const FreeWord& FreeEndomorphism::image_of(std::string_view name) const {
    return image(alphabet_->at(name));
}

bool FreeEndomorphism::is_identity() const {
    for (int s = 0; s < static_cast<int>(images_.size()); ++s) {
        const auto& ls = images_[static_cast<std::size_t>(s)].letters();
        if (ls.size() != 1 || ls[0].sym != s || ls[0].exp != 1) return false;
    }
    return true;
}

void FreeEndomorphism::set_image(int sym, FreeWord w) {
    require_same(alphabet_, w.alphabet());
    if (sym < 0 || sym >= static_cast<int>(images_.size()))
        throw index_error("symbol index " + std::to_string(sym) + " out of range");
    images_[static_cast<std::size_t>(sym)] = std::move(w);
}

FreeWord apply(const FreeEndomorphism& f, const FreeWord& w) {
    require_same(f.alphabet(), w.alphabet());
    WordBuilder out(f.alphabet());
    for (const Letter& l : w.letters()) {
        if (l.exp == 1)
            out.append(f.image(l.sym));
        else
            out.append_inverse(f.image(l.sym));
    }
    return out.take();
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g) {
    require_same(f.alphabet(), g.alphabet());
    std::vector<FreeWord> images;
    images.reserve(g.images().size());
    for (const FreeWord& w : g.images())
        images.push_back(apply(f, w));
    return FreeEndomorphism(f.alphabet(), std::move(images));
}

// ---------------------------------------------------------------------------
// FreeAutomorphism
// ---------------------------------------------------------------------------

FreeAutomorphism::FreeAutomorphism(FreeEndomorphism forward, FreeEndomorphism backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
    require_same(forward_.alphabet(), backward_.alphabet());
    if (!compose(forward_, backward_).is_identity() ||
        !compose(backward_, forward_).is_identity())
        throw automorphism_error("forward and backward maps are not two-sided inverses");
}

FreeAutomorphism::FreeAutomorphism(FreeEndomorphism f, FreeEndomorphism b, trusted_tag)
    : forward_(std::move(f)), backward_(std::move(b)) {}

FreeAutomorphism FreeAutomorphism::identity(const AlphabetPtr& alphabet) {
    auto id = FreeEndomorphism::identity(alphabet);
    return trusted(id, id);
}

FreeAutomorphism FreeAutomorphism::trusted(FreeEndomorphism forward,
                                           FreeEndomorphism backward) {
    return FreeAutomorphism(std::move(forward), std::move(backward), trusted_tag{});
}

FreeAutomorphism FreeAutomorphism::inverse() const {
    return trusted(backward_, forward_);
}

FreeWord apply(const FreeAutomorphism& f, const FreeWord& w) {
    return apply(f.forward(), w);
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
    return FreeAutomorphism::trusted(compose(f.forward(), g.forward()),
                                     compose(g.backward(), f.backward()));
}

std::optional<FreeWord> is_inner(const FreeAutomorphism& f) {
    const AlphabetPtr& alph = f.alphabet();
    const int rank = alph->size();
    if (rank == 0) return FreeWord(alph);
    const FreeWord x = letter_word(alph, 0);
    const FreeWord& img = f.forward().image(0);
    if (rank == 1) {
        // Rank one: the group is abelian, the only inner automorphism is the
        // identity.
        if (img == x) return FreeWord(alph);
        return std::nullopt;
    }
    CyclicReduction cr = cyclic_reduce(img);
    if (!(cr.core == x)) return std::nullopt;
    // Conjugators agreeing on x differ by the centralizer of x, which is
    // generated by x itself; bound the power by the longest image.
    int bound = 0;
    for (const FreeWord& w : f.forward().images())
        bound = std::max(bound, w.length());
    bound = bound / 2 + 2;
    for (int m = -bound; m <= bound; ++m) {
        FreeWord w = multiply(cr.conjugator, power(x, m));
        bool ok = true;
        for (int s = 0; s < rank && ok; ++s) {
            if (!(f.forward().image(s) == conjugate(letter_word(alph, s), w)))
                ok = false;
        }
        if (ok) return w;
    }
    return std::nullopt;
}

bool equal_up_to_inner(const FreeAutomorphism& f, const FreeAutomorphism& g) {
    require_same(f.alphabet(), g.alphabet());
    // f o g^-1, built directly from the verified backward table of g.
    FreeEndomorphism d = compose(f.forward(), g.backward());
    return is_inner(FreeAutomorphism::trusted(d, compose(g.forward(), f.backward())))
        .has_value();
}

} // namespace hilden
