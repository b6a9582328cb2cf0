#include "hilden/genword.hpp"

#include <charconv>
#include <cctype>
#include <sstream>

namespace hilden {

namespace {

struct Spelling {
    GeneratorKind kind;
    const char* token;
    int arity;
};

constexpr Spelling spellings[] = {
    {GeneratorKind::Interval, "iota", 1},
    {GeneratorKind::Exchange, "lam", 1},
    {GeneratorKind::Twist, "s", 1},
    {GeneratorKind::SlideM, "m", 2},
    {GeneratorKind::SlideL, "l", 2},
    {GeneratorKind::SlideS, "sik", 2},
    {GeneratorKind::SlideSP, "sikp", 2},
    {GeneratorKind::SlideT, "t", 2},
    {GeneratorKind::HandleTwistU, "tu", 1},
    {GeneratorKind::HandleTwistV, "tv", 1},
};

const Spelling* spelling_of(GeneratorKind kind) {
    for (const auto& s : spellings)
        if (s.kind == kind) return &s;
    return nullptr;
}

const Spelling* spelling_named(std::string_view token) {
    for (const auto& s : spellings)
        if (token == s.token) return &s;
    return nullptr;
}

} // namespace

std::string to_token(const GeneratorName& name) {
    std::ostringstream os;
    if (name.kind == GeneratorKind::MeridianSlide) {
        os << (name.primed ? "merp" : "mer") << '[' << name.a << ',' << name.b << ']';
        return os.str();
    }
    const Spelling* s = spelling_of(name.kind);
    os << s->token << '[' << name.a;
    if (s->arity == 2) os << ',' << name.b;
    os << ']';
    return os.str();
}

std::string to_string(const GeneratorWord& word) {
    std::ostringstream os;
    bool first = true;
    for (const GeneratorFactor& f : word.factors) {
        if (!first) os << ' ';
        first = false;
        os << to_token(f.name);
        if (f.exponent == -1) os << "^-1";
    }
    return os.str();
}

namespace {

int parse_int(std::string_view text, std::size_t token_pos, std::string_view what) {
    int value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || p != text.data() + text.size())
        throw parse_error("bad " + std::string(what) + " '" + std::string(text) + "'",
                          token_pos);
    return value;
}

GeneratorName parse_token_name(std::string_view tok, std::size_t pos) {
    auto open = tok.find('[');
    if (open == std::string_view::npos || tok.back() != ']')
        throw parse_error("expected name[indices] in token '" + std::string(tok) + "'", pos);
    std::string_view head = tok.substr(0, open);
    std::string_view inner = tok.substr(open + 1, tok.size() - open - 2);

    std::vector<int> idx;
    std::size_t start = 0;
    while (start <= inner.size()) {
        auto comma = inner.find(',', start);
        std::string_view part =
            comma == std::string_view::npos ? inner.substr(start) : inner.substr(start, comma - start);
        idx.push_back(parse_int(part, pos, "index"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (int i : idx)
        if (i < 1)
            throw index_error("index " + std::to_string(i) + " in '" + std::string(tok) +
                              "' must be >= 1");

    if (head == "mer" || head == "merp") {
        if (idx.size() != 2)
            throw parse_error("'" + std::string(head) + "' takes two indices", pos);
        return GeneratorName::meridian(idx[0], idx[1], head == "merp");
    }
    const Spelling* s = spelling_named(head);
    if (!s)
        throw parse_error("unknown generator '" + std::string(head) + "'", pos);
    if (static_cast<int>(idx.size()) != s->arity)
        throw parse_error("'" + std::string(head) + "' takes " + std::to_string(s->arity) +
                              (s->arity == 1 ? " index" : " indices"),
                          pos);
    GeneratorName name;
    name.kind = s->kind;
    name.a = idx[0];
    if (s->arity == 2) name.b = idx[1];
    return name;
}

} // namespace

GeneratorWord parse_generator_word(std::string_view text) {
    GeneratorWord word;
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
        std::string_view body = tok;
        int exp = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            body = tok.substr(0, caret);
            exp = parse_int(tok.substr(caret + 1), start, "exponent");
            if (exp == 0)
                throw parse_error("zero exponent in token '" + std::string(tok) + "'", start);
        }
        GeneratorName name = parse_token_name(body, start);
        for (int r = 0; r < std::abs(exp); ++r)
            word.factors.push_back({name, exp > 0 ? 1 : -1});
    }
    return word;
}

GeneratorWord inverse(const GeneratorWord& word) {
    GeneratorWord out;
    out.factors.reserve(word.factors.size());
    for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it)
        out.factors.push_back({it->name, -it->exponent});
    return out;
}

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b) {
    GeneratorWord out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

} // namespace hilden
