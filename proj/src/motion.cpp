#include "hilden/motion.hpp"

namespace hilden {

AlphabetPtr motion_alphabet(int n) {
    if (n < 1) throw config_error("component count must be >= 1, got " + std::to_string(n));
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_alphabet(std::move(names));
}

MotionAutomorphism goldsmith(MotionKind kind, int i, int k, int n) {
    AlphabetPtr a = motion_alphabet(n);
    auto check = [&](int idx, int hi, const char* what) {
        if (idx < 1 || idx > hi)
            throw index_error(std::string(what) + " " + std::to_string(idx) +
                              " out of range 1.." + std::to_string(hi));
    };
    FreeEndomorphism fwd = FreeEndomorphism::identity(a);
    FreeEndomorphism bwd = FreeEndomorphism::identity(a);
    switch (kind) {
    case MotionKind::R:
        check(i, n, "circle index");
        fwd.set_image(i - 1, letter_word(a, i - 1, -1));
        bwd.set_image(i - 1, letter_word(a, i - 1, -1));
        break;
    case MotionKind::T:
        check(i, n - 1, "circle index");
        fwd.set_image(i - 1, letter_word(a, i));
        fwd.set_image(i, letter_word(a, i - 1));
        bwd = fwd;
        break;
    case MotionKind::A: {
        check(i, n, "circle index");
        check(k, n, "circle index");
        if (i == k)
            throw index_error("pull-through needs two distinct circles, got " +
                              std::to_string(i) + "," + std::to_string(k));
        FreeWord xk = letter_word(a, k - 1);
        fwd.set_image(i - 1, conjugate(letter_word(a, i - 1), xk));
        bwd.set_image(i - 1, conjugate(letter_word(a, i - 1), invert(xk)));
        break;
    }
    }
    return {n, FreeAutomorphism(std::move(fwd), std::move(bwd))};
}

MotionAutomorphism motion_identity(int n) {
    return {n, FreeAutomorphism::identity(motion_alphabet(n))};
}

MotionAutomorphism operator*(const MotionAutomorphism& a, const MotionAutomorphism& b) {
    if (a.n != b.n) throw config_error("motion component counts differ");
    return {a.n, compose(a.aut, b.aut)};
}

MotionAutomorphism motion_inverse(const MotionAutomorphism& a) {
    return {a.n, a.aut.inverse()};
}

bool motion_equal(const MotionAutomorphism& a, const MotionAutomorphism& b) {
    if (a.n != b.n) throw config_error("motion component counts differ");
    return a.aut.forward() == b.aut.forward();
}

bool motion_is_identity(const MotionAutomorphism& a) {
    return a.aut.forward().is_identity();
}

bool motion_shape_ok(const MotionAutomorphism& a) {
    for (const FreeWord& img : a.aut.forward().images()) {
        CyclicReduction cr = cyclic_reduce(img);
        if (cr.core.length() != 1) return false;
    }
    return true;
}

MotionAutomorphism hilden_map(const GeneratorWord& word, int n) {
    MotionAutomorphism out = motion_identity(n);
    for (const GeneratorFactor& f : word.factors) {
        MotionAutomorphism step = motion_identity(n);
        switch (f.name.kind) {
        case GeneratorKind::Interval:
            step = goldsmith(MotionKind::R, f.name.a, 0, n);
            break;
        case GeneratorKind::Exchange:
            step = goldsmith(MotionKind::T, f.name.a, 0, n);
            break;
        case GeneratorKind::SlideS:
            step = goldsmith(MotionKind::A, f.name.a, f.name.b, n);
            break;
        case GeneratorKind::Twist: {
            MotionAutomorphism r = goldsmith(MotionKind::R, f.name.a, 0, n);
            step = r * r;
            break;
        }
        default:
            throw unsupported_generator_error("'" + to_token(f.name) +
                                              "' has no motion-group image");
        }
        if (f.exponent == -1) step = motion_inverse(step);
        out = out * step;
    }
    return out;
}

std::optional<int> order_probe(const MotionAutomorphism& a, int max_k) {
    if (max_k < 1) throw config_error("max_k must be >= 1");
    MotionAutomorphism acc = motion_identity(a.n);
    for (int k = 1; k <= max_k; ++k) {
        acc = acc * a;
        if (motion_is_identity(acc)) return k;
    }
    return std::nullopt;
}

} // namespace hilden
