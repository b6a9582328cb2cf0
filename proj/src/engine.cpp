#include "engine.hpp"

#include <algorithm>
#include <map>

namespace hilden::engine {

// ---------------------------------------------------------------------------
// Context
// ---------------------------------------------------------------------------

Context::Context(SurfaceConfigPtr cf) : cf_(std::move(cf)) {
    const int g = cf_->genus();
    const int n = cf_->arcs();
    std::vector<std::string> names;
    for (int k = 1; k <= 2 * n; ++k) {
        names.push_back("z" + std::to_string(k));
        kinds_.push_back('z');
        handle_.push_back(0);
    }
    for (int h = g; h >= 1; --h) {
        names.push_back("a" + std::to_string(h));
        kinds_.push_back('a');
        handle_.push_back(h);
        names.push_back("b" + std::to_string(h));
        kinds_.push_back('b');
        handle_.push_back(h);
    }
    galph_ = make_alphabet(std::move(names));

    const auto& basis = cf_->alphabet();
    for (int pos = 0; pos < row_size(); ++pos) {
        if (kinds_[static_cast<std::size_t>(pos)] == 'z') {
            int k = pos + 1;
            images_.push_back(cf_->z_word(k)); // k = 2n expands to the alias
        } else if (kinds_[static_cast<std::size_t>(pos)] == 'a') {
            images_.push_back(letter_word(basis, cf_->v(handle_of(pos))));
        } else {
            int h = handle_of(pos);
            WordBuilder b(basis);
            b.push({cf_->u(h), 1});
            b.push({cf_->v(h), -1});
            b.push({cf_->u(h), -1});
            images_.push_back(b.take());
        }
    }
}

int Context::a_pos(int h) const {
    const int g = cf_->genus();
    if (h < 1 || h > g)
        throw index_error("handle index " + std::to_string(h) + " out of range 1.." +
                          std::to_string(g));
    return 2 * cf_->arcs() + 2 * (g - h);
}

int Context::b_pos(int h) const { return a_pos(h) + 1; }

FreeWord Context::subst(const FreeWord& gword) const {
    WordBuilder out(cf_->alphabet());
    for (const Letter& l : gword.letters()) {
        if (l.exp == 1)
            out.append(images_[static_cast<std::size_t>(l.sym)]);
        else
            out.append_inverse(images_[static_cast<std::size_t>(l.sym)]);
    }
    return out.take();
}

// ---------------------------------------------------------------------------
// Twists
// ---------------------------------------------------------------------------

namespace {

struct PlanarTwist {
    FreeEndomorphism phi;           // action on the planar letters
    std::map<int, FreeWord> bases;  // hole position -> transported curve class
};

// Action of the twist along the multi-range convex curve on the planar
// letters. The curve class, based below-left, is
//   W = S_1 * c_{G_1}(S_2) * c_{G_1 G_2}(S_3) * ...
// with S_r the product of the letters of range r and G_r the same product
// (the carry past that range). A letter inside range r is conjugated by the
// transported class W_r = (G_1...G_{r-1})^-1 W (G_1...G_{r-1}); letters in
// the gaps stay fixed because the corridor passes above them. For hole
// letters the transported class is also recorded: it is the insertion base
// for the whisker correction of the tube loop u_h.
PlanarTwist planar_twist(const Context& ctx, const std::vector<Range>& ranges, int sign) {
    const AlphabetPtr& ga = ctx.galphabet();

    auto segment = [&](int lo, int hi) {
        WordBuilder b(ga);
        for (int i = lo; i <= hi; ++i) b.push({i, 1});
        return b.take();
    };

    std::vector<FreeWord> segs, gaps;
    for (std::size_t r = 0; r < ranges.size(); ++r) {
        segs.push_back(segment(ranges[r].first, ranges[r].second));
        if (r + 1 < ranges.size())
            gaps.push_back(segment(ranges[r].second + 1, ranges[r + 1].first - 1));
    }

    FreeWord W = segs[0];
    FreeWord carry(ga);
    for (std::size_t r = 1; r < ranges.size(); ++r) {
        carry = multiply(carry, gaps[r - 1]);
        W = multiply(W, conjugate(segs[r], carry));
    }

    PlanarTwist out{FreeEndomorphism::identity(ga), {}};
    carry = FreeWord(ga);
    for (std::size_t r = 0; r < ranges.size(); ++r) {
        if (r > 0) carry = multiply(carry, gaps[r - 1]);
        FreeWord Wr = multiply(multiply(invert(carry), W), carry);
        FreeWord Wrs = sign == 1 ? Wr : invert(Wr);
        for (int pos = ranges[r].first; pos <= ranges[r].second; ++pos) {
            out.phi.set_image(pos, conjugate(letter_word(ga, pos), Wrs));
            if (ctx.kind(pos) != 'z') out.bases.emplace(pos, Wr);
        }
    }
    return out;
}

// Planar action -> surface endomorphism. z images substitute directly; the
// hole a_h carries the class of v_h; the tube loop u_h picks up the
// transported curve class at each enclosed hole end (entering at b_h,
// leaving at a_h), raised to the twist power.
FreeEndomorphism export_planar(const Context& ctx, const PlanarTwist& tw, int sign) {
    const SurfaceConfig& cf = *ctx.config();
    FreeEndomorphism f = FreeEndomorphism::identity(cf.alphabet());
    for (int k = 1; k <= 2 * cf.arcs() - 1; ++k)
        f.set_image(cf.z(k), ctx.subst(tw.phi.image(k - 1)));
    for (int h = 1; h <= cf.genus(); ++h) {
        const int ap = ctx.a_pos(h), bp = ctx.b_pos(h);
        f.set_image(cf.v(h), ctx.subst(tw.phi.image(ap)));
        WordBuilder u(cf.alphabet());
        if (auto it = tw.bases.find(bp); it != tw.bases.end())
            u.append_power(ctx.subst(it->second), sign);
        u.push({cf.u(h), 1});
        if (auto it = tw.bases.find(ap); it != tw.bases.end())
            u.append_power(ctx.subst(it->second), -sign);
        f.set_image(cf.u(h), u.take());
    }
    return f;
}

} // namespace

MappingClassElement multi_twist(const Context& ctx, const std::vector<Range>& ranges,
                                int sign) {
    FreeEndomorphism fwd = export_planar(ctx, planar_twist(ctx, ranges, sign), sign);
    FreeEndomorphism bwd = export_planar(ctx, planar_twist(ctx, ranges, -sign), -sign);
    return {ctx.config(), FreeAutomorphism(std::move(fwd), std::move(bwd)),
            PuncturePermutation::identity(ctx.config()->punctures()),
            {}};
}

MappingClassElement push_blob(const Context& ctx, Range a, Range b, int frame) {
    std::vector<Range> both{a, b};
    std::sort(both.begin(), both.end());
    MappingClassElement out = multi_twist(ctx, both, 1);
    out = out * multi_twist(ctx, {b}, -1);
    if (frame != 0) {
        MappingClassElement fa = multi_twist(ctx, {a}, frame > 0 ? 1 : -1);
        for (int i = 0; i < std::abs(frame); ++i) out = out * fa;
    }
    return out;
}

MappingClassElement braid_sigma(const Context& ctx, int p, int sign) {
    const SurfaceConfig& cf = *ctx.config();
    const int twon = cf.punctures();
    if (p < 1 || p + 1 > twon)
        throw index_error("braid position " + std::to_string(p) + " out of range");
    const AlphabetPtr& basis = cf.alphabet();

    // Positive half twist: z_p -> z_p Z_{p+1} z_p^-1, z_{p+1} -> z_p, where
    // Z_{p+1} is alias-expanded when p+1 = 2n (then the second assignment
    // has no basis slot and is dropped).
    FreeWord zp = letter_word(basis, cf.z(p));
    FreeWord zq = cf.z_word(p + 1);
    FreeEndomorphism fwd = FreeEndomorphism::identity(basis);
    FreeEndomorphism bwd = FreeEndomorphism::identity(basis);
    fwd.set_image(cf.z(p), conjugate(zq, zp));
    bwd.set_image(cf.z(p), zq);
    if (p + 1 <= twon - 1) {
        fwd.set_image(cf.z(p + 1), zp);
        bwd.set_image(cf.z(p + 1), conjugate(zp, invert(zq)));
    }
    if (sign == -1) std::swap(fwd, bwd);

    PuncturePermutation perm = PuncturePermutation::identity(twon);
    std::swap(perm.img[static_cast<std::size_t>(p - 1)], perm.img[static_cast<std::size_t>(p)]);
    return {ctx.config(), FreeAutomorphism(std::move(fwd), std::move(bwd)), perm, {}};
}

MappingClassElement handle_twist_u(const SurfaceConfigPtr& cf, int j, int sign) {
    const AlphabetPtr& basis = cf->alphabet();
    FreeEndomorphism fwd = FreeEndomorphism::identity(basis);
    FreeEndomorphism bwd = FreeEndomorphism::identity(basis);
    WordBuilder f(basis), b(basis);
    f.push({cf->v(j), 1});
    f.push({cf->u(j), sign});
    b.push({cf->v(j), 1});
    b.push({cf->u(j), -sign});
    fwd.set_image(cf->v(j), f.take());
    bwd.set_image(cf->v(j), b.take());
    return {cf, FreeAutomorphism(std::move(fwd), std::move(bwd)),
            PuncturePermutation::identity(cf->punctures()),
            {}};
}

MappingClassElement handle_twist_v(const SurfaceConfigPtr& cf, int j, int sign) {
    const AlphabetPtr& basis = cf->alphabet();
    FreeEndomorphism fwd = FreeEndomorphism::identity(basis);
    FreeEndomorphism bwd = FreeEndomorphism::identity(basis);
    WordBuilder f(basis), b(basis);
    f.push({cf->u(j), 1});
    f.push({cf->v(j), sign});
    b.push({cf->u(j), 1});
    b.push({cf->v(j), -sign});
    fwd.set_image(cf->u(j), f.take());
    bwd.set_image(cf->u(j), b.take());
    return {cf, FreeAutomorphism(std::move(fwd), std::move(bwd)),
            PuncturePermutation::identity(cf->punctures()),
            {}};
}

Range pair_range(int i) { return {2 * i - 2, 2 * i - 1}; }

Range slide_target(const Context& ctx, int h, int b) {
    const int n = ctx.config()->arcs();
    const int g = ctx.config()->genus();
    if (b >= 1 && b <= n) return pair_range(b);
    const int j = b - n;
    if (j < 1 || j > g)
        throw index_error("basis curve index " + std::to_string(b) + " out of range 1.." +
                          std::to_string(n + g));
    if (j == h)
        throw index_error("basis curve " + std::to_string(b) +
                          " is the slid handle's own hole pair");
    return {ctx.a_pos(j), ctx.b_pos(j)};
}

} // namespace hilden::engine
