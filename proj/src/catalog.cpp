#include "hilden/catalog.hpp"

#include <sstream>

#include "engine.hpp"

namespace hilden {

namespace {

using engine::Context;
using engine::Range;

// Frozen framing twists of the slide families: one boundary-framing twist is
// part of each slide's definition, and these exponents are the unique
// assignment under which the lantern-shaped relation R5 holds exactly and
// every slide acts trivially on homology.
constexpr int kFrameSlideS = -1;  // sik
constexpr int kFrameSlideSP = -1; // sikp
constexpr int kFrameSlideT = 0;   // t
constexpr int kFrameSlideM = 0;   // m
constexpr int kFrameMer = -1;     // mer
constexpr int kFrameMerp = -1;    // merp

void check_range(int value, int lo, int hi, const char* what, const GeneratorName& name) {
    if (value < lo || value > hi)
        throw index_error(std::string(what) + " " + std::to_string(value) + " in '" +
                          to_token(name) + "' out of range " + std::to_string(lo) + ".." +
                          std::to_string(hi));
}

void check_distinct_arcs(const GeneratorName& name) {
    if (name.a == name.b)
        throw index_error("'" + to_token(name) + "' needs two distinct arc indices");
}

MappingClassElement build(const Context& ctx, const GeneratorName& name) {
    const SurfaceConfigPtr& cf = ctx.config();
    const int n = cf->arcs();
    const int g = cf->genus();
    switch (name.kind) {
    case GeneratorKind::Interval:
        check_range(name.a, 1, n, "arc index", name);
        return braid_sigma(ctx, 2 * name.a - 1);
    case GeneratorKind::Twist: {
        check_range(name.a, 1, n, "arc index", name);
        MappingClassElement half = braid_sigma(ctx, 2 * name.a - 1);
        return half * half;
    }
    case GeneratorKind::Exchange: {
        check_range(name.a, 1, n - 1, "arc index", name);
        const int i = name.a;
        MappingClassElement a = braid_sigma(ctx, 2 * i);
        MappingClassElement b = braid_sigma(ctx, 2 * i + 1);
        MappingClassElement c = braid_sigma(ctx, 2 * i - 1);
        return a * b * c * a;
    }
    case GeneratorKind::SlideS:
        check_range(name.a, 1, n, "arc index", name);
        check_range(name.b, 1, n, "arc index", name);
        check_distinct_arcs(name);
        return push_blob(ctx, engine::pair_range(name.a),
                         {2 * name.b - 2, 2 * name.b - 2}, kFrameSlideS);
    case GeneratorKind::SlideSP:
        check_range(name.a, 1, n, "arc index", name);
        check_range(name.b, 1, n, "arc index", name);
        check_distinct_arcs(name);
        return push_blob(ctx, engine::pair_range(name.a),
                         {2 * name.b - 1, 2 * name.b - 1}, kFrameSlideSP);
    case GeneratorKind::SlideT:
        check_range(name.a, 1, n, "arc index", name);
        check_range(name.b, 1, n, "arc index", name);
        check_distinct_arcs(name);
        return push_blob(ctx, engine::pair_range(name.a), engine::pair_range(name.b),
                         kFrameSlideT);
    case GeneratorKind::SlideM:
        check_range(name.a, 1, n, "arc index", name);
        check_range(name.b, 1, g, "handle index", name);
        return push_blob(ctx, engine::pair_range(name.a),
                         {ctx.a_pos(name.b), ctx.a_pos(name.b)}, kFrameSlideM);
    case GeneratorKind::SlideL: {
        check_range(name.a, 1, n, "arc index", name);
        check_range(name.b, 1, g, "handle index", name);
        // Conjugate the meridian-wise slide by the S-move on handle j, which
        // swaps the roles of the u and v curves.
        const int j = name.b;
        MappingClassElement w = engine::handle_twist_v(cf, j) * engine::handle_twist_u(cf, j) *
                                engine::handle_twist_v(cf, j);
        return w * build(ctx, GeneratorName::slide_m(name.a, j)) * inverse(w);
    }
    case GeneratorKind::MeridianSlide: {
        if (g == 0)
            throw index_error("'" + to_token(name) + "' needs genus >= 1");
        check_range(name.a, 1, g, "handle index", name);
        Range target = engine::slide_target(ctx, name.a, name.b);
        int hole = name.primed ? ctx.b_pos(name.a) : ctx.a_pos(name.a);
        return push_blob(ctx, {hole, hole}, target,
                         name.primed ? kFrameMerp : kFrameMer);
    }
    case GeneratorKind::HandleTwistU:
        check_range(name.a, 1, g, "handle index", name);
        return engine::handle_twist_u(cf, name.a);
    case GeneratorKind::HandleTwistV:
        check_range(name.a, 1, g, "handle index", name);
        return engine::handle_twist_v(cf, name.a);
    }
    throw index_error("unknown generator kind");
}

} // namespace

namespace {

// Every element leaving this module satisfies the structural contract; a
// failure here means a broken action table, not bad user input.
const MappingClassElement& checked(const MappingClassElement& m) {
    ValidationReport rep = validate(m);
    if (!rep.pass) throw automorphism_error("catalog element failed validation: " + rep.message);
    return m;
}

} // namespace

MappingClassElement generator(const SurfaceConfigPtr& config, const GeneratorName& name) {
    Context ctx(config);
    MappingClassElement m = build(ctx, name);
    m.provenance = GeneratorWord{{{name, 1}}};
    checked(m);
    return m;
}

MappingClassElement evaluate(const SurfaceConfigPtr& config, const GeneratorWord& word) {
    Context ctx(config);
    MappingClassElement m = identity_element(config);
    for (const GeneratorFactor& f : word.factors) {
        MappingClassElement x = build(ctx, f.name);
        if (f.exponent == -1) x = inverse(x);
        m = m * x;
    }
    m.provenance = word;
    checked(m);
    return m;
}

std::vector<GeneratorName> hilden_generator_names(const SurfaceConfigPtr& config) {
    const int n = config->arcs();
    const int g = config->genus();
    std::vector<GeneratorName> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back(GeneratorName::interval(i));
        out.push_back(GeneratorName::twist(i));
    }
    for (int i = 1; i <= n - 1; ++i) out.push_back(GeneratorName::exchange(i));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            if (i == k) continue;
            out.push_back(GeneratorName::slide_s(i, k));
            out.push_back(GeneratorName::slide_sp(i, k));
            out.push_back(GeneratorName::slide_t(i, k));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= g; ++j) {
            out.push_back(GeneratorName::slide_m(i, j));
            out.push_back(GeneratorName::slide_l(i, j));
        }
    for (int h = 1; h <= g; ++h) {
        for (int b = 1; b <= n; ++b) {
            out.push_back(GeneratorName::meridian(h, b, false));
            out.push_back(GeneratorName::meridian(h, b, true));
        }
        for (int j = 1; j <= g; ++j) {
            if (j == h) continue;
            out.push_back(GeneratorName::meridian(h, n + j, false));
            out.push_back(GeneratorName::meridian(h, n + j, true));
        }
    }
    return out;
}

std::vector<GeneratorName> psi_generator_names(const SurfaceConfigPtr& config) {
    std::vector<GeneratorName> out;
    for (int j = 1; j <= config->genus(); ++j) {
        out.push_back(GeneratorName::handle_u(j));
        out.push_back(GeneratorName::handle_v(j));
    }
    return out;
}

int RelationReport::count(const std::string& relation) const {
    int c = 0;
    for (const auto& inst : instances)
        if (inst.relation == relation) ++c;
    return c;
}

int RelationReport::failures() const {
    int c = 0;
    for (const auto& inst : instances)
        if (!inst.pass) ++c;
    return c;
}

namespace {

// Closed interval of row positions a generator's support touches, slide
// corridors included; used for the disjointness hypothesis of R6.
Range footprint(const Context& ctx, const GeneratorName& name) {
    switch (name.kind) {
    case GeneratorKind::Interval:
    case GeneratorKind::Twist:
        return engine::pair_range(name.a);
    case GeneratorKind::Exchange:
        return {2 * name.a - 2, 2 * name.a + 1};
    case GeneratorKind::SlideS:
    case GeneratorKind::SlideSP:
    case GeneratorKind::SlideT: {
        Range a = engine::pair_range(name.a);
        Range k = engine::pair_range(name.b);
        return {std::min(a.first, k.first), std::max(a.second, k.second)};
    }
    case GeneratorKind::SlideM:
    case GeneratorKind::SlideL:
        return {2 * name.a - 2, ctx.b_pos(name.b)};
    case GeneratorKind::MeridianSlide: {
        Range t = engine::slide_target(ctx, name.a, name.b);
        int hole = name.primed ? ctx.b_pos(name.a) : ctx.a_pos(name.a);
        return {std::min(t.first, hole), std::max(t.second, hole)};
    }
    case GeneratorKind::HandleTwistU:
    case GeneratorKind::HandleTwistV:
        return {ctx.a_pos(name.a), ctx.b_pos(name.a)};
    }
    throw index_error("unknown generator kind");
}

void record(RelationReport& rep, const std::string& relation, const std::string& detail,
            bool pass) {
    rep.instances.push_back({relation, detail, pass});
    if (!pass) rep.all_pass = false;
}

} // namespace

RelationReport relation_suite(const SurfaceConfigPtr& config) {
    const int n = config->arcs();
    Context ctx(config);
    RelationReport rep;

    auto gen = [&](const GeneratorName& name) { return build(ctx, name); };
    auto eq = [&](const MappingClassElement& x, const MappingClassElement& y) {
        return equal(x, y);
    };

    // R1: braid relations among the exchanges.
    for (int i = 1; i + 1 <= n - 1; ++i) {
        auto a = gen(GeneratorName::exchange(i));
        auto b = gen(GeneratorName::exchange(i + 1));
        std::ostringstream d;
        d << "lam[" << i << "] lam[" << i + 1 << "] lam[" << i << "] = "
          << "lam[" << i + 1 << "] lam[" << i << "] lam[" << i + 1 << "]";
        record(rep, "R1", d.str(), eq(a * b * a, b * a * b));
    }

    // R2: distant exchanges commute.
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            auto a = gen(GeneratorName::exchange(i));
            auto b = gen(GeneratorName::exchange(j));
            std::ostringstream d;
            d << "lam[" << i << "] lam[" << j << "] commute";
            record(rep, "R2", d.str(), eq(a * b, b * a));
        }

    // R3: intervals commute (disjoint arcs).
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto a = gen(GeneratorName::interval(i));
            auto b = gen(GeneratorName::interval(j));
            std::ostringstream d;
            d << "iota[" << i << "] iota[" << j << "] commute";
            record(rep, "R3", d.str(), eq(a * b, b * a));
        }

    // R4: the full twist is the squared half twist.
    for (int i = 1; i <= n; ++i) {
        auto a = gen(GeneratorName::interval(i));
        std::ostringstream d;
        d << "s[" << i << "] = iota[" << i << "]^2";
        record(rep, "R4", d.str(), eq(a * a, gen(GeneratorName::twist(i))));
    }

    // R5: lantern-shaped identity between the one-sided and two-sided slides.
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            if (i == k) continue;
            auto s = gen(GeneratorName::slide_s(i, k));
            auto sp = gen(GeneratorName::slide_sp(i, k));
            auto t = gen(GeneratorName::slide_t(i, k));
            auto si = gen(GeneratorName::twist(i));
            std::ostringstream d;
            d << "sik[" << i << "," << k << "] sikp[" << i << "," << k << "] = t[" << i
              << "," << k << "] s[" << i << "]^-1";
            record(rep, "R5", d.str(), eq(s * sp, t * inverse(si)));
        }

    // R6: generators with disjoint footprints commute.
    std::vector<GeneratorName> names = hilden_generator_names(config);
    for (const GeneratorName& extra : psi_generator_names(config)) names.push_back(extra);
    for (std::size_t x = 0; x < names.size(); ++x)
        for (std::size_t y = x + 1; y < names.size(); ++y) {
            Range fx = footprint(ctx, names[x]);
            Range fy = footprint(ctx, names[y]);
            if (fx.second >= fy.first && fy.second >= fx.first) continue;
            auto a = gen(names[x]);
            auto b = gen(names[y]);
            std::ostringstream d;
            d << to_token(names[x]) << " " << to_token(names[y]) << " commute";
            record(rep, "R6", d.str(), eq(a * b, b * a));
        }

    return rep;
}

} // namespace hilden
