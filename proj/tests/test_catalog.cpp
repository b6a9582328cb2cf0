#include "doctest.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "hilden/catalog.hpp"

using namespace hilden;

namespace {

// Checks the action table of the element named by `token` at (g, n): listed
// symbols must match exactly, unlisted symbols must be fixed.
void check_table(int g, int n, const std::string& token, const std::string& perm,
                 const std::map<std::string, std::string>& images) {
    auto cf = make_config(g, n);
    MappingClassElement m = evaluate(cf, parse_generator_word(token));
    INFO("generator ", token, " at (", g, ",", n, ")");
    CHECK(m.perm.one_line() == perm);
    const AlphabetPtr& a = cf->alphabet();
    for (int s = 0; s < a->size(); ++s) {
        auto it = images.find(a->name(s));
        std::string expect = it != images.end() ? it->second : a->name(s);
        INFO("image of ", a->name(s));
        CHECK(to_string(m.action.forward().image(s)) == expect);
    }
}

std::mt19937 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937(seq);
}

} // namespace

TEST_CASE("interval, exchange and twist tables at (0,2)") {
    check_table(0, 2, "iota[1]", "2 1 3 4",
                {{"z1", "z1 z2 z1^-1"}, {"z2", "z1"}});
    check_table(0, 2, "lam[1]", "3 4 1 2",
                {{"z1", "z1 z2 z3 z2^-1 z1^-1"},
                 {"z2", "z1 z2 z3^-1 z2^-1 z1^-1 z2^-1 z1^-1"},
                 {"z3", "z1"}});
    check_table(0, 2, "s[1]", "1 2 3 4",
                {{"z1", "z1 z2 z1 z2^-1 z1^-1"}, {"z2", "z1 z2 z1^-1"}});
}

TEST_CASE("arc slide tables at (0,2) and (0,3)") {
    check_table(0, 2, "sik[1,2]", "1 2 3 4",
                {{"z1", "z1 z2 z3 z2^-1 z1 z2 z3^-1 z2^-1 z1^-1"},
                 {"z2", "z1 z2 z3 z2^-1 z1^-1 z2 z1 z2 z3^-1 z2^-1 z1^-1"},
                 {"z3", "z1 z2 z3 z2^-1 z1^-1"}});
    check_table(0, 2, "sikp[1,2]", "1 2 3 4",
                {{"z1", "z3^-1 z2^-1 z1 z2 z3"},
                 {"z2", "z3^-1 z2^-1 z1^-1 z2 z1 z2 z3"}});
    check_table(0, 2, "t[1,2]", "1 2 3 4", {{"z3", "z1 z2 z3 z2^-1 z1^-1"}});
    check_table(0, 3, "sik[3,1]", "1 2 3 4 5 6",
                {{"z1", "z4^-1 z3^-1 z2^-1 z1 z2 z3 z4"},
                 {"z5", "z4^-1 z3^-1 z2^-1 z1 z2 z3 z4 z5 z4^-1 z3^-1 z2^-1 z1^-1 z2 z3 z4"}});
    check_table(0, 3, "t[2,3]", "1 2 3 4 5 6",
                {{"z3", "z2^-1 z1^-1 z3 z1 z2"},
                 {"z4", "z2^-1 z1^-1 z4 z1 z2"},
                 {"z5", "z3 z4 z5 z4^-1 z3^-1"}});
}

TEST_CASE("twist and slide tables on the torus (1,1)") {
    check_table(1, 1, "s[1]", "1 2",
                {{"z1", "u1 v1 u1^-1 v1^-1 z1 v1 u1 v1^-1 u1^-1"}});
    check_table(1, 1, "m[1,1]", "1 2",
                {{"u1", "u1 v1 u1 v1^-1 u1^-1"},
                 {"v1", "u1 v1 u1^-1 v1 u1 v1^-1 u1^-1"},
                 {"z1", "u1 v1 u1^-1 z1 u1 v1^-1 u1^-1"}});
    check_table(1, 1, "l[1,1]", "1 2",
                {{"u1", "u1 v1 v1 u1 v1^-1 v1^-1 u1^-1"},
                 {"v1", "u1 v1 u1^-1"},
                 {"z1", "u1 v1 v1 z1 v1^-1 v1^-1 u1^-1"}});
    check_table(1, 1, "mer[1,1]", "1 2",
                {{"u1", "u1 v1 u1 v1^-1 u1^-1"},
                 {"v1", "u1 v1 u1^-1 v1 u1 v1^-1 u1^-1"},
                 {"z1",
                  "u1 v1 u1^-1 v1 u1 v1^-1 u1^-1 z1 u1 v1 u1^-1 v1^-1 u1 v1^-1 u1^-1"}});
    check_table(1, 1, "merp[1,1]", "1 2",
                {{"u1", "v1^-1 u1 v1"}, {"z1", "u1 v1^-1 u1^-1 z1 u1 v1 u1^-1"}});
    check_table(1, 1, "tu[1]", "1 2", {{"v1", "v1 u1"}});
    check_table(1, 1, "tv[1]", "1 2", {{"u1", "u1 v1"}});
}

TEST_CASE("slide tables with punctures and higher genus") {
    check_table(1, 2, "m[2,1]", "1 2 3 4",
                {{"u1", "u1 v1 u1 v1^-1 u1^-1 z1 z2"},
                 {"v1", "z2^-1 z1^-1 u1 v1 u1^-1 v1 u1 v1^-1 u1^-1 z1 z2"},
                 {"z3", "z2^-1 z1^-1 u1 v1 u1^-1 z3 u1 v1^-1 u1^-1 z1 z2"}});
    check_table(1, 2, "mer[1,2]", "1 2 3 4",
                {{"u1", "u1 v1 u1 v1^-1 u1^-1 z1 z2"},
                 {"v1", "z2^-1 z1^-1 u1 v1 u1^-1 v1 u1 v1^-1 u1^-1 z1 z2"},
                 {"z3", "z2^-1 z1^-1 u1 v1 u1^-1 v1 u1 v1^-1 u1^-1 z1 z2 z3 z2^-1 "
                        "z1^-1 u1 v1 u1^-1 v1^-1 u1 v1^-1 u1^-1 z1 z2"}});
    check_table(2, 1, "mer[1,3]", "1 2",
                {{"u1", "u1 u2 v2 u2^-1 v2^-1"},
                 {"u2", "v2 u2 v2^-1 u2^-1 v1 u2 v2 u2^-1 v2^-1 u2 v2 u2 v2^-1 u2^-1 "
                        "v1^-1 u2 v2 u2^-1 v2^-1"},
                 {"v1", "v2 u2 v2^-1 u2^-1 v1 u2 v2 u2^-1 v2^-1"},
                 {"v2", "v2 u2 v2^-1 u2^-1 v1 u2 v2 u2^-1 v2 u2 v2^-1 u2^-1 v1^-1 u2 "
                        "v2 u2^-1 v2^-1"}});
    check_table(2, 1, "merp[2,2]", "1 2",
                {{"u1", "u2 v2^-1 u2^-1 u1 u2 v2 u2^-1"},
                 {"u2", "u2 v2^-1 u2^-1 v1 u1 v1^-1 u1^-1 u2 v2"},
                 {"v1", "u2 v2^-1 u2^-1 v1 u2 v2 u2^-1"}});
    check_table(2, 2, "l[1,2]", "1 2 3 4",
                {{"u2", "u2 v2 v2 u2 v2^-1 u2^-1 v1 u1 v1^-1 u1^-1 z2^-1 z1^-1 u1 v1 "
                        "u1^-1 v1^-1 u2 v2 u2^-1 v2^-1 u2 v2^-1 u2^-1 v1 u1 v1^-1 "
                        "u1^-1 z2^-1 z1^-1 u1 v1 u1^-1 v1^-1 u2 v2 u2^-1 v2^-1"},
                 {"v2", "v2 u2 v2^-1 u2^-1 v1 u1 v1^-1 u1^-1 z1 z2 u1 v1 u1^-1 v1^-1 "
                        "u2 v2 u2^-1"},
                 {"z1", "u1 v1 u1^-1 v1^-1 u2 v2 v2 v2 u2 v2^-1 u2^-1 v1 u1 v1^-1 "
                        "u1^-1 z1 z2 z1 z2^-1 z1^-1 u1 v1 u1^-1 v1^-1 u2 v2 u2^-1 "
                        "v2^-1 v2^-1 v2^-1 u2^-1 v1 u1 v1^-1 u1^-1"},
                 {"z2", "u1 v1 u1^-1 v1^-1 u2 v2 v2 v2 u2 v2^-1 u2^-1 v1 u1 v1^-1 "
                        "u1^-1 z1 z2 z1^-1 u1 v1 u1^-1 v1^-1 u2 v2 u2^-1 v2^-1 v2^-1 "
                        "v2^-1 u2^-1 v1 u1 v1^-1 u1^-1"}});
}

TEST_CASE("exchange moves the later arc pair down") {
    // lam[1] at (0,3) must not disturb the third pair; z4 is a real letter
    // here, unlike at (0,2) where the last basepoint loop is the alias.
    check_table(0, 3, "lam[1]", "3 4 1 2 5 6",
                {{"z1", "z1 z2 z3 z2^-1 z1^-1"},
                 {"z2", "z1 z2 z4 z2^-1 z1^-1"},
                 {"z3", "z1"},
                 {"z4", "z2"}});
}

TEST_CASE("catalog indices are range-checked") {
    auto c02 = make_config(0, 2);
    CHECK_THROWS_AS(generator(c02, GeneratorName::interval(3)), index_error);
    CHECK_THROWS_AS(generator(c02, GeneratorName::exchange(2)), index_error);
    CHECK_THROWS_AS(generator(c02, GeneratorName::slide_s(1, 1)), index_error);
    CHECK_THROWS_AS(generator(c02, GeneratorName::slide_t(2, 2)), index_error);
    CHECK_THROWS_AS(generator(c02, GeneratorName::slide_m(1, 1)), index_error);
    CHECK_THROWS_AS(generator(c02, GeneratorName::meridian(1, 1, false)), index_error);
    CHECK_THROWS_AS(generator(c02, GeneratorName::handle_u(1)), index_error);

    auto c11 = make_config(1, 1);
    CHECK_THROWS_AS(generator(c11, GeneratorName::meridian(1, 2, false)), index_error);
    CHECK_THROWS_AS(generator(c11, GeneratorName::meridian(2, 1, false)), index_error);
    CHECK_NOTHROW(generator(c11, GeneratorName::meridian(1, 1, true)));

    auto c21 = make_config(2, 1);
    // b = n + j addresses handle j; j = h is not admissible.
    CHECK_THROWS_AS(generator(c21, GeneratorName::meridian(1, 2, false)), index_error);
    CHECK_NOTHROW(generator(c21, GeneratorName::meridian(1, 3, false)));
}

TEST_CASE("relation suite passes at every contract config") {
    for (auto [g, n] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {2, 2}}) {
        auto cf = make_config(g, n);
        RelationReport rep = relation_suite(cf);
        INFO("config (", g, ",", n, "), ", rep.instances.size(), " instances");
        for (const RelationInstance& inst : rep.instances) {
            INFO(inst.relation, ": ", inst.detail);
            CHECK(inst.pass);
        }
        CHECK(rep.all_pass);
        CHECK(rep.failures() == 0);
    }
}

TEST_CASE("relation suite covers each family where instantiable") {
    auto rep = relation_suite(make_config(1, 3));
    CHECK(rep.count("R1") > 0);
    CHECK(rep.count("R2") == 0); // needs n >= 4 for |i-j| >= 2
    CHECK(rep.count("R3") > 0);
    CHECK(rep.count("R4") == 3);
    CHECK(rep.count("R5") == 6); // ordered (i,k) pairs, i != k
    CHECK(rep.count("R6") > 0);
    auto rep04 = relation_suite(make_config(0, 4));
    CHECK(rep04.count("R2") > 0);
}

TEST_CASE("every catalog element validates with identity h1 matrix") {
    for (auto [g, n] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {2, 2}}) {
        auto cf = make_config(g, n);
        std::vector<std::vector<long long>> ident(
            static_cast<std::size_t>(2 * g),
            std::vector<long long>(static_cast<std::size_t>(2 * g), 0));
        for (int j = 0; j < 2 * g; ++j) ident[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
        for (const GeneratorName& name : hilden_generator_names(cf)) {
            MappingClassElement m = generator(cf, name);
            INFO("generator ", to_token(name), " at (", g, ",", n, ")");
            CHECK(validate(m).pass);
            CHECK(h1_matrix(m) == ident);
        }
    }
}

TEST_CASE("handle twists validate but act on homology") {
    for (auto [g, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        auto cf = make_config(g, n);
        std::vector<std::vector<long long>> ident(
            static_cast<std::size_t>(2 * g),
            std::vector<long long>(static_cast<std::size_t>(2 * g), 0));
        for (int j = 0; j < 2 * g; ++j) ident[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
        for (const GeneratorName& name : psi_generator_names(cf)) {
            MappingClassElement m = generator(cf, name);
            INFO("generator ", to_token(name), " at (", g, ",", n, ")");
            CHECK(validate(m).pass);
            CHECK(h1_matrix(m) != ident);
        }
    }
}

TEST_CASE("iota squared equals the elementary twist") {
    for (auto [g, n] : {std::pair{0, 2}, {1, 1}, {2, 2}}) {
        auto cf = make_config(g, n);
        for (int i = 1; i <= n; ++i) {
            MappingClassElement lhs =
                element_power(generator(cf, GeneratorName::interval(i)), 2);
            MappingClassElement rhs = generator(cf, GeneratorName::twist(i));
            CHECK(equal(lhs, rhs));
        }
    }
}

TEST_CASE("evaluate is the identity on the empty word and a homomorphism") {
    auto cf = make_config(1, 2);
    CHECK(equal(evaluate(cf, {}), identity_element(cf)));

    auto names = hilden_generator_names(cf);
    auto psis = psi_generator_names(cf);
    names.insert(names.end(), psis.begin(), psis.end());
    auto rng = rng_for("catalog-homomorphism");
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorWord w1, w2;
        for (int i = 0; i < 2; ++i)
            w1.factors.push_back({names[pick(rng)], sign(rng) ? 1 : -1});
        for (int i = 0; i < 2; ++i)
            w2.factors.push_back({names[pick(rng)], sign(rng) ? 1 : -1});
        MappingClassElement joint = evaluate(cf, concat(w1, w2));
        MappingClassElement split = evaluate(cf, w1) * evaluate(cf, w2);
        CHECK(equal(joint, split));
        CHECK(joint.perm == split.perm);
    }
}

TEST_CASE("evaluate inverts factors") {
    auto cf = make_config(0, 2);
    MappingClassElement direct = evaluate(cf, parse_generator_word("iota[1]^-1"));
    MappingClassElement composed = inverse(generator(cf, GeneratorName::interval(1)));
    CHECK(equal(direct, composed));
    CHECK(equal(evaluate(cf, parse_generator_word("lam[1] lam[1]^-1")),
                identity_element(cf)));
}

TEST_CASE("random catalog words validate at the contract configs") {
    auto rng = rng_for("catalog-random-validate");
    for (auto [g, n] : {std::pair{0, 2}, {0, 3}, {1, 1}, {1, 2}}) {
        auto cf = make_config(g, n);
        auto names = hilden_generator_names(cf);
        auto psis = psi_generator_names(cf);
        names.insert(names.end(), psis.begin(), psis.end());
        std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
        std::uniform_int_distribution<int> sign(0, 1);
        std::uniform_int_distribution<int> len(0, 5);
        for (int trial = 0; trial < 6; ++trial) {
            GeneratorWord w;
            int l = len(rng);
            for (int i = 0; i < l; ++i)
                w.factors.push_back({names[pick(rng)], sign(rng) ? 1 : -1});
            MappingClassElement m = evaluate(cf, w);
            CHECK(validate(m).pass);
            CHECK(m.provenance == w);
        }
    }
}

TEST_CASE("generator name listings match the config") {
    auto c02 = make_config(0, 2);
    auto names02 = hilden_generator_names(c02);
    // 2 intervals + 2 twists + 1 exchange + 6 arc slides, no handles.
    CHECK(names02.size() == 11);
    CHECK(psi_generator_names(c02).empty());

    auto c11 = make_config(1, 1);
    auto names11 = hilden_generator_names(c11);
    // 1 interval + 1 twist + m/l slides + mer/merp along the puncture pair.
    CHECK(names11.size() == 6);
    CHECK(psi_generator_names(c11).size() == 2);

    auto c21 = make_config(2, 1);
    for (const GeneratorName& name : hilden_generator_names(c21))
        CHECK_NOTHROW(generator(c21, name));
}
