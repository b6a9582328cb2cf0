#include "hilden/plat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hilden/catalog.hpp"

namespace hilden {

// ---------------------------------------------------------------------------
// IntegerMatrix / Smith normal form
// ---------------------------------------------------------------------------

IntegerMatrix IntegerMatrix::zero(int rows, int cols) {
    IntegerMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    return m;
}

BigInt& IntegerMatrix::at(int r, int c) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw index_error("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") out of range");
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(c)];
}

const BigInt& IntegerMatrix::at(int r, int c) const {
    return const_cast<IntegerMatrix*>(this)->at(r, c);
}

SNFResult smith_normal_form(const IntegerMatrix& m) {
    using boost::multiprecision::abs;
    const int rows = m.rows, cols = m.cols;
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(rows),
                                       std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);

    auto find_pivot = [&](int si) -> std::pair<int, int> {
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int r = si; r < rows; ++r)
            for (int c = si; c < cols; ++c) {
                const BigInt& x = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (x != 0 && (pr < 0 || abs(x) < best)) {
                    best = abs(x);
                    pr = r;
                    pc = c;
                }
            }
        return {pr, pc};
    };

    SNFResult res;
    int si = 0;
    const int bound = std::min(rows, cols);
    while (si < bound) {
        auto [pr, pc] = find_pivot(si);
        if (pr < 0) break; // all remaining entries are zero
        for (;;) {
            std::swap(a[static_cast<std::size_t>(si)], a[static_cast<std::size_t>(pr)]);
            for (int r = 0; r < rows; ++r)
                std::swap(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(si)],
                          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);
            // Clear the pivot row and column by division; any surviving
            // remainder is strictly smaller than the pivot, so re-pivot on it.
            bool changed = false;
            const BigInt& piv = a[static_cast<std::size_t>(si)][static_cast<std::size_t>(si)];
            for (int r = si + 1; r < rows; ++r) {
                BigInt& x = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(si)];
                if (x != 0) {
                    BigInt q = x / piv;
                    for (int c = si; c < cols; ++c)
                        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                            q * a[static_cast<std::size_t>(si)][static_cast<std::size_t>(c)];
                    if (x != 0) changed = true;
                }
            }
            for (int c = si + 1; c < cols; ++c) {
                BigInt& x = a[static_cast<std::size_t>(si)][static_cast<std::size_t>(c)];
                if (x != 0) {
                    BigInt q = x / piv;
                    for (int r = si; r < rows; ++r)
                        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                            q * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(si)];
                    if (x != 0) changed = true;
                }
            }
            if (changed) {
                std::tie(pr, pc) = find_pivot(si);
                continue;
            }
            // Pivot is alone in its row and column; enforce the divisibility
            // chain by folding in any offending row and re-eliminating.
            int bad = -1;
            for (int r = si + 1; r < rows && bad < 0; ++r)
                for (int c = si + 1; c < cols; ++c)
                    if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % piv != 0) {
                        bad = r;
                        break;
                    }
            if (bad >= 0) {
                for (int c = si; c < cols; ++c)
                    a[static_cast<std::size_t>(si)][static_cast<std::size_t>(c)] +=
                        a[static_cast<std::size_t>(bad)][static_cast<std::size_t>(c)];
                pr = si;
                pc = si;
                continue;
            }
            break;
        }
        res.invariant_factors.push_back(
            abs(a[static_cast<std::size_t>(si)][static_cast<std::size_t>(si)]));
        ++si;
    }
    while (static_cast<int>(res.invariant_factors.size()) < bound)
        res.invariant_factors.push_back(0);
    return res;
}

std::string AbelianGroup::to_text() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " ⊕ ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const BigInt& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

AbelianGroup abelianization(const GroupPresentation& p) {
    const int cols = p.generator_count();
    const int rows = p.relator_count();
    IntegerMatrix m = IntegerMatrix::zero(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (const Letter& l : p.relators[static_cast<std::size_t>(r)].letters())
            m.at(r, l.sym) += l.exp;
    SNFResult snf = smith_normal_form(m);
    AbelianGroup out;
    int rank = 0;
    for (const BigInt& d : snf.invariant_factors) {
        if (d != 0) ++rank;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = cols - rank;
    return out;
}

// ---------------------------------------------------------------------------
// Handlebody inclusion, mirror map, presentation assembly
// ---------------------------------------------------------------------------

namespace {

// Generic symbol-to-word substitution between alphabets (the free words on
// the two sides live in different groups, so this is not a FreeEndomorphism).
FreeWord map_word(const AlphabetPtr& target, const std::vector<FreeWord>& images,
                  const FreeWord& w) {
    WordBuilder out(target);
    for (const Letter& l : w.letters()) {
        if (l.exp == 1)
            out.append(images[static_cast<std::size_t>(l.sym)]);
        else
            out.append_inverse(images[static_cast<std::size_t>(l.sym)]);
    }
    return out.take();
}

// Images of the surface basis in the handlebody group, written over an
// arbitrary target alphabet whose y-symbols start at y_base and m-symbols at
// m_base (this lets the same table target either {y,m} or the presentation
// alphabet's unbarred/barred halves).
std::vector<FreeWord> handlebody_table(const SurfaceConfig& cf, const AlphabetPtr& target,
                                       int y_base, int m_base) {
    std::vector<FreeWord> images;
    const int g = cf.genus(), n = cf.arcs();
    for (int j = 1; j <= g; ++j) {
        images.push_back(letter_word(target, y_base + (j - 1))); // u_j -> y_j
        images.push_back(FreeWord(target));                      // v_j -> 1
    }
    for (int k = 1; k <= 2 * n - 1; ++k) {
        int i = (k + 1) / 2;
        images.push_back(letter_word(target, m_base + (i - 1), k % 2 == 1 ? 1 : -1));
    }
    return images;
}

// Mirror alphabet of the surface basis (barred copies, capitalized names).
AlphabetPtr barred_alphabet(const SurfaceConfig& cf) {
    std::vector<std::string> names;
    for (int j = 1; j <= cf.genus(); ++j) {
        names.push_back("U" + std::to_string(j));
        names.push_back("V" + std::to_string(j));
    }
    for (int k = 1; k <= 2 * cf.arcs() - 1; ++k)
        names.push_back("Z" + std::to_string(k));
    return make_alphabet(std::move(names));
}

// The orientation-reversing identification of the two copies of the surface,
// written on the free basis. Its closed forms give, by telescoping,
// tau(z_1...z_2n) = (Z_1...Z_2n)^-1; the handle images are conjugated by
// correction terms E_j so that the boundary relator maps to the inverse
// relator class, which is exactly what makes the alias coherent across the
// mirror.
std::vector<FreeWord> tau_star_table(const SurfaceConfig& cf, const AlphabetPtr& barred) {
    const int g = cf.genus(), n = cf.arcs();
    std::vector<FreeWord> images(static_cast<std::size_t>(cf.alphabet()->size()),
                                 FreeWord(barred));
    auto U = [&](int j) { return 2 * (j - 1); };
    auto V = [&](int j) { return 2 * (j - 1) + 1; };
    auto Z = [&](int k) { return 2 * g + (k - 1); };

    // z_k -> (Z_1...Z_{k-1}) Z_k^-1 (...)^-1
    for (int k = 1; k <= 2 * n - 1; ++k) {
        WordBuilder pre(barred);
        for (int j = 1; j < k; ++j) pre.push({Z(j), 1});
        FreeWord prew = pre.take();
        images[static_cast<std::size_t>(cf.z(k))] =
            conjugate(letter_word(barred, Z(k), -1), prew);
    }

    // E_j = K_g^-1 ... K_{j+1}^-1 V_j with K_r = [U_r, V_r].
    auto K = [&](int r) {
        WordBuilder b(barred);
        b.push({U(r), 1});
        b.push({V(r), 1});
        b.push({U(r), -1});
        b.push({V(r), -1});
        return b.take();
    };
    for (int j = 1; j <= g; ++j) {
        WordBuilder d(barred);
        for (int r = g; r > j; --r) d.append_inverse(K(r));
        d.push({V(j), 1});
        FreeWord E = d.take();
        images[static_cast<std::size_t>(cf.u(j))] = conjugate(letter_word(barred, U(j)), E);
        images[static_cast<std::size_t>(cf.v(j))] =
            conjugate(letter_word(barred, V(j), -1), E);
    }
    return images;
}

void require_psi_word(const GeneratorWord& psi) {
    for (const GeneratorFactor& f : psi.factors)
        if (!f.name.is_handle_twist())
            throw config_error("psi factor '" + to_token(f.name) +
                               "' is not a handle twist");
}

void require_hilden_word(const GeneratorWord& sigma) {
    for (const GeneratorFactor& f : sigma.factors)
        if (f.name.is_handle_twist())
            throw config_error("sigma factor '" + to_token(f.name) +
                               "' is a handle twist, not a Hilden generator");
}

FreeWord cyclic_core(const FreeWord& w) { return cyclic_reduce(w).core; }

} // namespace

SurfaceConfigPtr plat_config(int g, int n) {
    if (g < 0) throw config_error("genus must be >= 0, got " + std::to_string(g));
    if (n < 0) throw config_error("arc count must be >= 0, got " + std::to_string(n));
    return detail::make_config_unchecked(g, n);
}

HandlebodyMap handlebody_images(const SurfaceConfigPtr& config) {
    std::vector<std::string> names;
    for (int j = 1; j <= config->genus(); ++j) names.push_back("y" + std::to_string(j));
    for (int i = 1; i <= config->arcs(); ++i) names.push_back("m" + std::to_string(i));
    HandlebodyMap map;
    map.source = config->alphabet();
    map.target = make_alphabet(std::move(names));
    map.images = handlebody_table(*config, map.target, 0, config->genus());
    return map;
}

FreeWord apply_map(const HandlebodyMap& map, const FreeWord& w) {
    if (!same_alphabet(map.source, w.alphabet()))
        throw alphabet_error("word is not over the map's source alphabet");
    return map_word(map.target, map.images, w);
}

GroupPresentation plat_presentation(const SurfaceConfigPtr& config, const GeneratorWord& psi,
                                    const GeneratorWord& sigma) {
    require_psi_word(psi);
    require_hilden_word(sigma);
    const SurfaceConfig& cf = *config;
    const int g = cf.genus(), n = cf.arcs();

    MappingClassElement m = evaluate(config, concat(psi, sigma));

    // Presentation generators: y_j, m_i, then the barred copies.
    std::vector<std::string> names;
    for (int j = 1; j <= g; ++j) names.push_back("y" + std::to_string(j));
    for (int i = 1; i <= n; ++i) names.push_back("m" + std::to_string(i));
    for (int j = 1; j <= g; ++j) names.push_back("yb" + std::to_string(j));
    for (int i = 1; i <= n; ++i) names.push_back("mb" + std::to_string(i));
    AlphabetPtr pres = make_alphabet(std::move(names));

    std::vector<FreeWord> hb = handlebody_table(cf, pres, 0, g);
    std::vector<FreeWord> hb_bar = handlebody_table(cf, pres, g + n, 2 * g + n);
    AlphabetPtr barred = barred_alphabet(cf);
    std::vector<FreeWord> tau = tau_star_table(cf, barred);

    GroupPresentation p;
    p.generators = pres;
    for (int sym = 0; sym < cf.alphabet()->size(); ++sym) {
        FreeWord left = map_word(pres, hb, letter_word(cf.alphabet(), sym));
        FreeWord twisted = m.action.forward().image(sym);
        FreeWord mirrored = map_word(barred, tau, twisted);
        FreeWord right = map_word(pres, hb_bar, mirrored);
        p.relators.push_back(cyclic_core(multiply(left, invert(right))));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Tietze simplification
// ---------------------------------------------------------------------------

namespace {

using Unit = std::pair<int, int>; // (symbol, exponent)

// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
int least_rotation_index(const std::vector<Unit>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> f(static_cast<std::size_t>(2 * n), -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        const Unit& sj = s[static_cast<std::size_t>(j % n)];
        int i = f[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && sj != s[static_cast<std::size_t>((k + i + 1) % n)]) {
            if (sj < s[static_cast<std::size_t>((k + i + 1) % n)]) k = j - i - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[static_cast<std::size_t>((k + i + 1) % n)]) {
            if (sj < s[static_cast<std::size_t>(k % n)]) k = j;
            f[static_cast<std::size_t>(j - k)] = -1;
        } else {
            f[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    return k % n;
}

std::vector<Unit> least_rotation(const std::vector<Unit>& s) {
    if (s.empty()) return {};
    const int n = static_cast<int>(s.size());
    const int k = least_rotation_index(s);
    std::vector<Unit> out;
    out.reserve(s.size());
    for (int i = 0; i < n; ++i) out.push_back(s[static_cast<std::size_t>((k + i) % n)]);
    return out;
}

// Canonical representative of a relator up to rotation and inversion, used
// as the duplicate-detection key.
std::vector<Unit> canonical_cyclic(const FreeWord& w) {
    std::vector<Unit> a, b;
    a.reserve(w.letters().size());
    for (const Letter& l : w.letters()) a.emplace_back(l.sym, l.exp);
    b.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) b.emplace_back(it->first, -it->second);
    std::vector<Unit> ra = least_rotation(a);
    std::vector<Unit> rb = least_rotation(b);
    return ra <= rb ? ra : rb;
}

struct WorkingPresentation {
    AlphabetPtr alph;
    std::vector<FreeWord> rels;

    // Cyclically reduce, drop empty relators, drop duplicates (up to cyclic
    // rotation and inversion).
    void normalize() {
        std::vector<FreeWord> out;
        std::set<std::vector<Unit>> seen;
        for (const FreeWord& r : rels) {
            FreeWord c = cyclic_reduce(r).core;
            if (c.is_identity()) continue;
            if (seen.insert(canonical_cyclic(c)).second) out.push_back(std::move(c));
        }
        rels = std::move(out);
    }

    // Eliminate a generator occurring exactly once in some relator by
    // substituting it everywhere else. Returns true if one was eliminated.
    bool eliminate_once() {
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            const auto& ls = rels[ri].letters();
            std::map<int, int> count;
            for (const Letter& l : ls) ++count[l.sym];
            for (const auto& [sym, c] : count) {
                if (c != 1) continue;
                // rels[ri] = A sym^e B  =>  sym^e = A^-1 B^-1.
                std::size_t pos = 0;
                while (ls[pos].sym != sym) ++pos;
                int e = ls[pos].exp;
                WordBuilder b(alph);
                for (std::size_t i = pos + 1; i < ls.size(); ++i) b.push(ls[i]);
                for (std::size_t i = 0; i < pos; ++i) b.push(ls[i]);
                // The rotation starting at the unique occurrence reads
                // sym^e * tail, so sym = tail^-1 (e = 1) or tail (e = -1).
                FreeWord tail = b.take();
                FreeWord value = e == 1 ? invert(tail) : tail;

                // Build the substitution into a smaller alphabet.
                std::vector<std::string> names;
                std::vector<int> remap(static_cast<std::size_t>(alph->size()), -1);
                for (int s = 0; s < alph->size(); ++s) {
                    if (s == sym) continue;
                    remap[static_cast<std::size_t>(s)] = static_cast<int>(names.size());
                    names.push_back(alph->name(s));
                }
                AlphabetPtr smaller = make_alphabet(std::move(names));
                auto project = [&](const FreeWord& w) {
                    WordBuilder out(smaller);
                    for (const Letter& l : w.letters())
                        out.push({remap[static_cast<std::size_t>(l.sym)], l.exp});
                    return out.take();
                };
                // Words with sym replaced by its value (over the old alphabet
                // first, then projected down).
                auto substitute = [&](const FreeWord& w) {
                    WordBuilder out(alph);
                    for (const Letter& l : w.letters()) {
                        if (l.sym == sym) {
                            if (l.exp == 1)
                                out.append(value);
                            else
                                out.append_inverse(value);
                        } else {
                            out.push(l);
                        }
                    }
                    return project(out.take());
                };
                std::vector<FreeWord> next;
                for (std::size_t rj = 0; rj < rels.size(); ++rj) {
                    if (rj == ri) continue;
                    next.push_back(substitute(rels[rj]));
                }
                alph = smaller;
                rels = std::move(next);
                return true;
            }
        }
        return false;
    }

    // Replace a long matched segment of one relator using another (shorter)
    // relator. Returns true if some relator got strictly shorter.
    bool shorten_once() {
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const int li = rels[i].length();
            if (li == 0 || li > 200) continue;
            for (std::size_t j = 0; j < rels.size(); ++j) {
                if (i == j || rels[j].length() < li) continue;
                const auto& target = rels[j].letters();
                for (int dir = 0; dir < 2; ++dir) {
                    FreeWord r = dir == 0 ? rels[i] : invert(rels[i]);
                    for (int off = 0; off < li; ++off) {
                        // rotation = r[off..] + r[..off]
                        std::vector<Letter> rot;
                        rot.reserve(static_cast<std::size_t>(li));
                        for (int t = 0; t < li; ++t)
                            rot.push_back(
                                r.letters()[static_cast<std::size_t>((off + t) % li)]);
                        // Longest prefix of rot occurring in target, must
                        // beat half of li to shorten.
                        const int min_len = li / 2 + 1;
                        for (std::size_t pos = 0;
                             pos + static_cast<std::size_t>(min_len) <= target.size();
                             ++pos) {
                            int match = 0;
                            while (match < li &&
                                   pos + static_cast<std::size_t>(match) < target.size() &&
                                   target[pos + static_cast<std::size_t>(match)] ==
                                       rot[static_cast<std::size_t>(match)])
                                ++match;
                            if (match < min_len) continue;
                            // target = X P Y with P = rot[0..match); replace P
                            // by (rot[match..))^-1, shorter by 2*match - li.
                            WordBuilder b(alph);
                            for (std::size_t t = 0; t < pos; ++t) b.push(target[t]);
                            for (int t = li - 1; t >= match; --t)
                                b.push({rot[static_cast<std::size_t>(t)].sym,
                                        -rot[static_cast<std::size_t>(t)].exp});
                            for (std::size_t t = pos + static_cast<std::size_t>(match);
                                 t < target.size(); ++t)
                                b.push(target[t]);
                            FreeWord replacement = b.take();
                            if (replacement.length() >= rels[j].length()) continue;
                            rels[j] = std::move(replacement);
                            return true;
                        }
                    }
                }
            }
        }
        return false;
    }
};

} // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, int effort) {
    WorkingPresentation w{p.generators, p.relators};
    w.normalize();
    for (int pass = 0; pass < effort; ++pass) {
        if (w.eliminate_once()) {
            w.normalize();
            continue;
        }
        if (w.shorten_once()) {
            w.normalize();
            continue;
        }
        break;
    }
    GroupPresentation out;
    out.generators = w.alph;
    out.relators = std::move(w.rels);
    return out;
}

// ---------------------------------------------------------------------------
// Pipeline front ends
// ---------------------------------------------------------------------------

AbelianGroup plat_homology(const SurfaceConfigPtr& config, const GeneratorWord& psi,
                           const GeneratorWord& sigma) {
    return abelianization(plat_presentation(config, psi, sigma));
}

CosetReport coset_equivalence_check(const SurfaceConfigPtr& config, const GeneratorWord& psi,
                                    const GeneratorWord& sigma,
                                    const GeneratorWord& epsilon) {
    CosetReport rep;
    GroupPresentation p1 = plat_presentation(config, psi, sigma);
    GroupPresentation p2 = plat_presentation(config, psi, concat(sigma, epsilon));
    rep.h1_sigma = abelianization(p1);
    rep.h1_sigma_epsilon = abelianization(p2);
    rep.simplified_sigma = tietze_simplify(p1);
    rep.simplified_sigma_epsilon = tietze_simplify(p2);
    rep.h1_equal = rep.h1_sigma == rep.h1_sigma_epsilon;
    return rep;
}

GeneratorWord psi_s3(int g) {
    if (g < 0) throw config_error("genus must be >= 0, got " + std::to_string(g));
    GeneratorWord w;
    for (int j = 1; j <= g; ++j) w.factors.push_back({GeneratorName::handle_u(j), 1});
    return w;
}

} // namespace hilden
