#include "hilden/surface.hpp"

#include <algorithm>
#include <sstream>

namespace hilden {

// ---------------------------------------------------------------------------
// SurfaceConfig
// ---------------------------------------------------------------------------

SurfaceConfig::SurfaceConfig(int g, int n) : g_(g), n_(n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(std::max(2 * g + 2 * n - 1, 0)));
    for (int j = 1; j <= g; ++j) {
        names.push_back("u" + std::to_string(j));
        names.push_back("v" + std::to_string(j));
    }
    for (int k = 1; k <= 2 * n - 1; ++k)
        names.push_back("z" + std::to_string(k));
    alphabet_ = make_alphabet(std::move(names));

    WordBuilder b(alphabet_);
    for (int k = 2 * n - 1; k >= 1; --k)
        b.push({z(k), -1});
    for (int j = 1; j <= g; ++j) {
        b.push({u(j), 1});
        b.push({v(j), 1});
        b.push({u(j), -1});
        b.push({v(j), -1});
    }
    alias_ = b.take();
}

int SurfaceConfig::u(int j) const {
    if (j < 1 || j > g_)
        throw index_error("handle index " + std::to_string(j) + " out of range 1.." +
                          std::to_string(g_));
    return 2 * (j - 1);
}

int SurfaceConfig::v(int j) const { return u(j) + 1; }

int SurfaceConfig::z(int k) const {
    if (k < 1 || k > 2 * n_ - 1)
        throw index_error("puncture index " + std::to_string(k) + " out of range 1.." +
                          std::to_string(2 * n_ - 1));
    return 2 * g_ + (k - 1);
}

FreeWord SurfaceConfig::z_word(int k) const {
    if (k == 2 * n_) return alias_;
    return letter_word(alphabet_, z(k));
}

SurfaceConfigPtr make_config(int g, int n) {
    if (g < 0)
        throw config_error("genus must be >= 0, got " + std::to_string(g));
    if (n < 1)
        throw config_error("arc count must be >= 1, got " + std::to_string(n));
    return std::make_shared<const SurfaceConfig>(g, n);
}

namespace detail {
SurfaceConfigPtr make_config_unchecked(int g, int n) {
    if (g < 0 || n < 0)
        throw config_error("negative surface parameters");
    return std::make_shared<const SurfaceConfig>(g, n);
}
} // namespace detail

bool same_config(const SurfaceConfigPtr& a, const SurfaceConfigPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->genus() == b->genus() && a->arcs() == b->arcs();
}

// ---------------------------------------------------------------------------
// PuncturePermutation
// ---------------------------------------------------------------------------

PuncturePermutation PuncturePermutation::identity(int size) {
    PuncturePermutation p;
    p.img.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) p.img[static_cast<std::size_t>(i)] = i;
    return p;
}

bool PuncturePermutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

int PuncturePermutation::map1(int k) const {
    if (k < 1 || k > size())
        throw index_error("puncture " + std::to_string(k) + " out of range 1.." +
                          std::to_string(size()));
    return img[static_cast<std::size_t>(k - 1)] + 1;
}

PuncturePermutation PuncturePermutation::inverse() const {
    PuncturePermutation p;
    p.img.resize(img.size());
    for (int i = 0; i < size(); ++i)
        p.img[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])] = i;
    return p;
}

std::string PuncturePermutation::one_line() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ' ';
        os << img[static_cast<std::size_t>(i)] + 1;
    }
    return os.str();
}

PuncturePermutation operator*(const PuncturePermutation& a, const PuncturePermutation& b) {
    if (a.size() != b.size())
        throw config_error("permutation size mismatch");
    PuncturePermutation p;
    p.img.resize(a.img.size());
    for (int i = 0; i < a.size(); ++i)
        p.img[static_cast<std::size_t>(i)] =
            a.img[static_cast<std::size_t>(b.img[static_cast<std::size_t>(i)])];
    return p;
}

// ---------------------------------------------------------------------------
// MappingClassElement
// ---------------------------------------------------------------------------

MappingClassElement identity_element(const SurfaceConfigPtr& config) {
    return {config, FreeAutomorphism::identity(config->alphabet()),
            PuncturePermutation::identity(config->punctures()), {}};
}

MappingClassElement operator*(const MappingClassElement& a, const MappingClassElement& b) {
    if (!same_config(a.config, b.config))
        throw config_error("cannot multiply elements over different configs");
    return {a.config, compose(a.action, b.action), a.perm * b.perm,
            concat(a.provenance, b.provenance)};
}

MappingClassElement inverse(const MappingClassElement& m) {
    return {m.config, m.action.inverse(), m.perm.inverse(), inverse(m.provenance)};
}

MappingClassElement element_power(const MappingClassElement& m, int k) {
    MappingClassElement r = identity_element(m.config);
    MappingClassElement step = k >= 0 ? m : inverse(m);
    for (int i = 0; i < std::abs(k); ++i) r = r * step;
    return r;
}

// ---------------------------------------------------------------------------
// validate / h1_matrix / equal
// ---------------------------------------------------------------------------

ValidationReport validate(const MappingClassElement& elem) {
    const auto& cf = *elem.config;
    ValidationReport rep;

    if (elem.perm.size() != cf.punctures()) {
        rep.clause = 'c';
        rep.message = "permutation size does not match the puncture count";
        return rep;
    }

    // (c) honest automorphism: forward and backward really invert each other.
    if (!compose(elem.action.forward(), elem.action.backward()).is_identity() ||
        !compose(elem.action.backward(), elem.action.forward()).is_identity()) {
        rep.clause = 'c';
        rep.message = "action tables are not two-sided inverses";
        return rep;
    }

    // (a) puncture loops map to conjugates of image loops, orientation kept;
    // (b) the same for the alias loop z_{2n}, which encodes the relator.
    for (int k = 1; k <= cf.punctures(); ++k) {
        FreeWord img = apply(elem.action, cf.z_word(k));
        FreeWord target = cf.z_word(elem.perm.map1(k));
        if (!are_conjugate(img, target)) {
            rep.clause = (k == cf.punctures()) ? 'b' : 'a';
            rep.puncture = k;
            rep.witness = to_string(img);
            rep.message = "image of z_" + std::to_string(k) +
                          " is not a conjugate of z_" + std::to_string(elem.perm.map1(k));
            return rep;
        }
    }

    rep.pass = true;
    return rep;
}

std::vector<std::vector<long long>> h1_matrix(const MappingClassElement& elem) {
    const auto& cf = *elem.config;
    const int g = cf.genus();
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(2 * g),
                                          std::vector<long long>(static_cast<std::size_t>(2 * g), 0));
    for (int j = 1; j <= g; ++j) {
        for (int half = 0; half < 2; ++half) {
            int row = 2 * (j - 1) + half;
            int sym = half == 0 ? cf.u(j) : cf.v(j);
            for (const Letter& l : elem.action.forward().image(sym).letters()) {
                if (l.sym < 2 * g) // z symbols are dropped
                    m[static_cast<std::size_t>(row)][static_cast<std::size_t>(l.sym)] += l.exp;
            }
        }
    }
    return m;
}

bool equal(const MappingClassElement& a, const MappingClassElement& b) {
    if (!same_config(a.config, b.config))
        throw config_error("cannot compare elements over different configs");
    if (!(a.perm == b.perm)) return false;
    return equal_up_to_inner(a.action, b.action);
}

} // namespace hilden
