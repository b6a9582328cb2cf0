#include "hilden/projections.hpp"

#include <map>
#include <sstream>

namespace hilden {

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation s;
    s.perm.resize(static_cast<std::size_t>(n));
    s.signs.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) s.perm[static_cast<std::size_t>(i)] = i;
    return s;
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (perm[static_cast<std::size_t>(i)] != i || signs[static_cast<std::size_t>(i)] != 1)
            return false;
    return true;
}

std::string SignedPermutation::to_text() const {
    std::ostringstream os;
    os << "perm:";
    for (int i = 0; i < size(); ++i) os << ' ' << perm[static_cast<std::size_t>(i)] + 1;
    os << " | signs:";
    for (int i = 0; i < size(); ++i)
        os << ' ' << (signs[static_cast<std::size_t>(i)] == 1 ? '+' : '-');
    return os.str();
}

SignedPermutation signed_multiply(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.size() != b.size())
        throw config_error("signed permutation size mismatch");
    SignedPermutation out;
    out.perm.resize(a.perm.size());
    out.signs.resize(a.signs.size());
    for (int i = 0; i < a.size(); ++i) {
        int mid = b.perm[static_cast<std::size_t>(i)];
        out.perm[static_cast<std::size_t>(i)] = a.perm[static_cast<std::size_t>(mid)];
        out.signs[static_cast<std::size_t>(i)] =
            b.signs[static_cast<std::size_t>(i)] * a.signs[static_cast<std::size_t>(mid)];
    }
    return out;
}

PuncturePermutation puncture_perm(const MappingClassElement& elem) { return elem.perm; }

std::optional<SignedPermutation> signed_decompose(const PuncturePermutation& p, int n) {
    if (p.size() != 2 * n)
        throw config_error("permutation acts on " + std::to_string(p.size()) +
                           " points, expected " + std::to_string(2 * n));
    SignedPermutation out;
    out.perm.resize(static_cast<std::size_t>(n));
    out.signs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int x = p.img[static_cast<std::size_t>(2 * i)];
        int y = p.img[static_cast<std::size_t>(2 * i + 1)];
        if (x / 2 != y / 2) return std::nullopt; // pair split
        out.perm[static_cast<std::size_t>(i)] = x / 2;
        if (x % 2 == 0 && y % 2 == 1)
            out.signs[static_cast<std::size_t>(i)] = 1;
        else
            out.signs[static_cast<std::size_t>(i)] = -1;
    }
    return out;
}

bool is_pure(const MappingClassElement& elem) { return elem.perm.is_identity(); }

bool kernel_omega_necessary(const MappingClassElement& elem) {
    auto m = h1_matrix(elem);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (m[r][c] != (r == c ? 1 : 0)) return false;
    return true;
}

std::vector<PuncturePermutation> permutation_closure(
    const std::vector<PuncturePermutation>& generators) {
    std::map<std::vector<int>, PuncturePermutation> seen;
    if (generators.empty()) return {};
    PuncturePermutation id = PuncturePermutation::identity(generators.front().size());
    std::vector<PuncturePermutation> frontier{id};
    seen.emplace(id.img, id);
    while (!frontier.empty()) {
        std::vector<PuncturePermutation> next;
        for (const auto& p : frontier)
            for (const auto& gen : generators) {
                PuncturePermutation q = gen * p;
                if (seen.emplace(q.img, q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    std::vector<PuncturePermutation> out;
    out.reserve(seen.size());
    for (auto& [_, p] : seen) out.push_back(std::move(p));
    return out;
}

} // namespace hilden
