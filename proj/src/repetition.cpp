#include "sqfw/repetition.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sqfw {

bool witness_valid(const Word& w, const SquareWitness& witness) {
    const std::size_t p = witness.position;
    const std::size_t l = witness.half_length;
    if (l < 1 || p + 2 * l > w.size()) return false;
    for (std::size_t k = 0; k < l; ++k) {
        if (w[p + k] != w[p + l + k]) return false;
    }
    return true;
}

std::optional<SquareWitness> find_square_naive(const Word& w) {
    const auto s = w.symbols();
    const std::size_t n = s.size();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t l = 1; p + 2 * l <= n; ++l) {
            bool equal = true;
            for (std::size_t k = 0; k < l; ++k) {
                if (s[p + k] != s[p + l + k]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return SquareWitness{p, l};
        }
    }
    return std::nullopt;
}

std::optional<SquareWitness> check_boundary_squares(const Word& w, std::size_t max_half_length) {
    const auto s = w.symbols();
    const std::size_t n = s.size();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t l = 1; l <= max_half_length && p + 2 * l <= n; ++l) {
            bool equal = true;
            for (std::size_t k = 0; k < l; ++k) {
                if (s[p + k] != s[p + l + k]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return SquareWitness{p, l};
        }
    }
    return std::nullopt;
}

namespace {

using Symbols = std::vector<std::int8_t>;

// separator distinct from every alphabet symbol
constexpr std::int8_t kSeparator = 111;

std::vector<std::uint32_t> z_function(const Symbols& s) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> z(n, 0);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r) z[i] = static_cast<std::uint32_t>(std::min<std::size_t>(r - i, z[i - l]));
        while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

std::size_t z_at(const std::vector<std::uint32_t>& z, std::size_t i) {
    return i < z.size() ? z[i] : 0;
}

Symbols concat(const Symbols& a, const Symbols& b) {
    Symbols out;
    out.reserve(a.size() + 1 + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.push_back(kSeparator);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Searches s for a square; `shift` is s's offset in the original word. The
// recursion handles squares inside each half; squares crossing the split are
// recovered from extension lengths k1 (to the left of the split boundary)
// and k2 (to the right): a square of half-length l crossing the split exists
// iff k1 + k2 >= l for the matching center.
std::optional<SquareWitness> search(const Symbols& s, std::size_t shift) {
    const std::size_t n = s.size();
    if (n < 2) return std::nullopt;

    const std::size_t nu = n / 2;
    const std::size_t nv = n - nu;
    const Symbols u(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nu));
    const Symbols v(s.begin() + static_cast<std::ptrdiff_t>(nu), s.end());

    if (auto found = search(u, shift)) return found;
    if (auto found = search(v, shift + nu)) return found;

    const Symbols ru(u.rbegin(), u.rend());
    const Symbols rv(v.rbegin(), v.rend());

    const auto z1 = z_function(ru);
    const auto z2 = z_function(concat(v, u));
    const auto z3 = z_function(concat(ru, rv));
    const auto z4 = z_function(v);

    for (std::size_t center = 0; center < n; ++center) {
        std::size_t l, k1, k2;
        const bool left = center < nu;
        if (left) {
            l = nu - center;
            k1 = z_at(z1, nu - center);
            k2 = z_at(z2, nv + 1 + center);
        } else {
            l = center - nu + 1;
            k1 = z_at(z3, nu + 1 + nv - 1 - (center - nu));
            k2 = z_at(z4, center - nu + 1);
        }
        if (k1 + k2 < l) continue;

        // materialize one witness from the family: l1 symbols of the left
        // half before the split, l - l1 after
        std::size_t l1 = l > k2 ? l - k2 : 1;
        if (left && l1 == l) continue;  // lies entirely in u, found by recursion
        if (l1 > std::min(l, k1)) continue;
        const std::size_t pos = left ? center - l1 : center - l - l1 + 1;
        return SquareWitness{shift + pos, l};
    }
    return std::nullopt;
}

}  // namespace

std::optional<SquareWitness> find_square(const Word& w) {
    const auto view = w.symbols();
    return search(Symbols(view.begin(), view.end()), 0);
}

bool is_squarefree(const Word& w) { return !find_square(w).has_value(); }

}  // namespace sqfw
