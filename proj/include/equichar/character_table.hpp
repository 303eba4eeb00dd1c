#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equichar/class_function.hpp"
#include "equichar/error.hpp"

namespace equichar {

/// Largest group order for which character_table() runs (default 200).
inline std::atomic<std::size_t>& character_table_cap() {
    static std::atomic<std::size_t> cap{200};
    return cap;
}

/// Irreducible characters of a group in characteristic 0.
struct CharacterTable {
    GroupPtr group;
    std::vector<ClassFunction> rows;
};

namespace detail {

/// Arithmetic in F_l for a prime l < 2^31.
struct ModP {
    std::int64_t l;
    std::int64_t norm(std::int64_t a) const { return mod(a, l); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return norm(a * b); }
    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        std::int64_t r = 1;
        a = norm(a);
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::int64_t inv(std::int64_t a) const { return pow(a, l - 2); }
};

using ModMatrix = std::vector<std::vector<std::int64_t>>;

/// Row-reduces in place; returns pivot columns.
inline std::vector<std::size_t> rref(ModMatrix& m, const ModP& F) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const std::int64_t iv = F.inv(m[row][c]);
        for (auto& x : m[row]) x = F.mul(x, iv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const std::int64_t f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = F.norm(m[r][k] - f * m[row][k]);
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

/// Basis (as rows) of the kernel of the square matrix a acting on column vectors.
inline ModMatrix kernel(ModMatrix a, const ModP& F) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    auto pivots = rref(a, F);
    ModMatrix basis;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::int64_t> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.norm(-a[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::int64_t primitive_root(std::int64_t l, const ModP& F) {
    std::vector<std::int64_t> factors;
    std::int64_t m = l - 1;
    for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            factors.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) factors.push_back(m);
    for (std::int64_t g = 2; g < l; ++g) {
        bool ok = true;
        for (auto p : factors)
            if (F.pow(g, (l - 1) / p) == 1) ok = false;
        if (ok) return g;
    }
    return 1;
}

}  // namespace detail

/// Smallest prime l = 1 mod e with l > 2|G|, searched below the bound.
inline std::optional<std::int64_t> dixon_prime(std::int64_t e, std::int64_t group_order, std::int64_t bound) {
    for (std::int64_t l = e + 1; l < bound; l += e)
        if (l > 2 * group_order && is_prime(l)) return l;
    return std::nullopt;
}

/// Irreducible characters by the Dixon-Schneider method: the class
/// multiplication matrices are simultaneously diagonalised over F_l with
/// l = 1 mod exp(G), giving the central characters; degrees follow from the
/// first orthogonality relation, and the values are lifted to Q(zeta_exp)
/// through eigenvalue multiplicities computed with a discrete Fourier
/// transform over F_l. Rows are sorted by degree, then by values in
/// descending lexicographic order (so the trivial character comes first).
inline CharacterTable character_table(const GroupPtr& G) {
    if (G->characteristic() != 0) throw InvariantError("character tables are computed in characteristic 0 only");
    if (G->order() > character_table_cap().load())
        throw CapError("group order " + std::to_string(G->order()) + " exceeds character table cap " +
                       std::to_string(character_table_cap().load()));
    const auto& cls = G->conjugacy_classes(false);
    const std::size_t h = cls.size();
    const std::int64_t n = static_cast<std::int64_t>(G->order());
    const std::int64_t e = G->exponent();

    std::optional<std::int64_t> prime;
    for (std::int64_t bound = 1 << 16; !prime && bound <= (std::int64_t{1} << 30); bound <<= 2)
        prime = dixon_prime(e, n, bound);
    if (!prime) throw CapError("no suitable prime for the Dixon-Schneider method");
    const detail::ModP F{*prime};

    // a[j][i][k] = #{x in C_i : x^-1 g_k in C_j}, so that
    // omega_i omega_j = sum_k a[j][i][k] omega_k.
    std::vector<detail::ModMatrix> mats(h, detail::ModMatrix(h, std::vector<std::int64_t>(h, 0)));
    for (int x = 0; x < G->size(); ++x) {
        const std::size_t i = static_cast<std::size_t>(G->class_of(x));
        const int xi = G->inv(x);
        for (std::size_t k = 0; k < h; ++k) {
            const std::size_t j = static_cast<std::size_t>(G->class_of(G->mul(xi, cls[k].representative)));
            ++mats[j][i][k];
        }
    }

    // Simultaneous eigenspace splitting. Each space is a list of rows in RREF.
    std::vector<detail::ModMatrix> spaces;
    {
        detail::ModMatrix id(h, std::vector<std::int64_t>(h, 0));
        for (std::size_t i = 0; i < h; ++i) id[i][i] = 1;
        spaces.push_back(std::move(id));
    }
    for (std::size_t j = 1; j < h && spaces.size() < h; ++j) {
        std::vector<detail::ModMatrix> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(space);
                continue;
            }
            auto pivots = detail::rref(space, F);
            const std::size_t m = space.size();
            // Matrix of M_j on the space, in the basis given by the rows.
            detail::ModMatrix R(m, std::vector<std::int64_t>(m, 0));
            for (std::size_t c = 0; c < m; ++c) {
                for (std::size_t r = 0; r < m; ++r) {
                    std::int64_t w = 0;
                    for (std::size_t k = 0; k < h; ++k) w += mats[j][pivots[r]][k] * space[c][k] % F.l;
                    R[r][c] = F.norm(w);
                }
            }
            std::size_t found = 0;
            for (std::int64_t lambda = 0; lambda < F.l && found < m; ++lambda) {
                detail::ModMatrix A = R;
                for (std::size_t d = 0; d < m; ++d) A[d][d] = F.norm(A[d][d] - lambda);
                detail::ModMatrix ker = detail::kernel(A, F);
                if (ker.empty()) continue;
                found += ker.size();
                detail::ModMatrix sub;
                for (const auto& coords : ker) {
                    std::vector<std::int64_t> v(h, 0);
                    for (std::size_t c = 0; c < m; ++c)
                        for (std::size_t k = 0; k < h; ++k) v[k] = F.norm(v[k] + coords[c] * space[c][k]);
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
            if (found != m) throw MismatchError("class matrix is not diagonalisable over F_l");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != h) throw MismatchError("Dixon-Schneider splitting did not separate all characters");

    std::vector<std::size_t> inverse_class(h);
    for (std::size_t k = 0; k < h; ++k)
        inverse_class[k] = static_cast<std::size_t>(G->class_of(G->inv(cls[k].representative)));
    // power_class[k][t] = class of g_k^t
    std::vector<std::vector<std::size_t>> power_class(h, std::vector<std::size_t>(static_cast<std::size_t>(e)));
    for (std::size_t k = 0; k < h; ++k) {
        int x = 0;
        for (std::int64_t t = 0; t < e; ++t, x = G->mul(x, cls[k].representative))
            power_class[k][static_cast<std::size_t>(t)] = static_cast<std::size_t>(G->class_of(x));
    }
    const std::int64_t z = F.pow(detail::primitive_root(F.l, F), (F.l - 1) / e);
    const std::int64_t inv_e = F.inv(e);

    std::vector<ClassFunction> rows;
    for (auto& space : spaces) {
        std::vector<std::int64_t> omega = space[0];
        const std::int64_t scale = F.inv(omega[0]);
        for (auto& w : omega) w = F.mul(w, scale);
        std::int64_t s = 0;
        for (std::size_t k = 0; k < h; ++k)
            s = F.norm(s + F.mul(F.mul(omega[k], omega[inverse_class[k]]), F.inv(static_cast<std::int64_t>(cls[k].size()))));
        const std::int64_t d2 = F.mul(n % F.l, F.inv(s));
        std::int64_t d = 1;
        while (d * d < d2) ++d;
        if (d * d != d2) throw MismatchError("Dixon-Schneider: degree is not an integer");
        std::vector<std::int64_t> chi(h);
        for (std::size_t k = 0; k < h; ++k)
            chi[k] = F.mul(F.mul(omega[k], d), F.inv(static_cast<std::int64_t>(cls[k].size())));
        std::vector<Cyclotomic> values(h);
        for (std::size_t k = 0; k < h; ++k) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(e));
            for (std::int64_t jj = 0; jj < e; ++jj) {
                std::int64_t acc = 0;
                for (std::int64_t t = 0; t < e; ++t)
                    acc = F.norm(acc + F.mul(chi[power_class[k][static_cast<std::size_t>(t)]], F.pow(z, mod(-jj * t, e))));
                const std::int64_t mult = F.mul(acc, inv_e);
                if (mult > d) throw MismatchError("Dixon-Schneider: eigenvalue multiplicity out of range");
                coeffs[static_cast<std::size_t>(jj)] = mult;
            }
            values[k] = Cyclotomic(e, std::move(coeffs));
        }
        rows.emplace_back(G, std::move(values));
    }
    std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
        int c = compare(a.degree(), b.degree());
        if (c != 0) return c < 0;
        for (std::size_t i = 0; i < a.values().size(); ++i) {
            c = compare(a.value(i), b.value(i));
            if (c != 0) return c > 0;
        }
        return false;
    });
    return CharacterTable{G, std::move(rows)};
}

/// Multiplicities of the irreducible characters in f.
struct Decomposition {
    std::vector<Rational> multiplicities;
    bool integral = true;
};

inline Decomposition decompose(const ClassFunction& f, const CharacterTable& table) {
    if (f.characteristic() != 0) throw InvariantError("decompose: characteristic 0 only");
    Decomposition out;
    for (const auto& chi : table.rows) {
        Cyclotomic m = inner_product(f, chi);
        if (!m.is_rational()) throw DomainError("multiplicity is not rational: " + m.str());
        out.multiplicities.push_back(m.rational());
        if (!is_integer(out.multiplicities.back())) out.integral = false;
    }
    return out;
}

}  // namespace equichar
