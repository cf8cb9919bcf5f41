#pragma once

// Slow, definition-level reference implementations. They exist to check the
// fast paths and are only used by tests and the verification harness.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitcalc/partition.hpp"
#include "orbitcalc/symbols.hpp"

namespace orbitcalc::oracle {

/// Maximum, under dominance, of the type-t partitions below lambda, found by
/// enumerating every partition of the same size.
inline Partition brute_force_collapse(const Partition& lambda, GroupType t) {
    require_parity(lambda.size(), t);
    std::vector<Partition> below;
    for (auto& mu : enumerate_partitions(lambda.size())) {
        if (is_member(mu, t) && dominance_leq(mu, lambda)) below.push_back(std::move(mu));
    }
    for (const auto& cand : below) {
        bool is_max = true;
        for (const auto& other : below) {
            if (!dominance_leq(other, cand)) {
                is_max = false;
                break;
            }
        }
        if (is_max) return cand;
    }
    throw InvariantViolation("no largest type-" + std::string(1, to_char(t)) + " partition below " +
                             lambda.to_string());
}

/// Minimum, under dominance, of the special type-t partitions above lambda.
inline Partition brute_force_special_closure(const Partition& lambda, GroupType t) {
    std::vector<Partition> above;
    for (auto& mu : enumerate(lambda.size(), t, true)) {
        if (dominance_leq(lambda, mu)) above.push_back(std::move(mu));
    }
    for (const auto& cand : above) {
        bool is_min = true;
        for (const auto& other : above) {
            if (!dominance_leq(cand, other)) {
                is_min = false;
                break;
            }
        }
        if (is_min) return cand;
    }
    throw InvariantViolation("no smallest special partition above " + lambda.to_string());
}

/// Every bipartition of n of the given kind, trimmed to its shortest form.
inline std::vector<Bipartition> enumerate_bipartitions(int n, bool type_d) {
    std::vector<Bipartition> out;
    for (int na = 0; na <= n; ++na) {
        for (const auto& pa : enumerate_partitions(na)) {
            for (const auto& pb : enumerate_partitions(n - na)) {
                Bipartition rho;
                rho.type_d = type_d;
                rho.alpha.assign(pa.parts().rbegin(), pa.parts().rend());
                rho.beta.assign(pb.parts().rbegin(), pb.parts().rend());
                const std::size_t la = rho.alpha.size(), lb = rho.beta.size();
                const std::size_t k = type_d ? std::max(la, lb) : std::max(la == 0 ? 0 : la - 1, lb);
                rho.alpha.insert(rho.alpha.begin(), (type_d ? k : k + 1) - la, 0);
                rho.beta.insert(rho.beta.begin(), k - lb, 0);
                out.push_back(std::move(rho));
            }
        }
    }
    return out;
}

/// Springer bipartition by search: the special bipartition whose special
/// partition is lambda.
inline std::optional<Bipartition> search_springer_bipartition(const Partition& lambda, GroupType t) {
    const int n = rank_from_size(lambda.size(), t);
    for (const auto& rho : enumerate_bipartitions(n, t == GroupType::D)) {
        const Symbol s = symbol_of(rho);
        if (is_special_symbol(s) && partition_of_special_symbol(s, t) == lambda) return rho;
    }
    return std::nullopt;
}

/// Dense integer square matrix, row major.
struct Matrix {
    std::size_t n = 0;
    std::vector<std::int64_t> a;

    explicit Matrix(std::size_t size) : n(size), a(size * size, 0) {}
    std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static Matrix identity(std::size_t size) {
        Matrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix z(x.n);
        for (std::size_t i = 0; i < x.n; ++i) {
            for (std::size_t k = 0; k < x.n; ++k) {
                if (x(i, k) == 0) continue;
                for (std::size_t j = 0; j < x.n; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        }
        return z;
    }
};

/// Rank over the rationals. Integer row elimination; each reduced row is
/// divided by the gcd of its entries to keep the numbers small.
inline std::size_t rank(const Matrix& m) {
    using wide = __int128;
    const std::size_t n = m.n;
    std::vector<wide> a(m.a.begin(), m.a.end());
    auto at = [&](std::size_t i, std::size_t j) -> wide& { return a[i * n + j]; };
    auto gcd = [](wide x, wide y) {
        if (x < 0) x = -x;
        if (y < 0) y = -y;
        while (y != 0) {
            wide t = x % y;
            x = y;
            y = t;
        }
        return x;
    };
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && at(pivot, col) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(r, j));
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            const wide factor = at(i, col);
            if (factor == 0) continue;
            wide g = 0;
            for (std::size_t j = 0; j < n; ++j) {
                at(i, j) = at(r, col) * at(i, j) - factor * at(r, j);
                g = gcd(g, at(i, j));
            }
            if (g > 1) {
                for (std::size_t j = 0; j < n; ++j) at(i, j) /= g;
            }
        }
        ++r;
    }
    return r;
}

/// Block-diagonal nilpotent with `copies` Jordan blocks of each listed size,
/// conjugated by the all-ones upper unitriangular matrix so that the block
/// structure is not visible in the entries.
inline Matrix nilpotent_from_blocks(const std::vector<std::pair<int, int>>& blocks) {
    std::size_t n = 0;
    for (auto [copies, size] : blocks) n += static_cast<std::size_t>(copies) * static_cast<std::size_t>(size);
    Matrix jordan(n);
    std::size_t offset = 0;
    for (auto [copies, size] : blocks) {
        for (int c = 0; c < copies; ++c) {
            for (int i = 0; i + 1 < size; ++i) jordan(offset + i, offset + i + 1) = 1;
            offset += static_cast<std::size_t>(size);
        }
    }
    Matrix p(n), p_inv = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) p(i, j) = 1;
        if (i + 1 < n) p_inv(i, i + 1) = -1;
    }
    return p * jordan * p_inv;
}

/// Jordan type of a nilpotent matrix: the number of blocks of size >= k is
/// rank(N^{k-1}) - rank(N^k).
inline Partition jordan_type(const Matrix& nilpotent) {
    std::vector<int> at_least;  // at_least[k-1] = #blocks of size >= k
    std::size_t prev_rank = nilpotent.n;
    Matrix power = Matrix::identity(nilpotent.n);
    while (prev_rank > 0) {
        power = power * nilpotent;
        const std::size_t r = rank(power);
        if (r >= prev_rank) throw InputError("matrix is not nilpotent");
        at_least.push_back(static_cast<int>(prev_rank - r));
        prev_rank = r;
    }
    return transpose(Partition(std::move(at_least)));
}

/// Jordan type of the block-diagonal nilpotent with the given (copies, size) blocks.
inline Partition jordan_type_oracle(const std::vector<std::pair<int, int>>& blocks) {
    return jordan_type(nilpotent_from_blocks(blocks));
}

}  // namespace orbitcalc::oracle
