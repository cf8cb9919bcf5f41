#pragma once

// Waldspurger's map sending a pair of special orbits of an endoscopic group
// H1 x H2 to an orbit of H. On partitions it is lambda1 + lambda2 + xi, where
// xi is +1 on J+, -1 on J- and 0 elsewhere.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitcalc/duality.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Endoscopic pair types. The factor types are (first, second) and the group
/// itself has the target type.
enum class PairType { BB, CD, DD };

inline const char* to_string(PairType pt) {
    switch (pt) {
        case PairType::BB: return "BB";
        case PairType::CD: return "CD";
        case PairType::DD: return "DD";
    }
    return "?";
}

inline PairType parse_pair_type(std::string_view text) {
    if (text == "BB") return PairType::BB;
    if (text == "CD") return PairType::CD;
    if (text == "DD") return PairType::DD;
    throw InputError("unknown pair type '" + std::string(text) + "' (expected BB, CD or DD)");
}

struct PairTypeInfo {
    GroupType first;
    GroupType second;
    GroupType target;
};

constexpr PairTypeInfo info(PairType pt) {
    switch (pt) {
        case PairType::BB: return {GroupType::B, GroupType::B, GroupType::B};
        case PairType::CD: return {GroupType::C, GroupType::D, GroupType::C};
        case PairType::DD: return {GroupType::D, GroupType::D, GroupType::D};
    }
    return {GroupType::B, GroupType::B, GroupType::B};
}

/// 1 for an orthogonal factor, 0 for a symplectic one.
constexpr int epsilon(GroupType t) { return is_orthogonal_type(t) ? 1 : 0; }

/// Size of the standard representation of H from those of H1 and H2.
constexpr int target_size(PairType pt, int d1, int d2) {
    return pt == PairType::BB ? d1 + d2 - 1 : d1 + d2;
}

struct XiVector {
    std::vector<int> entries;  // entries[j-1] is xi_j
    std::vector<int> j_plus;   // 1-based, increasing
    std::vector<int> j_minus;

    int sum() const {
        int s = 0;
        for (int e : entries) s += e;
        return s;
    }
};

namespace detail {

inline void require_special_factor(const Partition& lambda, GroupType t, const char* which) {
    const Classification c = classify(lambda, t);
    if (!c.member || !c.special) {
        throw InputError(std::string(which) + " factor " + (lambda.empty() ? "()" : lambda.to_string()) +
                         " is not a special partition of type " + std::string(1, to_char(t)));
    }
}

}  // namespace detail

inline XiVector xi_vector(const Partition& lambda1, const Partition& lambda2, PairType pt) {
    const PairTypeInfo ti = info(pt);
    detail::require_special_factor(lambda1, ti.first, "first");
    detail::require_special_factor(lambda2, ti.second, "second");

    const int d = target_size(pt, lambda1.size(), lambda2.size());
    const int e1 = epsilon(ti.first);
    const int e2 = epsilon(ti.second);
    const std::size_t k = std::max(lambda1.length(), lambda2.length());
    auto sum_at = [&](std::size_t j) { return lambda1.part(j) + lambda2.part(j); };

    XiVector xi;
    xi.entries.assign(k, 0);
    for (std::size_t j = 1; j <= k; ++j) {
        const bool parities = lambda1.part(j) % 2 == e1 && lambda2.part(j) % 2 == e2;
        if (!parities) continue;
        const bool j_odd = j % 2 == 1;
        const bool d_odd = d % 2 != 0;
        // j = d + 1 (mod 2), left boundary
        if (j_odd != d_odd && (j == 1 || sum_at(j - 1) > sum_at(j))) {
            xi.entries[j - 1] = 1;
            xi.j_plus.push_back(static_cast<int>(j));
        } else if (j_odd == d_odd && sum_at(j) > sum_at(j + 1)) {
            // j = d (mod 2), right boundary
            xi.entries[j - 1] = -1;
            xi.j_minus.push_back(static_cast<int>(j));
        }
    }
    return xi;
}

struct WaldspurgerResult {
    Partition partition;
    XiVector xi;
    GroupType type;
};

/// W(lambda1, lambda2). Both factors must be special of the factor types of
/// pt. The output is a partition of type target(pt); it need not be special.
inline WaldspurgerResult waldspurger_full(const Partition& lambda1, const Partition& lambda2, PairType pt) {
    XiVector xi = xi_vector(lambda1, lambda2, pt);
    const PairTypeInfo ti = info(pt);
    const int d = target_size(pt, lambda1.size(), lambda2.size());

    std::vector<int> parts(xi.entries.size());
    for (std::size_t j = 1; j <= parts.size(); ++j) {
        parts[j - 1] = lambda1.part(j) + lambda2.part(j) + xi.entries[j - 1];
    }
    const std::string where = std::string("W(") + lambda1.to_string() + "; " + lambda2.to_string() + ") " +
                              to_string(pt);
    for (std::size_t j = 1; j < parts.size(); ++j) {
        if (parts[j - 1] < parts[j] || parts[j] < 0) {
            throw InvariantViolation(where + ": lambda1 + lambda2 + xi is not weakly decreasing");
        }
    }
    Partition lambda(std::move(parts));
    if (lambda.size() != d) {
        throw InvariantViolation(where + ": size " + std::to_string(lambda.size()) + ", expected " +
                                 std::to_string(d));
    }
    if (!is_member(lambda, ti.target)) {
        throw InvariantViolation(where + ": " + lambda.to_string() + " is not of type " +
                                 std::string(1, to_char(ti.target)));
    }
    return {std::move(lambda), std::move(xi), ti.target};
}

inline Partition waldspurger(const Partition& lambda1, const Partition& lambda2, PairType pt) {
    return waldspurger_full(lambda1, lambda2, pt).partition;
}

}  // namespace orbitcalc
