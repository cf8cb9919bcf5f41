#pragma once

// Spaltenstein duality on partitions, and orbit dimensions.

#include <cstdint>
#include <string>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

enum class Adjust { Minus, Plus };

/// Minus lowers the smallest positive part by one (dropping it if it reaches
/// zero). Plus raises the largest part by one; on the empty partition it
/// yields (1).
inline Partition adjust(const Partition& lambda, Adjust direction) {
    std::vector<int> p = lambda.parts();
    if (direction == Adjust::Minus) {
        if (p.empty()) throw InputError("cannot lower a part of the empty partition");
        --p.back();
    } else if (p.empty()) {
        p.push_back(1);
    } else {
        ++p.front();
    }
    return Partition(std::move(p));
}

struct DualityResult {
    GroupType input_type;
    GroupType output_type;
    Partition partition;
    Decoration decoration = Decoration::None;
};

/// Spaltenstein dual of an orbit of type t:
///   B: C-collapse of (lambda^t)^-,  C: B-collapse of (lambda^t)^+,  D: D-collapse of lambda^t.
/// The result is always special of the dual type.
inline DualityResult dual(const Partition& lambda, GroupType t) {
    if (!classify(lambda, t).member) {
        throw InputError(lambda.to_string() + " is not a partition of type " + std::string(1, to_char(t)));
    }
    const Partition lt = transpose(lambda);
    DualityResult r{t, dual_type(t), {}};
    switch (t) {
        case GroupType::B: r.partition = collapse(adjust(lt, Adjust::Minus), GroupType::C); break;
        case GroupType::C: r.partition = collapse(adjust(lt, Adjust::Plus), GroupType::B); break;
        case GroupType::D: r.partition = collapse(lt, GroupType::D); break;
    }
    return r;
}

/// Rank of the group of type t whose standard representation has dimension `size`.
constexpr int rank_from_size(int size, GroupType t) {
    return t == GroupType::B ? (size - 1) / 2 : size / 2;
}

/// so(2n+1), sp(2n): n(2n+1); so(2n): n(2n-1).
constexpr std::int64_t lie_algebra_dim(GroupType t, int rank) {
    const std::int64_t n = rank;
    return t == GroupType::D ? n * (2 * n - 1) : n * (2 * n + 1);
}

/// Dimension of the nilpotent orbit labelled by lambda. The centralizer has
/// dimension (sum of squared transpose parts +/- number of odd parts) / 2,
/// plus for C and minus for B, D.
inline std::int64_t orbit_dim(const Partition& lambda, GroupType t) {
    if (!classify(lambda, t).member) {
        throw InputError(lambda.to_string() + " is not a partition of type " + std::string(1, to_char(t)));
    }
    std::int64_t squares = 0;
    const Partition lt = transpose(lambda);
    for (int c : lt.parts()) squares += std::int64_t{c} * c;
    std::int64_t odd = 0;
    for (int p : lambda.parts()) odd += (p % 2);
    const std::int64_t centralizer = (t == GroupType::C ? squares + odd : squares - odd) / 2;
    return lie_algebra_dim(t, rank_from_size(lambda.size(), t)) - centralizer;
}

}  // namespace orbitcalc
