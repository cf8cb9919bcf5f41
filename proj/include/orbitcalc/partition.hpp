#pragma once

// Integer partitions and the type-B/C/D bookkeeping used to label nilpotent
// orbits of split classical groups.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

/// Split classical type. B: odd orthogonal, C: symplectic, D: even orthogonal.
enum class GroupType { B, C, D };

/// I/II tag on very even type-D objects. Carried along, never compared.
enum class Decoration { None, I, II };

inline char to_char(GroupType t) {
    switch (t) {
        case GroupType::B: return 'B';
        case GroupType::C: return 'C';
        case GroupType::D: return 'D';
    }
    return '?';
}

inline GroupType parse_group_type(std::string_view text) {
    if (text == "B" || text == "b") return GroupType::B;
    if (text == "C" || text == "c") return GroupType::C;
    if (text == "D" || text == "d") return GroupType::D;
    throw InputError("unknown group type '" + std::string(text) + "' (expected B, C or D)");
}

inline const char* to_string(Decoration d) {
    switch (d) {
        case Decoration::None: return "";
        case Decoration::I: return "I";
        case Decoration::II: return "II";
    }
    return "";
}

/// Orthogonal types (B, D) use orthogonal partitions; C uses symplectic ones.
constexpr bool is_orthogonal_type(GroupType t) { return t != GroupType::C; }

/// Type of the Langlands dual group: B <-> C, D -> D.
constexpr GroupType dual_type(GroupType t) {
    switch (t) {
        case GroupType::B: return GroupType::C;
        case GroupType::C: return GroupType::B;
        case GroupType::D: return GroupType::D;
    }
    return t;
}

inline bool parity_matches(int size, GroupType t) {
    return (t == GroupType::B) == (size % 2 == 1);
}

inline void require_parity(int size, GroupType t) {
    if (!parity_matches(size, t)) {
        throw InputError("size " + std::to_string(size) + " has the wrong parity for type " +
                         std::string(1, to_char(t)) +
                         (t == GroupType::B ? " (needs odd)" : " (needs even)"));
    }
}

/// Weakly decreasing list of positive integers. Indexed reads past the end
/// return 0, matching the convention that a partition has infinitely many
/// trailing zeros.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; 0 beyond the length (and for j == 0).
    int part(std::size_t j) const noexcept {
        return (j >= 1 && j <= parts_.size()) ? parts_[j - 1] : 0;
    }

    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Lexicographic order on the part sequence. This is a total order for
    /// containers and deterministic output; it is NOT the dominance order.
    friend bool lex_less(const Partition& a, const Partition& b) {
        return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                            b.parts_.end());
    }

    /// "4,2,1"; the empty partition prints as "".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    void normalize() {
        for (int p : parts_) {
            if (p < 0) throw InputError("partition parts must be non-negative, got " + std::to_string(p));
        }
        std::erase(parts_, 0);
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    std::vector<int> parts_;
};

/// Parses "4,2,1" in any order. Whitespace around tokens is ignored.
inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return Partition{};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trim(text.substr(start, comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InputError("not an integer: '" + std::string(tok) + "'");
        }
        if (value <= 0) throw InputError("partition parts must be positive, got " + std::string(tok));
        parts.push_back(value);
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

/// Number of parts equal to k.
inline int multiplicity(const Partition& lambda, int k) {
    return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), k));
}

/// Conjugate partition: the k-th part counts parts of lambda that are >= k.
inline Partition transpose(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts()) {
        for (int k = 0; k < p; ++k) ++out[static_cast<std::size_t>(k)];
    }
    return Partition(std::move(out));
}

/// Multiset union; multiplicities add.
inline Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

/// Componentwise sum after zero padding.
inline Partition add(const Partition& a, const Partition& b) {
    std::vector<int> parts(std::max(a.length(), b.length()));
    for (std::size_t j = 1; j <= parts.size(); ++j) parts[j - 1] = a.part(j) + b.part(j);
    return Partition(std::move(parts));
}

/// lambda <= mu in the dominance order: every prefix sum of lambda is at most
/// the matching prefix sum of mu. Only defined for equal sizes.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw InputError("dominance order compares partitions of equal size (" +
                         std::to_string(lambda.size()) + " vs " + std::to_string(mu.size()) + ")");
    }
    int lhs = 0;
    int rhs = 0;
    const std::size_t n = std::max(lambda.length(), mu.length());
    for (std::size_t j = 1; j <= n; ++j) {
        lhs += lambda.part(j);
        rhs += mu.part(j);
        if (lhs > rhs) return false;
    }
    return true;
}

namespace detail {

// Every part of the given parity has even multiplicity.
inline bool even_multiplicities_of_parity(const Partition& lambda, int parity) {
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (p[i] % 2 == parity && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

}  // namespace detail

/// Even parts occur with even multiplicity.
inline bool is_orthogonal(const Partition& lambda) {
    return detail::even_multiplicities_of_parity(lambda, 0);
}

/// Odd parts occur with even multiplicity.
inline bool is_symplectic(const Partition& lambda) {
    return detail::even_multiplicities_of_parity(lambda, 1);
}

/// Membership ignores size parity; callers check that with require_parity.
inline bool is_member(const Partition& lambda, GroupType t) {
    return is_orthogonal_type(t) ? is_orthogonal(lambda) : is_symplectic(lambda);
}

/// All parts even, each with even multiplicity. Only meaningful for type D.
inline bool is_very_even(const Partition& lambda) {
    if (lambda.empty()) return false;
    for (int p : lambda.parts()) {
        if (p % 2 != 0) return false;
    }
    return detail::even_multiplicities_of_parity(lambda, 0);
}

struct Classification {
    bool member = false;
    bool special = false;
    bool very_even = false;
};

/// Membership and specialness for type t. Special means: the transpose is
/// symplectic (types C, D) or orthogonal (type B).
inline Classification classify(const Partition& lambda, GroupType t) {
    require_parity(lambda.size(), t);
    Classification c;
    c.member = is_member(lambda, t);
    if (!c.member) return c;
    const Partition lt = transpose(lambda);
    c.special = (t == GroupType::B) ? is_orthogonal(lt) : is_symplectic(lt);
    c.very_even = (t == GroupType::D) && is_very_even(lambda);
    return c;
}

inline bool is_special(const Partition& lambda, GroupType t) {
    const Classification c = classify(lambda, t);
    return c.member && c.special;
}

/// Largest partition of type t dominated by lambda.
///
/// Repeatedly takes the largest part q of the forbidden parity (even for B/D,
/// odd for C) that has odd multiplicity, lowers its last occurrence by one and
/// raises the first later part that is smaller than q - 1 (a new part 1 if
/// there is none).
inline Partition collapse(const Partition& lambda, GroupType t) {
    require_parity(lambda.size(), t);
    const int forbidden = is_orthogonal_type(t) ? 0 : 1;
    std::vector<int> p = lambda.parts();
    for (;;) {
        int q = -1;
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if (p[i] > 0 && p[i] % 2 == forbidden && (j - i) % 2 == 1) {
                q = p[i];
                break;
            }
            i = j;
        }
        if (q < 0) break;
        std::size_t last = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == q) last = i;
        }
        --p[last];
        std::size_t target = last + 1;
        while (target < p.size() && p[target] >= q - 1) ++target;
        if (target == p.size()) p.push_back(0);
        ++p[target];
        std::sort(p.begin(), p.end(), std::greater<>());
        std::erase(p, 0);
    }
    Partition out(std::move(p));
    if (!is_member(out, t) || !dominance_leq(out, lambda)) {
        throw InvariantViolation("collapse of " + lambda.to_string() + " produced " + out.to_string());
    }
    return out;
}

/// Every partition of d, lexicographically decreasing ((d) first, (1^d) last).
inline std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw InputError("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int first = std::min(remaining, max_part); first >= 1; --first) {
            current.push_back(first);
            rec(remaining - first, first);
            current.pop_back();
        }
    };
    rec(d, d);
    return out;
}

/// Partitions of d of type t (optionally only special ones), same order as
/// enumerate_partitions.
inline std::vector<Partition> enumerate(int d, GroupType t, bool special_only) {
    require_parity(d, t);
    std::vector<Partition> out;
    for (auto& lambda : enumerate_partitions(d)) {
        const Classification c = classify(lambda, t);
        if (c.member && (!special_only || c.special)) out.push_back(std::move(lambda));
    }
    return out;
}

}  // namespace orbitcalc
