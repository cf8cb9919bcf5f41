#pragma once

// Bipartitions, Lusztig symbols and the Springer correspondence for special
// orbits of types B, C and D.
//
// A B/C bipartition is (a_0 <= ... <= a_k) x (b_1 <= ... <= b_k); its symbol
// has top row a_i + i and bottom row b_i + i - 1. A D bipartition drops a_0
// and both rows of its symbol are shifted by i - 1. Symbols are taken up to
// the shift (top, bottom) -> (0, top + 1 | 0, bottom + 1), which on
// bipartitions is left padding with zeros.

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitcalc/partition.hpp"
#include "orbitcalc/waldspurger.hpp"

namespace orbitcalc {

struct Bipartition {
    std::vector<int> alpha;  // B/C: a_0..a_k, D: a_1..a_k
    std::vector<int> beta;   // b_1..b_k
    bool type_d = false;
    Decoration decoration = Decoration::None;

    std::size_t k() const noexcept { return beta.size(); }

    int rank() const noexcept {
        int n = 0;
        for (int a : alpha) n += a;
        for (int b : beta) n += b;
        return n;
    }

    /// a_i for 0 <= i <= k; a_0 reads as 0 for type D.
    int a(std::size_t i) const noexcept {
        if (type_d) return i == 0 ? 0 : alpha[i - 1];
        return alpha[i];
    }
    /// b_i for 1 <= i <= k.
    int b(std::size_t i) const noexcept { return beta[i - 1]; }

    /// Left-pads with zeros up to k entries in beta (k >= this->k()).
    Bipartition padded(std::size_t target_k) const {
        Bipartition out = *this;
        const std::size_t extra = target_k > k() ? target_k - k() : 0;
        out.alpha.insert(out.alpha.begin(), extra, 0);
        out.beta.insert(out.beta.begin(), extra, 0);
        return out;
    }

    /// Strips leading (0, 0) pairs: the shortest representative.
    Bipartition trimmed() const {
        Bipartition out = *this;
        while (!out.beta.empty() && out.alpha.front() == 0 && out.beta.front() == 0) {
            out.alpha.erase(out.alpha.begin());
            out.beta.erase(out.beta.begin());
        }
        return out;
    }

    /// Equal up to zero padding. Decorations do not take part.
    friend bool operator==(const Bipartition& x, const Bipartition& y) {
        if (x.type_d != y.type_d) return false;
        const Bipartition tx = x.trimmed();
        const Bipartition ty = y.trimmed();
        return tx.alpha == ty.alpha && tx.beta == ty.beta;
    }

    /// "0,1|1"
    std::string to_string() const {
        auto row = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
            return s;
        };
        std::string s = row(alpha) + "|" + row(beta);
        if (decoration != Decoration::None) s += std::string("_") + orbitcalc::to_string(decoration);
        return s;
    }
};

namespace detail {

inline bool weakly_increasing(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end());
}

inline bool strictly_increasing(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

inline bool non_negative(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

inline std::vector<int> parse_int_row(std::string_view text) {
    std::vector<int> out;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(start, comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InputError("not an integer: '" + std::string(tok) + "'");
        }
        if (value < 0) throw InputError("bipartition entries must be non-negative");
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

inline void validate(const Bipartition& rho) {
    const std::string what = "bipartition " + rho.to_string();
    if (!detail::non_negative(rho.alpha) || !detail::non_negative(rho.beta)) {
        throw InputError(what + " has a negative entry");
    }
    if (!detail::weakly_increasing(rho.alpha) || !detail::weakly_increasing(rho.beta)) {
        throw InputError(what + " is not weakly increasing");
    }
    const std::size_t want = rho.type_d ? rho.beta.size() : rho.beta.size() + 1;
    if (rho.alpha.size() != want) {
        throw InputError(what + (rho.type_d ? ": type D needs rows of equal length"
                                            : ": alpha needs one more entry than beta"));
    }
    if (rho.decoration != Decoration::None && !(rho.type_d && rho.trimmed().alpha == rho.trimmed().beta)) {
        throw InputError(what + ": I/II decorations only apply to type D with alpha = beta");
    }
}

/// Parses "alpha|beta", e.g. "0,1|1". Rows may be given in any order and of
/// any lengths; they are sorted and left-padded with zeros.
inline Bipartition parse_bipartition(std::string_view text, bool type_d) {
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw InputError("bipartition must be written 'alpha|beta'");
    }
    Bipartition rho;
    rho.type_d = type_d;
    rho.alpha = detail::parse_int_row(text.substr(0, bar));
    rho.beta = detail::parse_int_row(text.substr(bar + 1));
    std::sort(rho.alpha.begin(), rho.alpha.end());
    std::sort(rho.beta.begin(), rho.beta.end());
    std::size_t k = std::max(rho.beta.size(), type_d ? rho.alpha.size() : (rho.alpha.empty() ? 0 : rho.alpha.size() - 1));
    rho.alpha.insert(rho.alpha.begin(), (type_d ? k : k + 1) - rho.alpha.size(), 0);
    rho.beta.insert(rho.beta.begin(), k - rho.beta.size(), 0);
    validate(rho);
    return rho;
}

struct Symbol {
    std::vector<int> top;
    std::vector<int> bottom;
    bool type_d = false;
    Decoration decoration = Decoration::None;

    friend bool operator==(const Symbol& x, const Symbol& y) {
        return x.type_d == y.type_d && x.top == y.top && x.bottom == y.bottom;
    }

    std::string to_string() const {
        Bipartition tmp{top, bottom, false, Decoration::None};
        std::string s = tmp.to_string();
        if (decoration != Decoration::None) s += std::string("_") + orbitcalc::to_string(decoration);
        return s;
    }
};

inline void validate(const Symbol& s) {
    const std::string what = "symbol " + s.to_string();
    if (!detail::non_negative(s.top) || !detail::non_negative(s.bottom)) {
        throw InputError(what + " has a negative entry");
    }
    if (!detail::strictly_increasing(s.top) || !detail::strictly_increasing(s.bottom)) {
        throw InputError(what + ": rows must be strictly increasing");
    }
    const std::size_t want = s.type_d ? s.bottom.size() : s.bottom.size() + 1;
    if (s.top.size() != want) {
        throw InputError(what + (s.type_d ? ": type D rows must have equal length"
                                          : ": top row needs one more entry than the bottom row"));
    }
}

/// Shift-minimal representative. For type D the rows are unordered; the
/// lexicographically smaller row goes on top.
inline Symbol normalize_symbol(Symbol s) {
    validate(s);
    while (!s.top.empty() && !s.bottom.empty() && s.top.front() == 0 && s.bottom.front() == 0) {
        s.top.erase(s.top.begin());
        s.bottom.erase(s.bottom.begin());
        for (int& x : s.top) --x;
        for (int& x : s.bottom) --x;
    }
    if (s.type_d && std::lexicographical_compare(s.bottom.begin(), s.bottom.end(), s.top.begin(), s.top.end())) {
        std::swap(s.top, s.bottom);
    }
    return s;
}

/// Entry formula at the bipartition's own padding, without normalizing.
inline Symbol raw_symbol_of(const Bipartition& rho) {
    validate(rho);
    Symbol s;
    s.type_d = rho.type_d;
    s.decoration = rho.decoration;
    for (std::size_t i = 0; i < rho.alpha.size(); ++i) s.top.push_back(rho.alpha[i] + static_cast<int>(i));
    for (std::size_t i = 0; i < rho.beta.size(); ++i) s.bottom.push_back(rho.beta[i] + static_cast<int>(i));
    return s;
}

/// Canonical (shift-minimal) symbol of rho.
inline Symbol symbol_of(const Bipartition& rho) { return normalize_symbol(raw_symbol_of(rho)); }

/// Inverse of symbol_of at the symbol's own shift level.
inline Bipartition bipartition_of(const Symbol& s) {
    validate(s);
    Bipartition rho;
    rho.type_d = s.type_d;
    rho.decoration = s.decoration;
    for (std::size_t i = 0; i < s.top.size(); ++i) rho.alpha.push_back(s.top[i] - static_cast<int>(i));
    for (std::size_t i = 0; i < s.bottom.size(); ++i) rho.beta.push_back(s.bottom[i] - static_cast<int>(i));
    return rho;
}

namespace detail {

// Rows interleave as first[0] <= second[0] <= first[1] <= second[1] <= ...
inline bool interleaves(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> chain;
    for (std::size_t i = 0; i < std::max(first.size(), second.size()); ++i) {
        if (i < first.size()) chain.push_back(first[i]);
        if (i < second.size()) chain.push_back(second[i]);
    }
    return std::is_sorted(chain.begin(), chain.end());
}

}  // namespace detail

/// B/C: a_0 <= b_1 <= a_1 + 1 <= b_2 + 1 <= ... <= a_k + k.
/// D:   b_1 <= a_1 <= b_2 + 1 <= ... <= a_k + k - 1 (either row order).
inline bool is_special_symbol(const Symbol& s) {
    validate(s);
    if (!s.type_d) return detail::interleaves(s.top, s.bottom);
    return detail::interleaves(s.bottom, s.top) || detail::interleaves(s.top, s.bottom);
}

inline bool is_special_bipartition(const Bipartition& rho) { return is_special_symbol(symbol_of(rho)); }

/// Symbols lie in the same family exactly when their keys are equal.
struct FamilyKey {
    std::size_t top_length = 0;
    std::size_t bottom_length = 0;
    std::vector<int> entries;  // sorted multiset of all symbol entries

    friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

inline FamilyKey family_key(const Symbol& s) {
    const Symbol n = normalize_symbol(s);
    FamilyKey key{n.top.size(), n.bottom.size(), n.top};
    key.entries.insert(key.entries.end(), n.bottom.begin(), n.bottom.end());
    std::sort(key.entries.begin(), key.entries.end());
    return key;
}

namespace detail {

inline std::vector<int> sorted_partition_parts(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

// Special orientation of a D bipartition: b_i <= a_i.
inline Bipartition special_orientation(const Symbol& s) {
    Symbol oriented = s;
    if (!interleaves(oriented.bottom, oriented.top)) std::swap(oriented.top, oriented.bottom);
    return bipartition_of(oriented);
}

}  // namespace detail

/// The special partition of type t attached to a special symbol.
///
///   B: {2a_{i-1}+1, 2b_i-1} for b_i != a_{i-1}, {2a_{i-1}, 2b_i} otherwise, plus 2a_k+1
///   C: 2a_0, then {2a_i, 2b_i} for b_i != a_i+1, {2a_i+1, 2b_i-1} otherwise
///   D: {2b_i+1, 2a_i-1} for b_i != a_i, {2b_i, 2a_i} otherwise
inline Partition partition_of_special_symbol(const Symbol& s, GroupType t) {
    if (s.type_d != (t == GroupType::D)) {
        throw InputError("symbol " + s.to_string() + " is not of the kind used for type " +
                         std::string(1, to_char(t)));
    }
    if (!is_special_symbol(s)) throw InputError("symbol " + s.to_string() + " is not special");

    const Bipartition rho = s.type_d ? detail::special_orientation(s) : bipartition_of(s);
    const std::size_t k = rho.k();
    std::vector<int> parts;
    switch (t) {
        case GroupType::B:
            for (std::size_t i = 1; i <= k; ++i) {
                if (rho.b(i) == rho.a(i - 1)) {
                    parts.insert(parts.end(), {2 * rho.a(i - 1), 2 * rho.b(i)});
                } else {
                    parts.insert(parts.end(), {2 * rho.a(i - 1) + 1, 2 * rho.b(i) - 1});
                }
            }
            parts.push_back(2 * rho.a(k) + 1);
            break;
        case GroupType::C:
            parts.push_back(2 * rho.a(0));
            for (std::size_t i = 1; i <= k; ++i) {
                if (rho.b(i) == rho.a(i) + 1) {
                    parts.insert(parts.end(), {2 * rho.a(i) + 1, 2 * rho.b(i) - 1});
                } else {
                    parts.insert(parts.end(), {2 * rho.a(i), 2 * rho.b(i)});
                }
            }
            break;
        case GroupType::D:
            for (std::size_t i = 1; i <= k; ++i) {
                if (rho.b(i) == rho.a(i)) {
                    parts.insert(parts.end(), {2 * rho.b(i), 2 * rho.a(i)});
                } else {
                    parts.insert(parts.end(), {2 * rho.b(i) + 1, 2 * rho.a(i) - 1});
                }
            }
            break;
    }
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
        throw InvariantViolation("negative part while building the partition of " + s.to_string());
    }
    Partition lambda(detail::sorted_partition_parts(std::move(parts)));
    if (!is_special(lambda, t)) {
        throw InvariantViolation("symbol " + s.to_string() + " gave non-special " + lambda.to_string());
    }
    return lambda;
}

/// Springer bipartition of a special orbit (trivial local system).
///
/// Inverts partition_of_special_symbol: the parts, in increasing order and
/// padded with a zero to the right length parity, are read off in pairs. A pair
/// of even parts sits on the "equal" branch of the formula, a pair of odd parts
/// on the other.
inline Bipartition springer_bipartition(const Partition& lambda, GroupType t) {
    if (!is_special(lambda, t)) {
        throw InputError(lambda.to_string() + " is not a special partition of type " + std::string(1, to_char(t)));
    }
    std::vector<int> mu(lambda.parts().rbegin(), lambda.parts().rend());
    const bool want_odd_length = t != GroupType::D;
    if ((mu.size() % 2 == 1) != want_odd_length) mu.insert(mu.begin(), 0);

    auto fail = [&] {
        return InvariantViolation("no Springer bipartition found for " + lambda.to_string() + " in type " +
                                  std::string(1, to_char(t)));
    };
    auto same_parity = [&](int x, int y) {
        if (x % 2 != y % 2) throw fail();
        return x % 2 == 0;
    };

    Bipartition rho;
    rho.type_d = (t == GroupType::D);
    switch (t) {
        case GroupType::B: {
            const std::size_t k = (mu.size() - 1) / 2;
            for (std::size_t i = 0; i < k; ++i) {
                const int x = mu[2 * i], y = mu[2 * i + 1];
                if (same_parity(x, y)) {
                    rho.alpha.push_back(x / 2);
                    rho.beta.push_back(y / 2);
                } else {
                    rho.alpha.push_back((x - 1) / 2);
                    rho.beta.push_back((y + 1) / 2);
                }
            }
            if (mu.back() % 2 == 0) throw fail();
            rho.alpha.push_back((mu.back() - 1) / 2);
            break;
        }
        case GroupType::C: {
            const std::size_t k = (mu.size() - 1) / 2;
            if (mu.front() % 2 != 0) throw fail();
            rho.alpha.push_back(mu.front() / 2);
            for (std::size_t i = 1; i <= k; ++i) {
                const int x = mu[2 * i - 1], y = mu[2 * i];
                if (same_parity(x, y)) {
                    rho.beta.push_back(x / 2);
                    rho.alpha.push_back(y / 2);
                } else {
                    rho.beta.push_back((x + 1) / 2);
                    rho.alpha.push_back((y - 1) / 2);
                }
            }
            break;
        }
        case GroupType::D: {
            for (std::size_t i = 0; i + 1 < mu.size(); i += 2) {
                const int x = mu[i], y = mu[i + 1];
                if (same_parity(x, y)) {
                    rho.beta.push_back(x / 2);
                    rho.alpha.push_back(y / 2);
                } else {
                    rho.beta.push_back((x - 1) / 2);
                    rho.alpha.push_back((y + 1) / 2);
                }
            }
            break;
        }
    }
    if (!detail::weakly_increasing(rho.alpha) || !detail::weakly_increasing(rho.beta)) throw fail();
    const Symbol s = symbol_of(rho);
    if (!is_special_symbol(s) || partition_of_special_symbol(s, t) != lambda) throw fail();
    return rho;
}

namespace detail {

inline void require_kind(const Bipartition& rho, GroupType t, const char* which) {
    if (rho.type_d != (t == GroupType::D)) {
        throw InputError(std::string(which) + " bipartition " + rho.to_string() + " is not of the kind used for type " +
                         std::string(1, to_char(t)));
    }
}

struct AlignedSum {
    std::size_t k;
    std::vector<int> a1, b1, a2, b2;  // a*[0..k], b*[1..k] (b*[0] unused)
};

// D bipartitions are unordered pairs; sums use the orientation with b_i <= a_i.
inline Bipartition summand_orientation(const Bipartition& rho) {
    if (!rho.type_d) return rho;
    Bipartition out = special_orientation(symbol_of(rho));
    out.decoration = rho.decoration;
    return out;
}

inline AlignedSum align(const Bipartition& r1, const Bipartition& r2) {
    const std::size_t k = std::max(r1.k(), r2.k());
    const Bipartition p1 = summand_orientation(r1).padded(k), p2 = summand_orientation(r2).padded(k);
    AlignedSum s{k, std::vector<int>(k + 1), std::vector<int>(k + 1), std::vector<int>(k + 1),
                 std::vector<int>(k + 1)};
    for (std::size_t i = 0; i <= k; ++i) {
        s.a1[i] = p1.a(i);
        s.a2[i] = p2.a(i);
        if (i >= 1) {
            s.b1[i] = p1.b(i);
            s.b2[i] = p2.b(i);
        }
    }
    return s;
}

inline Bipartition assemble(const std::vector<int>& c, const std::vector<int>& d, bool type_d) {
    Bipartition out;
    out.type_d = type_d;
    out.alpha.assign(c.begin() + (type_d ? 1 : 0), c.end());
    out.beta.assign(d.begin() + 1, d.end());
    return out;
}

}  // namespace detail

/// (alpha + alpha') x (beta + beta') after left padding to a common k: the
/// Springer bipartition of W(lambda1, lambda2).
inline Bipartition plain_sum(const Bipartition& rho1, const Bipartition& rho2, PairType pt) {
    const PairTypeInfo ti = info(pt);
    detail::require_kind(rho1, ti.first, "first");
    detail::require_kind(rho2, ti.second, "second");
    validate(rho1);
    validate(rho2);
    const auto s = detail::align(rho1, rho2);
    std::vector<int> c(s.k + 1), d(s.k + 1);
    for (std::size_t i = 0; i <= s.k; ++i) {
        c[i] = s.a1[i] + s.a2[i];
        d[i] = s.b1[i] + s.b2[i];
    }
    return detail::assemble(c, d, ti.target == GroupType::D);
}

/// The special bipartition in the family of plain_sum(rho1, rho2).
///
/// Off the index set J the entries are plain sums. On J two symbol entries
/// that sit out of order are exchanged:
///   BB: J = {i : b_i = a_i + 1, b'_i = a'_i + 1};            c_i = a_i+a'_i+1, d_i = b_i+b'_i-1
///   CD: J = {i : b_i = a_{i-1}, b'_i = a'_{i-1} - 1};        c_{i-1} = b_i+b'_i, d_i = a_{i-1}+a'_{i-1}
///   DD: J = {i >= 2 : b_i = a_{i-1}-1, b'_i = a'_{i-1}-1};   c_{i-1} = b_i+b'_i+1, d_i = a_{i-1}+a'_{i-1}-1
inline Bipartition specialize_sum(const Bipartition& rho1, const Bipartition& rho2, PairType pt) {
    const PairTypeInfo ti = info(pt);
    detail::require_kind(rho1, ti.first, "first");
    detail::require_kind(rho2, ti.second, "second");
    if (!is_special_bipartition(rho1)) throw InputError("first bipartition " + rho1.to_string() + " is not special");
    if (!is_special_bipartition(rho2)) throw InputError("second bipartition " + rho2.to_string() + " is not special");

    const auto s = detail::align(rho1, rho2);
    const auto& a = s.a1;
    const auto& b = s.b1;
    const auto& ap = s.a2;
    const auto& bp = s.b2;
    std::vector<int> c(s.k + 1), d(s.k + 1);
    for (std::size_t i = 0; i <= s.k; ++i) {
        c[i] = a[i] + ap[i];
        d[i] = b[i] + bp[i];
    }
    for (std::size_t i = 1; i <= s.k; ++i) {
        switch (pt) {
            case PairType::BB:
                if (b[i] == a[i] + 1 && bp[i] == ap[i] + 1) {
                    c[i] = a[i] + ap[i] + 1;
                    d[i] = b[i] + bp[i] - 1;
                }
                break;
            case PairType::CD:
                if (b[i] == a[i - 1] && bp[i] == ap[i - 1] - 1) {
                    c[i - 1] = b[i] + bp[i];
                    d[i] = a[i - 1] + ap[i - 1];
                }
                break;
            case PairType::DD:
                if (i >= 2 && b[i] == a[i - 1] - 1 && bp[i] == ap[i - 1] - 1) {
                    c[i - 1] = b[i] + bp[i] + 1;
                    d[i] = a[i - 1] + ap[i - 1] - 1;
                }
                break;
        }
    }
    Bipartition out = detail::assemble(c, d, ti.target == GroupType::D);
    if (!detail::weakly_increasing(out.alpha) || !detail::weakly_increasing(out.beta) ||
        !is_special_bipartition(out)) {
        throw InvariantViolation("specialized sum " + out.to_string() + " of " + rho1.to_string() + " and " +
                                 rho2.to_string() + " is not special");
    }
    if (family_key(symbol_of(out)) != family_key(symbol_of(plain_sum(rho1, rho2, pt)))) {
        throw InvariantViolation("specialized sum " + out.to_string() + " left the family of the plain sum");
    }
    return out;
}

/// Smallest special partition above W(lambda1, lambda2), read off from the
/// specialized Springer bipartition.
inline Partition special_closure(const Partition& lambda1, const Partition& lambda2, PairType pt) {
    const PairTypeInfo ti = info(pt);
    const Bipartition rho = specialize_sum(springer_bipartition(lambda1, ti.first),
                                           springer_bipartition(lambda2, ti.second), pt);
    return partition_of_special_symbol(symbol_of(rho), ti.target);
}

/// rho <= sigma: for every i, both suffix sums
///   a_k + b_k + ... + a_i + b_i   and   a_k + b_k + ... + a_{i+1} + b_{i+1} + a_i
/// of rho are at most those of sigma.
inline bool bipartition_leq(const Bipartition& rho, const Bipartition& sigma) {
    if (rho.type_d != sigma.type_d) throw InputError("cannot compare a type D bipartition with a B/C one");
    if (rho.rank() != sigma.rank()) {
        throw InputError("bipartition order compares bipartitions of equal size (" + std::to_string(rho.rank()) +
                         " vs " + std::to_string(sigma.rank()) + ")");
    }
    const std::size_t k = std::max(rho.k(), sigma.k());
    const Bipartition x = rho.padded(k), y = sigma.padded(k);
    int lhs = 0, rhs = 0;
    for (std::size_t i = k + 1; i-- > 0;) {
        lhs += x.a(i);
        rhs += y.a(i);
        if (lhs > rhs) return false;
        if (i >= 1) {
            lhs += x.b(i);
            rhs += y.b(i);
            if (lhs > rhs) return false;
        }
    }
    return true;
}

}  // namespace orbitcalc
