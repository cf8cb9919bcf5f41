#pragma once

// Combinatorial shadows of A-parameters psi = sum rho_i (x) S_{a_i} (x) S_{b_i}
// of a split classical group H. Only the dimension and self-duality of rho
// enter; the orbit of N_psi depends on nothing else.

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitcalc/duality.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/waldspurger.hpp"

namespace orbitcalc {

/// Self-duality of the W_F-representation rho. `Pair` stands for rho + rho^dual
/// with rho not self-dual; it is unconstrained and counts twice.
enum class RhoType { Orthogonal, Symplectic, Pair };

inline char to_char(RhoType t) {
    switch (t) {
        case RhoType::Orthogonal: return 'O';
        case RhoType::Symplectic: return 'S';
        case RhoType::Pair: return 'P';
    }
    return '?';
}

struct Summand {
    int rho_dim = 1;
    RhoType rho_type = RhoType::Orthogonal;
    int a = 1;  // dimension of the representation of the first SL2
    int b = 1;  // dimension of the representation of the second SL2

    int dimension() const { return rho_dim * a * b * (rho_type == RhoType::Pair ? 2 : 1); }

    /// +1 orthogonal, -1 symplectic; 0 for pairs. S_n is orthogonal for odd n.
    int self_dual_sign() const {
        if (rho_type == RhoType::Pair) return 0;
        const int rho_sign = rho_type == RhoType::Orthogonal ? 1 : -1;
        const int a_sign = a % 2 == 1 ? 1 : -1;
        const int b_sign = b % 2 == 1 ? 1 : -1;
        return rho_sign * a_sign * b_sign;
    }

    /// "1xS2*S1:O"
    std::string to_string() const {
        return std::to_string(rho_dim) + "xS" + std::to_string(a) + "*S" + std::to_string(b) + ":" + to_char(rho_type);
    }

    friend auto operator<=>(const Summand& x, const Summand& y) {
        return std::tuple(x.rho_dim, static_cast<int>(x.rho_type), x.a, x.b) <=>
               std::tuple(y.rho_dim, static_cast<int>(y.rho_type), y.a, y.b);
    }
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// An A-parameter shape for H = SO(2n+1) (type B), Sp(2n) (C) or SO(2n) (D).
struct AParameterShape {
    GroupType target = GroupType::B;
    int rank = 0;
    std::vector<Summand> summands;

    /// Dimension m of the standard representation of the dual group.
    int dual_dimension() const { return target == GroupType::C ? 2 * rank + 1 : 2 * rank; }

    /// Sp(2n) for B is symplectic; SO(2n+1), SO(2n) are orthogonal.
    int dual_sign() const { return target == GroupType::B ? -1 : 1; }

    int summand_dimension() const {
        int m = 0;
        for (const auto& s : summands) m += s.dimension();
        return m;
    }

    /// "SO5", "Sp4", "SO6"
    std::string group_name() const {
        switch (target) {
            case GroupType::B: return "SO" + std::to_string(2 * rank + 1);
            case GroupType::C: return "Sp" + std::to_string(2 * rank);
            case GroupType::D: return "SO" + std::to_string(2 * rank);
        }
        return "?";
    }

    std::string summands_string() const {
        std::string s;
        for (std::size_t i = 0; i < summands.size(); ++i) {
            if (i) s += ',';
            s += summands[i].to_string();
        }
        return s;
    }

    std::string to_string() const { return group_name() + " [" + summands_string() + "]"; }

    /// Same summands as a multiset.
    friend bool operator==(const AParameterShape& x, const AParameterShape& y) {
        if (x.target != y.target || x.rank != y.rank) return false;
        auto sx = x.summands, sy = y.summands;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        return sx == sy;
    }
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> diagnostics;

    explicit operator bool() const { return ok; }
};

inline ValidationResult validate(const AParameterShape& psi) {
    ValidationResult r;
    auto complain = [&](std::string msg) {
        r.ok = false;
        r.diagnostics.push_back(std::move(msg));
    };
    if (psi.rank < 0) complain("negative rank");
    for (std::size_t i = 0; i < psi.summands.size(); ++i) {
        const Summand& s = psi.summands[i];
        const std::string who = "summand " + std::to_string(i + 1) + " (" + s.to_string() + ")";
        if (s.rho_dim < 1 || s.a < 1 || s.b < 1) {
            complain(who + ": dimensions must be positive");
            continue;
        }
        if (s.rho_type == RhoType::Symplectic && s.rho_dim % 2 != 0) {
            complain(who + ": a symplectic rho has even dimension");
        }
        const int sign = s.self_dual_sign();
        if (sign != 0 && sign != psi.dual_sign()) {
            complain(who + " is " + (sign > 0 ? "orthogonal" : "symplectic") + " but the dual group of " +
                     psi.group_name() + " is " + (psi.dual_sign() > 0 ? "orthogonal" : "symplectic"));
        }
    }
    const int m = psi.summand_dimension();
    if (m != psi.dual_dimension()) {
        complain("summand dimensions add up to " + std::to_string(m) + ", expected " +
                 std::to_string(psi.dual_dimension()) + " for " + psi.group_name());
    }
    return r;
}

namespace detail {

inline void require_valid(const AParameterShape& psi) {
    const ValidationResult r = validate(psi);
    if (!r.ok) {
        std::string msg = "invalid A-parameter shape " + psi.to_string();
        for (const auto& d : r.diagnostics) msg += "; " + d;
        throw InputError(msg);
    }
}

inline int parse_positive(std::string_view tok, std::string_view what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0) {
        throw InputError("bad " + std::string(what) + " '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace detail

/// Parses "SO5", "Sp4", "SO6" into (type, rank).
inline std::pair<GroupType, int> parse_group_name(std::string_view text) {
    auto number = [&](std::string_view digits) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || v < 0) {
            throw InputError("bad group name '" + std::string(text) + "'");
        }
        return v;
    };
    if (text.starts_with("SO")) {
        const int m = number(text.substr(2));
        return m % 2 == 1 ? std::pair{GroupType::B, (m - 1) / 2} : std::pair{GroupType::D, m / 2};
    }
    if (text.starts_with("Sp")) {
        const int m = number(text.substr(2));
        if (m % 2 != 0) throw InputError("Sp needs an even dimension: '" + std::string(text) + "'");
        return {GroupType::C, m / 2};
    }
    throw InputError("bad group name '" + std::string(text) + "' (expected SO<m> or Sp<2n>)");
}

/// Parses one summand "dxSa*Sb:t" with t in {O, S, P}.
inline Summand parse_summand(std::string_view text) {
    const std::string original(text);
    auto fail = [&] { return InputError("bad summand '" + original + "' (expected dxSa*Sb:t, t in O,S,P)"); };
    const std::size_t x = text.find('x');
    const std::size_t star = text.find('*');
    const std::size_t colon = text.find(':');
    if (x == std::string_view::npos || star == std::string_view::npos || colon == std::string_view::npos ||
        !(x < star && star < colon)) {
        throw fail();
    }
    std::string_view sa = text.substr(x + 1, star - x - 1);
    std::string_view sb = text.substr(star + 1, colon - star - 1);
    std::string_view st = text.substr(colon + 1);
    if (!sa.starts_with("S") || !sb.starts_with("S") || st.size() != 1) throw fail();
    Summand s;
    s.rho_dim = detail::parse_positive(text.substr(0, x), "rho dimension");
    s.a = detail::parse_positive(sa.substr(1), "SL2 dimension");
    s.b = detail::parse_positive(sb.substr(1), "SL2 dimension");
    switch (st.front()) {
        case 'O': s.rho_type = RhoType::Orthogonal; break;
        case 'S': s.rho_type = RhoType::Symplectic; break;
        case 'P': s.rho_type = RhoType::Pair; break;
        default: throw fail();
    }
    return s;
}

/// Parses a comma-separated summand list for the given group.
inline AParameterShape parse_shape(GroupType target, int rank, std::string_view spec) {
    AParameterShape psi{target, rank, {}};
    std::size_t start = 0;
    while (start < spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string_view::npos) comma = spec.size();
        std::string_view tok = spec.substr(start, comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty()) psi.summands.push_back(parse_summand(tok));
        start = comma + 1;
    }
    return psi;
}

/// Swaps the two SL2 factors of every summand.
inline AParameterShape dual_shape(const AParameterShape& psi) {
    detail::require_valid(psi);
    AParameterShape out = psi;
    for (auto& s : out.summands) std::swap(s.a, s.b);
    return out;
}

/// Jordan type of N_psi on the m-dimensional space: each summand contributes
/// rho_dim * a blocks of size b (twice that for pairs).
inline Partition npsi_partition(const AParameterShape& psi) {
    detail::require_valid(psi);
    std::vector<int> parts;
    for (const auto& s : psi.summands) {
        const int copies = s.rho_dim * s.a * (s.rho_type == RhoType::Pair ? 2 : 1);
        parts.insert(parts.end(), static_cast<std::size_t>(copies), s.b);
    }
    Partition lambda(std::move(parts));
    const GroupType dual_side = dual_type(psi.target);
    if (!is_member(lambda, dual_side)) {
        throw InvariantViolation("N_psi of " + psi.to_string() + " has Jordan type " + lambda.to_string() +
                                 ", not of type " + std::string(1, to_char(dual_side)));
    }
    return lambda;
}

/// Partition of the dual of the orbit of N_psi: the predicted maximal
/// wavefront orbit of the A-packet.
inline Partition predicted_wavefront(const AParameterShape& psi) {
    return dual(npsi_partition(psi), dual_type(psi.target)).partition;
}

/// An endoscopic splitting psi = psi_1 + psi_2 together with its pair type.
struct Split {
    PairType pair_type;
    AParameterShape first;
    AParameterShape second;
};

/// Splits psi along the sign of s_psi on each summand.
///
/// BB (H = SO(2n+1)): the +1 part is psi_1.
/// CD (H = Sp(2n)):   the odd-dimensional eigenspace is psi_1 (for Sp), the even one psi_2 (for SO even).
/// DD (H = SO(2n)):   the +1 part is psi_1; both eigenspaces must be even-dimensional.
inline Split split_by_signs(const AParameterShape& psi, const std::vector<int>& signs) {
    detail::require_valid(psi);
    if (signs.size() != psi.summands.size()) {
        throw InputError("need one sign per summand (" + std::to_string(psi.summands.size()) + "), got " +
                         std::to_string(signs.size()));
    }
    std::vector<Summand> plus, minus;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 1) {
            plus.push_back(psi.summands[i]);
        } else if (signs[i] == -1) {
            minus.push_back(psi.summands[i]);
        } else {
            throw InputError("signs must be +1 or -1");
        }
    }
    if (plus.empty() || minus.empty()) throw InputError("improper split: both sign classes must be nonempty");

    auto dim = [](const std::vector<Summand>& v) {
        int m = 0;
        for (const auto& s : v) m += s.dimension();
        return m;
    };
    Split out;
    switch (psi.target) {
        case GroupType::B:
            out.pair_type = PairType::BB;
            out.first = {GroupType::B, dim(plus) / 2, std::move(plus)};
            out.second = {GroupType::B, dim(minus) / 2, std::move(minus)};
            break;
        case GroupType::C: {
            out.pair_type = PairType::CD;
            if (dim(plus) % 2 == 0) std::swap(plus, minus);
            out.first = {GroupType::C, (dim(plus) - 1) / 2, std::move(plus)};
            out.second = {GroupType::D, dim(minus) / 2, std::move(minus)};
            break;
        }
        case GroupType::D:
            out.pair_type = PairType::DD;
            if (dim(plus) % 2 != 0) {
                throw InputError("split of " + psi.to_string() +
                                 " has odd-dimensional eigenspaces; the endoscopic group would not be split");
            }
            out.first = {GroupType::D, dim(plus) / 2, std::move(plus)};
            out.second = {GroupType::D, dim(minus) / 2, std::move(minus)};
            break;
    }
    for (const AParameterShape* factor : {&out.first, &out.second}) {
        const ValidationResult r = validate(*factor);
        if (!r.ok) {
            std::string msg = "factor " + factor->to_string() + " of the split is invalid";
            for (const auto& d : r.diagnostics) msg += "; " + d;
            throw InputError(msg);
        }
    }
    return out;
}

/// All valid shapes for the group of type t and rank n, each multiset once,
/// in a deterministic order.
inline std::vector<AParameterShape> enumerate_shapes(GroupType t, int rank) {
    AParameterShape probe{t, rank, {}};
    const int m = probe.dual_dimension();
    std::vector<Summand> kinds;
    for (int d = 1; d <= m; ++d) {
        for (int a = 1; d * a <= m; ++a) {
            for (int b = 1; d * a * b <= m; ++b) {
                for (RhoType rt : {RhoType::Orthogonal, RhoType::Symplectic, RhoType::Pair}) {
                    Summand s{d, rt, a, b};
                    if (s.dimension() > m) continue;
                    if (rt == RhoType::Symplectic && d % 2 != 0) continue;
                    if (s.self_dual_sign() != 0 && s.self_dual_sign() != probe.dual_sign()) continue;
                    kinds.push_back(s);
                }
            }
        }
    }
    std::sort(kinds.begin(), kinds.end());
    std::vector<AParameterShape> out;
    std::vector<Summand> current;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            out.push_back({t, rank, current});
            return;
        }
        for (std::size_t i = from; i < kinds.size(); ++i) {
            if (kinds[i].dimension() > remaining) continue;
            current.push_back(kinds[i]);
            self(self, i, remaining - kinds[i].dimension());
            current.pop_back();
        }
    };
    if (m > 0) rec(rec, 0, m);
    return out;
}

/// Distinct proper splits of psi (identical summands are interchangeable),
/// as sign vectors aligned with psi.summands. Splits whose factors fail
/// validation are skipped.
inline std::vector<std::vector<int>> proper_sign_vectors(const AParameterShape& psi) {
    // Group equal summands; choose how many of each group go to the +1 side.
    std::vector<std::pair<Summand, std::vector<std::size_t>>> groups;
    for (std::size_t i = 0; i < psi.summands.size(); ++i) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == psi.summands[i]; });
        if (it == groups.end()) {
            groups.push_back({psi.summands[i], {i}});
        } else {
            it->second.push_back(i);
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> signs(psi.summands.size(), -1);
    auto rec = [&](auto&& self, std::size_t g) -> void {
        if (g == groups.size()) {
            const bool any_plus = std::count(signs.begin(), signs.end(), 1) > 0;
            const bool any_minus = std::count(signs.begin(), signs.end(), -1) > 0;
            if (!any_plus || !any_minus) return;
            try {
                (void)split_by_signs(psi, signs);
                out.push_back(signs);
            } catch (const InputError&) {
            }
            return;
        }
        const auto& idx = groups[g].second;
        for (std::size_t take = 0; take <= idx.size(); ++take) {
            for (std::size_t j = 0; j < idx.size(); ++j) signs[idx[j]] = j < take ? 1 : -1;
            self(self, g + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace orbitcalc
