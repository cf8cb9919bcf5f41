#pragma once

// Exhaustive property sweeps. Every property enumerates its inputs in a fixed
// order, so a report depends only on the property name and the bound.

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitcalc/aparam.hpp"
#include "orbitcalc/duality.hpp"
#include "orbitcalc/oracles.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/symbols.hpp"
#include "orbitcalc/waldspurger.hpp"

namespace orbitcalc {

struct Failure {
    std::string inputs;
    std::string relation;
    std::string observed;
};

struct VerificationReport {
    std::string property;
    int bound = 0;
    std::int64_t cases_checked = 0;
    std::int64_t failure_count = 0;
    std::vector<Failure> failures;  // the first few, in enumeration order
    std::vector<std::string> notes;
    double wall_time = 0.0;

    bool passed() const { return failure_count == 0; }
};

namespace harness {

inline constexpr std::size_t kMaxRecordedFailures = 25;

/// Accumulates cases and failures for one sweep.
class Recorder {
public:
    Recorder(std::string property, int bound) {
        report_.property = std::move(property);
        report_.bound = bound;
    }

    /// Counts one case; records a failure when `ok` is false.
    template <class Inputs, class Observed>
    void check(bool ok, Inputs&& inputs, std::string_view relation, Observed&& observed) {
        ++report_.cases_checked;
        if (!ok) fail(inputs(), relation, observed());
    }

    /// Runs `body` as one case; an exception is a failure carrying its message.
    template <class Inputs, class Body>
    void guarded(Inputs&& inputs, std::string_view relation, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++report_.cases_checked;
            fail(inputs(), relation, std::string("exception: ") + e.what());
        }
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    VerificationReport finish() { return std::move(report_); }

private:
    void fail(std::string inputs, std::string_view relation, std::string observed) {
        ++report_.failure_count;
        if (report_.failures.size() < kMaxRecordedFailures) {
            report_.failures.push_back({std::move(inputs), std::string(relation), std::move(observed)});
        }
    }

    VerificationReport report_;
};

inline std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }

inline std::string show(const Partition& p, GroupType t) { return show(p) + "_" + std::string(1, to_char(t)); }

inline std::string show(const XiVector& xi) {
    std::string s = "xi=(";
    for (std::size_t i = 0; i < xi.entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xi.entries[i]);
    }
    return s + ")";
}

inline std::string show_pair(const Partition& l1, const Partition& l2, PairType pt) {
    const PairTypeInfo ti = info(pt);
    return std::string(to_string(pt)) + " " + show(l1, ti.first) + " " + show(l2, ti.second);
}

inline std::vector<GroupType> all_types() { return {GroupType::B, GroupType::C, GroupType::D}; }
inline std::vector<PairType> all_pair_types() { return {PairType::BB, PairType::CD, PairType::DD}; }

/// Sizes 0..bound with the parity of type t (B starts at 1).
inline std::vector<int> sizes_up_to(int bound, GroupType t) {
    std::vector<int> out;
    for (int d = 0; d <= bound; ++d) {
        if (parity_matches(d, t)) out.push_back(d);
    }
    return out;
}

/// Memoized enumerate(d, t, special_only).
class PartitionCache {
public:
    const std::vector<Partition>& get(int d, GroupType t, bool special_only) {
        auto key = std::tuple(d, static_cast<int>(t), special_only);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, enumerate(d, t, special_only)).first;
        return it->second;
    }

private:
    std::map<std::tuple<int, int, bool>, std::vector<Partition>> cache_;
};

/// Calls fn(l1, l2) for all special pairs of the factor types of pt with d1 + d2 <= bound.
template <class Fn>
void for_each_special_pair(PairType pt, int bound, PartitionCache& cache, Fn&& fn) {
    const PairTypeInfo ti = info(pt);
    for (int d1 : sizes_up_to(bound, ti.first)) {
        for (int d2 : sizes_up_to(bound - d1, ti.second)) {
            for (const auto& l1 : cache.get(d1, ti.first, true)) {
                for (const auto& l2 : cache.get(d2, ti.second, true)) fn(l1, l2);
            }
        }
    }
}

// ---------------------------------------------------------------- partitions

inline VerificationReport transpose_involution(int bound) {
    Recorder rec("transpose_involution", bound);
    for (int d = 0; d <= bound; ++d) {
        for (const auto& l : enumerate_partitions(d)) {
            const Partition back = transpose(transpose(l));
            rec.check(back == l, [&] { return show(l); }, "transpose(transpose(l)) = l",
                      [&] { return show(back); });
        }
    }
    return rec.finish();
}

inline VerificationReport order_reversal(int bound) {
    Recorder rec("order_reversal", bound);
    for (int d = 0; d <= bound; ++d) {
        const auto all = enumerate_partitions(d);
        std::vector<Partition> tr;
        for (const auto& l : all) tr.push_back(transpose(l));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                const bool lhs = dominance_leq(all[i], all[j]);
                const bool rhs = dominance_leq(tr[j], tr[i]);
                rec.check(lhs == rhs, [&] { return show(all[i]) + " " + show(all[j]); },
                          "l <= m iff m^t <= l^t",
                          [&] { return std::string("l<=m: ") + (lhs ? "yes" : "no") + ", m^t<=l^t: " + (rhs ? "yes" : "no"); });
            }
        }
    }
    return rec.finish();
}

inline VerificationReport union_monotone(int bound) {
    Recorder rec("union_monotone", bound);
    for (int d1 = 0; d1 <= bound; ++d1) {
        const auto p1 = enumerate_partitions(d1);
        for (int d2 = 0; d1 + d2 <= bound; ++d2) {
            const auto p2 = enumerate_partitions(d2);
            for (const auto& l1 : p1) {
                for (const auto& m1 : p1) {
                    if (!dominance_leq(m1, l1)) continue;
                    for (const auto& l2 : p2) {
                        for (const auto& m2 : p2) {
                            if (!dominance_leq(m2, l2)) continue;
                            const Partition lu = multiset_union(l1, l2), mu = multiset_union(m1, m2);
                            rec.check(dominance_leq(mu, lu),
                                      [&] { return "l1=" + show(l1) + " l2=" + show(l2) + " m1=" + show(m1) + " m2=" + show(m2); },
                                      "m1 u m2 <= l1 u l2", [&] { return show(mu) + " vs " + show(lu); });
                        }
                    }
                }
            }
        }
    }
    return rec.finish();
}

inline VerificationReport transpose_union(int bound) {
    Recorder rec("transpose_union", bound);
    for (int d1 = 0; d1 <= bound; ++d1) {
        const auto p1 = enumerate_partitions(d1);
        for (int d2 = 0; d1 + d2 <= bound; ++d2) {
            for (const auto& l2 : enumerate_partitions(d2)) {
                for (const auto& l1 : p1) {
                    const Partition lhs = transpose(multiset_union(l1, l2));
                    const Partition rhs = add(transpose(l1), transpose(l2));
                    rec.check(lhs == rhs, [&] { return show(l1) + " " + show(l2); }, "(l1 u l2)^t = l1^t + l2^t",
                              [&] { return show(lhs) + " vs " + show(rhs); });
                }
            }
        }
    }
    return rec.finish();
}

inline VerificationReport add_union(int bound) {
    Recorder rec("add_union", bound);
    std::vector<std::vector<Partition>> parts;
    for (int d = 0; d <= bound; ++d) parts.push_back(enumerate_partitions(d));
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; a + b <= bound; ++b) {
            for (int c = 0; a + b + c <= bound; ++c) {
                for (int e = 0; a + b + c + e <= bound; ++e) {
                    for (const auto& l1 : parts[a]) {
                        for (const auto& l2 : parts[b]) {
                            for (const auto& m1 : parts[c]) {
                                for (const auto& m2 : parts[e]) {
                                    const Partition lhs = add(multiset_union(l1, l2), multiset_union(m1, m2));
                                    const Partition rhs = multiset_union(add(l1, m1), add(l2, m2));
                                    rec.check(dominance_leq(rhs, lhs),
                                              [&] { return "l1=" + show(l1) + " l2=" + show(l2) + " m1=" + show(m1) + " m2=" + show(m2); },
                                              "(l1 u l2) + (m1 u m2) >= (l1 + m1) u (l2 + m2)",
                                              [&] { return show(lhs) + " vs " + show(rhs); });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return rec.finish();
}

inline VerificationReport collapse_oracle(int bound) {
    Recorder rec("collapse_oracle", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            for (const auto& l : enumerate_partitions(d)) {
                auto in = [&] { return show(l) + " type " + std::string(1, to_char(t)); };
                rec.guarded(in, "collapse = brute-force maximum", [&] {
                    const Partition fast = collapse(l, t);
                    const Partition slow = oracle::brute_force_collapse(l, t);
                    rec.check(fast == slow, in, "collapse = brute-force maximum",
                              [&] { return show(fast) + " vs " + show(slow); });
                });
            }
        }
    }
    return rec.finish();
}

inline VerificationReport special_criterion(int bound) {
    Recorder rec("special_criterion", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            for (const auto& l : enumerate(d, t, false)) {
                const bool special = classify(l, t).special;
                const Partition dd = dual(dual(l, t).partition, dual_type(t)).partition;
                rec.check(special == (dd == l), [&] { return show(l, t); }, "special iff d(d(l)) = l",
                          [&] { return std::string("special=") + (special ? "yes" : "no") + " d(d(l))=" + show(dd); });
            }
        }
    }
    return rec.finish();
}

// ------------------------------------------------------------------ duality

inline VerificationReport dual_order(int bound) {
    Recorder rec("dual_order", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            const auto members = enumerate(d, t, false);
            std::vector<Partition> duals;
            for (const auto& l : members) duals.push_back(dual(l, t).partition);
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = 0; j < members.size(); ++j) {
                    if (!dominance_leq(members[i], members[j])) continue;
                    rec.check(dominance_leq(duals[j], duals[i]),
                              [&] { return show(members[i], t) + " <= " + show(members[j], t); }, "d(m) <= d(l)",
                              [&] { return show(duals[j]) + " vs " + show(duals[i]); });
                }
            }
        }
    }
    return rec.finish();
}

inline VerificationReport dd_special(int bound) {
    Recorder rec("dd_special", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            for (const auto& l : enumerate(d, t, false)) {
                const Partition dl = dual(l, t).partition;
                const Partition dd = dual(dl, dual_type(t)).partition;
                const bool special = is_special(l, t);
                const bool ok = dominance_leq(l, dd) && (special == (dd == l)) && is_special(dl, dual_type(t));
                rec.check(ok, [&] { return show(l, t); }, "l <= d(d(l)), equality iff special, d(l) special",
                          [&] { return "d(l)=" + show(dl) + " d(d(l))=" + show(dd) + " special=" + (special ? "yes" : "no"); });
            }
        }
    }
    return rec.finish();
}

inline VerificationReport orbit_dim_monotone(int bound) {
    Recorder rec("orbit_dim_monotone", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            const auto members = enumerate(d, t, false);
            std::vector<std::int64_t> dims;
            for (const auto& l : members) dims.push_back(orbit_dim(l, t));
            for (std::size_t i = 0; i < members.size(); ++i) {
                rec.check(dims[i] >= 0 && dims[i] % 2 == 0, [&] { return show(members[i], t); },
                          "orbit dimension is even and non-negative", [&] { return std::to_string(dims[i]); });
                for (std::size_t j = 0; j < members.size(); ++j) {
                    if (!dominance_leq(members[i], members[j])) continue;
                    rec.check(dims[i] <= dims[j], [&] { return show(members[i], t) + " <= " + show(members[j], t); },
                              "dim(l) <= dim(m)",
                              [&] { return std::to_string(dims[i]) + " vs " + std::to_string(dims[j]); });
                }
            }
        }
    }
    return rec.finish();
}

// -------------------------------------------------------------- waldspurger

inline VerificationReport waldspurger_size(int bound) {
    Recorder rec("waldspurger_size", bound);
    PartitionCache cache;
    for (PairType pt : all_pair_types()) {
        for_each_special_pair(pt, bound, cache, [&](const Partition& l1, const Partition& l2) {
            auto in = [&] { return show_pair(l1, l2, pt); };
            rec.guarded(in, "W is a partition of the expected size", [&] {
                const WaldspurgerResult w = waldspurger_full(l1, l2, pt);
                const int want = target_size(pt, l1.size(), l2.size());
                rec.check(w.partition.size() == want && w.xi.sum() == (pt == PairType::BB ? -1 : 0),
                          in, "|W| = d and sum(xi) matches",
                          [&] { return show(w.partition) + " " + show(w.xi); });
            });
        });
    }
    return rec.finish();
}

inline VerificationReport dim_identity(int bound) {
    Recorder rec("dim_identity", bound);
    PartitionCache cache;
    for (PairType pt : all_pair_types()) {
        const PairTypeInfo ti = info(pt);
        for_each_special_pair(pt, bound, cache, [&](const Partition& l1, const Partition& l2) {
            auto in = [&] { return show_pair(l1, l2, pt); };
            rec.guarded(in, "dim identity", [&] {
                const Partition w = waldspurger(l1, l2, pt);
                const int d = target_size(pt, l1.size(), l2.size());
                const std::int64_t lhs = orbit_dim(w, ti.target);
                const std::int64_t rhs = orbit_dim(l1, ti.first) + orbit_dim(l2, ti.second) +
                                         lie_algebra_dim(ti.target, rank_from_size(d, ti.target)) -
                                         lie_algebra_dim(ti.first, rank_from_size(l1.size(), ti.first)) -
                                         lie_algebra_dim(ti.second, rank_from_size(l2.size(), ti.second));
                rec.check(lhs == rhs, in, "dim W = dim l1 + dim l2 + dim h - dim h1 - dim h2",
                          [&] { return "W=" + show(w) + " " + std::to_string(lhs) + " vs " + std::to_string(rhs); });
            });
        });
    }
    return rec.finish();
}

inline VerificationReport prop_ws(int bound) {
    Recorder rec("prop_ws", bound);
    PartitionCache cache;
    for (PairType pt : all_pair_types()) {
        const PairTypeInfo ti = info(pt);
        for_each_special_pair(pt, bound, cache, [&](const Partition& l1, const Partition& l2) {
            auto in = [&] { return show_pair(l1, l2, pt); };
            rec.guarded(in, "d(W) >= d(l1) u d(l2)", [&] {
                const WaldspurgerResult w = waldspurger_full(l1, l2, pt);
                const Partition dw = dual(w.partition, ti.target).partition;
                const Partition du = multiset_union(dual(l1, ti.first).partition, dual(l2, ti.second).partition);
                rec.check(dominance_leq(du, dw), in, "d(W) >= d(l1) u d(l2)", [&] {
                    return "W=" + show(w.partition) + " " + show(w.xi) + " d(W)=" + show(dw) + " union=" + show(du);
                });
            });
        });
    }
    return rec.finish();
}

inline VerificationReport worder(int bound) {
    Recorder rec("worder", bound);
    PartitionCache cache;
    for (PairType pt : all_pair_types()) {
        const PairTypeInfo ti = info(pt);
        for (int d1 : sizes_up_to(bound, ti.first)) {
            for (int d2 : sizes_up_to(bound - d1, ti.second)) {
                const auto& s1 = cache.get(d1, ti.first, true);
                const auto& s2 = cache.get(d2, ti.second, true);
                std::vector<Partition> w(s1.size() * s2.size());
                for (std::size_t i = 0; i < s1.size(); ++i) {
                    for (std::size_t j = 0; j < s2.size(); ++j) w[i * s2.size() + j] = waldspurger(s1[i], s2[j], pt);
                }
                for (std::size_t i = 0; i < s1.size(); ++i) {
                    for (std::size_t ip = 0; ip < s1.size(); ++ip) {
                        if (!dominance_leq(s1[i], s1[ip])) continue;
                        for (std::size_t j = 0; j < s2.size(); ++j) {
                            for (std::size_t jp = 0; jp < s2.size(); ++jp) {
                                if (!dominance_leq(s2[j], s2[jp])) continue;
                                const Partition& lo = w[i * s2.size() + j];
                                const Partition& hi = w[ip * s2.size() + jp];
                                rec.check(dominance_leq(lo, hi),
                                          [&] {
                                              return show_pair(s1[i], s2[j], pt) + " <= " + show(s1[ip]) + " " + show(s2[jp]);
                                          },
                                          "W(l1, l2) <= W(l1', l2')", [&] { return show(lo) + " vs " + show(hi); });
                            }
                        }
                    }
                }
            }
        }
    }
    return rec.finish();
}

/// Rectangular odd case: l1 = (a1^l), l2 = (a2^l) of type B with l odd.
inline VerificationReport rect_closed_forms(int bound) {
    Recorder rec("rect_closed_forms", bound);
    auto rect = [](int count, int value) { return Partition(std::vector<int>(static_cast<std::size_t>(count), value)); };
    for (int l = 1; l <= bound; l += 2) {
        for (int a1 = 1; a1 * l <= bound; a1 += 2) {
            for (int a2 = 1; (a1 + a2) * l <= bound; a2 += 2) {
                const Partition l1 = rect(l, a1), l2 = rect(l, a2);
                auto in = [&] { return show_pair(l1, l2, PairType::BB); };
                rec.guarded(in, "closed forms", [&] {
                    const int d = (a1 + a2) * l - 1;
                    std::vector<int> wp(static_cast<std::size_t>(l - 1), a1 + a2);
                    wp.push_back(a1 + a2 - 1);
                    const Partition want_w(wp);
                    auto dual_rect = [&](int a) {
                        if (l == 1) return rect(a - 1, 1);
                        std::vector<int> p(static_cast<std::size_t>(a - 1), l);
                        p.push_back(l - 1);
                        return Partition(p);
                    };
                    Partition want_dw;
                    if (l == 1) {
                        want_dw = rect(d - 1, 1);
                    } else {
                        std::vector<int> p(static_cast<std::size_t>(a1 + a2 - 2), l);
                        p.insert(p.end(), {l - 1, l - 1});
                        want_dw = Partition(p);
                    }
                    const Partition w = waldspurger(l1, l2, PairType::BB);
                    const Partition d1 = dual(l1, GroupType::B).partition, d2 = dual(l2, GroupType::B).partition;
                    const Partition dw = dual(w, GroupType::B).partition;
                    const bool ok = w == want_w && d1 == dual_rect(a1) && d2 == dual_rect(a2) && dw == want_dw &&
                                    dw == multiset_union(d1, d2);
                    rec.check(ok, in, "W, d(l_i), d(W) match the closed forms and d(W) = d(l1) u d(l2)", [&] {
                        return "W=" + show(w) + " (want " + show(want_w) + ") d(l1)=" + show(d1) + " d(l2)=" + show(d2) +
                               " d(W)=" + show(dw) + " (want " + show(want_dw) + ")";
                    });
                });
            }
        }
    }
    return rec.finish();
}

// ------------------------------------------------------------------ symbols

inline VerificationReport springer_roundtrip(int bound) {
    Recorder rec("springer_roundtrip", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            for (const auto& l : enumerate(d, t, true)) {
                auto in = [&] { return show(l, t); };
                rec.guarded(in, "partition(symbol(springer(l))) = l", [&] {
                    const Bipartition rho = springer_bipartition(l, t);
                    const Symbol s = symbol_of(rho);
                    const Partition back = partition_of_special_symbol(s, t);
                    rec.check(back == l, in, "partition(symbol(springer(l))) = l",
                              [&] { return "rho=" + rho.to_string() + " symbol=" + s.to_string() + " back=" + show(back); });
                });
            }
        }
    }
    return rec.finish();
}

inline VerificationReport springer_search(int bound) {
    Recorder rec("springer_search", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            for (const auto& l : enumerate(d, t, true)) {
                auto in = [&] { return show(l, t); };
                rec.guarded(in, "springer = search", [&] {
                    const Bipartition fast = springer_bipartition(l, t);
                    const auto slow = oracle::search_springer_bipartition(l, t);
                    const bool ok = slow.has_value() && symbol_of(fast) == symbol_of(*slow);
                    rec.check(ok, in, "springer bipartition equals the searched one", [&] {
                        return fast.to_string() + " vs " + (slow ? slow->to_string() : std::string("none"));
                    });
                });
            }
        }
    }
    return rec.finish();
}

inline VerificationReport achar(int bound) {
    Recorder rec("achar", bound);
    for (GroupType t : all_types()) {
        for (int d : sizes_up_to(bound, t)) {
            const auto specials = enumerate(d, t, true);
            std::vector<Bipartition> rhos;
            for (const auto& l : specials) rhos.push_back(springer_bipartition(l, t));
            for (std::size_t i = 0; i < specials.size(); ++i) {
                for (std::size_t j = 0; j < specials.size(); ++j) {
                    const bool dom = dominance_leq(specials[i], specials[j]);
                    const bool bip = bipartition_leq(rhos[i], rhos[j]);
                    rec.check(dom == bip, [&] { return show(specials[i], t) + " " + show(specials[j], t); },
                              "l <= m iff springer(l) <= springer(m)", [&] {
                                  return rhos[i].to_string() + " " + rhos[j].to_string() + " dominance=" + (dom ? "yes" : "no") +
                                         " bipartition=" + (bip ? "yes" : "no");
                              });
                }
            }
        }
    }
    return rec.finish();
}

inline VerificationReport specialize_sum_property(int bound) {
    Recorder rec("specialize_sum", bound);
    PartitionCache cache;
    for (PairType pt : all_pair_types()) {
        const PairTypeInfo ti = info(pt);
        for_each_special_pair(pt, bound, cache, [&](const Partition& l1, const Partition& l2) {
            auto in = [&] { return show_pair(l1, l2, pt); };
            rec.guarded(in, "specialized sum is special, in the family of the plain sum, above W", [&] {
                const Bipartition r1 = springer_bipartition(l1, ti.first), r2 = springer_bipartition(l2, ti.second);
                const Bipartition plain = plain_sum(r1, r2, pt);
                const Bipartition spec = specialize_sum(r1, r2, pt);
                const Partition closure = partition_of_special_symbol(symbol_of(spec), ti.target);
                const Partition w = waldspurger(l1, l2, pt);
                const bool ok = is_special_bipartition(spec) &&
                                family_key(symbol_of(spec)) == family_key(symbol_of(plain)) && dominance_leq(w, closure);
                rec.check(ok, in, "specialized sum is special, in the family of the plain sum, above W", [&] {
                    return "rho1=" + r1.to_string() + " rho2=" + r2.to_string() + " plain=" + plain.to_string() +
                           " special=" + spec.to_string() + " closure=" + show(closure) + " W=" + show(w);
                });
            });
        });
    }
    return rec.finish();
}

inline VerificationReport closure_oracle(int bound) {
    Recorder rec("closure_oracle", bound);
    PartitionCache cache;
    for (PairType pt : all_pair_types()) {
        const PairTypeInfo ti = info(pt);
        for_each_special_pair(pt, bound, cache, [&](const Partition& l1, const Partition& l2) {
            auto in = [&] { return show_pair(l1, l2, pt); };
            rec.guarded(in, "symbol closure = brute-force closure", [&] {
                const Partition w = waldspurger(l1, l2, pt);
                const Partition fast = special_closure(l1, l2, pt);
                const Partition slow = oracle::brute_force_special_closure(w, ti.target);
                rec.check(fast == slow, in, "symbol closure = brute-force closure",
                          [&] { return "W=" + show(w) + " closure=" + show(fast) + " brute force=" + show(slow); });
            });
        });
    }
    return rec.finish();
}

/// BB and DD have interchangeable factors; W and the specialized sum should
/// not depend on the order. Asymmetries are reported as failures.
inline VerificationReport sum_symmetry(int bound) {
    Recorder rec("sum_symmetry", bound);
    PartitionCache cache;
    for (PairType pt : {PairType::BB, PairType::DD}) {
        const PairTypeInfo ti = info(pt);
        for_each_special_pair(pt, bound, cache, [&](const Partition& l1, const Partition& l2) {
            auto in = [&] { return show_pair(l1, l2, pt); };
            rec.guarded(in, "symmetric in the two factors", [&] {
                const Partition w12 = waldspurger(l1, l2, pt), w21 = waldspurger(l2, l1, pt);
                const Bipartition r1 = springer_bipartition(l1, ti.first), r2 = springer_bipartition(l2, ti.second);
                const Symbol s12 = symbol_of(specialize_sum(r1, r2, pt)), s21 = symbol_of(specialize_sum(r2, r1, pt));
                rec.check(w12 == w21 && s12 == s21, in, "symmetric in the two factors", [&] {
                    return "W: " + show(w12) + " vs " + show(w21) + ", sums: " + s12.to_string() + " vs " + s21.to_string();
                });
            });
        });
    }
    return rec.finish();
}

// ------------------------------------------------------------------- aparam

/// Valid shapes of every target type with dual dimension 1..max_m.
template <class Fn>
void for_each_shape(int max_m, Fn&& fn) {
    for (GroupType t : all_types()) {
        for (int rank = 0;; ++rank) {
            const AParameterShape probe{t, rank, {}};
            if (probe.dual_dimension() > max_m) break;
            if (probe.dual_dimension() == 0) continue;
            for (const auto& psi : enumerate_shapes(t, rank)) fn(psi);
        }
    }
}

inline VerificationReport chain(int bound) {
    Recorder rec("chain", bound);
    std::int64_t equal_dims = 0, equal_orbits = 0;
    for_each_shape(bound, [&](const AParameterShape& psi) {
        const Partition wf = predicted_wavefront(psi);
        for (const auto& signs : proper_sign_vectors(psi)) {
            auto in = [&] {
                std::string s = psi.to_string() + " signs ";
                for (int x : signs) s += x > 0 ? '+' : '-';
                return s;
            };
            rec.guarded(in, "W(wf(psi1), wf(psi2)) <= wf(psi)", [&] {
                const Split split = split_by_signs(psi, signs);
                const Partition wf1 = predicted_wavefront(split.first), wf2 = predicted_wavefront(split.second);
                const Partition w = waldspurger(wf1, wf2, split.pair_type);
                rec.check(dominance_leq(w, wf), in, "W(wf(psi1), wf(psi2)) <= wf(psi)", [&] {
                    return "wf1=" + show(wf1) + " wf2=" + show(wf2) + " W=" + show(w) + " wf=" + show(wf);
                });
                if (orbit_dim(w, psi.target) == orbit_dim(wf, psi.target)) ++equal_dims;
                if (w == wf) ++equal_orbits;
            });
        }
    });
    rec.note("dimension equality in " + std::to_string(equal_dims) + " splits, orbit equality in " +
             std::to_string(equal_orbits));

    // The worked SO5 chain: psi = S2 (x) S1 + S1 (x) S2, one summand on each side.
    if (bound >= 4) {
        const AParameterShape psi = parse_shape(GroupType::B, 2, "1xS2*S1:O,1xS1*S2:O");
        auto in = [] { return std::string("SO5 [1xS2*S1:O | 1xS1*S2:O]"); };
        rec.guarded(in, "W((3),(1,1,1)) = (3,1,1) = wf(psi)", [&] {
            const Split split = split_by_signs(psi, {1, -1});
            const Partition wf1 = predicted_wavefront(split.first), wf2 = predicted_wavefront(split.second);
            const Partition w = waldspurger(wf1, wf2, split.pair_type);
            const Partition wf = predicted_wavefront(psi);
            const bool ok = wf1 == Partition{3} && wf2 == Partition{1, 1, 1} && w == Partition{3, 1, 1} && wf == w;
            rec.check(ok, in, "W((3),(1,1,1)) = (3,1,1) = wf(psi)", [&] {
                return "wf1=" + show(wf1) + " wf2=" + show(wf2) + " W=" + show(w) + " wf=" + show(wf);
            });
        });
    }
    return rec.finish();
}

inline VerificationReport npsi_oracle(int bound) {
    Recorder rec("npsi_oracle", bound);
    for_each_shape(bound, [&](const AParameterShape& psi) {
        auto in = [&] { return psi.to_string(); };
        rec.guarded(in, "npsi = Jordan type of the matrix", [&] {
            std::vector<std::pair<int, int>> blocks;
            for (const auto& s : psi.summands) {
                blocks.emplace_back(s.rho_dim * s.a * (s.rho_type == RhoType::Pair ? 2 : 1), s.b);
            }
            const Partition fast = npsi_partition(psi);
            const Partition slow = oracle::jordan_type_oracle(blocks);
            rec.check(fast == slow, in, "npsi = Jordan type of the matrix",
                      [&] { return show(fast) + " vs " + show(slow); });
        });
    });
    return rec.finish();
}

inline VerificationReport wavefront_special(int bound) {
    Recorder rec("wavefront_special", bound);
    for_each_shape(bound, [&](const AParameterShape& psi) {
        auto in = [&] { return psi.to_string(); };
        rec.guarded(in, "wf special; tempered wf = d(1^m)", [&] {
            const Partition wf = predicted_wavefront(psi);
            bool tempered = true;
            for (const auto& s : psi.summands) tempered = tempered && s.b == 1;
            const Partition zero(std::vector<int>(static_cast<std::size_t>(psi.dual_dimension()), 1));
            const Partition regular = dual(zero, dual_type(psi.target)).partition;
            const bool ok = is_special(wf, psi.target) && (!tempered || wf == regular);
            rec.check(ok, in, "wf special; tempered wf = d(1^m)",
                      [&] { return "wf=" + show(wf) + (tempered ? " tempered, d(1^m)=" + show(regular) : ""); });
        });
    });
    return rec.finish();
}

}  // namespace harness

struct PropertyInfo {
    const char* name;
    int default_bound;
    int max_bound;
    const char* description;
    VerificationReport (*run)(int);
};

/// Registered properties, in the order `verify all` runs them.
inline const std::vector<PropertyInfo>& properties() {
    using namespace harness;
    static const std::vector<PropertyInfo> table = {
        {"transpose_involution", 16, 50, "transpose is an involution", transpose_involution},
        {"order_reversal", 12, 30, "l <= m iff m^t <= l^t", order_reversal},
        {"union_monotone", 10, 18, "union is monotone in both arguments", union_monotone},
        {"transpose_union", 12, 30, "(l1 u l2)^t = l1^t + l2^t", transpose_union},
        {"add_union", 10, 16, "(l1 u l2) + (m1 u m2) >= (l1 + m1) u (l2 + m2)", add_union},
        {"collapse_oracle", 12, 24, "collapse agrees with the brute-force maximum", collapse_oracle},
        {"special_criterion", 16, 40, "transpose criterion for specialness agrees with d(d(l)) = l", special_criterion},
        {"dual_order", 16, 30, "duality reverses dominance", dual_order},
        {"dd_special", 16, 40, "l <= d(d(l)) with equality iff special; d(l) special", dd_special},
        {"orbit_dim_monotone", 14, 30, "orbit dimension is monotone in dominance", orbit_dim_monotone},
        {"waldspurger_size", 16, 32, "W has the expected size and type", waldspurger_size},
        {"dim_identity", 16, 32, "dim W = dim l1 + dim l2 + dim h - dim h1 - dim h2", dim_identity},
        {"prop_ws", 16, 32, "d(W(l1, l2)) >= d(l1) u d(l2)", prop_ws},
        {"worder", 14, 26, "W is monotone in both arguments", worder},
        {"rect_closed_forms", 16, 200, "rectangular odd case closed forms", rect_closed_forms},
        {"springer_roundtrip", 20, 40, "special partition -> Springer bipartition -> symbol -> partition", springer_roundtrip},
        {"springer_search", 12, 20, "Springer bipartition agrees with exhaustive search", springer_search},
        {"achar", 14, 28, "dominance on special partitions = bipartition order", achar},
        {"specialize_sum", 14, 28, "specialized sum is special and in the plain sum's family", specialize_sum_property},
        {"closure_oracle", 14, 22, "symbol closure = smallest special partition above W", closure_oracle},
        {"sum_symmetry", 14, 28, "BB and DD sums do not depend on the factor order", sum_symmetry},
        {"chain", 12, 16, "W(wf(psi1), wf(psi2)) <= wf(psi) for every proper split", chain},
        {"npsi_oracle", 10, 16, "npsi agrees with the Jordan type of an explicit matrix", npsi_oracle},
        {"wavefront_special", 12, 16, "predicted wavefront is special; tempered gives the regular orbit", wavefront_special},
    };
    return table;
}

inline const PropertyInfo& find_property(const std::string& name) {
    for (const auto& p : properties()) {
        if (name == p.name) return p;
    }
    std::string known;
    for (const auto& p : properties()) known += std::string(known.empty() ? "" : ", ") + p.name;
    throw InputError("unknown property '" + name + "' (known: all, " + known + ")");
}

/// Runs one property up to `bound` (its default when bound < 0).
inline VerificationReport verify(const std::string& name, int bound = -1) {
    const PropertyInfo& p = find_property(name);
    if (bound < 0) bound = p.default_bound;
    if (bound > p.max_bound) {
        throw InputError("bound " + std::to_string(bound) + " for " + name + " exceeds the limit " +
                         std::to_string(p.max_bound));
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = p.run(bound);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace orbitcalc
