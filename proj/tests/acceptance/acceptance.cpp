// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitcalc/orbitcalc.hpp"

namespace {

using namespace orbitcalc;
using P = Partition;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double time_limit;  // seconds; 0 for none
    std::function<Outcome()> run;
};

/// Runs the named sweeps and folds them into one outcome.
Outcome sweeps(const std::vector<std::pair<std::string, int>>& runs) {
    Outcome out;
    std::ostringstream detail;
    for (const auto& [name, bound] : runs) {
        const VerificationReport r = verify(name, bound);
        out.ok = out.ok && r.passed();
        if (detail.tellp() > 0) detail << "; ";
        detail << name << " bound " << bound << ": " << r.cases_checked << " cases, " << r.failure_count << " failures";
        if (!r.failures.empty()) detail << " (first: " << r.failures.front().inputs << " -> " << r.failures.front().observed << ")";
        for (const auto& n : r.notes) detail << " [" << n << "]";
    }
    out.detail = detail.str();
    return out;
}

Outcome point_values() {
    Outcome out;
    std::ostringstream detail;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            out.ok = false;
            detail << "mismatch: " << what << "; ";
        }
    };
    const P l1{3, 3, 3}, l2{1, 1, 1};
    const P w = waldspurger(l1, l2, PairType::BB);
    expect(w == P{4, 4, 3}, "W((3,3,3),(1,1,1)) = (4,4,3), got (" + w.to_string() + ")");
    const P d1 = dual(l1, GroupType::B).partition, d2 = dual(l2, GroupType::B).partition;
    expect(d1 == P{3, 3, 2}, "d(3,3,3) = (l,l,l-1) = (3,3,2), got (" + d1.to_string() + ")");
    expect(d2 == P{2}, "d(1,1,1) = (l-1) = (2), got (" + d2.to_string() + ")");
    const P dw = dual(w, GroupType::B).partition;
    expect(dw == P{3, 3, 2, 2}, "d(4,4,3) = (l,l,l-1,l-1) = (3,3,2,2), got (" + dw.to_string() + ")");
    expect(dw == multiset_union(d1, d2), "d(W) = d(l1) u d(l2)");

    const Symbol raw{{0, 1, 2, 3}, {0, 3, 4}, false, Decoration::None};
    const Symbol want{{0, 1, 2}, {2, 3}, false, Decoration::None};
    expect(normalize_symbol(raw) == want, "symbol (0,1,2,3 | 0,3,4) ~ (0,1,2 | 2,3)");
    expect(family_key(raw) == family_key(want), "shift-equivalent symbols share a family key");

    const Outcome rect = sweeps({{"rect_closed_forms", 16}});
    out.ok = out.ok && rect.ok;
    detail << "W(3^3, 1^3) = (" << w.to_string() << "), d = (" << dw.to_string() << "), symbol shift ok; " << rect.detail;
    out.detail = detail.str();
    return out;
}

Outcome chain_criterion() {
    Outcome out = sweeps({{"chain", 12}});
    const AParameterShape psi = parse_shape(GroupType::B, 2, "1xS2*S1:O,1xS1*S2:O");
    const Split split = split_by_signs(psi, {1, -1});
    const P w = waldspurger(predicted_wavefront(split.first), predicted_wavefront(split.second), split.pair_type);
    const P wf = predicted_wavefront(psi);
    const bool worked = w == P{3, 1, 1} && wf == w;
    out.ok = out.ok && worked;
    out.detail += "; SO5 worked chain W((3),(1,1,1)) = (" + w.to_string() + "), wf = (" + wf.to_string() + ")";
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "d(W(l1,l2)) >= d(l1) u d(l2) for all special pairs, d1+d2 <= 16", 60, [] { return sweeps({{"prop_ws", 16}}); }},
        {2, "dim W = dim l1 + dim l2 + dim h - dim h1 - dim h2, d1+d2 <= 16", 0, [] { return sweeps({{"dim_identity", 16}}); }},
        {3, "W monotone on comparable special pairs, d1+d2 <= 14", 0, [] { return sweeps({{"worder", 14}}); }},
        {4, "dominance = bipartition order on Springer bipartitions, size <= 14", 0, [] { return sweeps({{"achar", 14}}); }},
        {5, "duality laws exhaustive to size 16", 0, [] { return sweeps({{"dd_special", 16}, {"dual_order", 16}}); }},
        {6, "collapse = brute-force maximum, size <= 12", 0, [] { return sweeps({{"collapse_oracle", 12}}); }},
        {7, "Springer round trip, size <= 20", 0, [] { return sweeps({{"springer_roundtrip", 20}}); }},
        {8, "symbol closure = brute-force smallest special above W, d1+d2 <= 14", 0,
         [] { return sweeps({{"closure_oracle", 14}}); }},
        {9, "rectangular closed forms and symbol shift example", 0, point_values},
        {10, "endoscopic chain W(wf(psi1), wf(psi2)) <= wf(psi), m <= 12", 60, chain_criterion},
        {11, "npsi = Jordan type of an explicit matrix, m <= 10", 0, [] { return sweeps({{"npsi_oracle", 10}}); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            o.ok = false;
            o.detail += "; exceeded " + std::to_string(static_cast<int>(c.time_limit)) + " s";
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.number << ": " << c.title << " ["
                  << std::fixed << std::setprecision(2) << secs << " s] " << o.detail << '\n';
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
