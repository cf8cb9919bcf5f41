#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitcalc/orbitcalc.hpp"
#include "orbitcalc/serialize.hpp"

namespace {

using namespace orbitcalc;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string typed(const Partition& p, GroupType t) { return paren(p) + "_" + std::string(1, to_char(t)); }

std::string list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

struct Options {
    bool json = false;
    std::string type;
    std::string pair;
    std::string partition;
    std::string second;
    std::string bipartition;
    bool closure = false;
    std::string target;
    std::optional<int> rank;
    std::string shape;
    bool dual_shape = false;
    std::string property;
    std::optional<int> max;
    bool timing = false;
};

int run_transpose(const Options& o) {
    const Partition in = parse_partition(o.partition);
    const Partition out = transpose(in);
    if (o.json) {
        Json j;
        j["input"] = to_json(in);
        j["output"] = to_json(out);
        emit(j);
    } else {
        std::cout << paren(out) << '\n';
    }
    return kOk;
}

int run_dual(const Options& o) {
    const GroupType t = parse_group_type(o.type);
    const Partition in = parse_partition(o.partition);
    const DualityResult r = dual(in, t);
    if (o.json) {
        Json j;
        j["input"] = to_json(in);
        j["input_type"] = type_json(t);
        j["output"] = to_json(r.partition);
        j["output_type"] = type_json(r.output_type);
        j["special"] = is_special(r.partition, r.output_type);
        emit(j);
    } else {
        std::cout << "d" << typed(in, t) << " = " << typed(r.partition, r.output_type) << '\n';
    }
    return kOk;
}

int run_collapse(const Options& o) {
    const GroupType t = parse_group_type(o.type);
    const Partition in = parse_partition(o.partition);
    const Partition out = collapse(in, t);
    if (o.json) {
        Json j;
        j["input"] = to_json(in);
        j["type"] = type_json(t);
        j["output"] = to_json(out);
        j["special"] = is_special(out, t);
        emit(j);
    } else {
        std::cout << typed(out, t) << '\n';
    }
    return kOk;
}

int run_waldspurger(const Options& o) {
    const PairType pt = parse_pair_type(o.pair);
    const PairTypeInfo ti = info(pt);
    const Partition l1 = parse_partition(o.partition), l2 = parse_partition(o.second);
    const WaldspurgerResult w = waldspurger_full(l1, l2, pt);
    std::optional<Partition> closure;
    if (o.closure) closure = special_closure(l1, l2, pt);
    if (o.json) {
        Json j;
        j["pair"] = to_string(pt);
        j["lambda1"] = to_json(l1);
        j["lambda2"] = to_json(l2);
        j["W"] = to_json(w.partition);
        j["type"] = type_json(w.type);
        j["xi"] = w.xi.entries;
        j["J_plus"] = w.xi.j_plus;
        j["J_minus"] = w.xi.j_minus;
        j["special"] = is_special(w.partition, w.type);
        if (closure) j["closure"] = to_json(*closure);
        emit(j);
    } else {
        std::cout << "W" << paren(l1) << paren(l2) << " = " << typed(w.partition, ti.target) << '\n'
                  << "xi = (" << list(w.xi.entries) << ")\n"
                  << "J+ = {" << list(w.xi.j_plus) << "}\n"
                  << "J- = {" << list(w.xi.j_minus) << "}\n";
        if (closure) std::cout << "closure = " << typed(*closure, ti.target) << '\n';
    }
    return kOk;
}

int run_symbol(const Options& o) {
    const GroupType t = parse_group_type(o.type);
    const Bipartition rho = parse_bipartition(o.bipartition, t == GroupType::D);
    const Symbol s = symbol_of(rho);
    const bool special = is_special_symbol(s);
    std::optional<Partition> lambda;
    if (special) lambda = partition_of_special_symbol(s, t);
    if (o.json) {
        Json j;
        j["type"] = type_json(t);
        j["bipartition"] = to_json(rho);
        j["symbol"] = to_json(s);
        j["special"] = special;
        if (lambda) j["partition"] = to_json(*lambda);
        emit(j);
    } else {
        std::cout << "bipartition " << rho.to_string() << '\n'
                  << "symbol " << s.to_string() << '\n'
                  << "special " << (special ? "yes" : "no") << '\n';
        if (lambda) std::cout << "partition " << typed(*lambda, t) << '\n';
    }
    return kOk;
}

int run_springer(const Options& o) {
    const GroupType t = parse_group_type(o.type);
    const Partition in = parse_partition(o.partition);
    const Bipartition rho = springer_bipartition(in, t);
    const Symbol s = symbol_of(rho);
    if (o.json) {
        Json j;
        j["input"] = to_json(in);
        j["type"] = type_json(t);
        j["bipartition"] = to_json(rho);
        j["symbol"] = to_json(s);
        emit(j);
    } else {
        std::cout << "bipartition " << rho.to_string() << '\n' << "symbol " << s.to_string() << '\n';
    }
    return kOk;
}

std::pair<GroupType, int> resolve_target(const Options& o) {
    if (o.target == "SOodd" || o.target == "Sp" || o.target == "SOeven") {
        if (!o.rank) throw InputError("--rank is required with --target " + o.target);
        if (*o.rank < 0) throw InputError("--rank must be non-negative");
        const GroupType t = o.target == "SOodd" ? GroupType::B : o.target == "Sp" ? GroupType::C : GroupType::D;
        return {t, *o.rank};
    }
    const auto [t, n] = parse_group_name(o.target);
    if (o.rank && *o.rank != n) {
        throw InputError("--rank " + std::to_string(*o.rank) + " does not match " + o.target);
    }
    return {t, n};
}

int run_wavefront(const Options& o) {
    const auto [t, n] = resolve_target(o);
    AParameterShape psi = parse_shape(t, n, o.shape);
    if (o.dual_shape) psi = dual_shape(psi);
    const Partition npsi = npsi_partition(psi);
    const Partition wf = predicted_wavefront(psi);
    if (o.json) {
        Json j;
        j["shape"] = to_json(psi);
        j["dual_applied"] = o.dual_shape;
        j["npsi"] = to_json(npsi);
        j["npsi_type"] = type_json(dual_type(t));
        j["wavefront"] = to_json(wf);
        j["wavefront_type"] = type_json(t);
        emit(j);
    } else {
        std::cout << "shape " << psi.to_string() << '\n'
                  << "npsi " << typed(npsi, dual_type(t)) << '\n'
                  << "wavefront " << typed(wf, t) << '\n';
    }
    return kOk;
}

void print_report(const VerificationReport& r, const Options& o) {
    if (o.json) {
        emit(to_json(r, o.timing));
        return;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.property << " bound=" << r.bound
              << " cases=" << r.cases_checked << " failures=" << r.failure_count;
    if (o.timing) std::cout << " time=" << r.wall_time << "s";
    std::cout << '\n';
    for (const auto& f : r.failures) {
        std::cout << "  counterexample: " << f.inputs << "\n    expected: " << f.relation
                  << "\n    observed: " << f.observed << '\n';
    }
    for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
}

int run_verify(const Options& o) {
    std::vector<std::string> names;
    if (o.property == "all") {
        if (o.max) throw InputError("--max applies to a single property, not to 'all'");
        for (const auto& p : properties()) names.emplace_back(p.name);
    } else {
        find_property(o.property);
        names.push_back(o.property);
    }
    bool ok = true;
    for (const auto& name : names) {
        const VerificationReport r = verify(name, o.max.value_or(-1));
        print_report(r, o);
        ok = ok && r.passed();
    }
    return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition calculus for nilpotent orbits of split classical groups"};
    app.require_subcommand(1);
    Options o;
    bool global_json = false;
    app.add_flag("--json", global_json, "Emit one JSON object per line");

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit one JSON object per line"); };
    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "Group type")->required()->check(CLI::IsMember({"B", "C", "D"}));
    };

    auto* tr = app.add_subcommand("transpose", "Conjugate partition");
    tr->add_option("P", o.partition, "Partition, e.g. 4,2,1")->required();
    add_json(tr);

    auto* du = app.add_subcommand("dual", "Spaltenstein dual");
    add_type(du);
    du->add_option("P", o.partition, "Partition")->required();
    add_json(du);

    auto* co = app.add_subcommand("collapse", "Largest partition of the type below P");
    add_type(co);
    co->add_option("P", o.partition, "Partition")->required();
    add_json(co);

    auto* wa = app.add_subcommand("waldspurger", "Waldspurger's map W(P1, P2)");
    wa->add_option("--pair", o.pair, "Pair type")->required()->check(CLI::IsMember({"BB", "CD", "DD"}));
    wa->add_option("P1", o.partition, "First factor")->required();
    wa->add_option("P2", o.second, "Second factor")->required();
    wa->add_flag("--closure", o.closure, "Also print the smallest special partition above W");
    add_json(wa);

    auto* sy = app.add_subcommand("symbol", "Symbol of a bipartition");
    add_type(sy);
    sy->add_option("BIPARTITION", o.bipartition, "alpha|beta, e.g. \"0,1|1\"")->required();
    add_json(sy);

    auto* sp = app.add_subcommand("springer", "Springer bipartition of a special partition");
    add_type(sp);
    sp->add_option("P", o.partition, "Special partition")->required();
    add_json(sp);

    auto* wf = app.add_subcommand("wavefront", "Predicted wavefront orbit of an A-parameter shape");
    wf->add_option("--target", o.target, "SOodd, Sp, SOeven (with --rank) or a group such as SO5, Sp4, SO6")
        ->required();
    wf->add_option("--rank", o.rank, "Rank n");
    wf->add_option("--shape", o.shape, "Summands dxSa*Sb:t, comma separated, t in O,S,P")->required();
    wf->add_flag("--dual", o.dual_shape, "Swap the two SL2 factors first");
    add_json(wf);

    auto* ve = app.add_subcommand("verify", "Run an exhaustive property sweep");
    ve->add_option("PROPERTY", o.property, "Property name, or 'all'")->required();
    ve->add_option("--max", o.max, "Bound (default: the property's own)");
    ve->add_flag("--timing", o.timing, "Include wall time in the report");
    add_json(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    o.json = o.json || global_json;

    try {
        if (tr->parsed()) return run_transpose(o);
        if (du->parsed()) return run_dual(o);
        if (co->parsed()) return run_collapse(o);
        if (wa->parsed()) return run_waldspurger(o);
        if (sy->parsed()) return run_symbol(o);
        if (sp->parsed()) return run_springer(o);
        if (wf->parsed()) return run_wavefront(o);
        if (ve->parsed()) return run_verify(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kFailure;
    }
    return kInputError;
}
