// braidlab: exact computations in braided vector spaces and braided Hopf
// algebras at finite braid-group quotients.
//
// Subcommands: nichols, primitives, comb-rank, pbw, mm, operad,
// counterexample, hurwitz.  All computations are exact over Q or Q(zeta_m);
// identical inputs produce byte-identical JSON.
//
// Exit codes: 0 success, 1 falsified verification, 2 input error, 3 cap
// exhaustion.

#include "braidlab/report.hpp"
#include "braidlab/specfile.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace braidlab;

namespace {

struct Options {
    unsigned max_degree = 5;
    unsigned conductor = 0;  // 0 = derive from the input
    size_t group_cap = 20000;
    size_t tensor_cap = 4096;
    bool json = false;
    std::string space_arg;
};

YDSpace load_space(const Options& opt) {
    if (opt.space_arg.empty()) throw InputError("no --space given");
    std::string arg = opt.space_arg;
    if (arg.rfind("builtin:", 0) == 0) arg = arg.substr(8);
    YDSpace space = [&]() {
        for (const auto& name : builtin_names())
            if (arg == name) return builtin_space(arg);
        if (arg.rfind("zeta", 0) == 0 || arg == "s3-rack-sign" || arg == "fk3")
            return builtin_space(arg);
        SpecFile spec = parse_spec(arg, opt.group_cap);
        if (!spec.space) throw InputError("spec file has no [space] section: " + arg);
        return *spec.space;
    }();
    if (opt.conductor != 0 && space.conductor() != 0 &&
        opt.conductor % space.conductor() != 0)
        throw InputError("space needs conductor " + std::to_string(space.conductor()) +
                         ", which does not divide the session conductor " +
                         std::to_string(opt.conductor));
    return space;
}

void emit(const Options& opt, const Json& payload, const std::string& table) {
    if (opt.json) {
        Json out;
        out["schema"] = 1;
        out.update(payload);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << table;
    }
}

std::string dims_row(const std::string& label, const std::vector<size_t>& dims) {
    std::string s = label + ":";
    for (size_t d : dims) s += " " + std::to_string(d);
    return s + "\n";
}

int cmd_nichols(const Options& opt) {
    YDSpace v = load_space(opt);
    std::vector<size_t> hilbert;
    for (unsigned q = 0; q <= opt.max_degree; ++q)
        hilbert.push_back(q == 0 ? 1 : nichols_component(v, q, opt.tensor_cap).dim);
    Json j;
    j["hilbert"] = json_dims(hilbert);
    emit(opt, j, dims_row("nichols hilbert", hilbert));
    return 0;
}

int cmd_primitives(const Options& opt) {
    YDSpace v = load_space(opt);
    auto vp = std::make_shared<const YDSpace>(v);
    std::vector<size_t> free_dims, nichols_dims;
    Json free_bases = Json::array();
    for (unsigned q = 1; q <= opt.max_degree; ++q) {
        Subspace p = free_primitives(v, q, opt.tensor_cap);
        free_dims.push_back(p.dim());
        free_bases.push_back(json_subspace(p));
    }
    GradedHopfQuotient nic =
        GradedHopfQuotient::nichols_quotient(vp, opt.max_degree, opt.tensor_cap);
    for (unsigned q = 1; q <= opt.max_degree; ++q) nichols_dims.push_back(nic.primitives(q).dim());
    Json j;
    j["free_primitive_dims"] = json_dims(free_dims);
    j["nichols_primitive_dims"] = json_dims(nichols_dims);
    j["free_primitive_bases"] = free_bases;
    emit(opt, j,
         dims_row("free primitives (deg 1..D)", free_dims) +
             dims_row("nichols primitives (deg 1..D)", nichols_dims));
    return 0;
}

int cmd_comb_rank(const Options& opt) {
    YDSpace v = load_space(opt);
    RankReport r = combinatorial_rank(v, opt.max_degree, opt.tensor_cap);
    Json j;
    j["max_degree"] = opt.max_degree;
    j.update(json_rank(r));
    std::string table = "combinatorial rank (up to degree " + std::to_string(opt.max_degree) +
                        "): " + (r.reached_fixed_point ? "" : ">= ") + std::to_string(r.rank) +
                        "\n";
    for (size_t k = 0; k < r.tower_hilbert.size(); ++k)
        table += dims_row("  stage " + std::to_string(k), r.tower_hilbert[k]);
    emit(opt, j, table);
    return 0;
}

int cmd_pbw(const Options& opt) {
    YDSpace v = load_space(opt);
    auto vp = std::make_shared<const YDSpace>(v);
    GradedHopfQuotient a = GradedHopfQuotient::free_algebra(vp, opt.max_degree, opt.tensor_cap);
    PbwReport r = verify_pbw(a);
    Json j = json_pbw(r);
    std::string table = std::string("pbw tower: ") + (r.passed ? "PASS" : "FAIL") + "\n" +
                        dims_row("  P dims", r.p_dims) + dims_row("  Q dims", r.q_dims);
    emit(opt, j, table);
    return r.passed ? 0 : 1;
}

int cmd_mm(const Options& opt) {
    YDSpace v = load_space(opt);
    auto vp = std::make_shared<const YDSpace>(v);
    GradedHopfQuotient a = GradedHopfQuotient::free_algebra(vp, opt.max_degree, opt.tensor_cap);
    PerfectStructureReport r = verify_perfect_structure(a);
    Json j = json_perfect_structure(r);
    std::string table = std::string("perfect structure check: ") +
                        (r.passed ? "PASS" : "FAIL") + "\n" + dims_row("  P dims", r.p_dims) +
                        dims_row("  ker(a) dims", r.ker_a_dims) +
                        dims_row("  P_W dims", r.pw_dims);
    emit(opt, j, table);
    return r.passed ? 0 : 1;
}

int cmd_operad(const Options& opt, size_t arity, const std::string& quotient) {
    BraidQuotient q = [&]() {
        if (quotient == "sym") return symmetric_quotient(arity);
        if (quotient.rfind("cyclic:", 0) == 0) {
            if (arity != 2) throw InputError("cyclic quotients exist for -n 2 only");
            return cyclic_quotient_b2(std::stoul(quotient.substr(7)));
        }
        if (quotient == "image") {
            YDSpace v = load_space(opt);
            return image_group(v, arity, opt.group_cap);
        }
        // otherwise: a spec file whose [group] generators are the sigma images
        SpecFile f = parse_spec(quotient, opt.group_cap);
        if (!f.group) throw InputError("--quotient file needs a [group] section");
        if (f.group->generator_count() != arity - 1)
            throw InputError("--quotient group has " +
                             std::to_string(f.group->generator_count()) +
                             " generators; arity " + std::to_string(arity) + " needs " +
                             std::to_string(arity - 1));
        std::vector<MonomialMatrix> gens;
        for (size_t k = 0; k < f.group->generator_count(); ++k)
            gens.push_back(f.group->element(f.group->generator(k)));
        return BraidQuotient(arity, gens, opt.group_cap);
    }();
    OperadLevel level = operad_level(q);
    GroupAlgebraElement g = garsia_idempotent(q.group(), level.brprim);
    GroupAlgebraElement h = garsia_idempotent(q.group(), level.woron);
    Json j;
    j["arity"] = arity;
    j["group_order"] = q.group()->size();
    j["brprim_dim"] = level.brprim.dim();
    j["woronowicz_dim"] = level.woron.dim();
    j["garsia_g"] = json_algebra_element(g);
    j["garsia_h"] = json_algebra_element(h);
    j["g_equals_h"] = (g == h);
    std::string table = "operad level n=" + std::to_string(arity) + " |Q|=" +
                        std::to_string(q.group()->size()) + "\n  brprim dim " +
                        std::to_string(level.brprim.dim()) + ", woronowicz dim " +
                        std::to_string(level.woron.dim()) + "\n  g = " + g.str() + "\n  h = " +
                        h.str() + "\n";
    emit(opt, j, table);
    return 0;
}

int cmd_counterexample(const Options& opt, const std::string& builtin) {
    Options local = opt;
    if (!builtin.empty()) local.space_arg = builtin;
    if (local.space_arg.empty()) local.space_arg = "s3-rack";
    YDSpace v = load_space(local);
    CounterexampleReport r = verify_not_right_ideal(v, opt.tensor_cap);
    Json j = json_counterexample(r);
    std::string table = "b o_1 mu applied to x.x.y  = " + r.intermediate_str + "\n" +
                        "S_3 of it                  = " + r.final_str + "\n" +
                        (r.nonzero ? "NONZERO: the Woronowicz ideal is not a right ideal\n"
                                   : "ZERO (unexpected for the rack example)\n");
    emit(opt, j, table);
    return r.nonzero ? 0 : 1;
}

int cmd_hurwitz(const Options& opt, size_t strands, size_t points, const std::string& seed,
                size_t word_bound) {
    FinGroupPtr g = symmetric_group(points);
    std::vector<size_t> tuple;
    std::string text = "[group]\npoints = " + std::to_string(points) + "\n";
    // parse the seed as semicolon-separated cycles against S_points
    {
        std::string entry;
        std::vector<std::string> parts;
        for (char c : seed + ";") {
            if (c == ';') {
                if (!entry.empty()) parts.push_back(entry);
                entry.clear();
            } else {
                entry += c;
            }
        }
        for (const auto& p : parts) {
            SpecFile f = parse_spec_text(text + "gen = " + p + "\n", opt.group_cap);
            auto idx = g->index_of(f.group->element(f.group->generator(0)));
            if (!idx) throw InputError("seed entry not in S_" + std::to_string(points));
            tuple.push_back(*idx);
        }
    }
    if (strands == 0) strands = tuple.size();
    HurwitzReport r = hurwitz_orbit(strands, g, tuple, opt.group_cap, word_bound);
    Json j = json_hurwitz(r);
    std::string table = "hurwitz orbit size " + std::to_string(r.orbit_size) +
                        (r.product_invariant ? " (product invariant)" : " (PRODUCT DRIFT!)") +
                        "\n" +
                        (r.stabilizer_found
                             ? "seed stabilized by " + r.stabilizer_word.str() + "\n"
                             : "no stabilizing word of length <= " +
                                   std::to_string(r.word_bound) + "\n");
    emit(opt, j, table);
    return r.product_invariant ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidlab: exact braided Hopf algebra computations at finite quotients"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-D,--max-degree", opt.max_degree, "degree cutoff (default 5)");
    app.add_option("--conductor", opt.conductor, "session cyclotomic conductor");
    app.add_option("--group-cap", opt.group_cap, "finite group size cap");
    app.add_option("--tensor-cap", opt.tensor_cap, "tensor component dimension cap");
    app.add_flag("--json", opt.json, "emit machine-readable JSON");
    app.add_option("--space", opt.space_arg, "space spec file or builtin[:name]");

    auto* nichols = app.add_subcommand("nichols", "Hilbert data of the Nichols algebra");
    auto* primitives = app.add_subcommand("primitives", "free/quotient primitive dims and bases");
    auto* comb = app.add_subcommand("comb-rank", "combinatorial rank tower");
    auto* pbw = app.add_subcommand("pbw", "primitive tower and stable structure checks");
    auto* mm = app.add_subcommand("mm", "perfect-structure (Milnor-Moore support) checks");

    auto* operad = app.add_subcommand("operad", "BrPrim/Woronowicz levels and Garsia idempotents");
    size_t arity = 3;
    std::string quotient = "sym";
    operad->add_option("-n,--arity", arity, "operad arity (strand count)");
    operad->add_option("--quotient", quotient, "sym | cyclic:M | image");

    auto* counter = app.add_subcommand("counterexample",
                                       "replay: the Woronowicz ideal is not a right ideal");
    std::string builtin;
    counter->add_option("--builtin", builtin, "builtin space name (default s3-rack)");

    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz orbit report");
    size_t strands = 0, points = 3, word_bound = 6;
    std::string seed = "(1 2); (2 3)";
    hurwitz->add_option("-n,--strands", strands, "strand count (default: seed length)");
    hurwitz->add_option("--points", points, "ambient symmetric group S_points");
    hurwitz->add_option("--seed", seed, "semicolon-separated cycle tuples");
    hurwitz->add_option("--word-bound", word_bound, "stabilizer search length bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (nichols->parsed()) return cmd_nichols(opt);
        if (primitives->parsed()) return cmd_primitives(opt);
        if (comb->parsed()) return cmd_comb_rank(opt);
        if (pbw->parsed()) return cmd_pbw(opt);
        if (mm->parsed()) return cmd_mm(opt);
        if (operad->parsed()) return cmd_operad(opt, arity, quotient);
        if (counter->parsed()) return cmd_counterexample(opt, builtin);
        if (hurwitz->parsed()) return cmd_hurwitz(opt, strands, points, seed, word_bound);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exhausted: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "structure error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
