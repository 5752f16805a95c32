// Command-line front end.  Every subcommand maps to exactly one library
// operation; matrices, patterns, involutions, and data come in as JSON files
// (or stdin via "-"), results go out as JSON or DOT on stdout.  Output is
// deterministic: object keys are emitted in sorted order and every listing is
// canonically ordered, so identical inputs give byte-identical output.
//
// Exit status: 0 on success, 1 on a domain error (a structured JSON error
// object is written to stderr), 2 on a usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bnil/census.hpp"
#include "bnil/classify.hpp"
#include "bnil/degeneration.hpp"
#include "bnil/error.hpp"
#include "bnil/json_io.hpp"
#include "bnil/melnikov.hpp"
#include "bnil/normalform.hpp"
#include "bnil/olp.hpp"
#include "bnil/quiver.hpp"

namespace {

using nlohmann::json;

// Reads a whole input.  "-" means stdin; the caller guards against asking
// for stdin twice in one invocation.
std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw bnil::Error("io_error", "cannot open input file: " + path);
    ss << f.rdbuf();
    return ss.str();
}

void require_one_stdin(const std::vector<std::string>& paths) {
    int uses = 0;
    for (const std::string& p : paths)
        if (p == "-") ++uses;
    if (uses > 1)
        throw bnil::Error("io_error", "at most one input may read stdin (\"-\")");
}

json parse_json(const std::string& path) {
    return json::parse(slurp(path));
}

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

std::vector<int> flag_dims(int n) {
    std::vector<int> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = i + 1;
    return dims;
}

int run_classify(const std::string& input, const std::vector<int>& blocks,
                 bool with_profile) {
    bnil::Mat<bnil::Rational> a = parse_json(input).get<bnil::Mat<bnil::Rational>>();
    json out;
    if (!blocks.empty())
        out = bnil::classify_parabolic(a, blocks);
    else
        out = bnil::classify(a);
    if (with_profile) out["profile"] = bnil::profile_of(a);
    emit(out);
    return 0;
}

int run_enumerate(int n) {
    std::vector<bnil::OrientedLinkPattern> pats = bnil::enumerate_patterns(n);
    json out = {{"n", n}, {"count", pats.size()}, {"patterns", pats}};
    emit(out);
    return 0;
}

json covers_json(int n, bnil::Exec exec) {
    json edges = json::array();
    for (const auto& [from, to] : bnil::covers(n, exec))
        edges.push_back({{"from", from}, {"to", to}});
    return edges;
}

int run_poset(int n, const std::string& format, bnil::Exec exec) {
    if (format == "dot") {
        std::cout << bnil::dot_hasse(n);
        return 0;
    }
    json out = {{"n", n},
                {"patterns", bnil::enumerate_patterns(n)},
                {"covers", covers_json(n, exec)}};
    emit(out);
    return 0;
}

int run_covers(int n, const std::string& format, bnil::Exec exec) {
    if (format == "dot") {
        std::cout << bnil::dot_hasse(n);
        return 0;
    }
    emit(json{{"n", n}, {"covers", covers_json(n, exec)}});
    return 0;
}

int run_closure(const std::string& input) {
    auto p = parse_json(input).get<bnil::OrientedLinkPattern>();
    std::vector<bnil::OrientedLinkPattern> cl = bnil::closure_set(p);
    emit(json{{"pattern", p}, {"count", cl.size()}, {"closure", cl}});
    return 0;
}

int run_leq(const std::string& first, const std::string& second) {
    require_one_stdin({first, second});
    auto a = parse_json(first).get<bnil::OrientedLinkPattern>();
    auto b = parse_json(second).get<bnil::OrientedLinkPattern>();
    emit(json{{"leq", bnil::leq_deg(a, b)}});
    return 0;
}

int run_melnikov_rank_matrix(const std::string& input) {
    auto s = parse_json(input).get<bnil::Involution>();
    emit(json(bnil::rank_matrix(s.matrix())));
    return 0;
}

int run_melnikov_leq(const std::string& first, const std::string& second) {
    require_one_stdin({first, second});
    auto tau = parse_json(first).get<bnil::Involution>();
    auto sigma = parse_json(second).get<bnil::Involution>();
    emit(json{{"leq", bnil::melnikov_leq(tau, sigma)}});
    return 0;
}

int run_rep_hom_dim(const std::string& first, const std::string& second) {
    require_one_stdin({first, second});
    auto a = parse_json(first).get<bnil::Mat<bnil::Rational>>();
    auto b = parse_json(second).get<bnil::Mat<bnil::Rational>>();
    bnil::BoundQuiverRep x = bnil::rep_of_matrix(a, flag_dims(a.rows()));
    bnil::BoundQuiverRep y = bnil::rep_of_matrix(b, flag_dims(b.rows()));
    if (x.vertices() != y.vertices())
        throw bnil::Error("dimension_mismatch",
                          "hom-dim needs two matrices of the same size");
    emit(json{{"hom_dim", bnil::hom_dim(x, y)}});
    return 0;
}

int run_rep_decompose(const std::string& input) {
    auto a = parse_json(input).get<bnil::Mat<bnil::Rational>>();
    bnil::BoundQuiverRep x = bnil::rep_of_matrix(a, flag_dims(a.rows()));
    emit(json(bnil::krull_schmidt(x)));
    return 0;
}

int run_nf_check(const std::string& input) {
    auto a = parse_json(input).get<bnil::Mat<bnil::Rational>>();
    emit(json(bnil::genericity(a)));
    return 0;
}

int run_nf_compute(const std::string& input) {
    auto a = parse_json(input).get<bnil::Mat<bnil::Rational>>();
    emit(json(bnil::normal_form(a)));
    return 0;
}

int run_nf_semiinv(const std::string& input, const std::string& datum_path) {
    require_one_stdin({input, datum_path});
    auto a = parse_json(input).get<bnil::Mat<bnil::Rational>>();
    auto p = parse_json(datum_path).get<bnil::SemiinvariantDatum>();
    bnil::Rational value = bnil::semiinvariant(a, p);
    bnil::WeightVector w = bnil::weight(p, a.rows());
    emit(json{{"value", value.str()}, {"weight", w.c}});
    return 0;
}

int run_oracle_census(int n, int q, bool full, bnil::Exec exec) {
    bnil::OrbitCensus c = bnil::census(n, q, exec);
    if (full) {
        emit(json(c));
    } else {
        emit(json{{"n", c.n}, {"q", c.q}, {"orbit_count", c.orbit_count}});
    }
    return 0;
}

void emit_error(const std::string& code, const std::string& message) {
    json err = {{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borel orbits of 2-nilpotent matrices: classification by "
                 "oriented link patterns, degeneration order, quiver-theoretic "
                 "oracles, generic normal forms, and determinantal "
                 "semiinvariants."};
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "run parallel kernels single-threaded");

    // classify
    std::string cl_input = "-";
    std::vector<int> cl_blocks;
    bool cl_profile = false;
    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "matrix JSON -> orbit representative as a link pattern");
    cmd_classify->add_option("input", cl_input, "matrix JSON file, or - for stdin");
    cmd_classify
        ->add_option("--parabolic", cl_blocks,
                     "block sizes b1,b2,... for the parabolic refinement")
        ->delimiter(',');
    cmd_classify->add_flag("--profile", cl_profile,
                           "include the full intersection-dimension profile");

    // enumerate
    int en_n = 0;
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "list all link patterns on n vertices");
    cmd_enumerate->add_option("--n", en_n, "number of vertices")->required();

    // poset
    int po_n = 0;
    bool po_dot = false;
    std::string po_format = "json";
    CLI::App* cmd_poset = app.add_subcommand(
        "poset", "degeneration order on all patterns: nodes plus cover edges");
    cmd_poset->add_option("--n", po_n, "number of vertices")->required();
    cmd_poset->add_flag("--dot", po_dot, "emit the Hasse diagram as DOT");
    cmd_poset->add_option("--format", po_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // covers
    int co_n = 0;
    std::string co_format = "json";
    CLI::App* cmd_covers =
        app.add_subcommand("covers", "cover relations of the degeneration order");
    cmd_covers->add_option("--n", co_n, "number of vertices")->required();
    cmd_covers->add_option("--format", co_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // closure
    std::string clo_input = "-";
    CLI::App* cmd_closure = app.add_subcommand(
        "closure", "pattern JSON -> all patterns in its orbit closure");
    cmd_closure->add_option("input", clo_input, "pattern JSON file, or - for stdin");

    // leq
    std::string leq_first, leq_second;
    CLI::App* cmd_leq = app.add_subcommand(
        "leq", "is the second pattern's orbit in the closure of the first's?");
    cmd_leq->add_option("first", leq_first, "pattern JSON file, or -")->required();
    cmd_leq->add_option("second", leq_second, "pattern JSON file, or -")->required();

    // melnikov
    CLI::App* cmd_mel = app.add_subcommand(
        "melnikov", "rank-matrix order on strictly upper involution matrices");
    cmd_mel->require_subcommand(1);
    std::string mr_input = "-";
    CLI::App* cmd_mel_rank = cmd_mel->add_subcommand(
        "rank-matrix", "involution JSON {n, cycles} -> rank matrix of its 0/1 matrix");
    cmd_mel_rank->add_option("input", mr_input, "involution JSON file, or -");
    std::string ml_first, ml_second;
    CLI::App* cmd_mel_leq = cmd_mel->add_subcommand(
        "leq", "is the first involution's orbit in the closure of the second's?");
    cmd_mel_leq->add_option("first", ml_first, "involution JSON file, or -")->required();
    cmd_mel_leq->add_option("second", ml_second, "involution JSON file, or -")->required();

    // rep
    CLI::App* cmd_rep = app.add_subcommand(
        "rep", "bound-quiver oracle over the complete-flag dimension vector");
    cmd_rep->require_subcommand(1);
    std::string rh_first, rh_second;
    CLI::App* cmd_rep_hom = cmd_rep->add_subcommand(
        "hom-dim", "dimension of the homomorphism space between two matrices' reps");
    cmd_rep_hom->add_option("first", rh_first, "matrix JSON file, or -")->required();
    cmd_rep_hom->add_option("second", rh_second, "matrix JSON file, or -")->required();
    std::string rd_input = "-";
    CLI::App* cmd_rep_dec = cmd_rep->add_subcommand(
        "decompose", "indecomposable multiplicities of a matrix's rep");
    cmd_rep_dec->add_option("input", rd_input, "matrix JSON file, or -");

    // nf
    CLI::App* cmd_nf = app.add_subcommand(
        "nf", "generic normal form under the Borel action, and semiinvariants");
    cmd_nf->require_subcommand(1);
    std::string nc_input = "-";
    CLI::App* cmd_nf_check = cmd_nf->add_subcommand(
        "check", "corner-minor genericity report for a nilpotent matrix");
    cmd_nf_check->add_option("input", nc_input, "matrix JSON file, or -");
    std::string np_input = "-";
    CLI::App* cmd_nf_compute = cmd_nf->add_subcommand(
        "compute", "normal form H and a conjugator g with H = g A g^-1");
    cmd_nf_compute->add_option("input", np_input, "matrix JSON file, or -");
    std::string ns_input = "-";
    std::string ns_datum;
    CLI::App* cmd_nf_semiinv = cmd_nf->add_subcommand(
        "semiinv", "evaluate a determinantal semiinvariant and its weight");
    cmd_nf_semiinv->add_option("input", ns_input, "matrix JSON file, or -");
    cmd_nf_semiinv
        ->add_option("--datum", ns_datum,
                     "datum JSON {a, b, P} file, or - for stdin")
        ->required();

    // oracle
    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle", "brute-force finite-field checks of the combinatorics");
    cmd_oracle->require_subcommand(1);
    int oc_n = 0, oc_q = 2;
    bool oc_full = false;
    CLI::App* cmd_oracle_census = cmd_oracle->add_subcommand(
        "census", "enumerate all Borel orbits on square-zero matrices over F_q");
    cmd_oracle_census->add_option("--n", oc_n, "matrix size")->required();
    cmd_oracle_census->add_option("--q", oc_q, "field size (2 or 3)");
    cmd_oracle_census->add_flag("--json", oc_full,
                                "include every orbit's representative and pattern");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run '" << (argv && argv[0] ? argv[0] : "bnil")
                  << " --help' for usage\n";
        return 2;
    }

    bnil::Exec exec = serial ? bnil::Exec::serial : bnil::Exec::parallel;
    std::string poset_format = po_dot ? "dot" : po_format;

    try {
        if (app.got_subcommand(cmd_classify))
            return run_classify(cl_input, cl_blocks, cl_profile);
        if (app.got_subcommand(cmd_enumerate)) return run_enumerate(en_n);
        if (app.got_subcommand(cmd_poset)) return run_poset(po_n, poset_format, exec);
        if (app.got_subcommand(cmd_covers)) return run_covers(co_n, co_format, exec);
        if (app.got_subcommand(cmd_closure)) return run_closure(clo_input);
        if (app.got_subcommand(cmd_leq)) return run_leq(leq_first, leq_second);
        if (app.got_subcommand(cmd_mel)) {
            if (cmd_mel->got_subcommand(cmd_mel_rank))
                return run_melnikov_rank_matrix(mr_input);
            if (cmd_mel->got_subcommand(cmd_mel_leq))
                return run_melnikov_leq(ml_first, ml_second);
        }
        if (app.got_subcommand(cmd_rep)) {
            if (cmd_rep->got_subcommand(cmd_rep_hom))
                return run_rep_hom_dim(rh_first, rh_second);
            if (cmd_rep->got_subcommand(cmd_rep_dec))
                return run_rep_decompose(rd_input);
        }
        if (app.got_subcommand(cmd_nf)) {
            if (cmd_nf->got_subcommand(cmd_nf_check)) return run_nf_check(nc_input);
            if (cmd_nf->got_subcommand(cmd_nf_compute)) return run_nf_compute(np_input);
            if (cmd_nf->got_subcommand(cmd_nf_semiinv))
                return run_nf_semiinv(ns_input, ns_datum);
        }
        if (app.got_subcommand(cmd_oracle)) {
            if (cmd_oracle->got_subcommand(cmd_oracle_census))
                return run_oracle_census(oc_n, oc_q, oc_full, exec);
        }
    } catch (const bnil::Error& e) {
        emit_error(e.code(), e.what());
        return 1;
    } catch (const json::exception& e) {
        emit_error("bad_json", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal_error", e.what());
        return 1;
    }

    std::cerr << "no subcommand dispatched\n";
    return 2;
}
