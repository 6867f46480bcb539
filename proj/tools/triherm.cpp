// Command-line front end for the exact models of the twisted 2x2x2 space
// over a cubic algebra: classification with witnesses, the group action,
// the relative invariant, exhaustive finite-field censuses and orbits,
// integral box histograms, Dedekind zeta numerics, and symbolic pole tables.
//
// Exit codes: 64 usage error, 65 malformed or out-of-contract input data,
// 70 broken internal invariant.  `classify` exits with the stratum index
// (0 semistable, 1/2 the two degenerate classes, 3 zero).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triherm/boxcount.hpp"
#include "triherm/finite_model.hpp"
#include "triherm/invariant.hpp"
#include "triherm/json_io.hpp"
#include "triherm/principal.hpp"
#include "triherm/selftest.hpp"
#include "triherm/strata.hpp"
#include "triherm/zeta.hpp"

namespace {

using triherm::jsonio::Json;

int env_jobs() {
    const char* e = std::getenv("TRIHERM_JOBS");
    if (!e) return 1;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    return (end && *end == '\0' && v >= 1) ? static_cast<int>(v) : 1;
}

// fixed-precision double formatting so output is identical across runs
std::string num12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::int64_t parse_int64(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw triherm::DataError(std::string(what) + " must be an integer: " + s);
    }
}

triherm::IntegerCubic parse_integer_cubic(const std::string& f_csv) {
    auto parts = triherm::jsonio::split_csv(f_csv);
    if (parts.size() != 3)
        throw triherm::DataError("cubic needs exactly three coefficients: " +
                                 f_csv);
    return {parse_int64(parts[0], "cubic coefficient"),
            parse_int64(parts[1], "cubic coefficient"),
            parse_int64(parts[2], "cubic coefficient")};
}

int run_classify(const std::string& f_csv, const std::string& point_json) {
    auto A = triherm::jsonio::rational_algebra(f_csv);
    auto x = triherm::jsonio::point_from_json(
        A, triherm::jsonio::parse_json(point_json));
    auto rep = triherm::classify(x);

    Json out = Json::object();
    out["label"] = triherm::stratum_name(rep.label);
    out["witness"] = triherm::jsonio::group_to_json<triherm::Rat>(rep.witness);
    out["normalized"] =
        triherm::jsonio::point_to_json<triherm::Rat>(rep.normalized);
    out["transcript"] = rep.transcript;
    std::cout << out.dump(2) << "\n";
    return static_cast<int>(rep.label);
}

int run_act(const std::string& f_csv, const std::string& group_json,
            const std::string& point_json) {
    auto A = triherm::jsonio::rational_algebra(f_csv);
    auto g = triherm::jsonio::group_from_json(
        A, triherm::jsonio::parse_json(group_json));
    auto x = triherm::jsonio::point_from_json(
        A, triherm::jsonio::parse_json(point_json));
    if (g.g2.det().norm().is_zero() || g.t1.is_zero())
        throw triherm::NonUnit();
    std::cout << triherm::jsonio::point_to_json<triherm::Rat>(
                     triherm::act(g, x))
                     .dump(2)
              << "\n";
    return 0;
}

int run_invariant(const std::string& f_csv, const std::string& point_json) {
    auto A = triherm::jsonio::rational_algebra(f_csv);
    auto x = triherm::jsonio::point_from_json(
        A, triherm::jsonio::parse_json(point_json));
    auto f = triherm::quad_form(x);

    Json out = Json::object();
    out["a"] = triherm::jsonio::res_to_json<triherm::Rat>(f.a);
    out["b"] = triherm::jsonio::res_to_json<triherm::Rat>(f.b);
    out["c"] = triherm::jsonio::res_to_json<triherm::Rat>(f.c);
    out["delta"] = triherm::discriminant(x).str();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_census(std::uint64_t q, const std::string& f_csv, int jobs) {
    auto A = triherm::jsonio::prime_algebra(q, f_csv);
    auto rec = triherm::census(A, jobs);
    std::cout << triherm::CensusRecord::csv_header() << "\n"
              << rec.csv_row() << "\n";
    return 0;
}

int run_orbit(std::uint64_t q, const std::string& f_csv,
              const std::string& point_json, std::uint64_t cap) {
    auto A = triherm::jsonio::prime_algebra(q, f_csv);
    auto x = triherm::jsonio::point_from_json(
        A, triherm::jsonio::parse_json(point_json));
    Json out = Json::object();
    out["size"] = triherm::orbit_bfs(x, cap);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_box_count(const std::string& f_csv, int height, int jobs,
                  const std::string& strata_out) {
    auto A = triherm::jsonio::rational_algebra(f_csv);
    auto res = triherm::box_count(A, height, jobs);

    std::cout << "delta,count\n";
    for (const auto& [delta, count] : res.delta_histogram)
        std::cout << delta.str() << "," << count << "\n";

    if (!strata_out.empty()) {
        std::ofstream os(strata_out);
        if (!os) throw triherm::DataError("cannot open " + strata_out);
        os << "label,count\n";
        for (int s = 0; s < 4; ++s)
            os << triherm::stratum_name(static_cast<triherm::Stratum>(s))
               << "," << res.stratum_counts[s] << "\n";
    }
    return 0;
}

int run_dedekind(const std::string& f_csv, double s, std::uint64_t bound) {
    auto f = parse_integer_cubic(f_csv);
    auto est = triherm::dedekind_zeta(s, f, bound);
    // assembled by hand: numbers stay numbers but with pinned formatting
    std::cout << "{\n"
              << "  \"s\": " << num12(s) << ",\n"
              << "  \"prime_bound\": " << bound << ",\n"
              << "  \"value\": " << num12(est.dirichlet) << ",\n"
              << "  \"error\": " << num12(est.tail_bound) << ",\n"
              << "  \"euler_product\": " << num12(est.euler) << "\n"
              << "}\n";
    return 0;
}

triherm::DeltaFlags parse_flags(const std::string& flags_csv) {
    triherm::DeltaFlags flags;
    if (flags_csv.empty()) return flags;
    for (const auto& tok : triherm::jsonio::split_csv(flags_csv)) {
        if (tok == "d#")
            flags.d_sharp = true;
        else if (tok == "d1")
            flags.d1 = true;
        else if (tok == "d2")
            flags.d2 = true;
        else
            throw triherm::DataError("unknown selector \"" + tok +
                                     "\" (expected d#, d1, d2)");
    }
    return flags;
}

// values that parse as rationals become constants; anything else renames
// the symbol
std::map<std::string, triherm::SymPoly> parse_inputs(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw triherm::DataError("cannot open " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    Json j = triherm::jsonio::parse_json(buf.str());
    if (!j.is_object())
        throw triherm::DataError("inputs file must be a JSON object");

    std::map<std::string, triherm::SymPoly> table;
    for (const auto& [key, val] : j.items()) {
        std::string v = triherm::jsonio::as_string(val, "input value");
        try {
            table[key] = triherm::SymPoly(triherm::Rat::parse(v));
        } catch (const triherm::DataError&) {
            table[key] = triherm::SymPoly::symbol(v);
        }
    }
    return table;
}

int run_principal_part(const std::string& flags_csv,
                       const std::string& inputs_path) {
    auto flags = parse_flags(flags_csv);
    auto table = triherm::assemble_principal_part(
        triherm::boundary_lambda_expansion(flags));
    if (!inputs_path.empty())
        table = table.substituted(parse_inputs(inputs_path));

    Json out = Json::object();
    for (const auto& [pole, orders] : table.table()) {
        Json arr = Json::array();
        for (const auto& [order, coeff] : orders)
            arr.push_back(Json{{"order", order}, {"coefficient", coeff.str()}});
        out[std::to_string(pole)] = arr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact models of the twisted 2x2x2 space over a cubic algebra"};
    app.require_subcommand(1);

    std::string f_rat = "-1,-1,0";  // t^3 - t - 1 unless told otherwise
    const char* f_help = "monic cubic t^3 + c2 t^2 + c1 t + c0 as \"c0,c1,c2\"";

    // classify
    auto* c_classify = app.add_subcommand(
        "classify", "stratify a rational point; exit code is the stratum");
    std::string cl_f = f_rat, cl_point;
    c_classify->add_option("--f", cl_f, f_help)->capture_default_str();
    c_classify->add_option("--point", cl_point, "point as JSON")->required();

    // act
    auto* c_act =
        app.add_subcommand("act", "apply a group element to a point");
    std::string ac_f = f_rat, ac_g, ac_point;
    c_act->add_option("--f", ac_f, f_help)->capture_default_str();
    c_act->add_option("--g", ac_g, "group element as JSON")->required();
    c_act->add_option("--point", ac_point, "point as JSON")->required();

    // invariant
    auto* c_inv = app.add_subcommand(
        "invariant", "attached binary quadratic form and its discriminant");
    std::string in_f = f_rat, in_point;
    c_inv->add_option("--f", in_f, f_help)->capture_default_str();
    c_inv->add_option("--point", in_point, "point as JSON")->required();

    // census
    auto* c_census = app.add_subcommand(
        "census", "classify all q^8 points over F_q and print the tallies");
    std::uint64_t ce_q = 3;
    std::string ce_f = f_rat;
    int ce_jobs = env_jobs();
    c_census->add_option("--q", ce_q, "odd prime modulus")->required();
    c_census->add_option("--f", ce_f, f_help)->capture_default_str();
    c_census->add_option("--jobs", ce_jobs, "worker threads");

    // orbit
    auto* c_orbit = app.add_subcommand(
        "orbit", "exact orbit size of a point over F_q by closure search");
    std::uint64_t or_q = 3, or_cap = std::uint64_t{1} << 26;
    std::string or_f = f_rat, or_point;
    c_orbit->add_option("--q", or_q, "odd prime modulus")->required();
    c_orbit->add_option("--f", or_f, f_help)->capture_default_str();
    c_orbit->add_option("--point", or_point, "point as JSON")->required();
    c_orbit->add_option("--cap", or_cap, "refuse when q^8 exceeds this");

    // box-count
    auto* c_box = app.add_subcommand(
        "box-count",
        "histogram of the invariant over integer points with |coord| <= H");
    std::string bx_f = f_rat, bx_strata;
    int bx_h = 1, bx_jobs = env_jobs();
    c_box->add_option("--f", bx_f, f_help)->capture_default_str();
    c_box->add_option("--height", bx_h, "box radius H")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_box->add_option("--jobs", bx_jobs, "worker threads");
    c_box->add_option("--strata-out", bx_strata,
                      "also write a label,count CSV of the degenerate strata");

    // dedekind
    auto* c_zeta = app.add_subcommand(
        "dedekind",
        "zeta value of the cubic field by Euler product and Dirichlet series");
    std::string ze_f = f_rat;
    double ze_s = 2.0;
    std::uint64_t ze_bound = 1000000;
    c_zeta->add_option("--f", ze_f, f_help)->capture_default_str();
    c_zeta->add_option("--s", ze_s, "evaluation point, s > 1")->required();
    c_zeta->add_option("--prime-bound", ze_bound, "truncation bound")
        ->capture_default_str();

    // principal-part
    auto* c_pp = app.add_subcommand(
        "principal-part",
        "symbolic pole table of the boundary contributions");
    std::string pp_flags, pp_inputs;
    c_pp->add_option("--flags", pp_flags,
                     "comma-separated selectors from {d#, d1, d2}");
    c_pp->add_option("--inputs", pp_inputs,
                     "JSON file of symbol substitutions (value or new name)");

    // selftest
    auto* c_self = app.add_subcommand(
        "selftest", "run the cross-module consistency suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (c_classify->parsed()) return run_classify(cl_f, cl_point);
        if (c_act->parsed()) return run_act(ac_f, ac_g, ac_point);
        if (c_inv->parsed()) return run_invariant(in_f, in_point);
        if (c_census->parsed()) return run_census(ce_q, ce_f, ce_jobs);
        if (c_orbit->parsed()) return run_orbit(or_q, or_f, or_point, or_cap);
        if (c_box->parsed()) return run_box_count(bx_f, bx_h, bx_jobs, bx_strata);
        if (c_zeta->parsed()) return run_dedekind(ze_f, ze_s, ze_bound);
        if (c_pp->parsed()) return run_principal_part(pp_flags, pp_inputs);
        if (c_self->parsed()) {
            int failures = triherm::run_selftest(std::cout);
            std::cout << (failures == 0 ? "selftest passed"
                                        : "selftest FAILED")
                      << "\n";
            return failures == 0 ? 0 : 70;
        }
    } catch (const triherm::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const triherm::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}
