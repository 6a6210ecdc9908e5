// Command-line surface: emit character polynomials, moments, invariant
// dimension sequences, coefficient tables, and run the verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include "charpoly/characters.hpp"
#include "charpoly/charpolys.hpp"
#include "charpoly/errors.hpp"
#include "charpoly/genfun.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/moments.hpp"
#include "charpoly/table.hpp"
#include "charpoly/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace charpoly;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

Partition parse_shape(const std::string& s) {
    try {
        return parse_partition(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad partition '" + s + "': " + e.what());
    }
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like 1..8");
    try {
        int a = std::stoi(s.substr(0, dots));
        int b = std::stoi(s.substr(dots + 2));
        if (a < 0 || b < a) throw UsageError("empty or negative range: " + s);
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw UsageError("range must look like 1..8");
    }
}

std::string binomial_text(const BinomialExpansion& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [alpha, c] : e.coeffs()) {
        Rational mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) out += '-';
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        if (!(mag == Rational(1))) {
            out += mag.str();
            out += '*';
        }
        out += "binom(" + format_partition(alpha) + ")";
    }
    return out;
}

int run_charpoly_cmd(const std::string& kind, const std::string& shape_str,
                     std::optional<int> degree, const std::string& basis,
                     const std::string& format, const std::string& out_path) {
    Polynomial p;
    if (kind == "weyl" || kind == "specht") {
        if (shape_str.empty()) throw UsageError(kind + " requires --shape");
        Partition shape = parse_shape(shape_str);
        p = (kind == "weyl") ? weyl_poly(shape) : specht_poly(shape);
    } else if (kind == "sym" || kind == "alt") {
        if (!degree) throw UsageError(kind + " requires --degree");
        p = (kind == "sym") ? h_poly(*degree) : e_poly(*degree);
    } else {
        throw UsageError("unknown polynomial kind: " + kind);
    }

    std::string text;
    if (basis == "binomial") {
        BinomialExpansion e = to_binomial_basis(p);
        text = (format == "json") ? binomial_to_json(e).dump(2) + "\n" : binomial_text(e) + "\n";
    } else {
        text = (format == "json") ? polynomial_to_json(p).dump(2) + "\n" : p.str() + "\n";
    }
    write_output(text, out_path);
    return kExitOk;
}

int run_table_cmd(int max, const std::string& format, const std::string& out_path, int jobs) {
    CoeffTable t = build_restriction_table(max, jobs);
    std::string text;
    if (format == "json")
        text = table_to_json(t).dump(2) + "\n";
    else if (format == "csv")
        text = table_to_csv(t);
    else
        text = table_to_text(t);
    write_output(text, out_path);
    return kExitOk;
}

int run_moments_cmd(const std::string& weyl_s, const std::string& specht_s,
                    std::optional<int> sym_d, std::optional<int> alt_d,
                    const std::string& poly_file, std::optional<int> n, bool stable,
                    const std::string& format, const std::string& out_path) {
    int sources = int(!weyl_s.empty()) + int(!specht_s.empty()) + int(sym_d.has_value()) +
                  int(alt_d.has_value()) + int(!poly_file.empty());
    if (sources != 1)
        throw UsageError("specify exactly one of --shape-weyl, --shape-specht, --shape-sym, "
                         "--shape-alt, --poly-file");
    if (int(n.has_value()) + int(stable) != 1) throw UsageError("specify exactly one of --n, --stable");

    Polynomial p;
    if (!weyl_s.empty())
        p = weyl_poly(parse_shape(weyl_s));
    else if (!specht_s.empty())
        p = specht_poly(parse_shape(specht_s));
    else if (sym_d)
        p = h_poly(*sym_d);
    else if (alt_d)
        p = e_poly(*alt_d);
    else {
        std::ifstream in(poly_file);
        if (!in) throw UsageError("cannot open polynomial file: " + poly_file);
        nlohmann::json j;
        try {
            in >> j;
            p = polynomial_from_json(j);
        } catch (const std::exception& e) {
            throw UsageError("bad polynomial file: " + std::string(e.what()));
        }
    }

    Rational value = stable ? stable_moment(p) : moment_n(p, *n);
    std::string text = (format == "json")
                           ? nlohmann::json{{"value", value.str()}}.dump(2) + "\n"
                           : value.str() + "\n";
    write_output(text, out_path);
    return kExitOk;
}

int run_invariants_cmd(const std::string& shape_s, const std::string& range_s,
                       const std::string& format, const std::string& out_path) {
    Partition shape = parse_shape(shape_s);
    auto [lo, hi] = parse_range(range_s);
    std::vector<std::string> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(invariant_dim(shape, n).str());
    std::string text;
    if (format == "json") {
        text = nlohmann::json(dims).dump() + "\n";
    } else {
        for (std::size_t i = 0; i < dims.size(); ++i) text += (i ? " " : "") + dims[i];
        text += "\n";
    }
    write_output(text, out_path);
    return kExitOk;
}

int run_kronecker_cmd(const std::string& l_s, const std::string& m_s, const std::string& n_s,
                      const std::string& format, const std::string& out_path) {
    Partition l = parse_shape(l_s), m = parse_shape(m_s), nu = parse_shape(n_s);
    if (l.size() != m.size() || m.size() != nu.size())
        throw UsageError("kronecker requires three partitions of the same integer");
    BigInt g = kronecker_stable(l, m, nu);
    std::string text = (format == "json") ? nlohmann::json{{"value", g.str()}}.dump(2) + "\n"
                                          : g.str() + "\n";
    write_output(text, out_path);
    return kExitOk;
}

void print_report(const Report& rep) {
    for (const auto& c : rep.checks) {
        if (c.pass()) {
            std::cout << "[PASS] " << c.name << " (" << c.checked << " checks)\n";
        } else {
            std::cout << "[FAIL] " << c.name << ": " << c.failed << "/" << c.checked
                      << " mismatches\n";
            for (const auto& f : c.failures) std::cout << "       " << f << "\n";
        }
    }
}

int run_verify_cmd(const std::string& suite, const std::string& identity, int max, int jobs,
                   const GenfunBounds& bounds) {
    Report rep;
    if (suite == "all")
        rep = verify_all(bounds, max, jobs);
    else if (suite == "table1")
        rep = verify_table1();
    else if (suite == "matrix")
        rep = verify_matrix(max, jobs);
    else if (suite == "genfun")
        rep = identity.empty() ? verify_genfun_all(bounds, jobs)
                               : verify_genfun(parse_genfun_identity(identity), bounds, jobs);
    else if (suite == "oracle")
        rep = verify_oracle(jobs);
    else if (suite == "duality")
        rep = verify_duality(6);
    else if (suite == "criteria")
        rep = verify_criteria();
    else
        throw UsageError("unknown suite: " + suite);
    print_report(rep);
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character polynomials of symmetric-group representation families"};
    app.require_subcommand(1);

    std::string cache_dir;
    if (const char* env = std::getenv("CHARPOLY_CACHE_DIR")) cache_dir = env;
    app.add_option("--cache-dir", cache_dir,
                   "Directory for persisted character tables (optimization only)");

    // charpoly
    auto* cp = app.add_subcommand("charpoly", "Emit a character polynomial");
    std::string cp_kind, cp_shape, cp_basis = "monomial", cp_format = "text", cp_out;
    std::optional<int> cp_degree;
    cp->add_option("kind", cp_kind, "weyl|specht|sym|alt")->required();
    cp->add_option("--shape", cp_shape, "partition, e.g. 2,1 (weyl/specht)");
    cp->add_option("--degree", cp_degree, "degree (sym/alt)");
    cp->add_option("--basis", cp_basis, "monomial|binomial")
        ->check(CLI::IsMember({"monomial", "binomial"}));
    cp->add_option("--format", cp_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cp->add_option("--out", cp_out, "output path (default stdout)");

    // restriction-table
    auto* rt = app.add_subcommand("restriction-table", "Stable restriction coefficient table");
    int rt_max = 0, rt_jobs = 1;
    std::string rt_format = "text", rt_out;
    rt->add_option("--max", rt_max, "largest partition size")->required()->check(CLI::Range(0, 7));
    rt->add_option("--format", rt_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    rt->add_option("--out", rt_out, "output path (default stdout)");
    rt->add_option("--jobs", rt_jobs, "parallel table cells")->check(CLI::Range(1, 64));

    // moments
    auto* mo = app.add_subcommand("moments", "Moment of a character polynomial");
    std::string mo_weyl, mo_specht, mo_file, mo_format = "text", mo_out;
    std::optional<int> mo_sym, mo_alt, mo_n;
    bool mo_stable = false;
    mo->add_option("--shape-weyl", mo_weyl, "Weyl shape");
    mo->add_option("--shape-specht", mo_specht, "Specht shape");
    mo->add_option("--shape-sym", mo_sym, "symmetric power degree");
    mo->add_option("--shape-alt", mo_alt, "exterior power degree");
    mo->add_option("--poly-file", mo_file, "polynomial JSON file");
    mo->add_option("--n", mo_n, "moment at S_n");
    mo->add_flag("--stable", mo_stable, "stable moment");
    mo->add_option("--format", mo_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    mo->add_option("--out", mo_out, "output path (default stdout)");

    // invariants
    auto* iv = app.add_subcommand("invariants", "Invariant dimension sequence");
    std::string iv_shape, iv_range, iv_format = "text", iv_out;
    iv->add_option("--shape", iv_shape, "partition")->required();
    iv->add_option("--n-range", iv_range, "range a..b")->required();
    iv->add_option("--format", iv_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    iv->add_option("--out", iv_out, "output path (default stdout)");

    // kronecker
    auto* kr = app.add_subcommand("kronecker", "Stable Kronecker coefficient");
    std::string kr_l, kr_m, kr_n, kr_format = "text", kr_out;
    kr->add_option("--lambda", kr_l)->required();
    kr->add_option("--mu", kr_m)->required();
    kr->add_option("--nu", kr_n)->required();
    kr->add_option("--format", kr_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    kr->add_option("--out", kr_out, "output path (default stdout)");

    // verify
    auto* vf = app.add_subcommand("verify", "Run a verification suite");
    std::string vf_suite = "all", vf_identity;
    int vf_max = 5, vf_jobs = 1;
    GenfunBounds vf_bounds;
    vf->add_option("--suite", vf_suite, "all|table1|matrix|genfun|oracle|duality|criteria")
        ->check(CLI::IsMember({"all", "table1", "matrix", "genfun", "oracle", "duality",
                               "criteria"}));
    vf->add_option("--max", vf_max, "table bound for the matrix suite")->check(CLI::Range(0, 7));
    vf->add_option("--jobs", vf_jobs, "parallel cells")->check(CLI::Range(1, 64));
    vf->add_option("--l", vf_bounds.l, "t-variable count for genfun")->check(CLI::Range(0, 6));
    vf->add_option("--m", vf_bounds.m, "u-variable count for genfun")->check(CLI::Range(0, 6));
    vf->add_option("--max-exponent", vf_bounds.max_exponent, "genfun truncation")
        ->check(CLI::Range(0, 16));
    vf->add_option("--identity", vf_identity,
                   "single genfun identity: binomial_moments|hmomgen|he|hlamu|hlaemu")
        ->check(CLI::IsMember({"binomial_moments", "hmomgen", "he", "hlamu", "hlaemu"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!cache_dir.empty()) CharacterTable::set_cache_dir(cache_dir);
        if (cp->parsed())
            return run_charpoly_cmd(cp_kind, cp_shape, cp_degree, cp_basis, cp_format, cp_out);
        if (rt->parsed()) return run_table_cmd(rt_max, rt_format, rt_out, rt_jobs);
        if (mo->parsed())
            return run_moments_cmd(mo_weyl, mo_specht, mo_sym, mo_alt, mo_file, mo_n, mo_stable,
                                   mo_format, mo_out);
        if (iv->parsed()) return run_invariants_cmd(iv_shape, iv_range, iv_format, iv_out);
        if (kr->parsed()) return run_kronecker_cmd(kr_l, kr_m, kr_n, kr_format, kr_out);
        if (vf->parsed()) return run_verify_cmd(vf_suite, vf_identity, vf_max, vf_jobs, vf_bounds);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FeasibilityError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
