/*
 * gpc — construct, verify and export quantum Goethals-Preparata codes.
 *
 * Subcommands:
 *   construct  build a code family at a given m and write its JSON manifest
 *   verify     run the six-check distance certification, write a JSON report
 *   table      print code parameters for a list of m values (pure arithmetic)
 *   kl-check   cross-validate the combinatorial distance against the
 *              state-vector Knill-Laflamme oracle on random small instances
 *   export     emit generator/stabilizer matrices as text or GF(4) symbols
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error,
 *             3 search budget exceeded, 4 I/O error.
 */

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpc/oracle.hpp"
#include "gpc/sampling.hpp"
#include "gpc/serialize.hpp"
#include "gpc/unioncode.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_construction_m(int m) {
    if (m % 2 != 0) throw UsageError("m must be even (got " + std::to_string(m) + ")");
    if (m < 6 || m > 12)
        throw UsageError("m must lie in 6..12 (got " + std::to_string(m) + ")");
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path + " for writing");
    os << body;
    os.flush();
    if (!os) throw IoError("short write to " + path);
}

/* ---- construct ------------------------------------------------------- */

int cmd_construct(const std::string& family, int m, std::string out) {
    require_construction_m(m);
    nlohmann::json manifest;
    std::string summary;
    if (family == "goethals" || family == "preparata") {
        gpc::CosetUnionCode u = family == "goethals" ? gpc::goethals(m) : gpc::preparata(m);
        manifest = gpc::coset_union_to_json(u, m);
        summary = family + " m=" + std::to_string(m) + ": union of " +
                  std::to_string(u.coset_count()) + " cosets of [" + std::to_string(u.base.n) +
                  ", " + std::to_string(u.base.k) + "], log2 size " +
                  std::to_string(int(u.log2_size() + 0.5));
    } else if (family == "stabilizer" || family == "gp-quantum") {
        gpc::GpQuantumCode q = gpc::build_gp_code(m);
        const gpc::StabilizerCode& base = q.code.base;
        if (family == "stabilizer") {
            manifest = gpc::stabilizer_to_json(base, "stabilizer", m);
            summary = "stabilizer m=" + std::to_string(m) + ": [[" + std::to_string(base.n) +
                      ", " + std::to_string(base.k) + "]] with " +
                      std::to_string(base.stab.rank()) + " generators";
        } else {
            manifest = gpc::gp_quantum_to_json(q);
            summary = "gp-quantum m=" + std::to_string(m) + ": ((" + std::to_string(base.n) +
                      ", 2^" + std::to_string(int(q.code.log2_dim() + 0.5)) + ", 8)), " +
                      std::to_string(q.code.K()) + " translates of [[" + std::to_string(base.n) +
                      ", " + std::to_string(base.k) + "]]";
        }
    } else {
        throw UsageError("unknown family: " + family);
    }
    if (out.empty()) out = family + "-m" + std::to_string(m) + ".json";
    write_text_file(out, manifest.dump(2) + "\n");
    std::cout << summary << " -> " << out << "\n";
    return 0;
}

/* ---- verify ----------------------------------------------------------- */

/*
 * Rebuild verification inputs from a manifest instead of from scratch, so
 * a tampered manifest fails the checks rather than being silently replaced
 * by the canonical construction. Field and idempotent data are canonical
 * for the manifest's m; base codes and representatives come from the file,
 * and the manifest's stabilizer must match the one their enlargement yields.
 */
gpc::GpVerifyInputs inputs_from_manifest(const nlohmann::json& j, int& m_out) {
    gpc::require_schema(j, "gp-quantum");
    int m = j.at("m").get<int>();
    require_construction_m(m);
    m_out = m;
    gpc::UnionStabilizerCode u = gpc::gp_union_from_json(j);
    gpc::GpVerifyInputs in = gpc::gp_verify_inputs(m);
    std::size_t n = std::size_t(1) << m;
    const nlohmann::json& cls = j.at("classical");
    in.cg = gpc::make_linear_code(gpc::matrix_from_hex(cls.at("generator_g"), n), "goethals-base");
    in.cp = gpc::make_linear_code(gpc::matrix_from_hex(cls.at("generator_p"), n), "preparata-base");
    in.pair.reps.clear();
    for (const auto& r : cls.at("reps"))
        in.pair.reps.push_back(gpc::BitVector::from_hex(n, r.get<std::string>()));
    in.d_complement = gpc::complement_basis(in.cg, in.cp);
    in.a_map = gpc::fixed_point_free(in.d_complement.rows());
    gpc::StabilizerCode rebuilt =
        gpc::steane_enlarge(in.cg, in.cp, in.d_complement, in.a_map, "rebuilt");
    if (!gpc::row_space_contains(rebuilt.stab.gens, u.base.stab.gens) ||
        !gpc::row_space_contains(u.base.stab.gens, rebuilt.stab.gens))
        throw std::runtime_error("stabilizer disagrees with the classical ingredients");
    return in;
}

nlohmann::json report_to_json(const gpc::GpVerifyReport& rep, const gpc::GpVerifyOptions& opt) {
    nlohmann::json checks = nlohmann::json::array();
    for (const gpc::VerifyCheck& c : rep.checks)
        checks.push_back(nlohmann::json{
            {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
    return nlohmann::json{{"schema", 1},
                          {"command", "verify"},
                          {"family", "gp-quantum"},
                          {"m", rep.m},
                          {"radius_g", opt.radius_g},
                          {"radius_p", opt.radius_p},
                          {"radius_span", opt.radius_span},
                          {"budget_log2", opt.budget_log2},
                          {"certified", rep.certified},
                          {"distance", rep.distance},
                          {"checks", checks}};
}

void render_report(std::ostream& os, const gpc::GpVerifyReport& rep) {
    os << "  " << std::left << std::setw(28) << "check" << std::setw(8) << "status"
       << std::setw(10) << "seconds" << "detail\n";
    for (const gpc::VerifyCheck& c : rep.checks) {
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << c.seconds;
        os << "  " << std::left << std::setw(28) << c.name << std::setw(8)
           << (c.pass ? "pass" : "FAIL") << std::setw(10) << secs.str() << c.detail << "\n";
    }
    if (rep.certified)
        os << "certified: minimum distance " << rep.distance << "\n";
    else
        os << "NOT CERTIFIED\n";
}

int cmd_verify(int m, const std::string& in_path, std::size_t radius_g, std::size_t radius_p,
               unsigned workers, unsigned budget, std::string out, const std::string& format) {
    gpc::GpVerifyOptions opt;
    opt.radius_g = radius_g;
    opt.radius_p = radius_p;
    opt.workers = workers;
    opt.budget_log2 = budget;

    gpc::GpVerifyReport rep;
    gpc::VerifyCheck manifest_check;
    bool from_manifest = !in_path.empty();
    if (from_manifest) {
        nlohmann::json j = read_json_file(in_path);
        manifest_check.name = "manifest-structure";
        try {
            int m_manifest = 0;
            gpc::GpVerifyInputs in = inputs_from_manifest(j, m_manifest);
            if (m != 0 && m != m_manifest)
                throw UsageError("manifest is for m=" + std::to_string(m_manifest) +
                                 ", but -m " + std::to_string(m) + " was given");
            manifest_check.pass = true;
            manifest_check.detail = "stabilizer, logicals and translations match the "
                                    "classical ingredients";
            rep = gpc::verify_gp_distance(in, opt);
        } catch (const gpc::BudgetError&) {
            throw;
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            manifest_check.pass = false;
            manifest_check.detail = e.what();
            rep.m = j.contains("m") && j.at("m").is_number_integer() ? j.at("m").get<int>() : 0;
        }
        rep.checks.insert(rep.checks.begin(), manifest_check);
        rep.certified = rep.certified && manifest_check.pass;
        if (!manifest_check.pass) rep.distance = 0;
    } else {
        if (m == 0) throw UsageError("verify needs -m or --in");
        require_construction_m(m);
        rep = gpc::verify_gp_distance(gpc::gp_verify_inputs(m), opt);
    }

    nlohmann::json jrep = report_to_json(rep, opt);
    if (format == "json")
        std::cout << jrep.dump(2) << "\n";
    else
        render_report(std::cout, rep);
    if (out.empty()) out = "verify-gp-quantum-m" + std::to_string(rep.m) + ".json";
    write_text_file(out, jrep.dump(2) + "\n");
    std::cout << "report -> " << out << "\n";
    return rep.certified ? 0 : kExitVerifyFail;
}

/* ---- table ------------------------------------------------------------ */

int cmd_table(std::vector<int> ms, const std::string& format) {
    if (ms.empty()) ms = {6, 8, 10};
    for (int m : ms) {
        if (m % 2 != 0) throw UsageError("m must be even (got " + std::to_string(m) + ")");
        if (m < 6 || m > 62)
            throw UsageError("m must lie in 6..62 (got " + std::to_string(m) + ")");
    }
    struct Row {
        int m;
        long long n, gp_exp, base_k, goethals_exp, bch_k;
    };
    std::vector<Row> rows;
    for (int m : ms) {
        long long n = 1LL << m;
        rows.push_back(Row{m, n, n - 5 * m + 1, n - 7 * m + 3, n - 6 * m + 2, n - 5 * m - 2});
    }
    auto gp_str = [](const Row& r) {
        return "((" + std::to_string(r.n) + ", 2^" + std::to_string(r.gp_exp) + ", 8))";
    };
    auto base_str = [](const Row& r) {
        return "[[" + std::to_string(r.n) + ", " + std::to_string(r.base_k) + ", 8]]";
    };
    auto goethals_str = [](const Row& r) {
        return "((" + std::to_string(r.n) + ", 2^" + std::to_string(r.goethals_exp) + ", 8))";
    };
    auto bch_str = [](const Row& r) {
        return "[[" + std::to_string(r.n) + ", " + std::to_string(r.bch_k) + ", 8]]";
    };
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const Row& r : rows)
            out.push_back(nlohmann::json{{"m", r.m},
                                         {"n", r.n},
                                         {"goethals_preparata", gp_str(r)},
                                         {"log2_dim", r.gp_exp},
                                         {"base_stabilizer", base_str(r)},
                                         {"base_k", r.base_k},
                                         {"goethals_union", goethals_str(r)},
                                         {"enlarged_bch", bch_str(r)}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << std::left << std::setw(4) << "m" << std::setw(7) << "n" << std::setw(24)
              << "Goethals-Preparata" << std::setw(20) << "base stabilizer" << std::setw(22)
              << "Goethals union" << "enlarged BCH\n";
    for (const Row& r : rows)
        std::cout << std::left << std::setw(4) << r.m << std::setw(7) << r.n << std::setw(24)
                  << gp_str(r) << std::setw(20) << base_str(r) << std::setw(22)
                  << goethals_str(r) << bch_str(r) << "\n";
    return 0;
}

/* ---- kl-check ---------------------------------------------------------- */

int cmd_kl_check(std::uint64_t seed, std::size_t count, bool inject_fault,
                 const std::string& out) {
    if (count == 0) {
        std::cout << "warning: zero instances requested, nothing compared\n";
        return 0;
    }
    std::mt19937_64 rng(seed);
    nlohmann::json instances = nlohmann::json::array();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < count; ++i) {
        gpc::UnionStabilizerCode u = gpc::random_union_code(rng);
        gpc::UnionDistanceResult got = gpc::distance_exact_small(u);
        std::vector<gpc::DenseState> basis = gpc::union_codespace(u.base, u.translations);
        int oracle = gpc::knill_laflamme_distance(basis, u.base.n);
        std::size_t claimed = got.distance;
        bool faulted = inject_fault && i == 0;
        if (faulted) claimed += 1;
        bool ok = claimed == std::size_t(oracle);
        mismatches += !ok;
        std::cout << "instance " << i << ": n=" << u.base.n << " k=" << u.base.k
                  << " K=" << u.K() << " combinatorial=" << claimed << " state-vector=" << oracle
                  << (faulted ? " (fault injected)" : "") << (ok ? " ok" : " MISMATCH") << "\n";
        instances.push_back(nlohmann::json{{"n", u.base.n},
                                           {"k", u.base.k},
                                           {"K", u.K()},
                                           {"combinatorial", claimed},
                                           {"state_vector", oracle},
                                           {"fault_injected", faulted},
                                           {"ok", ok}});
    }
    std::cout << "kl-check: " << (count - mismatches) << "/" << count
              << " instances agree (seed " << seed << ")\n";
    if (!out.empty()) {
        nlohmann::json jrep{{"schema", 1},
                            {"command", "kl-check"},
                            {"seed", seed},
                            {"count", count},
                            {"mismatches", mismatches},
                            {"instances", instances}};
        write_text_file(out, jrep.dump(2) + "\n");
        std::cout << "report -> " << out << "\n";
    }
    return mismatches == 0 ? 0 : kExitVerifyFail;
}

/* ---- export ------------------------------------------------------------ */

int cmd_export(const std::string& in_path, const std::string& family, int m,
               const std::string& format, const std::string& out) {
    nlohmann::json j;
    if (!in_path.empty()) {
        j = read_json_file(in_path);
    } else {
        require_construction_m(m);
        if (family == "goethals" || family == "preparata")
            j = gpc::coset_union_to_json(family == "goethals" ? gpc::goethals(m)
                                                              : gpc::preparata(m),
                                         m);
        else if (family == "stabilizer")
            j = gpc::stabilizer_to_json(gpc::build_gp_code(m).code.base, "stabilizer", m);
        else if (family == "gp-quantum")
            j = gpc::gp_quantum_to_json(gpc::build_gp_code(m));
        else
            throw UsageError("unknown family: " + family);
    }
    if (!j.is_object() || !j.contains("family"))
        throw std::runtime_error("manifest: not an object");
    std::string fam = j.at("family").get<std::string>();

    std::ostringstream body;
    if (fam == "goethals" || fam == "preparata") {
        if (format == "gf4")
            throw UsageError("gf4 export needs a stabilizer or gp-quantum manifest");
        gpc::CosetUnionCode u = gpc::coset_union_from_json(j);
        gpc::write_matrix_text(body, u.base.gen);
    } else {
        gpc::StabilizerCode s = fam == "gp-quantum"
                                    ? gpc::gp_union_from_json(j).base
                                    : gpc::stabilizer_from_json(j);
        if (format == "gf4") {
            for (std::size_t i = 0; i < s.stab.rank(); ++i)
                body << gpc::gf4_symbols(s.stab.generator(i)) << "\n";
        } else {
            gpc::write_matrix_text(body, s.stab.gens);
        }
    }
    if (out.empty())
        std::cout << body.str();
    else
        write_text_file(out, body.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Goethals-Preparata code toolkit"};
    app.require_subcommand(1);

    std::string family = "gp-quantum", in_path, out, format = "text";
    int m = 0;
    std::size_t radius_g = 7, radius_p = 5, count = 50;
    unsigned workers = 1, budget = 40;
    std::uint64_t seed = 20260817;
    bool inject_fault = false;
    std::vector<int> table_ms;

    CLI::App* construct = app.add_subcommand("construct", "build a code and write its manifest");
    construct->add_option("--family", family,
                          "goethals | preparata | stabilizer | gp-quantum");
    construct->add_option("-m", m, "code length exponent (even, 6..12)")->required();
    construct->add_option("--out", out, "manifest path (default <family>-m<m>.json)");

    CLI::App* verify = app.add_subcommand("verify", "certify the minimum distance");
    verify->add_option("-m", m, "verify the canonical construction at this m");
    verify->add_option("--in", in_path, "verify a previously written gp-quantum manifest");
    verify->add_option("--radius-g", radius_g, "weight radius cleared in the base-code cosets");
    verify->add_option("--radius-p", radius_p, "weight radius cleared in the larger-base cosets");
    verify->add_option("--workers", workers, "search worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget, "log2 cap on enumeration steps per search")
        ->check(CLI::Range(0u, 64u));
    verify->add_option("--out", out, "report path (default verify-gp-quantum-m<m>.json)");
    verify->add_option("--format", format, "stdout rendering: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* table = app.add_subcommand("table", "print code parameters (pure arithmetic)");
    table->add_option("-m", table_ms, "m values (default 6 8 10)");
    table->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* kl = app.add_subcommand(
        "kl-check", "compare the combinatorial distance with the state-vector oracle");
    kl->add_option("--seed", seed, "random generator seed");
    kl->add_option("--count", count, "number of random instances");
    kl->add_flag("--inject-fault", inject_fault,
                 "corrupt the first comparison to demonstrate mismatch reporting");
    kl->add_option("--out", out, "optional JSON report path");

    CLI::App* exp = app.add_subcommand("export", "write generator/stabilizer matrices");
    exp->add_option("--in", in_path, "manifest to export");
    exp->add_option("--family", family, "construct this family instead of reading --in");
    exp->add_option("-m", m, "code length exponent when constructing");
    exp->add_option("--format", format, "text | gf4")
        ->check(CLI::IsMember({"text", "gf4"}));
    exp->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(family, m, out);
        if (verify->parsed())
            return cmd_verify(m, in_path, radius_g, radius_p, workers, budget, out, format);
        if (table->parsed()) return cmd_table(table_ms, format);
        if (kl->parsed()) return cmd_kl_check(seed, count, inject_fault, out);
        if (exp->parsed()) return cmd_export(in_path, family, m, format, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gpc::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
