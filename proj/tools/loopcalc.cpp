#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopcalc/dlops.hpp"
#include "loopcalc/expr.hpp"
#include "loopcalc/hopf.hpp"
#include "loopcalc/maps.hpp"
#include "loopcalc/replication.hpp"
#include "loopcalc/sieve.hpp"
#include "loopcalc/steenrod.hpp"

namespace {

using namespace loopcalc;

SpaceContext space_arg(const std::string& text) {
    const auto sp = SpaceContext::parse(text);
    if (!sp)
        throw ParseError("unknown space '" + text + "' (expected QS<n>, Q0S0, L<a>S<b>, QP<m>)",
                         0);
    return *sp;
}

Format format_arg(const std::string& text) {
    if (text == "text") return Format::Text;
    if (text == "json") return Format::Json;
    throw ParseError("unknown format '" + text + "' (expected text or json)", 0);
}

nlohmann::json sieve_json(const SieveReport& report) {
    nlohmann::json doc;
    doc["space"] = report.space.name();
    doc["d_max"] = report.d_max;
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& row : report.dims) {
        nlohmann::json r;
        r["dim"] = row.dim;
        nlohmann::json cands = nlohmann::json::array();
        for (const auto& e : row.candidates) cands.push_back(to_string(e));
        nlohmann::json sq = nlohmann::json::array();
        for (const auto& e : row.square_filtered) sq.push_back(to_string(e));
        r["candidates"] = cands;
        r["square_filtered"] = sq;
        dims.push_back(r);
    }
    doc["dims"] = dims;
    doc["criterion_checked"] = report.checked;
    doc["criterion_agreements"] = report.agreements;
    doc["criterion_mismatches"] = report.mismatches;
    return doc;
}

std::string sieve_text(const SieveReport& report) {
    std::string out = "sieve report for " + report.space.name() + ", dimensions 1.." +
                      std::to_string(report.d_max) + "\n";
    for (const auto& row : report.dims) {
        if (row.candidates.empty()) continue;
        out += "  dim " + std::to_string(row.dim) + ":\n";
        for (const auto& e : row.candidates) out += "    candidate: " + to_string(e) + "\n";
        for (const auto& e : row.square_filtered)
            out += "    square-filtered: " + to_string(e) + "\n";
    }
    if (report.checked > 0) {
        out += "  closed-form criterion vs direct sweep: " +
               std::to_string(report.agreements) + "/" + std::to_string(report.checked) +
               " agree\n";
        for (const auto& w : report.mismatches) out += "  MISMATCH " + w + "\n";
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"mod-2 homology calculus for iterated loop spaces of spheres"};
    app.require_subcommand(1);

    std::string space_text, expr_text, expr2_text, format_text = "text", out_dir, filter;
    std::string j2_mode = "exact";
    int dim = 0, r = 0, max_dim = 0;
    std::uint64_t seed = ReplicationOptions{}.seed;

    auto* basis_cmd = app.add_subcommand("basis", "list the basis monomials of one degree");
    basis_cmd->add_option("--space", space_text)->required();
    basis_cmd->add_option("--dim", dim)->required()->check(CLI::NonNegativeNumber);
    basis_cmd->add_option("--format", format_text);

    auto* sq_cmd = app.add_subcommand("sq", "dual Steenrod operation Sq^r_*");
    sq_cmd->add_option("--space", space_text)->required();
    sq_cmd->add_option("--expr", expr_text)->required();
    sq_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    sq_cmd->add_option("--format", format_text);

    auto* mul_cmd = app.add_subcommand("mul", "product of two expressions");
    mul_cmd->add_option("--space", space_text)->required();
    mul_cmd->add_option("--expr", expr_text)->required();
    mul_cmd->add_option("--expr2", expr2_text)->required();
    mul_cmd->add_option("--format", format_text);

    auto* coprod_cmd = app.add_subcommand("coprod", "coproduct into the tensor square");
    coprod_cmd->add_option("--space", space_text)->required();
    coprod_cmd->add_option("--expr", expr_text)->required();
    coprod_cmd->add_option("--format", format_text);

    auto* sieve_cmd = app.add_subcommand("sieve", "spherical-candidate sieve sweep");
    sieve_cmd->add_option("--space", space_text)->required();
    sieve_cmd->add_option("--max-dim", max_dim)->required()->check(CLI::PositiveNumber);
    sieve_cmd->add_option("--format", format_text);
    sieve_cmd->add_option("--out", out_dir);

    auto* conv_cmd = app.add_subcommand("convert", "canonical form and index conversion");
    conv_cmd->add_option("--space", space_text)->required();
    conv_cmd->add_option("--expr", expr_text)->required();
    conv_cmd->add_option("--format", format_text);

    auto* susp_cmd = app.add_subcommand("suspend", "homology suspension");
    susp_cmd->add_option("--space", space_text)->required();
    susp_cmd->add_option("--expr", expr_text)->required();
    susp_cmd->add_option("--format", format_text);

    auto* stab_cmd = app.add_subcommand("stabilize", "stabilization into QS^(b-a)");
    stab_cmd->add_option("--space", space_text)->required();
    stab_cmd->add_option("--expr", expr_text)->required();
    stab_cmd->add_option("--format", format_text);

    auto* j2_cmd = app.add_subcommand("j2", "second James-Hopf projection");
    j2_cmd->add_option("--space", space_text)->required();
    j2_cmd->add_option("--expr", expr_text)->required();
    j2_cmd->add_option("--mode", j2_mode)->check(CLI::IsMember({"exact", "leading"}));
    j2_cmd->add_option("--format", format_text);

    auto* verify_cmd = app.add_subcommand("verify", "run the replication suite");
    verify_cmd->add_option("--filter", filter);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--format", format_text);
    verify_cmd->add_option("--out", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format fmt = format_arg(format_text);

    if (basis_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        const auto basis = enumerate_basis(sp, dim);
        if (fmt == Format::Text) {
            for (const auto& m : basis) std::cout << to_string(m) << "\n";
        } else {
            nlohmann::json doc;
            doc["space"] = sp.name();
            doc["dim"] = dim;
            nlohmann::json monos = nlohmann::json::array();
            for (const auto& m : basis) monos.push_back(to_string(m));
            doc["monomials"] = monos;
            doc["count"] = basis.size();
            std::cout << doc.dump() << "\n";
        }
        return 0;
    }
    if (sq_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        std::cout << format_element(sq_down(r, parse_expr(expr_text, sp)), fmt) << "\n";
        return 0;
    }
    if (mul_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        std::cout << format_element(
                         multiply(parse_expr(expr_text, sp), parse_expr(expr2_text, sp)), fmt)
                  << "\n";
        return 0;
    }
    if (coprod_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        std::cout << format_tensor(coproduct(parse_expr(expr_text, sp)), fmt) << "\n";
        return 0;
    }
    if (sieve_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        const SieveReport report = sieve_report(sp, max_dim);
        const std::string text = sieve_text(report);
        const std::string json = sieve_json(report).dump();
        std::cout << (fmt == Format::Text ? text : json + "\n");
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            const std::string stem = "sieve_" + sp.name() + "_" + std::to_string(max_dim);
            write_file(std::filesystem::path(out_dir) / (stem + ".txt"), text);
            write_file(std::filesystem::path(out_dir) / (stem + ".json"), json + "\n");
        }
        return 0;
    }
    if (conv_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        const Element e = parse_expr(expr_text, sp);
        if (fmt == Format::Json) {
            nlohmann::json doc = nlohmann::json::parse(format_element(e, Format::Json));
            nlohmann::json lower = nlohmann::json::object();
            for (const auto& m : e.terms())
                for (const auto& [gm, exp] : m.factors) {
                    const auto low = lower_indices(gm);
                    lower[to_string(gm)] =
                        low ? nlohmann::json(*low) : nlohmann::json("out-of-model");
                }
            doc["lower"] = lower;
            std::cout << doc.dump() << "\n";
            return 0;
        }
        std::cout << "canonical: " << to_string(e) << "\n";
        std::set<std::string> seen;
        for (const auto& m : e.terms())
            for (const auto& [gm, exp] : m.factors) {
                if (!seen.insert(to_string(gm)).second) continue;
                std::cout << "lower(" << to_string(gm) << ") = ";
                const auto low = lower_indices(gm);
                if (!low) {
                    std::cout << "out-of-model\n";
                    continue;
                }
                std::cout << "q[";
                for (std::size_t k = 0; k < low->size(); ++k)
                    std::cout << (k ? "," : "") << (*low)[k];
                std::cout << "]\n";
            }
        return 0;
    }
    if (susp_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        const auto res = suspend(parse_expr(expr_text, sp));
        if (fmt == Format::Text) std::cout << "target: " << res.target.name() << "\n";
        std::cout << format_element(res.image, fmt) << "\n";
        return 0;
    }
    if (stab_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        std::cout << format_element(stabilize(parse_expr(expr_text, sp)), fmt) << "\n";
        return 0;
    }
    if (j2_cmd->parsed()) {
        const auto sp = space_arg(space_text);
        const J2Result res = j2_project(parse_expr(expr_text, sp),
                                        j2_mode == "exact" ? J2Mode::Exact : J2Mode::LeadingTerm);
        if (fmt == Format::Text) {
            std::cout << "exact: " << (res.exact ? "true" : "false") << "\n"
                      << format_element(res.image, fmt) << "\n";
        } else {
            nlohmann::json doc = nlohmann::json::parse(format_element(res.image, Format::Json));
            doc["exact"] = res.exact;
            std::cout << doc.dump() << "\n";
        }
        return 0;
    }
    if (verify_cmd->parsed()) {
        const ReplicationReport report = run_replication(filter, ReplicationOptions{seed});
        if (report.matched == 0) {
            std::cerr << "no replication case matches '" << filter << "'\n";
            return 2;
        }
        nlohmann::json cases = nlohmann::json::array();
        for (const auto& res : report.results) {
            if (fmt == Format::Text) {
                std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.id;
                if (!res.pass || !res.note.empty()) {
                    std::cout << " -- " << (res.pass ? res.note : res.detail);
                }
                std::cout << "\n";
            }
            cases.push_back({{"id", res.id},
                             {"pass", res.pass},
                             {"detail", res.detail},
                             {"note", res.note}});
        }
        nlohmann::json doc{{"matched", report.matched},
                           {"passed", report.passed},
                           {"failed", report.failed},
                           {"cases", cases}};
        if (fmt == Format::Json) std::cout << doc.dump() << "\n";
        else
            std::cout << report.passed << "/" << report.matched << " cases passed\n";
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            write_file(std::filesystem::path(out_dir) / "replication.json", doc.dump() + "\n");
        }
        return report.all_passed() ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const loopcalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
