// mcgx command line: generate, verify, abelianize, solve, export.
//
// Exit codes: 0 success, 1 verification/solve failure, 2 usage or input
// error. Reports go to stdout, diagnostics to stderr. Output is
// byte-deterministic for fixed inputs and flags.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mcgx/cas.hpp"
#include "mcgx/central.hpp"
#include "mcgx/intmat.hpp"
#include "mcgx/presentations.hpp"
#include "mcgx/symplectic.hpp"

namespace {

using mcgx::json;

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

std::string present_text(const mcgx::Presentation& p) {
    std::string out;
    out += std::string(mcgx::family_tag(p.family)) + " presentation, g = " + std::to_string(p.g) +
           ", r = " + std::to_string(p.r) + "\n";
    out += "generators:";
    for (const auto& n : p.alphabet.names()) out += " " + n;
    out += "\nrelators (" + std::to_string(p.relators.size()) + "):\n";
    for (const auto& [label, word] : p.relators) out += "  " + label + ": " + word.str() + "\n";
    return out;
}

mcgx::Presentation build_with_optional_fault(mcgx::Family family, int g, int r, bool inject_fault) {
    if (!inject_fault) return mcgx::build_presentation(family, g, r);
    // corrupt one disjoint entry into a crossing: emits a braid relator on a
    // pairing-zero pair, which cannot hold in Sp
    auto table = mcgx::intersection_table(family, g, r);
    bool done = false;
    for (std::size_t i = 0; i < table.symbols.size() && !done; ++i)
        for (std::size_t j = i + 1; j < table.symbols.size() && !done; ++j)
            if (table.at(i, j) == mcgx::Crossing::disjoint) {
                table.set(i, j, mcgx::Crossing::once);
                done = true;
            }
    switch (family) {
        case mcgx::Family::wajnryb_lift: return mcgx::build_wajnryb_lift(g, r, table);
        case mcgx::Family::gervais_lift: return mcgx::build_gervais_lift(g, r, table);
        case mcgx::Family::genus2: return mcgx::build_genus2(table);
    }
    throw mcgx::InvalidParameter("unknown family");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"presentations and central-element calculus for centrally extended mapping class groups"};
    app.require_subcommand(1);

    std::string family_tag, format = "json", dialect = "gap", out_path, matrices_path;
    int g = 3, r = 1;
    long long sigma = 0, m = 0, mns = 0;
    bool json_out = false, inject_fault = false, strict = false;

    auto add_family = [&](CLI::App* cmd, bool with_gr = true) {
        cmd->add_option("--family", family_tag, "wajnryb | gervais | genus2")->required();
        if (with_gr) {
            cmd->add_option("--g", g, "genus");
            cmd->add_option("--r", r, "boundary components");
        }
    };

    auto* present = app.add_subcommand("present", "emit a presentation");
    add_family(present);
    present->add_option("--format", format, "json | text | cas")
        ->check(CLI::IsMember({"json", "text", "cas"}));
    present->add_option("--cas-dialect", dialect, "gap | magma")
        ->check(CLI::IsMember({"gap", "magma"}));
    present->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* exportc = app.add_subcommand("export", "write a computer-algebra input file");
    add_family(exportc);
    exportc->add_option("--cas-dialect", dialect, "gap | magma")
        ->check(CLI::IsMember({"gap", "magma"}));
    exportc->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* abel = app.add_subcommand("abelianize", "abelian invariants of a presentation");
    add_family(abel);

    auto* checksp = app.add_subcommand("check-sp", "verify all relators in Sp(2g, Z)");
    add_family(checksp);
    checksp->add_flag("--json", json_out, "machine-readable report");
    checksp->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden

    auto* checkrep = app.add_subcommand("check-rep", "check a linear representation relator by relator");
    add_family(checkrep);
    checkrep->add_option("--matrices", matrices_path, "assignment JSON file")->required();
    checkrep->add_flag("--strict", strict, "require scalar 1 on every relator");
    checkrep->add_flag("--json", json_out, "machine-readable report");

    auto* solve = app.add_subcommand("solve-central", "central exponents from (sigma, m, m_ns)");
    solve->add_option("--g", g, "genus")->required();
    solve->add_option("--sigma", sigma, "signature")->required();
    solve->add_option("--m", m, "number of twists")->required();
    solve->add_option("--mns", mns, "number of nonseparating twists")->required();

    auto* relcmd = app.add_subcommand("relators", "named central words for (g, r)");
    relcmd->add_option("--g", g, "genus")->required();
    relcmd->add_option("--r", r, "boundary components");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (present->parsed() || exportc->parsed()) {
            auto fam = mcgx::family_from_tag(family_tag);
            if (fam == mcgx::Family::genus2) {
                g = 2;
                r = 0;
            }
            auto p = mcgx::build_presentation(fam, g, r);
            std::string text;
            if (exportc->parsed() || format == "cas")
                text = mcgx::export_cas(p, mcgx::cas_dialect_from_tag(dialect));
            else if (format == "text")
                text = present_text(p);
            else
                text = p.to_json().dump(2) + "\n";
            write_out(out_path, text);
            return 0;
        }

        if (abel->parsed()) {
            auto fam = mcgx::family_from_tag(family_tag);
            if (fam == mcgx::Family::genus2) {
                g = 2;
                r = 0;
            }
            auto inv = mcgx::abelianize(mcgx::build_presentation(fam, g, r));
            std::cout << inv.to_json().dump(2) << "\n";
            return 0;
        }

        if (checksp->parsed()) {
            auto fam = mcgx::family_from_tag(family_tag);
            if (fam == mcgx::Family::genus2) {
                g = 2;
                r = 0;
            }
            auto p = build_with_optional_fault(fam, g, r, inject_fault);
            auto rep = mcgx::verify_presentation_sp(p);
            if (json_out) {
                json j;
                j["family"] = mcgx::family_tag(p.family);
                j["g"] = p.g;
                j["r"] = p.r;
                j["relators"] = rep.entries.size();
                j["failures"] = rep.failures();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : rep.entries)
                    if (!e.ok) std::cout << "FAIL " << e.label << "\n";
                std::cout << (rep.all_ok() ? "ok: " : "FAILED: ") << rep.entries.size()
                          << " relators checked in Sp(" << 2 * p.g << ", Z)\n";
            }
            return rep.all_ok() ? 0 : 1;
        }

        if (checkrep->parsed()) {
            auto fam = mcgx::family_from_tag(family_tag);
            if (fam == mcgx::Family::genus2) {
                g = 2;
                r = 0;
            }
            auto p = mcgx::build_presentation(fam, g, r);
            std::ifstream f(matrices_path);
            if (!f) {
                std::cerr << "cannot read matrices file: " << matrices_path << "\n";
                return 2;
            }
            json jin;
            f >> jin;
            auto assign = mcgx::RepAssignment::from_json(jin);
            auto rep = mcgx::verify_projective_rep(p, assign);
            if (json_out) {
                json j;
                json entries = json::array();
                for (const auto& e : rep.entries) {
                    json je;
                    je["label"] = e.label;
                    if (e.is_scalar)
                        je["scalar"] = mcgx::rational_str(e.scalar);
                    else
                        je["deviation"] = mcgx::rational_str(e.deviation);
                    entries.push_back(je);
                }
                j["entries"] = entries;
                j["projective"] = rep.all_scalar();
                j["linear"] = rep.all_one();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : rep.entries) {
                    if (e.is_scalar)
                        std::cout << e.label << ": scalar " << mcgx::rational_str(e.scalar) << "\n";
                    else
                        std::cout << e.label << ": NOT SCALAR, max deviation "
                                  << mcgx::rational_str(e.deviation) << "\n";
                }
            }
            bool ok = strict ? rep.all_one() : rep.all_scalar();
            return ok ? 0 : 1;
        }

        if (solve->parsed()) {
            if (m < 0 || mns < 0 || mns > m) {
                std::cerr << "require m >= mns >= 0\n";
                return 2;
            }
            if (g < 2) {
                std::cerr << "require g >= 2\n";
                return 2;
            }
            std::vector<mcgx::TwistType> tw;
            for (long long i = 0; i < mns; ++i) tw.push_back(mcgx::TwistType::ns());
            for (long long i = mns; i < m; ++i) tw.push_back(mcgx::TwistType::separating(0));
            mcgx::Factorization f(g, sigma, std::move(tw));
            try {
                auto e = g == 2 ? mcgx::solve_central_exponents_g2(f)
                                : mcgx::solve_central_exponents(f);
                std::cout << e.to_json().dump(2) << "\n";
                return 0;
            } catch (const mcgx::NonIntegralSolution&) {
                std::cout << json{{"error", "non-integral-solution"}}.dump(2) << "\n";
                return 1;
            }
        }

        if (relcmd->parsed()) {
            if (g == 2) r = 0;
            auto lib = mcgx::relator_library(g, r);
            json j;
            for (const auto& [label, word] : lib) j[label] = word.to_json();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const mcgx::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
