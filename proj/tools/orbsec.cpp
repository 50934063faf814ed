// orbsec: sector analysis of cyclic orbifold complexes.
//
// Exit codes: 0 success / verdict produced, 1 invalid input,
// 2 internal consistency violation.

#include "orbsec/builders.hpp"
#include "orbsec/io.hpp"
#include "orbsec/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace orbsec;
using nlohmann::ordered_json;

struct Options {
    std::vector<std::string> files;
    bool json = false;
    bool strict = false;
    std::string out;
};

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_inconsistent = 2;

std::filesystem::path output_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative())
        if (const char* dir = std::getenv("ORBSEC_OUTPUT_DIR"); dir && *dir)
            return std::filesystem::path(dir) / p;
    return p;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output_path(out));
    if (!f)
        throw std::runtime_error("cannot write " + output_path(out).string());
    f << text;
}

std::string describe(const SectorComponent& c) {
    std::ostringstream os;
    os << "component " << c.id << ": element order " << c.element_order << ", dim " << c.dim << ", nodes "
       << c.nodes.size() << ", chi = " << c.chi << ", chi_orb = " << to_string(c.chi_orb)
       << (c.is_nontwisted ? " (nontwisted)" : "");
    return os.str();
}

void print_findings(std::ostream& os, const OrbifoldComplex&, const ValidationReport& v) {
    for (const auto& f : v.findings)
        os << "  " << to_string(f.kind) << ": " << f.message << "\n";
}

enum class Command { validate, sectors, euler, decide, verify };

// Runs one command on one file; appends the JSON report (if any) and returns
// the exit code.
int run_file(Command cmd, const std::string& file, const Options& opt, std::ostringstream& text,
             ordered_json& reports) {
    OrbifoldComplex oc;
    try {
        oc = io::parse(file);
    } catch (const io::ParseError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return exit_invalid;
    } catch (const LabelError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return exit_invalid;
    }

    const bool strict = opt.strict;
    const auto validation = validate(oc, strict ? ValidationMode::strict : ValidationMode::lax);
    report::Sections sections;
    sections.euler = cmd == Command::euler || cmd == Command::decide || cmd == Command::verify;
    sections.components = cmd != Command::validate;
    sections.decision = cmd == Command::decide || cmd == Command::verify;
    sections.verifiers = cmd == Command::verify;

    // Axiom violations stop every command; strict-only findings only stop `validate`.
    const auto lax = strict ? validate(oc, ValidationMode::lax) : validation;
    if (cmd == Command::validate || !lax.ok()) {
        if (opt.json)
            reports.push_back(report::build(oc, validation, nullptr, sections));
        else {
            text << file << ": " << (validation.ok() ? "valid" : "invalid") << " ("
                 << (strict ? "strict" : "lax") << ", " << validation.findings.size() << " findings)\n";
            print_findings(text, oc, validation);
        }
        if (!lax.ok() && cmd != Command::validate) {
            std::cerr << file << ": invalid labeling\n";
            print_findings(std::cerr, oc, lax);
        }
        return validation.ok() ? exit_ok : exit_invalid;
    }

    const auto analysis = analyze(oc);
    const auto decision = decide_nonvanishing(analysis);
    std::optional<report::VerifierResults> verifiers;
    std::vector<std::string> violations;
    if (cmd == Command::verify) {
        verifiers = report::run_verifiers(analysis);
        violations = verifiers->violations(analysis, decision);
    } else if (cmd == Command::decide && !decision.consistent && analysis.plausibility.plausible()) {
        violations.push_back("conditions (iii) and (iv) disagree on a plausible input");
    }

    if (opt.json) {
        reports.push_back(report::build(oc, validation, &analysis, sections, &decision,
                                        verifiers ? &*verifiers : nullptr));
    } else {
        text << "input: " << file << "\n";
        switch (cmd) {
        case Command::validate:
            break;
        case Command::euler:
            text << "chi: " << euler_characteristic(oc.complex()) << "\n";
            text << "chi_orb: " << to_string(euler_satake(oc)) << "\n";
            [[fallthrough]];
        case Command::sectors:
            text << "components: " << analysis.components.size() << "\n";
            for (const auto& c : analysis.components)
                text << "  " << describe(c) << (analysis.poset.is_minimal(c.id) ? " [minimal]" : "") << "\n";
            text << "plausibility: " << (analysis.plausibility.plausible() ? "plausible" : "implausible") << "\n";
            for (const auto& f : analysis.plausibility.findings)
                text << "  " << f.message << "\n";
            break;
        case Command::decide:
        case Command::verify:
            text << "verdict: " << decision.verdict() << "\n";
            text << "admits: "
                 << (decision.admits ? (*decision.admits ? "true" : "false") : "withheld (conditions disagree)")
                 << "\n";
            text << "condition (iii), every sector has chi = 0: " << std::boolalpha << decision.condition_iii << "\n";
            text << "condition (iv), every sector has chi_orb = 0: " << decision.condition_iv << "\n";
            text << "classical: chi_orb = " << to_string(decision.classical_chi_orb)
                 << ", chi = " << decision.classical_chi << "\n";
            text << "witnesses: " << decision.witnesses.size() << "\n";
            for (std::size_t w : decision.witnesses)
                text << "  " << describe(analysis.components[w]) << "\n";
            text << "plausibility: " << (analysis.plausibility.plausible() ? "plausible" : "implausible") << "\n";
            if (verifiers) {
                const auto& v = *verifiers;
                text << "gauss-bonnet: " << (v.gauss_bonnet.ok ? "pass" : "FAIL") << " ("
                     << to_string(v.gauss_bonnet.sector_sum) << " = " << v.gauss_bonnet.euler << ")\n";
                const bool add_ok =
                    std::all_of(v.additivity.begin(), v.additivity.end(), [](const auto& a) { return a.ok; });
                text << "additivity: " << (add_ok ? "pass" : "FAIL") << " (" << v.additivity.size() << " splits)\n";
                text << "minimal components: " << (v.minimal_components.passed() ? "pass" : "warnings") << "\n";
                for (const auto& c : v.minimal_components.checks)
                    if (!c.note.empty())
                        text << "  component " << c.component << ": " << c.note << "\n";
                text << "intersection closure: " << (v.intersection_closure.passed() ? "pass" : "FAIL") << " ("
                     << v.intersection_closure.pairs_checked << " pairs)\n";
                text << "induction identity: " << (v.induction.ok() ? "pass" : "FAIL") << "\n";
                for (const auto& e : v.induction.entries)
                    text << "  component " << e.component << ": " << to_string(e.outcome) << "\n";
            }
            break;
        }
    }
    for (const auto& v : violations)
        std::cerr << file << ": consistency violation: " << v << "\n";
    return violations.empty() ? exit_ok : exit_inconsistent;
}

int run_command(Command cmd, const Options& opt) {
    std::ostringstream text;
    ordered_json reports = ordered_json::array();
    int code = exit_ok;
    for (const auto& file : opt.files)
        code = std::max(code, run_file(cmd, file, opt, text, reports));
    if (opt.json) {
        if (reports.empty())
            return code;
        const auto& doc = reports.size() == 1 && opt.files.size() == 1 ? reports[0] : reports;
        emit(doc.dump(2) + "\n", opt.out);
    } else {
        emit(text.str(), opt.out);
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sectors, Euler-Satake characteristics and nonvanishing vector fields on cyclic orbifolds"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, Command> commands{{"validate", Command::validate},
                                            {"sectors", Command::sectors},
                                            {"euler", Command::euler},
                                            {"decide", Command::decide},
                                            {"verify", Command::verify}};
    const std::map<std::string, std::string> help{
        {"validate", "check the labeling axioms (and pseudomanifold structure with --strict)"},
        {"sectors", "list the sector components and their partial order"},
        {"euler", "Euler and Euler-Satake characteristics"},
        {"decide", "decide whether a nonvanishing vector field exists"},
        {"verify", "run every identity and lemma verifier"}};
    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("files", opt.files, "orbifold files")->required()->check(CLI::ExistingFile);
        sub->add_flag("--json", opt.json, "machine-readable report");
        sub->add_flag("--strict", opt.strict, "also check closed-pseudomanifold structure");
        sub->add_option("--out", opt.out, "write output to this file");
    }

    std::string spec_text;
    auto* gen = app.add_subcommand("gen", "write a fixture or builder spec as an orbifold file");
    gen->add_option("spec", spec_text, "fixture name (" + [] {
        std::string names;
        for (const auto& n : builders::fixture_names())
            names += (names.empty() ? "" : ", ") + n;
        return names;
    }() + ") or JSON builder spec")->required();
    gen->add_option("--out", opt.out, "output file");

    std::uint64_t seed = 0;
    builders::RandomProfile profile;
    auto* random = app.add_subcommand("random", "write a random valid orbifold file");
    random->add_option("--seed", seed, "generator seed")->required();
    random->add_option("--dim", profile.dimension, "dimension (2 or 4)")->check(CLI::IsMember({2, 4}));
    random->add_option("--max-vertices", profile.max_vertices, "vertex bound");
    random->add_option("--max-order", profile.max_order, "isotropy order bound");
    random->add_option("--out", opt.out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& [name, cmd] : commands)
            if (app.got_subcommand(name))
                return run_command(cmd, opt);
        if (app.got_subcommand(gen)) {
            const auto& names = builders::fixture_names();
            const bool named = std::find(names.begin(), names.end(), spec_text) != names.end();
            const auto oc = named ? builders::fixture(spec_text) : builders::build(io::parse_builder_spec(spec_text));
            emit(io::serialize(oc), opt.out);
            return exit_ok;
        }
        if (app.got_subcommand(random)) {
            emit(io::serialize(builders::random_orbifold(seed, profile)), opt.out);
            return exit_ok;
        }
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const builders::BuilderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    }
    return exit_ok;
}
