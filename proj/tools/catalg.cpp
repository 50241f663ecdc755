// Command-line front end: parses a workbench spec (a file or a bundled
// fixture name), runs construction / induction / verification tasks and
// prints the report. Exit codes: 0 all pass, 1 verification failure,
// 2 input error.
#include <CLI11.hpp>

#include <catalg/field.hpp>
#include <catalg/workbench.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

/// A spec argument is a path if the file exists, otherwise the name of a
/// bundled fixture.
std::string load_spec_text(const std::string& spec) {
    std::ifstream in(spec);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return catalg::bundled_fixture_text(spec); // throws SpecError if unknown
}

struct Options {
    std::string field_flag; // empty, "rationals" or "gf:<p>"
    std::string report_path;
    bool parallel = false;
};

/// Extra tasks synthesized by a subcommand are appended after the
/// spec's own task list is replaced (subcommands run only their task).
template <typename K>
int run_spec(const std::string& text, const Options& opt,
             const std::vector<std::vector<std::string>>& replace_tasks) {
    auto wb = catalg::parse_spec<K>(text);
    if (!replace_tasks.empty()) wb.tasks = replace_tasks;
    auto report = catalg::run(wb, opt.parallel);
    std::string rendered = report.render();
    std::cout << rendered;
    if (!opt.report_path.empty()) {
        std::ofstream out(opt.report_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << opt.report_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return report.exit_code();
}

int dispatch(const std::string& spec, const Options& opt,
             const std::vector<std::vector<std::string>>& replace_tasks) {
    try {
        std::string text = load_spec_text(spec);
        auto [field, prime] = catalg::peek_field(text);
        if (!opt.field_flag.empty()) {
            if (opt.field_flag == "rationals") {
                field = "rationals";
            } else if (opt.field_flag.rfind("gf:", 0) == 0) {
                field = "gf";
                prime = std::stoll(opt.field_flag.substr(3));
            } else {
                std::cerr << "error: --field expects 'rationals' or 'gf:<p>'\n";
                return 2;
            }
        }
        if (field == "gf") {
            catalg::GFp::set_modulus(prime); // rejects composite moduli
            return run_spec<catalg::GFp>(text, opt, replace_tasks);
        }
        return run_spec<catalg::Rational>(text, opt, replace_tasks);
    } catch (const catalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for finite category algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--field", opt.field_flag,
                   "scalar field override: 'rationals' or 'gf:<p>'");
    app.add_option("--report", opt.report_path, "also write the report to this path");
    app.add_flag("--parallel", opt.parallel, "run tasks in parallel");

    std::string spec, arg1, arg2;

    auto* check = app.add_subcommand("check", "validate declarations and run the task list");
    check->add_option("spec", spec, "spec file or bundled fixture name")->required();

    auto* build = app.add_subcommand("build", "run one construction on every declared input");
    build->add_option("construction", arg1, "category_algebra|skew|tensor|twisted")->required();
    build->add_option("spec", spec)->required();

    auto* induct = app.add_subcommand("induct", "run an induction on every functor/precosheaf pair");
    induct->add_option("kind", arg1, "turull|puig")->required();
    induct->add_option("spec", spec)->required();

    auto* verify = app.add_subcommand("verify", "run one verification on every declared input");
    verify->add_option("check", arg1, "twisting|thm11|thm13|lemma42|cond423|weakbialg")
        ->required();
    verify->add_option("spec", spec)->required();

    auto* fixtures = app.add_subcommand("fixtures", "bundled fixture utilities");
    fixtures->add_option("action", arg1, "list|show")->required();
    fixtures->add_option("name", arg2, "fixture name (for 'show')");

    CLI11_PARSE(app, argc, argv);

    if (fixtures->parsed()) {
        if (arg1 == "list") {
            for (const auto& n : catalg::bundled_fixture_names()) std::cout << n << "\n";
            return 0;
        }
        if (arg1 == "show") {
            try {
                std::cout << catalg::bundled_fixture_text(arg2);
                return 0;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        std::cerr << "error: unknown fixtures action: " << arg1 << "\n";
        return 2;
    }

    if (check->parsed()) {
        // a declaration check first, then the spec's own task list
        std::vector<std::vector<std::string>> tasks{{"check"}};
        try {
            auto probe = catalg::parse_spec<catalg::Rational>(load_spec_text(spec));
            for (const auto& t : probe.tasks)
                if (t != std::vector<std::string>{"check"}) tasks.push_back(t);
        } catch (const catalg::ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return dispatch(spec, opt, tasks);
    }

    // For build/induct/verify, synthesize tasks against every declared
    // input of the right shape; names are read from a field-agnostic
    // parse over the rationals.
    std::vector<std::vector<std::string>> tasks;
    try {
        std::string text = load_spec_text(spec);
        auto probe = catalg::parse_spec<catalg::Rational>(text);
        auto precosheaf_names = [&] {
            std::vector<std::string> out;
            for (const auto& [n, v] : probe.precosheaves) out.push_back(n);
            return out;
        }();
        if (build->parsed()) {
            if (arg1 == "category_algebra") {
                for (const auto& [n, v] : probe.categories)
                    tasks.push_back({"build", "category_algebra", n});
            } else {
                for (const auto& n : precosheaf_names) tasks.push_back({"build", arg1, n});
            }
        } else if (induct->parsed()) {
            for (const auto& [fn, f] : probe.functors)
                for (const auto& [sn, s] : probe.precosheaves)
                    if (s.category.objects == f.source.objects &&
                        s.category.morphisms.size() == f.source.morphisms.size())
                        tasks.push_back({"induct", arg1, fn, sn});
        } else if (verify->parsed()) {
            if (arg1 == "cond423") {
                for (const auto& [n, v] : probe.functors) tasks.push_back({"verify", arg1, n});
            } else if (arg1 == "weakbialg") {
                for (const auto& [n, v] : probe.categories)
                    tasks.push_back({"verify", arg1, n});
            } else if (arg1 == "twisting" || arg1 == "thm11") {
                for (const auto& n : precosheaf_names) tasks.push_back({"verify", arg1, n});
            } else if (arg1 == "thm13" || arg1 == "lemma42") {
                for (const auto& [fn, f] : probe.functors)
                    for (const auto& [sn, s] : probe.precosheaves)
                        if (s.category.objects == f.source.objects &&
                            s.category.morphisms.size() == f.source.morphisms.size())
                            tasks.push_back({"verify", arg1, fn, sn});
            } else {
                std::cerr << "error: unknown verification: " << arg1 << "\n";
                return 2;
            }
        }
    } catch (const catalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (tasks.empty()) {
        std::cerr << "error: no declared input matches this command\n";
        return 2;
    }
    return dispatch(spec, opt, tasks);
}
