#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "capcurl/verify.hpp"

namespace {

using namespace capcurl;

TextFormat diagram_format(const std::string& format) {
    if (format == "json") return TextFormat::Json;
    if (format == "ascii") return TextFormat::Ascii;
    if (format == "unicode")
        return std::getenv("CAPCURL_NO_UNICODE") ? TextFormat::Ascii : TextFormat::Unicode;
    throw DomainError("format", "unsupported format '" + format + "' for diagrams");
}

CapCurlMode parse_mode(const std::string& mode) {
    if (mode == "c") return CapCurlMode::C;
    if (mode == "co") return CapCurlMode::Co;
    throw DomainError("mode", "mode must be c or co");
}

struct CommonArgs {
    long long p = 0, m = 0, s = 0;
    std::string lambda_text, mu_text, format;
};

void add_context_flags(CLI::App* cmd, CommonArgs& args, bool with_s) {
    cmd->add_option("--p", args.p, "odd prime characteristic")->required();
    cmd->add_option("--m", args.m, "rank m of Sp_2m")->required();
    if (with_s) cmd->add_option("--s", args.s, "arrow count, 1 <= s <= min(m,p)")->required();
}

int run(int argc, char** argv) {
    CLI::App app{"cap-curl calculus for symplectic decomposition numbers"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string mode = "c", group = "wpd", kind = "decomp";
    std::string zero_arrow = "down";
    std::vector<std::string> preceq_args, conjugate_args;
    std::string lower_set_arg;
    long long delta = 0, r = 0, max_m = 5, max_size = 14;
    int jobs = 0;
    std::vector<long long> ps{3, 5, 7, 11};

    CLI::App* diagram = app.add_subcommand("diagram", "arrow diagram of a weight");
    add_context_flags(diagram, a, true);
    diagram->add_option("--lambda", a.lambda_text)->required();
    diagram->add_option("--zero-arrow", zero_arrow, "node-1 arrow choice: down|up");
    diagram->add_option("--format", a.format);

    CLI::App* capcurl_cmd = app.add_subcommand("capcurl", "cap-curl (co)diagram of a weight");
    add_context_flags(capcurl_cmd, a, true);
    capcurl_cmd->add_option("--lambda", a.lambda_text)->required();
    capcurl_cmd->add_option("--mode", mode, "c (c_lambda) or co (co_mu)");
    capcurl_cmd->add_option("--zero-arrow", zero_arrow, "node-1 arrow choice: down|up");
    capcurl_cmd->add_option("--format", a.format);

    CLI::App* jsf = app.add_subcommand("jsf", "Jantzen sum of a Weyl module");
    add_context_flags(jsf, a, false);
    jsf->add_option("--lambda", a.lambda_text)->required();
    jsf->add_option("--format", a.format, "json (collected character) or csv (reduced terms)");

    CLI::App* order = app.add_subcommand("order", "the order preceq and conjugacy tests");
    add_context_flags(order, a, true);
    order->add_option("--preceq", preceq_args, "mu lambda: is mu preceq lambda?")
        ->expected(2);
    order->add_option("--lower-set", lower_set_arg, "all mu preceq lambda");
    order->add_option("--conjugate", conjugate_args, "lambda mu: dot-action conjugacy")
        ->expected(2);
    order->add_option("--group", group, "wpd|wpc|wp");

    CLI::App* tilting = app.add_subcommand("tilting", "(T(lambda) : nabla(mu))");
    add_context_flags(tilting, a, true);
    tilting->add_option("--lambda", a.lambda_text)->required();
    tilting->add_option("--mu", a.mu_text)->required();

    CLI::App* decnum = app.add_subcommand("decnum", "[Delta(lambda) : L(mu)]");
    add_context_flags(decnum, a, true);
    decnum->add_option("--lambda", a.lambda_text)->required();
    decnum->add_option("--mu", a.mu_text)->required();

    CLI::App* decmat = app.add_subcommand("decmat", "matrix over the lower set of lambda");
    add_context_flags(decmat, a, true);
    decmat->add_option("--lambda", a.lambda_text)->required();
    decmat->add_option("--kind", kind, "decomp|tilt");
    decmat->add_option("--format", a.format, "json|csv");

    CLI::App* brauer = app.add_subcommand("brauer", "Brauer algebra decomposition number");
    brauer->add_option("--p", a.p)->required();
    brauer->add_option("--delta", delta, "parameter of B_r(delta), taken mod p")->required();
    brauer->add_option("--r", r, "number of strands")->required();
    brauer->add_option("--lambda", a.lambda_text, "symplectic-side label")->required();
    brauer->add_option("--mu", a.mu_text, "symplectic-side label")->required();

    CLI::App* verify = app.add_subcommand("verify", "exhaustive oracle cross-validation");
    verify->add_option("--p", ps, "primes to sweep")->delimiter(',');
    verify->add_option("--max-m", max_m);
    verify->add_option("--max-size", max_size, "largest |lambda| swept");
    verify->add_option("--jobs", jobs, "worker threads (default: available parallelism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (diagram->parsed()) {
        DiagramContext ctx = build_context(a.p, a.m, a.s);
        NodeState choice = zero_arrow == "up" ? NodeState::Up
                         : zero_arrow == "down" ? NodeState::Down
                                                : throw DomainError("zero-arrow",
                                                                    "--zero-arrow must be down or up");
        ArrowDiagram d = arrow_diagram(Partition::parse(a.lambda_text), ctx, choice);
        std::cout << render(d, diagram_format(a.format.empty() ? "unicode" : a.format))
                  << "\n";
    } else if (capcurl_cmd->parsed()) {
        DiagramContext ctx = build_context(a.p, a.m, a.s);
        NodeState choice = zero_arrow == "up" ? NodeState::Up
                         : zero_arrow == "down" ? NodeState::Down
                                                : throw DomainError("zero-arrow",
                                                                    "--zero-arrow must be down or up");
        CapCurlDiagram ccd = cap_curl(
            arrow_diagram(Partition::parse(a.lambda_text), ctx, choice), parse_mode(mode));
        std::cout << render(ccd, diagram_format(a.format.empty() ? "unicode" : a.format))
                  << "\n";
    } else if (jsf->parsed()) {
        GroupContext ctx(a.p, a.m);
        Partition lambda = Partition::parse(a.lambda_text);
        std::string format = a.format.empty() ? "json" : a.format;
        if (format == "csv") {
            std::vector<JsfTerm> terms = reduced_jsf(lambda, ctx);
            std::cout << "root,i,j,l,a,valuation,sign,target\n";
            for (const JsfTerm& t : terms) {
                const char* root = t.root.kind == RootKind::EPlus ? "e+"
                                 : t.root.kind == RootKind::EMinus ? "e-"
                                                                   : "2e";
                std::cout << root << ',' << t.root.i << ',' << t.root.j << ',' << t.l << ','
                          << t.a << ',' << t.valuation << ',' << t.sign << ",\""
                          << t.target.to_string() << "\"\n";
            }
        } else if (format == "json") {
            std::cout << full_jsf(lambda, ctx).to_json().dump() << "\n";
        } else {
            throw DomainError("format", "jsf supports json or csv");
        }
    } else if (order->parsed()) {
        DiagramContext ctx = build_context(a.p, a.m, a.s);
        if (!preceq_args.empty()) {
            bool yes = preceq(Partition::parse(preceq_args[0]),
                              Partition::parse(preceq_args[1]), ctx);
            std::cout << (yes ? "true" : "false") << "\n";
        } else if (!lower_set_arg.empty()) {
            for (const Partition& mu : lower_set(Partition::parse(lower_set_arg), ctx))
                std::cout << mu.to_string() << "\n";
        } else if (!conjugate_args.empty()) {
            ConjugacyGroup g = group == "wpd" ? ConjugacyGroup::WpD
                             : group == "wpc" ? ConjugacyGroup::WpC
                             : group == "wp" ? ConjugacyGroup::Wp
                                             : throw DomainError("group",
                                                                 "--group must be wpd, wpc or wp");
            bool yes = conjugate(Partition::parse(conjugate_args[0]),
                                 Partition::parse(conjugate_args[1]), ctx, g);
            std::cout << (yes ? "true" : "false") << "\n";
        } else {
            throw DomainError("usage", "order needs --preceq, --lower-set or --conjugate");
        }
    } else if (tilting->parsed()) {
        DiagramContext ctx = build_context(a.p, a.m, a.s);
        std::cout << tilting_mult(Partition::parse(a.lambda_text),
                                  Partition::parse(a.mu_text), ctx)
                  << "\n";
    } else if (decnum->parsed()) {
        DiagramContext ctx = build_context(a.p, a.m, a.s);
        std::cout << decomposition_number(Partition::parse(a.lambda_text),
                                          Partition::parse(a.mu_text), ctx)
                  << "\n";
    } else if (decmat->parsed()) {
        DiagramContext ctx = build_context(a.p, a.m, a.s);
        MatrixKind k = kind == "tilt" ? MatrixKind::Tilt
                     : kind == "decomp" ? MatrixKind::Decomp
                                        : throw DomainError("kind", "--kind must be decomp or tilt");
        DecompositionMatrix mat =
            decomposition_matrix(Partition::parse(a.lambda_text), ctx, k);
        std::string format = a.format.empty() ? "json" : a.format;
        if (format == "csv")
            std::cout << mat.to_csv();
        else if (format == "json")
            std::cout << mat.to_json().dump() << "\n";
        else
            throw DomainError("format", "decmat supports json or csv");
    } else if (brauer->parsed()) {
        BrauerResult res = brauer_decomposition_number(
            a.p, delta, r, Partition::parse(a.lambda_text), Partition::parse(a.mu_text));
        std::cout << res.to_json().dump() << "\n";
    } else if (verify->parsed()) {
        if (jobs <= 0) {
            unsigned hw = std::thread::hardware_concurrency();
            jobs = hw == 0 ? 1 : static_cast<int>(hw);
        }
        VerifyReport report = verify_sweep(ps, max_m, max_size, jobs);
        for (const VerifyRecord& rec : report.records)
            std::cout << rec.to_json().dump() << "\n";
        std::cout << report.summary_json().dump() << "\n";
        std::cerr << "checked " << report.checked << " weights, " << report.failed
                  << " discrepancies, " << report.flagged << " l-value diagnostics, "
                  << report.wall_ms << " ms\n";
        return report.failed == 0 ? 0 : 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const capcurl::DomainError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const capcurl::InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
