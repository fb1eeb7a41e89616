#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "gconv/corpus.hpp"
#include "gconv/group.hpp"
#include "gconv/parser.hpp"
#include "gconv/product.hpp"
#include "gconv/suites.hpp"
#include "gconv/topology.hpp"

namespace {

using namespace gconv;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

NumericParams params_from_env() {
    NumericParams p;
    if (const char* tol = std::getenv("GCONVERGE_TOLERANCE")) {
        try {
            p.tolerance = parse_rat(tol);
        } catch (const std::exception&) {
            // ignore malformed environment overrides
        }
    }
    return p;
}

nlohmann::json single_json(const std::string& verb, const std::string& method,
                           const std::string& input, const nlohmann::json& result) {
    nlohmann::json j;
    j["schema"] = 1;
    j["verb"] = verb;
    if (!method.empty()) j["method"] = method;
    j["input"] = input;
    j["result"] = result;
    return j;
}

void emit(const nlohmann::json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else if (!text.empty() && text.back() == '\n')
        std::cout << text;
    else
        std::cout << text << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"gconverge: exact computation with generalized convergence methods on R"};
    app.require_subcommand(1);
    app.fallthrough();
    NumericParams env_params = params_from_env();

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output (schema 1)");
    std::string tolerance_text;
    std::int64_t nmax_override = 0;
    app.add_option("--tolerance", tolerance_text,
                   "numeric tolerance for matrix evaluation (p/q, default 1/1000000000)");
    app.add_option("--nmax", nmax_override, "evaluation horizon for matrix methods");

    std::string method_name = "lim";
    std::string expr, seq_text, expect;
    std::int64_t depth = 16, K = 16;
    SuiteOptions opt;

    // single-shot topology verbs
    struct Verb {
        const char* name;
        const char* help;
    };
    const std::vector<Verb> set_verbs = {
        {"hull", "G-hull of a set expression"},
        {"kernel", "G-kernel of a set expression"},
        {"closure", "G-closure (smallest G-closed superset)"},
        {"interior", "G-interior (largest G-open subset)"},
        {"closed", "is the set G-closed?"},
        {"open", "is the set G-open?"},
        {"dense", "is the set G-dense?"},
        {"connected", "is the set G-connected?"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& v : set_verbs) {
        auto* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("--method", method_name, "lim | cesaro | stat | matrix:<file> | prod(<m>)");
        sub->add_option("expr", expr, "set expression")->required();
        sub->add_option("--expect", expect, "exit 1 unless the boolean result matches");
        subs.push_back(sub);
    }

    auto* normalize = app.add_subcommand("normalize", "parse a set expression and print it normalized");
    normalize->add_option("expr", expr, "set expression")->required();

    auto* limit = app.add_subcommand("limit", "G-limit of a sequence literal");
    limit->add_option("--method", method_name);
    limit->add_option("seq", seq_text, "sequence literal")->required();

    auto* boxhull = app.add_subcommand("box-hull", "componentwise hull of a depth box");
    boxhull->add_option("--method", method_name);
    boxhull->add_option("--depth", depth, "depth for family literals");
    boxhull->add_option("box", expr, "box literal")->required();

    auto* boxclosed = app.add_subcommand("box-closed", "is every factor G-closed?");
    boxclosed->add_option("--method", method_name);
    boxclosed->add_option("--depth", depth);
    boxclosed->add_option("box", expr, "box literal")->required();
    boxclosed->add_option("--expect", expect);

    auto* boxkernel = app.add_subcommand("box-kernel", "componentwise kernel (full-line tail)");
    boxkernel->add_option("--method", method_name);
    boxkernel->add_option("--depth", depth);
    boxkernel->add_option("box", expr, "box literal")->required();

    auto* scenario = app.add_subcommand("scenario", "named scenario runs");
    std::string scenario_name;
    std::string sigma_a = "const", sigma_x = "id";
    scenario->add_option("name", scenario_name, "ex33 | sigma")->required();
    scenario->add_option("--depth", depth);
    scenario->add_option("--a", sigma_a, "sigma anchor: const | one");
    scenario->add_option("--x", sigma_x, "sigma target: id | recip | const3");

    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name;
    suite->add_option("name", suite_name,
                      "thm3.1 | ex33 | thm4.5 | sec5 | sec5-counterexamples | traits | oracle-hull")
        ->required();
    suite->add_option("--trials", opt.trials);
    suite->add_option("--seed", opt.seed);
    suite->add_option("--depth", opt.depth);
    suite->add_option("--K", opt.base_count);
    suite->add_option("--sets", opt.sets);
    suite->add_option("--nterms", opt.n_terms);
    suite->add_option("--method", opt.method);

    auto* axioms = app.add_subcommand("group-axioms", "addition/negation interchange on the corpus");
    axioms->add_option("--method", method_name);

    auto* closure_base = app.add_subcommand("closure-base",
                                            "truncated base intersection vs the G-closure");
    closure_base->add_option("--method", method_name);
    closure_base->add_option("--set", expr, "set expression")->required();
    closure_base->add_option("--K", K, "base truncation depth");

    auto* matreg = app.add_subcommand("matrix-regular", "Silverman-Toeplitz verdict");
    std::string matrix_arg;
    matreg->add_option("matrix", matrix_arg, "cesaro | diag:<p/q> | column:<k>:<p/q> | <file>")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }
    if (!tolerance_text.empty()) env_params.tolerance = parse_rat(tolerance_text);
    if (nmax_override > 0) env_params.n_max = nmax_override;

    auto expect_gate = [&](bool value, const std::string& verb, const std::string& shown) {
        emit(single_json(verb, method_name, expr, value), as_json, shown);
        if (expect.empty()) return kExitPass;
        bool want = expect == "true" || expect == "1" || expect == "yes";
        return value == want ? kExitPass : kExitCheckFailed;
    };

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        MethodSpec m = parse_method(method_name, env_params);
        RSet a = parse_set(expr);
        const std::string verb = set_verbs[i].name;
        auto emit_set = [&](const RSet& s) {
            auto j = single_json(verb, method_name, expr, s.str());
            j["intervals"] = set_to_json(s);
            emit(j, as_json, s.str());
            return kExitPass;
        };
        if (verb == "hull") return emit_set(hull(m, a));
        if (verb == "kernel") return emit_set(kernel(m, a));
        if (verb == "closure") return emit_set(g_closure(m, a));
        if (verb == "interior") return emit_set(g_interior(m, a));
        if (verb == "closed" || verb == "open" || verb == "dense") {
            bool v = verb == "closed" ? is_g_closed(m, a)
                     : verb == "open" ? is_g_open(m, a)
                                      : is_g_dense(m, a);
            return expect_gate(v, verb, v ? "true" : "false");
        }
        if (verb == "connected") {
            auto rep = is_g_connected(m, a);
            nlohmann::json j;
            j["connected"] = rep.connected;
            j["splits_examined"] = rep.splits_examined;
            if (!rep.connected) {
                j["separation"] = {{"F", rep.separation_f->str()}, {"K", rep.separation_k->str()}};
            }
            std::string text = rep.connected
                                   ? "connected"
                                   : "separated: F = " + rep.separation_f->str() +
                                         ", K = " + rep.separation_k->str();
            emit(single_json(verb, method_name, expr, j), as_json, text);
            if (expect.empty()) return kExitPass;
            bool want = expect == "true" || expect == "1" || expect == "yes";
            return rep.connected == want ? kExitPass : kExitCheckFailed;
        }
    }

    if (normalize->parsed()) {
        RSet a = parse_set(expr);
        emit(single_json("normalize", "", expr, a.str()), as_json, a.str());
        return kExitPass;
    }
    if (limit->parsed()) {
        MethodSpec m = parse_method(method_name, env_params);
        SeqSpec s = parse_seq(seq_text);
        auto l = g_limit(m, s);
        nlohmann::json j;
        j["in_domain"] = in_domain(m, s);
        j["limit"] = l.str();
        if (l.is(LimitResult::Kind::Converges)) j["value"] = l.value.wire();
        emit(single_json("limit", method_name, seq_text, j), as_json, l.str());
        return kExitPass;
    }
    if (boxhull->parsed()) {
        MethodSpec m = parse_method(method_name, env_params);
        DepthBox b = parse_box(expr, depth);
        DepthBox h = box_hull(m, b);
        emit(single_json("box-hull", method_name, expr, h.str()), as_json, h.str());
        return kExitPass;
    }
    if (boxclosed->parsed()) {
        MethodSpec m = parse_method(method_name, env_params);
        DepthBox b = parse_box(expr, depth);
        bool closed = box_closed(m, b);
        emit(single_json("box-closed", method_name, expr, closed), as_json,
             closed ? "true" : "false");
        if (expect.empty()) return kExitPass;
        bool want = expect == "true" || expect == "1" || expect == "yes";
        return closed == want ? kExitPass : kExitCheckFailed;
    }
    if (boxkernel->parsed()) {
        MethodSpec m = parse_method(method_name, env_params);
        DepthBox b = parse_box(expr, depth);
        DepthBox k = box_kernel(m, b);
        emit(single_json("box-kernel", method_name, expr, k.str()), as_json, k.str());
        return kExitPass;
    }
    if (scenario->parsed()) {
        Report rep;
        if (scenario_name == "ex33") {
            rep = example33_scenario(depth);
        } else if (scenario_name == "sigma") {
            PointSeq a = sigma_a == "one" ? PointSeq::constant(Rat(1)) : PointSeq::constant(Rat(0));
            PointSeq x = sigma_x == "recip"  ? PointSeq::reciprocal(Rat(1))
                         : sigma_x == "const3" ? PointSeq::constant(Rat(3))
                                               : PointSeq::identity();
            rep = sigma_density_scenario(depth, a, x);
        } else {
            std::cerr << "unknown scenario '" << scenario_name << "'\n";
            return kExitUsage;
        }
        emit(rep.to_json(), as_json, rep.text());
        return rep.all_pass() ? kExitPass : kExitCheckFailed;
    }
    if (suite->parsed()) {
        SuiteResult res = run_suite(suite_name, opt);
        emit(res.to_json(), as_json, res.text());
        return res.all_pass() ? kExitPass : kExitCheckFailed;
    }
    if (axioms->parsed()) {
        MethodSpec m = parse_method(method_name, env_params);
        auto corpus = standard_corpus();
        std::vector<std::pair<SeqSpec, SeqSpec>> pairs;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (std::size_t j = i; j < corpus.size(); ++j)
                pairs.emplace_back(corpus[i], corpus[j]);
        auto rep = check_group_axioms(m, pairs);
        nlohmann::json j;
        j["addition_continuous"] = rep.addition_continuous;
        j["negation_continuous"] = rep.negation_continuous;
        j["pairs_checked"] = rep.pairs_checked;
        j["pairs_skipped"] = rep.pairs_skipped;
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        std::string text = std::string("addition: ") +
                           (rep.addition_continuous ? "G-continuous" : "FAILED") +
                           ", negation: " + (rep.negation_continuous ? "G-continuous" : "FAILED") +
                           " (" + std::to_string(rep.pairs_checked) + " pairs, " +
                           std::to_string(rep.pairs_skipped) + " skipped)";
        emit(single_json("group-axioms", method_name, "standard corpus", j), as_json, text);
        return rep.addition_continuous && rep.negation_continuous ? kExitPass : kExitCheckFailed;
    }
    if (closure_base->parsed()) {
        MethodSpec m = parse_method(method_name, env_params);
        RSet a = parse_set(expr);
        auto rep = closure_via_base(m, a, NeighborhoodBase::standard(K));
        emit(rep.to_json(), as_json, rep.text());
        return rep.all_pass() ? kExitPass : kExitCheckFailed;
    }
    if (matreg->parsed()) {
        MatrixSpec spec;
        if (matrix_arg == "cesaro") {
            spec = MatrixSpec::cesaro();
        } else if (matrix_arg.rfind("diag:", 0) == 0) {
            spec = MatrixSpec::scaled_identity(parse_rat(matrix_arg.substr(5)));
        } else if (matrix_arg.rfind("column:", 0) == 0) {
            auto rest = matrix_arg.substr(7);
            auto colon = rest.find(':');
            if (colon == std::string::npos) {
                std::cerr << "expected column:<k>:<p/q>\n";
                return kExitUsage;
            }
            spec = MatrixSpec::constant_column(std::stoll(rest.substr(0, colon)),
                                               parse_rat(rest.substr(colon + 1)));
        } else {
            spec = MatrixSpec::from_file(matrix_arg);
        }
        auto v = check_matrix_regular(spec, env_params);
        nlohmann::json j;
        j["holds"] = v.holds;
        j["scope"] = v.scope;
        j["detail"] = v.detail;
        emit(single_json("matrix-regular", "", matrix_arg, j), as_json,
             (v.holds ? "regular: " : "not regular: ") + v.detail);
        return kExitPass;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gconv::MethodError& e) {
        std::cerr << "method error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
