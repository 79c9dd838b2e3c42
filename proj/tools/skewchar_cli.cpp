// skewchar: command line front end for the skew character library.
//
// Exit codes: 0 success, 1 verify found a violation, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <skewchar/json.hpp>
#include <skewchar/skewchar.hpp>

namespace {

using skewchar::ojson;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void emit(const ojson& record) { std::cout << record.dump(2) << '\n'; }

void print_terms(const skewchar::Decomposition& dec) {
    for (const auto& [nu, c] : dec.terms()) std::cout << nu.to_string() << ": " << c << '\n';
}

ojson base_record(const std::string& command, ojson inputs) {
    return ojson{{"command", command}, {"inputs", std::move(inputs)}};
}

int run_decompose(const std::string& skew_text, bool json) {
    const auto d = skewchar::parse_skew(skew_text);
    const auto dec = skewchar::skew_character(d);
    if (json) {
        auto rec = base_record("decompose", {{"skew", skewchar::to_json(d)}});
        rec["terms"] = skewchar::to_json(dec);
        emit(rec);
    } else {
        print_terms(dec);
    }
    return 0;
}

int run_coef(const std::string& lam, const std::string& mu, const std::string& nu, bool json) {
    const auto l = skewchar::parse_partition(lam);
    const auto m = skewchar::parse_partition(mu);
    const auto n = skewchar::parse_partition(nu);
    const auto c = skewchar::lr_coefficient(l, m, n);
    if (json) {
        auto rec = base_record("coef", {{"lambda", skewchar::to_json(l)}, {"mu", skewchar::to_json(m)}, {"nu", skewchar::to_json(n)}});
        rec["coeff"] = c;
        emit(rec);
    } else {
        std::cout << c << '\n';
    }
    return 0;
}

int run_classify(const std::string& skew_text, bool json) {
    const auto d = skewchar::parse_skew(skew_text);
    const auto verdict = skewchar::classify_mf(d);
    if (json) {
        auto rec = base_record("classify", {{"skew", skewchar::to_json(d)}});
        rec["verdict"] = skewchar::to_json(verdict);
        emit(rec);
    } else {
        std::cout << (verdict.multiplicity_free ? "multiplicity free" : "not multiplicity free") << " ("
                  << skewchar::to_string(verdict.reason) << ")\n";
    }
    return 0;
}

int run_equal(const std::string& a_text, const std::string& b_text, bool json) {
    const auto a = skewchar::parse_skew(a_text);
    const auto b = skewchar::parse_skew(b_text);
    const bool both_mf = skewchar::classify_mf(a).multiplicity_free && skewchar::classify_mf(b).multiplicity_free;
    const bool trivial = skewchar::trivially_equal(a, b);
    const bool staircase = skewchar::staircase_conjugate_equal(a, b);
    const bool characters = skewchar::characters_equal(a, b);
    const bool necessary = skewchar::necessary_conditions_check(a, b);
    if (json) {
        auto rec = base_record("equal", {{"a", skewchar::to_json(a)}, {"b", skewchar::to_json(b)}});
        ojson verdict{{"trivially_equal", trivial},
                      {"staircase_conjugate_equal", staircase},
                      {"characters_equal", characters},
                      {"necessary_conditions", necessary}};
        verdict["predict_equal_mf"] = both_mf ? ojson(skewchar::predict_equal_mf(a, b)) : ojson(nullptr);
        rec["verdict"] = std::move(verdict);
        emit(rec);
    } else {
        auto yn = [](bool v) { return v ? "yes" : "no"; };
        std::cout << "trivially equal: " << yn(trivial) << '\n'
                  << "staircase conjugate: " << yn(staircase) << '\n'
                  << "characters equal: " << yn(characters) << '\n'
                  << "parts and heights agree: " << yn(necessary) << '\n'
                  << "predicted equal (mf): " << (both_mf ? yn(skewchar::predict_equal_mf(a, b)) : "n/a") << '\n';
    }
    return 0;
}

int run_schubert(const std::string& mode, const std::string& first, const std::string& second, const std::string& box_text,
                 bool json) {
    const auto box = skewchar::parse_box(box_text);
    const auto p = skewchar::parse_partition(first);
    if (mode == "complement") {
        const auto c = skewchar::complement_in_box(p, box);
        if (json) {
            auto rec = base_record("schubert", {{"mode", mode}, {"p", skewchar::to_json(p)}, {"box", box.to_string()}});
            rec["result"] = skewchar::to_json(c);
            emit(rec);
        } else {
            std::cout << c.to_string() << '\n';
        }
        return 0;
    }
    const auto q = skewchar::parse_partition(second);
    if (mode == "star") {
        const auto dec = skewchar::star_product(p, q, box);
        if (json) {
            auto rec = base_record("schubert", {{"mode", mode}, {"mu", skewchar::to_json(p)}, {"nu", skewchar::to_json(q)}, {"box", box.to_string()}});
            rec["terms"] = skewchar::to_json(dec);
            emit(rec);
        } else {
            print_terms(dec);
        }
        return 0;
    }
    const bool holds = skewchar::duality_check(p, q, box);
    if (json) {
        auto rec = base_record("schubert", {{"mode", mode}, {"mu", skewchar::to_json(p)}, {"lambda", skewchar::to_json(q)}, {"box", box.to_string()}});
        rec["verdict"] = holds;
        emit(rec);
    } else {
        std::cout << (holds ? "duality holds" : "duality fails") << '\n';
    }
    return 0;
}

int run_verify(const skewchar::EnumerationBounds& bounds, unsigned jobs, bool json, const std::string& output) {
    const auto report = skewchar::verify_main_theorem(bounds, jobs);
    auto rec = base_record("verify", {{"max_cells", bounds.max_cells}, {"max_part", bounds.max_part}, {"max_rows", bounds.max_rows}});
    rec["report"] = skewchar::to_json(report);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << rec.dump(2) << '\n';
    }
    if (json) {
        emit(rec);
    } else {
        std::cout << "diagrams examined: " << report.diagrams_examined << '\n'
                  << "distinct up to translation/rotation: " << report.distinct_forms << '\n'
                  << "multiplicity free: " << report.mf_count << '\n'
                  << "multiplicity free characters: " << report.equality_classes.size() << '\n'
                  << "staircase confirmations: " << report.staircase_confirmations << '\n'
                  << "staircase diagrams checked against transpose: " << report.staircase_converse_checked << '\n';
        for (const auto& cls : report.equality_classes) {
            if (cls.forms.size() < 2) continue;
            std::cout << "nontrivial class:";
            for (const auto& f : cls.forms) std::cout << "  " << f.to_string();
            std::cout << '\n';
        }
        for (const auto& v : report.violations)
            std::cout << "VIOLATION " << skewchar::to_string(v.kind) << ": " << v.a.to_string() << " vs " << v.b.to_string() << '\n';
        std::cout << (report.confirmed() ? "no violations" : "violations found") << '\n';
    }
    return report.confirmed() ? 0 : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Littlewood-Richardson coefficients, skew characters and their equalities"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured output");

    std::string skew_text, lam, mu, nu, other;
    auto* decompose = app.add_subcommand("decompose", "decompose a skew character, e.g. 3,2,1/2,1");
    decompose->add_option("skew", skew_text, "outer/inner")->required();

    auto* coef = app.add_subcommand("coef", "the LR coefficient c(lambda; mu, nu)");
    coef->add_option("lambda", lam)->required();
    coef->add_option("mu", mu)->required();
    coef->add_option("nu", nu)->required();

    auto* classify = app.add_subcommand("classify", "decide whether a skew character is multiplicity free");
    classify->add_option("skew", skew_text, "outer/inner")->required();

    auto* equal = app.add_subcommand("equal", "compare two skew diagrams");
    equal->add_option("a", skew_text)->required();
    equal->add_option("b", other)->required();

    std::string mode, box_text;
    auto* schubert = app.add_subcommand("schubert", "box complements, restricted products and the duality check");
    schubert->add_option("mode", mode, "complement | star | duality")
        ->required()
        ->check(CLI::IsMember({"complement", "star", "duality"}));
    schubert->add_option("first", lam, "partition (mu for star/duality)")->required();
    schubert->add_option("second", nu, "nu for star, lambda for duality");
    schubert->add_option("--box", box_text, "KxL")->required();

    skewchar::EnumerationBounds bounds{8, 8, 8};
    unsigned jobs = 1;
    std::string output;
    auto* verify = app.add_subcommand("verify", "exhaustively check equal multiplicity free skew characters");
    verify->add_option("--max-cells", bounds.max_cells)->check(CLI::PositiveNumber);
    verify->add_option("--max-part", bounds.max_part)->check(CLI::PositiveNumber);
    verify->add_option("--max-rows", bounds.max_rows)->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_option("--output", output, "also write the structured report to this file");

    for (auto* sub : {decompose, coef, classify, equal, schubert, verify}) sub->add_flag("--json", json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*decompose) return run_decompose(skew_text, json);
        if (*coef) return run_coef(lam, mu, nu, json);
        if (*classify) return run_classify(skew_text, json);
        if (*equal) return run_equal(skew_text, other, json);
        if (*schubert) {
            if (mode != "complement" && nu.empty() && schubert->count("second") == 0) {
                std::cerr << "schubert " << mode << " needs two partitions\n";
                return kExitUsage;
            }
            return run_schubert(mode, lam, nu, box_text, json);
        }
        if (*verify) return run_verify(bounds, jobs, json, output);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
