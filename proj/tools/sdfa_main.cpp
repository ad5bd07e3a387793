#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdfa/classify.hpp"
#include "sdfa/dsl.hpp"
#include "sdfa/harness.hpp"
#include "sdfa/report.hpp"

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceError = 3;

void emit(const std::string& content, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(out_file, std::ios::binary);
    if (!os) throw sdfa::input_error("cannot open output file: " + out_file);
    os << content;
}

sdfa::CorpusSpec corpus_spec_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw sdfa::input_error("cannot open corpus file: " + path);
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw sdfa::input_error("malformed corpus file: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw sdfa::input_error("corpus file must hold a JSON object");
    sdfa::CorpusSpec spec;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "zn_max")
                spec.zn_max = value.get<int>();
            else if (key == "include_products")
                spec.include_products = value.get<bool>();
            else if (key == "include_poly_quotients")
                spec.include_poly_quotients = value.get<bool>();
            else if (key == "include_idealizations")
                spec.include_idealizations = value.get<bool>();
            else if (key == "include_amalgamations")
                spec.include_amalgamations = value.get<bool>();
            else if (key == "seed")
                spec.seed = value.get<std::uint64_t>();
            else
                throw sdfa::input_error("unknown corpus field: " + key);
        } catch (const nlohmann::json::exception& e) {
            throw sdfa::input_error("bad corpus field '" + key + "': " + e.what());
        }
    }
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"exact laboratory for square-difference factor absorbing ideals "
                 "of finite commutative rings"};
    app.require_subcommand(1);

    // classify
    std::string cl_spec, cl_format = "json", cl_out;
    bool cl_raw = false;
    auto* classify = app.add_subcommand("classify", "classify every ideal of a ring");
    classify->add_option("spec", cl_spec, "ring spec, e.g. \"zn(12)\"")->required();
    classify->add_option("--format", cl_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    classify->add_option("--out", cl_out, "write the report to a file");
    classify->add_flag("--raw", cl_raw, "print raw element indices");

    // verify
    int v_zn_max = -1;
    std::uint64_t v_seed = 0;
    std::vector<std::string> v_only;
    std::string v_corpus, v_format = "json", v_out;
    bool v_list = false;
    auto* verify = app.add_subcommand("verify", "run the theorem property suite");
    verify->add_option("--zn-max", v_zn_max, "largest Z_n in the corpus (default 120)");
    verify->add_option("--seed", v_seed, "seed for sampled checks");
    verify->add_option("--only", v_only, "run only these property ids");
    verify->add_option("--corpus", v_corpus, "corpus spec JSON file");
    verify->add_option("--format", v_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", v_out, "write the report to a file");
    verify->add_flag("--list", v_list, "list property ids and exit");

    // witness
    std::string w_spec, w_gens, w_property;
    auto* witness = app.add_subcommand("witness", "print the certified witness for one ideal");
    witness->add_option("spec", w_spec, "ring spec or ideal(<ring>;gens=[...])")->required();
    witness->add_option("--gens", w_gens, "ideal generators, e.g. \"[4]\" or \"(0,0,1)\"");
    witness->add_option("--property", w_property, "sdf | weakly-sdf | prime | weakly-prime")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        sdfa::RingPtr ring = sdfa::parse_ring_spec(cl_spec);
        sdfa::RingAnalysis a = sdfa::analyze_ring(ring);
        sdfa::ReportOptions opt{cl_raw};
        if (cl_format == "json")
            emit(sdfa::to_json_string(sdfa::classify_report(a, opt)), cl_out);
        else if (cl_format == "csv")
            emit(sdfa::classify_csv(a, opt), cl_out);
        else
            emit(sdfa::classify_text(a, opt), cl_out);
        return 0;
    }

    if (verify->parsed()) {
        if (v_list) {
            for (const auto& id : sdfa::property_ids())
                std::cout << id << "\n";
            return 0;
        }
        sdfa::CorpusSpec spec;
        if (!v_corpus.empty()) spec = corpus_spec_from_file(v_corpus);
        if (v_zn_max > 0) spec.zn_max = v_zn_max;
        if (v_seed != 0) spec.seed = v_seed;

        std::vector<std::string> ids = v_only.empty() ? sdfa::property_ids() : v_only;
        for (const auto& id : ids) sdfa::property_description(id);  // unknown -> error

        sdfa::Corpus corpus = sdfa::build_corpus(spec);
        std::vector<sdfa::PropertyResult> results;
        for (const auto& id : ids) results.push_back(sdfa::run_property(id, corpus));

        if (v_format == "json")
            emit(sdfa::to_json_string(sdfa::verify_report(corpus, results)), v_out);
        else
            emit(sdfa::verify_text(corpus, results), v_out);
        return sdfa::all_passed(results) ? 0 : kExitVerificationFailed;
    }

    if (witness->parsed()) {
        sdfa::ParsedIdeal parsed = sdfa::parse_ideal_spec(w_spec);
        sdfa::Ideal ideal = parsed.ideal;
        if (!w_gens.empty())
            ideal = sdfa::Ideal::generated(parsed.ring,
                                           sdfa::parse_element_list(w_gens, parsed.ring));
        sdfa::Verdict v;
        if (w_property == "sdf")
            v = sdfa::is_sdf_bruteforce(ideal);
        else if (w_property == "weakly-sdf")
            v = sdfa::is_weakly_sdf_bruteforce(ideal);
        else if (w_property == "prime")
            v = sdfa::is_prime(ideal);
        else if (w_property == "weakly-prime")
            v = sdfa::is_weakly_prime(ideal);
        else
            throw sdfa::input_error("unknown property: " + w_property +
                                    " (expected sdf, weakly-sdf, prime or weakly-prime)");
        if (v.holds) {
            std::cout << "holds\n";
        } else {
            auto [a, b] = *v.witness;
            const auto& r = *parsed.ring;
            bool ok = w_property == "sdf"           ? sdfa::verify_sdf_witness(ideal, a, b)
                      : w_property == "weakly-sdf"  ? sdfa::verify_weakly_sdf_witness(ideal, a, b)
                      : w_property == "prime"       ? sdfa::verify_prime_witness(ideal, a, b)
                                                    : sdfa::verify_weakly_prime_witness(ideal, a, b);
            if (!ok) throw sdfa::defect_error("witness failed re-verification");
            std::cout << "witness: a=" << r.render(a) << " b=" << r.render(b)
                      << "  (indices " << a << "," << b << "; re-verified)\n";
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sdfa::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResourceError;
    } catch (const sdfa::defect_error& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const sdfa::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
