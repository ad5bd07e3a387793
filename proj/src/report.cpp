#include "sdfa/report.hpp"

#include <sstream>

namespace sdfa {

namespace {

using nlohmann::json;

json element_array(const FiniteRing& r, const std::vector<int>& elems, bool raw) {
    json arr = json::array();
    for (int e : elems) {
        if (raw)
            arr.push_back(e);
        else
            arr.push_back(r.render(e));
    }
    return arr;
}

json witness_json(const FiniteRing& r, const Verdict& v, bool raw) {
    if (v.holds || !v.witness) return nullptr;
    json w;
    w["method"] = v.method;
    if (raw) {
        w["a"] = v.witness->first;
        w["b"] = v.witness->second;
    } else {
        w["a"] = r.render(v.witness->first);
        w["b"] = r.render(v.witness->second);
    }
    return w;
}

json fast_json(const std::map<std::string, std::optional<bool>>& fast) {
    json out = json::object();
    for (const auto& [name, value] : fast) {
        if (value)
            out[name] = *value;
        else
            out[name] = "inapplicable";
    }
    return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

json classify_report(const RingAnalysis& a, const ReportOptions& opt) {
    const FiniteRing& r = *a.ring;
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["tool_version"] = kToolVersion;
    doc["mode"] = "classify";

    json ring;
    ring["label"] = r.label();
    ring["order"] = r.order();
    ring["characteristic"] = r.characteristic();
    ring["reduced"] = a.flags.reduced;
    ring["field"] = a.flags.field;
    ring["local"] = a.flags.local;
    ring["von_neumann_regular"] = a.flags.von_neumann_regular;
    ring["boolean"] = a.flags.boolean;
    ring["units"] = a.flags.units;
    ring["nilpotents"] = a.flags.nilpotents;
    ring["zero_divisors"] = a.flags.zero_divisors;
    doc["ring"] = ring;

    json s3;
    s3["all_proper_sdf"] = a.section3.all_proper;
    s3["all_nonzero_proper_sdf"] = a.section3.all_nonzero_proper;
    s3["structural_prediction"] = a.section3.structural_prediction;
    s3["clause"] = to_string(a.section3.clause);
    doc["section3"] = s3;

    json ideals = json::array();
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        const auto& rec = a.records[k];
        json row;
        row["index"] = k;
        row["size"] = rec.ideal.size();
        row["elements"] = element_array(r, rec.ideal.elements(), opt.raw);
        auto gens = rec.ideal.generators().empty() ? rec.ideal.compute_generators()
                                                   : rec.ideal.generators();
        row["generators"] = element_array(r, gens, opt.raw);
        row["proper"] = rec.is_proper;
        row["prime"] = rec.is_prime;
        row["maximal"] = rec.is_maximal;
        row["radical"] = rec.is_radical;
        row["sdf"] = rec.is_sdf;
        row["weakly_sdf"] = rec.is_weakly_sdf;
        row["weakly_prime"] = rec.is_weakly_prime;
        row["quotient_char"] = rec.quotient_char;
        json wit = json::object();
        if (rec.sdf_v) wit["sdf"] = witness_json(r, *rec.sdf_v, opt.raw);
        if (rec.weakly_sdf_v) wit["weakly_sdf"] = witness_json(r, *rec.weakly_sdf_v, opt.raw);
        if (rec.weakly_prime_v)
            wit["weakly_prime"] = witness_json(r, *rec.weakly_prime_v, opt.raw);
        if (rec.prime_v) wit["prime"] = witness_json(r, *rec.prime_v, opt.raw);
        row["witnesses"] = wit;
        row["fast"] = fast_json(rec.fast_verdicts);
        ideals.push_back(row);
    }
    doc["ideals"] = ideals;
    return doc;
}

json verify_report(const Corpus& corpus, const std::vector<PropertyResult>& results) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["tool_version"] = kToolVersion;
    doc["mode"] = "verify";

    json cs;
    cs["zn_max"] = corpus.spec().zn_max;
    cs["include_products"] = corpus.spec().include_products;
    cs["include_poly_quotients"] = corpus.spec().include_poly_quotients;
    cs["include_idealizations"] = corpus.spec().include_idealizations;
    cs["include_amalgamations"] = corpus.spec().include_amalgamations;
    cs["seed"] = corpus.spec().seed;
    cs["rings"] = corpus.size();
    doc["corpus"] = cs;

    int pass = 0, fail = 0, inapplicable = 0;
    json props = json::array();
    for (const auto& res : results) {
        json row;
        row["id"] = res.property_id;
        switch (res.status) {
            case PropertyResult::Status::pass:
                row["status"] = "pass";
                ++pass;
                break;
            case PropertyResult::Status::fail:
                row["status"] = "fail";
                ++fail;
                break;
            case PropertyResult::Status::inapplicable:
                row["status"] = "inapplicable";
                ++inapplicable;
                break;
        }
        row["checked_instances"] = res.checked_instances;
        row["sampled"] = res.sampled;
        if (res.counterexample) {
            json ce;
            ce["ring"] = res.counterexample->ring_label;
            ce["ideal"] = res.counterexample->ideal_elements;
            ce["detail"] = res.counterexample->detail;
            row["counterexample"] = ce;
        } else {
            row["counterexample"] = nullptr;
        }
        props.push_back(row);
    }
    doc["properties"] = props;

    json summary;
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["inapplicable"] = inapplicable;
    doc["summary"] = summary;
    return doc;
}

std::string to_json_string(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string classify_csv(const RingAnalysis& a, const ReportOptions& opt) {
    const FiniteRing& r = *a.ring;
    std::ostringstream os;
    os << "ring,ideal_index,size,elements,proper,prime,maximal,radical,sdf,"
          "weakly_sdf,weakly_prime,quotient_char,sdf_witness\n";
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        const auto& rec = a.records[k];
        os << '"' << r.label() << '"' << ',' << k << ',' << rec.ideal.size() << ',' << '"';
        auto elems = rec.ideal.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) os << ';';
            os << (opt.raw ? std::to_string(elems[i]) : r.render(elems[i]));
        }
        os << '"' << ',' << rec.is_proper << ',' << rec.is_prime << ',' << rec.is_maximal
           << ',' << rec.is_radical << ',' << rec.is_sdf << ',' << rec.is_weakly_sdf << ','
           << rec.is_weakly_prime << ',' << rec.quotient_char << ',';
        if (rec.sdf_v && !rec.sdf_v->holds && rec.sdf_v->witness) {
            auto [wa, wb] = *rec.sdf_v->witness;
            os << '"' << (opt.raw ? std::to_string(wa) : r.render(wa)) << ';'
               << (opt.raw ? std::to_string(wb) : r.render(wb)) << '"';
        }
        os << '\n';
    }
    return os.str();
}

std::string classify_text(const RingAnalysis& a, const ReportOptions& opt) {
    const FiniteRing& r = *a.ring;
    std::ostringstream os;
    os << r.label() << ": order " << r.order() << ", char " << r.characteristic()
       << (a.flags.reduced ? ", reduced" : "") << (a.flags.field ? ", field" : "")
       << (a.flags.local ? ", local" : "")
       << (a.flags.von_neumann_regular ? ", von Neumann regular" : "")
       << (a.flags.boolean ? ", boolean" : "") << "\n";
    os << "every proper ideal sdf: " << yesno(a.section3.all_proper)
       << "; every nonzero proper ideal sdf: " << yesno(a.section3.all_nonzero_proper)
       << " (clause: " << to_string(a.section3.clause) << ")\n\n";
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        const auto& rec = a.records[k];
        os << "ideal #" << k << " (size " << rec.ideal.size() << "): {";
        auto elems = rec.ideal.elements();
        for (std::size_t i = 0; i < elems.size() && i < 16; ++i) {
            if (i) os << ',';
            os << (opt.raw ? std::to_string(elems[i]) : r.render(elems[i]));
        }
        if (elems.size() > 16) os << ",...";
        os << "}\n";
        if (!rec.is_proper) {
            os << "  improper (the whole ring)\n";
            continue;
        }
        os << "  prime " << yesno(rec.is_prime) << ", maximal " << yesno(rec.is_maximal)
           << ", radical " << yesno(rec.is_radical) << ", quotient char "
           << rec.quotient_char << "\n";
        os << "  sdf " << yesno(rec.is_sdf) << ", weakly-sdf " << yesno(rec.is_weakly_sdf)
           << ", weakly-prime " << yesno(rec.is_weakly_prime) << "\n";
        auto wit = [&](const char* name, const std::optional<Verdict>& v) {
            if (v && !v->holds && v->witness)
                os << "  " << name << " witness: a=" << (opt.raw
                                                             ? std::to_string(v->witness->first)
                                                             : r.render(v->witness->first))
                   << " b="
                   << (opt.raw ? std::to_string(v->witness->second)
                               : r.render(v->witness->second))
                   << "\n";
        };
        wit("sdf", rec.sdf_v);
        wit("weakly-sdf", rec.weakly_sdf_v);
        wit("weakly-prime", rec.weakly_prime_v);
        for (const auto& [name, value] : rec.fast_verdicts)
            os << "  criterion " << name << ": "
               << (value ? (*value ? "true" : "false") : "inapplicable") << "\n";
    }
    return os.str();
}

std::string verify_text(const Corpus& corpus, const std::vector<PropertyResult>& results) {
    std::ostringstream os;
    os << "corpus: " << corpus.size() << " rings (zn_max " << corpus.spec().zn_max
       << ", seed " << corpus.spec().seed << ")\n";
    for (const auto& res : results) {
        const char* st = res.status == PropertyResult::Status::pass ? "PASS"
                         : res.status == PropertyResult::Status::fail ? "FAIL"
                                                                      : "N/A ";
        os << st << "  " << res.property_id << "  (" << res.checked_instances
           << " instances" << (res.sampled ? ", sampled" : "") << ")\n";
        if (res.counterexample) {
            os << "      counterexample in " << res.counterexample->ring_label;
            if (!res.counterexample->ideal_elements.empty()) {
                os << ", ideal {";
                for (std::size_t i = 0; i < res.counterexample->ideal_elements.size(); ++i) {
                    if (i) os << ',';
                    os << res.counterexample->ideal_elements[i];
                }
                os << "}";
            }
            os << ": " << res.counterexample->detail << "\n";
        }
    }
    return os.str();
}

}  // namespace sdfa
