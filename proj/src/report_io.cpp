#include "colexent/report_io.hpp"

#include <json.hpp>

#include <sstream>

#include "colexent/serialize.hpp"

namespace colexent {

std::string format_double(double v, int significant_digits) {
    std::ostringstream out;
    out.precision(significant_digits);
    out << v;
    return out.str();
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::tie_with_expected: return "tie_with_expected";
    }
    return "unknown";
}

namespace {

std::string join_argmax(const ExtremalReport& rep) {
    std::string joined;
    for (std::size_t i = 0; i < rep.argmax_sequences.size(); ++i) {
        if (i > 0) joined += "|";
        joined += to_string(rep.argmax_sequences[i]);
    }
    return joined;
}

std::string csv_quote(const std::string& field) {
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted += "\"";
    return quoted;
}

}  // namespace

std::string to_json(const VerificationOutcome& outcome, const ReportFormat& fmt) {
    nlohmann::ordered_json doc;
    doc["claim"] = outcome.claim_id;
    doc["parameter_range"] = outcome.parameter_range;
    doc["holds"] = outcome.holds;
    doc["counterexamples"] = outcome.counterexamples;
    if (fmt.include_elapsed) doc["elapsed_seconds"] = outcome.elapsed.count();
    if (!outcome.details.empty()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const ExtremalReport& rep : outcome.details) {
            nlohmann::ordered_json row;
            row["m"] = rep.m;
            nlohmann::ordered_json argmax = nlohmann::ordered_json::array();
            for (const DegreeSequence& s : rep.argmax_sequences) argmax.push_back(to_string(s));
            row["argmax"] = std::move(argmax);
            row["exact_key"] = rep.exact_key.str();
            row["h"] = rep.h_float;
            row["expected"] = to_string(rep.expected);
            row["verdict"] = verdict_name(rep.verdict);
            rows.push_back(std::move(row));
        }
        doc["reports"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

std::string to_csv(const VerificationOutcome& outcome, const ReportFormat& fmt) {
    std::ostringstream out;
    if (!outcome.details.empty()) {
        out << "m,argmax,exact_key,h,verdict\n";
        for (const ExtremalReport& rep : outcome.details)
            out << rep.m << ',' << csv_quote(join_argmax(rep)) << ',' << rep.exact_key.str() << ','
                << format_double(rep.h_float, fmt.precision) << ',' << verdict_name(rep.verdict)
                << '\n';
        return out.str();
    }
    out << "claim,parameter_range,holds,counterexamples\n";
    std::string cex;
    for (std::size_t i = 0; i < outcome.counterexamples.size(); ++i) {
        if (i > 0) cex += "; ";
        cex += outcome.counterexamples[i];
    }
    out << outcome.claim_id << ',' << csv_quote(outcome.parameter_range) << ','
        << (outcome.holds ? "true" : "false") << ',' << csv_quote(cex) << '\n';
    return out.str();
}

std::string to_text(const VerificationOutcome& outcome, const ReportFormat& fmt) {
    std::ostringstream out;
    out << "claim: " << outcome.claim_id << '\n';
    out << "range: " << outcome.parameter_range << '\n';
    out << "holds: " << (outcome.holds ? "yes" : "no") << '\n';
    if (fmt.include_elapsed)
        out << "elapsed: " << format_double(outcome.elapsed.count(), 4) << "s\n";
    if (outcome.counterexamples.empty()) {
        out << "counterexamples: none\n";
    } else {
        out << "counterexamples:\n";
        for (const std::string& cex : outcome.counterexamples) out << "  - " << cex << '\n';
    }
    for (const ExtremalReport& rep : outcome.details)
        out << "  m=" << rep.m << "  argmax " << join_argmax(rep) << "  key "
            << rep.exact_key.str() << "  h " << format_double(rep.h_float, fmt.precision) << "  "
            << verdict_name(rep.verdict) << '\n';
    return out.str();
}

}  // namespace colexent
