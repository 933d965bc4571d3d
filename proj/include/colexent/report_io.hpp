#pragma once

#include <string>

#include "colexent/oracle.hpp"

namespace colexent {

/// Formats v with the given number of significant digits (C locale).
std::string format_double(double v, int significant_digits = 12);

std::string verdict_name(Verdict v);

struct ReportFormat {
    int precision = 12;          // significant digits for floats
    bool include_elapsed = false;  // off by default so reports are byte-stable
};

/// One VerificationOutcome as a JSON object. Exact keys are decimal strings.
std::string to_json(const VerificationOutcome& outcome, const ReportFormat& fmt = {});

/// CSV: per-m rows "m,argmax,exact_key,h,verdict" when the outcome carries
/// details, otherwise a single claim summary row.
std::string to_csv(const VerificationOutcome& outcome, const ReportFormat& fmt = {});

std::string to_text(const VerificationOutcome& outcome, const ReportFormat& fmt = {});

}  // namespace colexent
