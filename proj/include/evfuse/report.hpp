#pragma once

#include "evfuse/pipeline.hpp"

#include <iosfwd>
#include <string>

namespace evfuse {

enum class ReportMode { summary, full_trace };
enum class ReportFormat { table, json };

// Human tables print 4 fractional digits, rounded half-to-even on the exact
// binary value; JSON carries shortest round-trip doubles.
void emit_report(std::ostream& out, const RankingReport& report, ReportMode mode, ReportFormat format);

// Fixed 4-digit rendering used by the tables ("-0.0000" is printed as "0.0000").
std::string format_fixed4(double x);

} // namespace evfuse
