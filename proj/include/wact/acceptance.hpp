#pragma once

#include <iosfwd>

namespace wact {

/// Run every item of the reproduction suite, print one PASS/FAIL line per
/// item, and return whether all passed.
bool run_paper_suite(std::ostream& out);

}  // namespace wact
