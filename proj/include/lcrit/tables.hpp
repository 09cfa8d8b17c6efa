#pragma once

/*
 * Recomputes the reference tables shipped in <data_dir>/tables and marks
 * every disagreement:
 *   maincor  level 32 F(0), F(1/3) and congruent/non-congruent labels
 *   primes   level 32 values at D = -p with the parity checks
 *   cubes    level 27 F(0), F(1/2) and finite/infinite labels
 *   discs    the level registry and its non-invariance lists
 */

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lcrit/arith.hpp"

namespace lcrit {

struct TableReport
{
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t mismatches = 0;
    std::size_t warnings = 0;
};

std::vector<std::string> table_names();

/// Renders the recomputed table to out. Rows with |D| above max_abs_d are
/// listed as skipped. Throws PreconditionError for an unknown name and
/// DataError for a malformed fixture.
TableReport reproduce_table(std::string_view name, std::filesystem::path const & data_dir,
                            std::optional<i64> max_abs_d, unsigned workers, std::ostream & out);

} // namespace lcrit
