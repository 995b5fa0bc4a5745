#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rectlab/patterns.hpp"
#include "rectlab/permutations.hpp"

namespace rectlab {

/// One row of the guillotine-diagonal summary table, or the vortex row.
struct TableRow {
    std::string id;                 // avoided pattern digits, e.g. "123457"
    int case_number = 0;            // 1..10 for guillotine rows, 0 for vortices
    PatternSet avoided;             // full geometric set
    std::vector<std::string> permutation_patterns;  // vincular notation
    std::string oeis;
    bool rational = false;

    std::vector<VincularPattern> patterns() const;
    bool guillotine_diagonal() const { return avoided.includes(guillotine_diagonal_set); }
};

const std::vector<TableRow>& table_rows();  // the ten guillotine rows
const TableRow& vortex_row();
/// Accepts the ten table rows, "1345678" and the universal set "12345678".
const TableRow& find_row(std::string_view id);
std::optional<TableRow> find_case(int case_number);

}  // namespace rectlab
