#include "rectlab/table.hpp"

#include <stdexcept>

namespace rectlab {

std::vector<VincularPattern> TableRow::patterns() const {
    std::vector<VincularPattern> out;
    for (const auto& p : permutation_patterns) out.push_back(VincularPattern::parse(p));
    return out;
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = [] {
        auto row = [](std::string id, int c, std::vector<std::string> pats, std::string oeis, bool rat) {
            TableRow r;
            r.avoided = PatternSet::parse(id);
            r.id = std::move(id);
            r.case_number = c;
            r.permutation_patterns = std::move(pats);
            r.oeis = std::move(oeis);
            r.rational = rat;
            return r;
        };
        return std::vector<TableRow>{
            row("1234", 1, {}, "A006318", false),
            row("12345", 2, {"2[14]3"}, "A106228", false),
            row("12347", 3, {"21354"}, "A363809", false),
            row("123456", 4, {"2[14]3", "3[41]2"}, "A078482", false),
            row("123457", 5, {"2143"}, "A033321", false),
            row("123458", 6, {"2[14]3", "45312"}, "A363810", false),
            row("123478", 7, {"21354", "45312"}, "A363811", true),
            row("1234567", 8, {"2143", "3[41]2"}, "A363812", false),
            row("1234578", 9, {"2143", "45312"}, "A363813", true),
            row("12345678", 10, {"2143", "3412"}, "A006012", true),
        };
    }();
    return rows;
}

const TableRow& vortex_row() {
    static const TableRow row = [] {
        TableRow r;
        r.id = "1345678";
        r.avoided = vortex_set;
        r.oeis = "A026029";
        return r;
    }();
    return row;
}

const TableRow& find_row(std::string_view id) {
    for (const auto& r : table_rows()) {
        if (r.id == id) return r;
    }
    if (id == vortex_row().id) return vortex_row();
    throw std::invalid_argument("unknown table row '" + std::string(id) + "'");
}

std::optional<TableRow> find_case(int case_number) {
    for (const auto& r : table_rows()) {
        if (r.case_number == case_number) return r;
    }
    return std::nullopt;
}

}  // namespace rectlab
