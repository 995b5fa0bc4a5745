#include "doctest.h"
#include "oracles.hpp"
#include "rectlab/bijection.hpp"
#include "rectlab/generators.hpp"
#include "rectlab/table.hpp"

#include <set>

using namespace rectlab;

TEST_CASE("delta_inv produces guillotine diagonal staircases") {
    const auto d = delta_inv(Permutation::parse("213"));
    CHECK(d.width == 3);
    CHECK(d.height == 3);
    CHECK(validate_drawing(d).ok());
    CHECK(is_guillotine(d));
    CHECK(is_diagonal(d));
    CHECK_THROWS_AS(delta_inv(Permutation::parse("2413")), NotSeparable);
    CHECK_THROWS_AS(delta(pinwheel()), std::invalid_argument);
}

TEST_CASE("round trip on the permutation side, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for_each_separable(n, [](const Permutation& p) { CHECK(delta(delta_inv(p)) == p); });
    }
}

TEST_CASE("delta is a bijection onto guillotine diagonal classes, n <= 6") {
    const auto r = oracle::schroeder(8);
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> images;
        for_each_separable(n, [&](const Permutation& p) { images.insert(canonicalize(delta_inv(p)).code); });
        std::set<std::string> oracle_side;
        for (const auto& c : gen_all_rectangulations(n)) {
            if (avoids(c.drawing, guillotine_diagonal_set)) {
                oracle_side.insert(c.code.code);
                CHECK(canonicalize(delta_inv(delta(c.drawing))) == c.code);
            }
        }
        CHECK(images == oracle_side);
        CHECK(mpz_class(static_cast<unsigned long>(images.size())) == r[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("calibration singles out vertical direct sums") {
    std::vector<DeltaConvention> passing;
    for (const auto& conv : all_conventions()) {
        bool ok = true;
        for (const auto& row : table_rows()) ok = ok && check_translation(row, 6, conv).ok;
        if (ok) passing.push_back(conv);
    }
    REQUIRE(passing.size() == 2);
    for (const auto& conv : passing) CHECK(conv.direct_sum_cut == Orientation::vertical);
    CHECK(passing[0] == calibrated_convention);
}

TEST_CASE("translations hold over oracle classes, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Drawing> gd;
        for (const auto& c : gen_all_rectangulations(n)) {
            if (avoids(c.drawing, guillotine_diagonal_set)) gd.push_back(c.drawing);
        }
        for (const auto& row : table_rows()) {
            const auto r = check_translation(row, gd);
            CHECK_MESSAGE(r.ok, "row " << row.id << " n=" << n);
            CHECK(r.checked == gd.size());
        }
    }
}

TEST_CASE("table rows") {
    CHECK(table_rows().size() == 10);
    CHECK(find_row("1234").oeis == "A006318");
    CHECK(find_row("1345678").case_number == 0);
    CHECK(find_row("12345678").case_number == 10);
    CHECK_THROWS(find_row("135"));
    CHECK(find_case(5)->id == "123457");
}
