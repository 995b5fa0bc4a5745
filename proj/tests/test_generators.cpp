#include "doctest.h"
#include "oracles.hpp"
#include "rectlab/generators.hpp"
#include "rectlab/table.hpp"

#include <algorithm>
#include <set>

using namespace rectlab;

namespace {

// Pinwheel with a second pinwheel inside its centre square.
Drawing nested_pinwheels() {
    Drawing d{9, 9, {}};
    for (const Rect& r : pinwheel().rects) {
        if (r == Rect{1, 1, 2, 2}) continue;
        d.rects.push_back({r.x_lo * 3, r.y_lo * 3, r.x_hi * 3, r.y_hi * 3});
    }
    for (const Rect& r : pinwheel().rects) d.rects.push_back({r.x_lo + 3, r.y_lo + 3, r.x_hi + 3, r.y_hi + 3});
    return d;
}

std::set<std::string> codes(const std::vector<Drawing>& ds) {
    std::set<std::string> out;
    for (const auto& d : ds) out.insert(canonicalize(d).code);
    return out;
}

}  // namespace

TEST_CASE("bijective and oracle routes agree per row, n <= 6") {
    for (const auto& row : table_rows()) {
        for (int n = 1; n <= 6; ++n) {
            const auto a = gen_class(n, row.avoided, ClassMethod::bijective);
            const auto b = gen_class(n, row.avoided, ClassMethod::oracle);
            CHECK_MESSAGE(codes(a) == codes(b), "row " << row.id << " n=" << n);
            CHECK(count_class(n, row.avoided) == a.size());
        }
    }
    CHECK_THROWS_AS(gen_class(4, vortex_set, ClassMethod::bijective), std::invalid_argument);
}

TEST_CASE("frozen row counts") {
    CHECK(count_class(10, PatternSet::parse("1234")) == 206098);
    CHECK(count_class(10, PatternSet::parse("12345678")) == 31520);
    CHECK(count_class(7, vortex_set) == 858);
    CHECK_THROWS_AS(count_class(9, vortex_set), ResourceLimit);
}

TEST_CASE("generating tree rules") {
    const Signature root{1, 1, 1, 1};
    const auto kids = tree_children(root);
    REQUIRE(kids.size() == 4);
    CHECK(kids[0].second == Signature{1, 2, 1, 1});
    CHECK(kids[3].second == Signature{2, 1, 1, 1});
    CHECK(apply_step({1, 2, 3, 1}, {3, 2}) == Signature{1, 2, 2, 2});
    CHECK_THROWS(apply_step({2, 1, 1, 1}, {3, 1}));
    CHECK_THROWS(apply_step({1, 1, 2, 1}, {3, 3}));
}

TEST_CASE("tree level sizes are Catalan powers") {
    const auto levels = whirl_tree(7);
    for (int k = 0; k <= 7; ++k) {
        CHECK(mpz_class(static_cast<unsigned long>(levels.sizes[static_cast<std::size_t>(k)])) ==
              oracle::catalan_power(4, k));
        std::uint64_t total = 0;
        for (const auto& [sig, mult] : levels.signatures[static_cast<std::size_t>(k)]) {
            total += mult;
            CHECK(sig[0] + sig[1] + sig[2] + sig[3] <= 4 + k);
            CHECK(*std::min_element(sig.begin(), sig.end()) >= 1);
        }
        CHECK(total == levels.sizes[static_cast<std::size_t>(k)]);
    }
    CHECK(tree_paths(3).size() == 48);
}

TEST_CASE("builder matches oracle simple whirls, depths 0..2") {
    for (int depth = 0; depth <= 2; ++depth) {
        std::set<std::string> built;
        for (const auto& path : tree_paths(depth)) {
            const Drawing d = build_simple_whirl(path);
            REQUIRE(validate_drawing(d).ok());
            CHECK(is_simple_whirl(d));
            Signature s{1, 1, 1, 1};
            for (const auto& step : path) s = apply_step(s, step);
            CHECK(signature_of(d) == s);
            built.insert(canonicalize(d).code);
        }
        std::set<std::string> found;
        for (const auto& c : gen_all_rectangulations(5 + depth)) {
            if (is_simple_whirl(c.drawing)) found.insert(c.code.code);
        }
        CHECK(built == found);
        CHECK(built.size() == tree_paths(depth).size());
    }
}

TEST_CASE("whirl predicates") {
    const Drawing p = pinwheel();
    const auto s = extract_segments(p);
    CHECK(is_vortex(s));
    CHECK(is_whirl(s));
    CHECK_FALSE(is_peelable(p));
    CHECK(is_simple_whirl(p));
    CHECK(signature_of(p) == Signature{1, 1, 1, 1});

    const Drawing slabs{1, 2, {{0, 0, 1, 1}, {0, 1, 1, 2}}};
    CHECK_FALSE(is_whirl(extract_segments(slabs)));
    CHECK_THROWS(peel(slabs));
}

TEST_CASE("peeling a full-width slab returns the pinwheel") {
    Drawing d{3, 4, {}};
    for (const Rect& r : pinwheel().rects) d.rects.push_back(r);
    d.rects.push_back({0, 3, 3, 4});
    REQUIRE(validate_drawing(d).ok());
    CHECK(is_whirl(extract_segments(d)));
    CHECK(is_peelable(d));
    CHECK_FALSE(is_simple_whirl(d));
    CHECK(unpeel_count(d) == 1);
    CHECK(equivalent(peel(d), pinwheel()));
    CHECK(equivalent(peel(rotate_cw(d)), rotate_cw(peel(d))));
}

TEST_CASE("peel is well defined on oracle whirls, n <= 7") {
    for (const auto& c : gen_all_rectangulations(7)) {
        if (!is_whirl(extract_segments(c.drawing))) continue;
        const Drawing core = peel(c.drawing);
        CHECK(is_whirl(extract_segments(core)));
        CHECK_FALSE(is_peelable(core));
        CHECK(is_simple_whirl(core) == is_empty_interior_whirl(c.drawing));
        CHECK(core.size() + static_cast<std::size_t>(unpeel_count(c.drawing)) == c.drawing.size());
        CHECK(canonicalize(rotate_cw(core)) == canonicalize(peel(rotate_cw(c.drawing))));
    }
}

TEST_CASE("nested windmills") {
    const Drawing d = nested_pinwheels();
    REQUIRE(validate_drawing(d).ok());
    const auto s = extract_segments(d);
    CHECK(is_vortex(s));
    CHECK(find_windmills(s).size() == 2);
    CHECK(windmills_nested(d));
    CHECK(innermost_windmill(s)->interior == Rect{4, 4, 5, 5});

    Drawing side{6, 3, {}};
    for (const Rect& r : pinwheel().rects) {
        side.rects.push_back(r);
        side.rects.push_back({r.x_lo + 3, r.y_lo, r.x_hi + 3, r.y_hi});
    }
    CHECK_FALSE(windmills_nested(side));
}

TEST_CASE("collapse and empty-interior whirls") {
    const Drawing d = nested_pinwheels();
    CHECK_FALSE(is_empty_interior_whirl(d));
    const Drawing outer = collapse_interior(d, Rect{3, 3, 6, 6});
    CHECK(outer.size() == 5);
    CHECK(equivalent(outer, pinwheel()));
    CHECK(is_empty_interior_whirl(pinwheel()));
}

TEST_CASE("vortex composition identity, n <= 7") {
    std::vector<std::uint64_t> p(8, 0), z(8, 0), v(8, 0);
    for (int n = 1; n <= 7; ++n) {
        for (const auto& c : gen_all_rectangulations(n)) {
            const auto s = extract_segments(c.drawing);
            if (!is_vortex(s)) continue;
            ++v[static_cast<std::size_t>(n)];
            if (avoids(s, PatternSet::all())) ++z[static_cast<std::size_t>(n)];
            if (is_empty_interior_whirl(c.drawing)) ++p[static_cast<std::size_t>(n)];
            if (const auto w = innermost_windmill(s)) {
                CHECK(avoids(sub_drawing(c.drawing, w->interior), PatternSet::all()));
            }
        }
    }
    const auto composed = compose_vortex_counts(p, z, 7);
    const auto expect = oracle::vortex_series(7);
    for (int n = 1; n <= 7; ++n) {
        CHECK(composed[static_cast<std::size_t>(n)] == v[static_cast<std::size_t>(n)]);
        CHECK(mpz_class(static_cast<unsigned long>(v[static_cast<std::size_t>(n)])) ==
              expect[static_cast<std::size_t>(n)]);
    }
}
