#include "doctest.h"
#include "rectlab/oeis.hpp"

#include <filesystem>
#include <fstream>

using namespace rectlab;

namespace {

class CountingTransport : public OeisTransport {
public:
    std::string body;
    int calls = 0;
    std::string fetch_bfile(const std::string&) override {
        ++calls;
        return body;
    }
    bool uses_network() const override { return false; }
};

std::vector<mpz_class> values(std::initializer_list<long> xs) {
    std::vector<mpz_class> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("b-file parsing") {
    const auto e = parse_bfile("# comment\n0 1\n1 2\n\n2 123456789012345678901234567890\n");
    REQUIRE(e.size() == 3);
    CHECK(e[2].index == 2);
    CHECK(e[2].value == mpz_class("123456789012345678901234567890"));
    CHECK_THROWS(parse_bfile("0\n"));
}

TEST_CASE("shift search") {
    const auto ref = parse_bfile("0 1\n1 2\n2 6\n3 22\n4 90\n5 394\n");
    const auto cmp = compare_prefix("A006318", ref, values({2, 6, 22, 90}), 1);
    CHECK(cmp.matched());
    CHECK(cmp.shifts == std::vector<int>{0});
    const auto shifted = compare_prefix("A006318", ref, values({1, 2, 6, 22}), 1);
    CHECK(shifted.shifts == std::vector<int>{-1});
    CHECK_FALSE(compare_prefix("A006318", ref, values({1, 2, 7}), 1).matched());
}

TEST_CASE("transports") {
    CountingTransport fake;
    fake.body = "1 1\n2 2\n3 6\n";
    const auto cmp = compare_with_oeis(fake, "A006318", values({1, 2, 6}));
    CHECK(fake.calls == 1);
    CHECK(cmp.matched());

    const auto dir = std::filesystem::temp_directory_path() / "rectlab_oeis_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "b006318.txt") << "1 1\n2 2\n";
    auto offline = make_transport(NetworkPolicy::offline, dir);
    CHECK_FALSE(offline->uses_network());
    CHECK(offline->fetch_bfile("A006318") == "1 1\n2 2\n");
    CHECK_THROWS_AS(offline->fetch_bfile("A000001"), OeisUnavailable);
    CHECK_THROWS_AS(offline->fetch_bfile("6318"), std::invalid_argument);
    const auto missing = compare_with_oeis(*offline, "A026029", values({1}));
    CHECK_FALSE(missing.available);
    CHECK_FALSE(missing.error.empty());
    std::filesystem::remove_all(dir);

    CHECK(make_transport(NetworkPolicy::fetch, dir)->uses_network());
}

TEST_CASE("cited sequences") {
    CHECK(cited_sequences().size() == 13);
    CHECK(is_cited_sequence("A026029"));
    CHECK_FALSE(is_cited_sequence("A000045"));
}
