#include "rectlab/oeis.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#ifndef RECTLAB_DATA_DIR
#define RECTLAB_DATA_DIR "data"
#endif

namespace rectlab {

namespace {

void check_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A' ||
        !std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed sequence id '" + id + "'");
    }
}

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

}  // namespace

std::vector<BFileEntry> parse_bfile(const std::string& text) {
    std::vector<BFileEntry> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string idx;
        std::string val;
        if (!(ls >> idx >> val)) throw std::runtime_error("b-file: malformed line '" + line + "'");
        out.push_back({std::stol(idx), mpz_class(val)});
    }
    return out;
}

std::filesystem::path FixtureTransport::path_for(const std::string& id) const { return dir_ / bfile_name(id); }

std::string FixtureTransport::fetch_bfile(const std::string& id) {
    check_id(id);
    std::ifstream in(path_for(id));
    if (!in) throw OeisUnavailable("no recorded fixture " + path_for(id).string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string HttpTransport::fetch_bfile(const std::string& id) {
    check_id(id);
    httplib::SSLClient client("oeis.org");
    client.set_connection_timeout(timeout_, 0);
    client.set_read_timeout(timeout_, 0);
    client.set_follow_location(true);
    const std::string path = "/" + id + "/" + bfile_name(id);
    auto res = client.Get(path);
    if (!res) throw OeisUnavailable("fetch " + id + ": " + httplib::to_string(res.error()));
    if (res->status != 200) throw OeisUnavailable("fetch " + id + ": HTTP " + std::to_string(res->status));
    if (cache_dir_) {
        std::filesystem::create_directories(*cache_dir_);
        std::ofstream(*cache_dir_ / bfile_name(id)) << res->body;
    }
    return res->body;
}

std::filesystem::path default_fixture_dir() {
    if (const char* env = std::getenv("RECTLAB_OEIS_CACHE"); env && *env) return env;
    return std::filesystem::path(RECTLAB_DATA_DIR) / "oeis";
}

std::unique_ptr<OeisTransport> make_transport(NetworkPolicy policy, const std::optional<std::filesystem::path>& dir) {
    const auto d = dir.value_or(default_fixture_dir());
    if (policy == NetworkPolicy::offline) return std::make_unique<FixtureTransport>(d);
    return std::make_unique<HttpTransport>(d);
}

const std::vector<std::string>& cited_sequences() {
    static const std::vector<std::string> ids{"A006318", "A106228", "A363809", "A078482", "A033321", "A363810",
                                              "A363811", "A363812", "A363813", "A006012", "A026029", "A002057",
                                              "A342141"};
    return ids;
}

bool is_cited_sequence(const std::string& id) {
    const auto& ids = cited_sequences();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

OeisComparison compare_prefix(const std::string& id, const std::vector<BFileEntry>& reference,
                              const std::vector<mpz_class>& local, long first_local_index, int max_shift) {
    OeisComparison out;
    out.id = id;
    out.available = true;
    out.first_local_index = first_local_index;
    out.compared = local.size();
    std::map<long, mpz_class> ref;
    for (const auto& e : reference) ref.emplace(e.index, e.value);
    for (int s = -max_shift; s <= max_shift; ++s) {
        bool ok = !local.empty();
        for (std::size_t i = 0; i < local.size() && ok; ++i) {
            const auto it = ref.find(first_local_index + static_cast<long>(i) + s);
            ok = it != ref.end() && it->second == local[i];
        }
        if (ok) out.shifts.push_back(s);
    }
    return out;
}

OeisComparison compare_with_oeis(OeisTransport& transport, const std::string& id,
                                 const std::vector<mpz_class>& local, long first_local_index, int max_shift) {
    try {
        return compare_prefix(id, parse_bfile(transport.fetch_bfile(id)), local, first_local_index, max_shift);
    } catch (const OeisUnavailable& e) {
        OeisComparison out;
        out.id = id;
        out.error = e.what();
        out.first_local_index = first_local_index;
        return out;
    }
}

}  // namespace rectlab
