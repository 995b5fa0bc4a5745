#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectlab {

/// Raised when a sequence cannot be obtained (no fixture, network failure).
class OeisUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BFileEntry {
    long index = 0;
    mpz_class value;
};

/// Parses "index value" lines, skipping comments and blank lines.
std::vector<BFileEntry> parse_bfile(const std::string& text);

/// Source of raw b-file text for an A-number such as "A006318".
class OeisTransport {
public:
    virtual ~OeisTransport() = default;
    virtual std::string fetch_bfile(const std::string& id) = 0;  // throws OeisUnavailable
    virtual bool uses_network() const = 0;
};

/// Reads <dir>/bNNNNNN.txt. Never touches the network.
class FixtureTransport : public OeisTransport {
public:
    explicit FixtureTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}
    std::string fetch_bfile(const std::string& id) override;
    bool uses_network() const override { return false; }
    std::filesystem::path path_for(const std::string& id) const;

private:
    std::filesystem::path dir_;
};

/// HTTPS download from oeis.org; writes the result into `cache_dir` when given.
class HttpTransport : public OeisTransport {
public:
    explicit HttpTransport(std::optional<std::filesystem::path> cache_dir = std::nullopt, int timeout_seconds = 20)
        : cache_dir_(std::move(cache_dir)), timeout_(timeout_seconds) {}
    std::string fetch_bfile(const std::string& id) override;
    bool uses_network() const override { return true; }

private:
    std::optional<std::filesystem::path> cache_dir_;
    int timeout_;
};

enum class NetworkPolicy { offline, fetch };

/// Fixture directory: $RECTLAB_OEIS_CACHE if set, else the bundled data/oeis.
std::filesystem::path default_fixture_dir();
std::unique_ptr<OeisTransport> make_transport(NetworkPolicy policy,
                                              const std::optional<std::filesystem::path>& dir = std::nullopt);

/// Accepts the A-numbers cited for the table rows, the vortex row, the
/// simple-whirl sequence and the all-classes sequence.
bool is_cited_sequence(const std::string& id);
const std::vector<std::string>& cited_sequences();

struct OeisComparison {
    std::string id;
    bool available = false;
    std::string error;           // why the sequence was unavailable
    std::vector<int> shifts;     // s with local[n] == oeis[n + s] for every local n
    long first_local_index = 1;  // local values are indexed from this n
    std::size_t compared = 0;
    bool matched() const { return available && !shifts.empty(); }
};

/// Shift search over |s| <= max_shift.
OeisComparison compare_with_oeis(OeisTransport& transport, const std::string& id,
                                 const std::vector<mpz_class>& local, long first_local_index = 1,
                                 int max_shift = 3);
OeisComparison compare_prefix(const std::string& id, const std::vector<BFileEntry>& reference,
                              const std::vector<mpz_class>& local, long first_local_index = 1, int max_shift = 3);

}  // namespace rectlab
