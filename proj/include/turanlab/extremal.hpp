#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "turanlab/counting.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

constexpr size_t kWitnessCap = 100;

// One computed value of ex(n, H, F) plus the attaining graphs. Witness graph6
// strings are canonical and sorted; at most kWitnessCap are stored, with the
// cap noted in witnesses_truncated.
struct ExtremalRecord {
    int n = 0;
    std::string h_g6;
    std::string f_g6;
    CopyCount value = 0;
    std::vector<std::string> witnesses;
    bool exhaustive = false;
    bool witnesses_truncated = false;
};

// ex(n, h, f) by built-in isomorph-free enumeration (exhaustive record).
ExtremalRecord generalized_turan(int n, const Graph& h, const Graph& f, int threads = 1);

// Same maximization over an externally supplied graph6 stream. Freeness is
// re-checked here; completeness cannot be certified, so exhaustive = false.
ExtremalRecord generalized_turan_over_stream(std::istream& source, int n, const Graph& h,
                                             const Graph& f);

// True iff f maps homomorphically into h, i.e. f embeds in a blow-up of h;
// equivalently ex(n, h, f) = o(n^{|V(h)|}).
bool is_degenerate_pair(const Graph& h, const Graph& f);

// Append-only store of extremal records, one tab-separated line per record:
// n, h_g6, f_g6, value, exhaustive flag, semicolon-joined witness list.
// Re-reading the file reproduces the index; the latest record per key wins.
class Catalog {
public:
    explicit Catalog(std::string path);

    void put(const ExtremalRecord& rec);

    std::optional<ExtremalRecord> get(int n, const Graph& h, const Graph& f) const;

    // Records for a fixed pair, ascending n.
    std::vector<ExtremalRecord> entries_for(const Graph& h, const Graph& f) const;

    const std::string& path() const { return path_; }
    size_t size() const { return index_.size(); }

    static std::string format_line(const ExtremalRecord& rec);
    static ExtremalRecord parse_line(const std::string& line, size_t lineno);

private:
    using Key = std::tuple<int, std::string, std::string>;

    std::string path_;
    std::map<Key, ExtremalRecord> index_;
};

}  // namespace turanlab
