#include "turanlab/extremal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "turanlab/canonical.hpp"
#include "turanlab/enumeration.hpp"

namespace turanlab {

namespace {

struct MaxTracker {
    CopyCount value = 0;
    bool any = false;
    std::vector<std::string> witnesses;  // canonical g6 of attaining graphs
    bool truncated = false;

    void offer(CopyCount count, const Graph& g) {
        if (!any || count > value) {
            value = count;
            any = true;
            witnesses.clear();
            truncated = false;
        } else if (count < value) {
            return;
        }
        std::string key = canonical_graph6(g);
        auto it = std::lower_bound(witnesses.begin(), witnesses.end(), key);
        if (it != witnesses.end() && *it == key) return;
        if (witnesses.size() >= kWitnessCap) {
            truncated = true;
            // Keep the lexicographically smallest cap-many witnesses so the
            // stored set does not depend on visit order.
            if (it == witnesses.end()) return;
            witnesses.insert(it, key);
            witnesses.pop_back();
            return;
        }
        witnesses.insert(it, key);
    }
};

ExtremalRecord finish(MaxTracker&& best, int n, const Graph& h, const Graph& f, bool exhaustive) {
    ExtremalRecord rec;
    rec.n = n;
    rec.h_g6 = canonical_graph6(h);
    rec.f_g6 = canonical_graph6(f);
    rec.value = best.any ? best.value : 0;
    rec.witnesses = std::move(best.witnesses);
    rec.exhaustive = exhaustive;
    rec.witnesses_truncated = best.truncated;
    return rec;
}

}  // namespace

ExtremalRecord generalized_turan(int n, const Graph& h, const Graph& f, int threads) {
    MaxTracker best;
    enumerate_free_graphs(
        n, f, [&](const Graph& g) { best.offer(count_copies(h, g), g); }, threads);
    return finish(std::move(best), n, h, f, true);
}

ExtremalRecord generalized_turan_over_stream(std::istream& source, int n, const Graph& h,
                                             const Graph& f) {
    MaxTracker best;
    filter_graph6_stream(source, f, [&](const std::string&, const Graph& g) {
        if (g.order() != n)
            throw Error("WrongOrder", "stream contains a graph on " + std::to_string(g.order()) +
                                          " vertices, expected " + std::to_string(n));
        best.offer(count_copies(h, g), g);
    });
    return finish(std::move(best), n, h, f, false);
}

bool is_degenerate_pair(const Graph& h, const Graph& f) {
    if (h.order() == 0 || f.order() == 0)
        throw Error("InvalidArgument", "degenerate-pair test needs nonempty graphs");
    return exists_homomorphism(f, h);
}

std::string Catalog::format_line(const ExtremalRecord& rec) {
    std::string witness_field;
    for (size_t i = 0; i < rec.witnesses.size(); ++i) {
        if (i > 0) witness_field.push_back(';');
        witness_field += rec.witnesses[i];
    }
    return std::to_string(rec.n) + "\t" + rec.h_g6 + "\t" + rec.f_g6 + "\t" +
           std::to_string(rec.value) + "\t" + (rec.exhaustive ? "1" : "0") + "\t" + witness_field;
}

ExtremalRecord Catalog::parse_line(const std::string& line, size_t lineno) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (fields.size() != 6)
        throw IoFailure("catalog line " + std::to_string(lineno) + ": expected 6 fields, got " +
                        std::to_string(fields.size()));
    ExtremalRecord rec;
    try {
        rec.n = std::stoi(fields[0]);
        rec.value = std::stoull(fields[3]);
    } catch (const std::exception&) {
        throw IoFailure("catalog line " + std::to_string(lineno) + ": bad numeric field");
    }
    rec.h_g6 = fields[1];
    rec.f_g6 = fields[2];
    if (fields[4] != "0" && fields[4] != "1")
        throw IoFailure("catalog line " + std::to_string(lineno) + ": bad exhaustive flag");
    rec.exhaustive = fields[4] == "1";
    if (!fields[5].empty()) {
        size_t pos = 0;
        while (true) {
            size_t semi = fields[5].find(';', pos);
            if (semi == std::string::npos) {
                rec.witnesses.push_back(fields[5].substr(pos));
                break;
            }
            rec.witnesses.push_back(fields[5].substr(pos, semi - pos));
            pos = semi + 1;
        }
    }
    rec.witnesses_truncated = rec.witnesses.size() >= kWitnessCap;
    return rec;
}

Catalog::Catalog(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in.is_open()) return;  // a fresh catalog; created on first put
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ExtremalRecord rec = parse_line(line, lineno);
        index_[Key{rec.n, rec.h_g6, rec.f_g6}] = rec;
    }
    if (in.bad()) throw IoFailure("error reading catalog " + path_);
}

void Catalog::put(const ExtremalRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out.is_open()) throw IoFailure("cannot open catalog " + path_ + " for append");
    out << format_line(rec) << "\n";
    out.flush();
    if (!out) throw IoFailure("error appending to catalog " + path_);
    index_[Key{rec.n, rec.h_g6, rec.f_g6}] = rec;
}

std::optional<ExtremalRecord> Catalog::get(int n, const Graph& h, const Graph& f) const {
    auto it = index_.find(Key{n, canonical_graph6(h), canonical_graph6(f)});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<ExtremalRecord> Catalog::entries_for(const Graph& h, const Graph& f) const {
    std::string hk = canonical_graph6(h), fk = canonical_graph6(f);
    std::vector<ExtremalRecord> out;
    for (const auto& [key, rec] : index_) {
        if (std::get<1>(key) == hk && std::get<2>(key) == fk) out.push_back(rec);
    }
    // The map is ordered by (n, h, f), so records already come out ascending n.
    return out;
}

}  // namespace turanlab
