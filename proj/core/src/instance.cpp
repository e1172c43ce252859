#include "pcenter/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <utility>

namespace pcenter {

namespace {

// Splits text into lines, dropping '\r' and anything after '#'.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string line(text.substr(pos, end - pos));
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) out.emplace_back(lineno, line);
        pos = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": expected integer " + what +
                         ", got '" + tok + "'");
    return value;
}

double parse_number(const std::string& tok, int lineno, const char* what) {
    try {
        std::size_t used = 0;
        double value = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected number " + what +
                         ", got '" + tok + "'");
    }
}

std::vector<int> default_labels(int count) {
    std::vector<int> labels(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    return labels;
}

} // namespace

Instance::Instance(int n_clients, int n_facilities, int p, std::vector<double> distances,
                   std::vector<int> client_labels, std::vector<int> facility_labels)
    : n_clients_(n_clients),
      n_facilities_(n_facilities),
      p_(p),
      distances_(std::move(distances)),
      client_labels_(std::move(client_labels)),
      facility_labels_(std::move(facility_labels)) {
    if (n_clients_ < 1 || n_facilities_ < 1)
        throw std::invalid_argument("instance needs at least one client and one facility");
    if (p_ < 1 || p_ > n_facilities_)
        throw std::invalid_argument("p must satisfy 1 <= p <= n_facilities");
    if (distances_.size() != static_cast<std::size_t>(n_clients_) * n_facilities_)
        throw std::invalid_argument("distance matrix has wrong size");
    for (double d : distances_)
        if (!std::isfinite(d) || d < 0.0)
            throw std::invalid_argument("distances must be finite and nonnegative");
    if (client_labels_.empty()) client_labels_ = default_labels(n_clients_);
    if (facility_labels_.empty()) facility_labels_ = default_labels(n_facilities_);
    if (client_labels_.size() != static_cast<std::size_t>(n_clients_) ||
        facility_labels_.size() != static_cast<std::size_t>(n_facilities_))
        throw std::invalid_argument("label lists must match instance dimensions");
}

Instance Instance::with_distances(std::vector<double> distances) const {
    return Instance(n_clients_, n_facilities_, p_, std::move(distances), client_labels_,
                    facility_labels_);
}

GraphInstance parse_orlib(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty input, expected header 'n e p'");

    auto header = tokens_of(lines[0].second);
    if (header.size() != 3)
        throw ParseError("line " + std::to_string(lines[0].first) +
                         ": header must be 'n e p', got " + std::to_string(header.size()) +
                         " fields");
    GraphInstance g;
    g.vertex_count = parse_int(header[0], lines[0].first, "n");
    int edge_count = parse_int(header[1], lines[0].first, "e");
    g.p = parse_int(header[2], lines[0].first, "p");
    if (g.vertex_count < 1)
        throw ParseError("line " + std::to_string(lines[0].first) + ": n must be positive");
    if (edge_count < 0)
        throw ParseError("line " + std::to_string(lines[0].first) + ": e must be nonnegative");
    if (g.p < 1 || g.p > g.vertex_count)
        throw ParseError("line " + std::to_string(lines[0].first) +
                         ": p must satisfy 1 <= p <= n");

    if (static_cast<int>(lines.size()) - 1 != edge_count)
        throw ParseError("expected " + std::to_string(edge_count) + " edge lines, found " +
                         std::to_string(lines.size() - 1));

    // (u, v) with u < v -> index into g.edges, for min-weight dedup.
    std::map<std::pair<int, int>, std::size_t> seen;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        int lineno = lines[li].first;
        auto toks = tokens_of(lines[li].second);
        if (toks.size() != 3)
            throw ParseError("line " + std::to_string(lineno) + ": edge must be 'u v w', got " +
                             std::to_string(toks.size()) + " fields");
        int u = parse_int(toks[0], lineno, "u");
        int v = parse_int(toks[1], lineno, "v");
        double w = parse_number(toks[2], lineno, "w");
        if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count)
            throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop not allowed");
        if (w < 0.0 || !std::isfinite(w))
            throw ParseError("line " + std::to_string(lineno) + ": negative weight");
        auto key = std::minmax(u, v);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, g.edges.size());
            g.edges.push_back({u, v, w});
        } else {
            auto& e = g.edges[it->second];
            e.weight = std::min(e.weight, w);
        }
    }
    return g;
}

Instance graph_to_instance(const GraphInstance& g) {
    const int n = g.vertex_count;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n) * n, inf);
    auto at = [&](int i, int j) -> double& {
        return dist[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i) at(i, i) = 0.0;
    for (const auto& e : g.edges) {
        double w = std::min(at(e.u - 1, e.v - 1), e.weight);
        at(e.u - 1, e.v - 1) = w;
        at(e.v - 1, e.u - 1) = w;
    }
    // Floyd-Warshall
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            double dik = at(i, k);
            if (dik == inf) continue;
            for (int j = 0; j < n; ++j) {
                double cand = dik + at(k, j);
                if (cand < at(i, j)) at(i, j) = cand;
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) == inf)
                throw std::invalid_argument("graph is disconnected: no path between vertices " +
                                            std::to_string(i + 1) + " and " + std::to_string(j + 1));
    return Instance(n, n, g.p, std::move(dist));
}

Instance parse_matrix(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty input, expected header 'N M p'");

    auto header = tokens_of(lines[0].second);
    if (header.size() != 3)
        throw ParseError("line " + std::to_string(lines[0].first) +
                         ": header must be 'N M p'");
    int n = parse_int(header[0], lines[0].first, "N");
    int m = parse_int(header[1], lines[0].first, "M");
    int p = parse_int(header[2], lines[0].first, "p");

    if (static_cast<int>(lines.size()) - 1 != n)
        throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));
    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        int lineno = lines[static_cast<std::size_t>(i) + 1].first;
        auto toks = tokens_of(lines[static_cast<std::size_t>(i) + 1].second);
        if (static_cast<int>(toks.size()) != m)
            throw ParseError("line " + std::to_string(lineno) + ": row " + std::to_string(i + 1) +
                             " has " + std::to_string(toks.size()) + " of " + std::to_string(m) +
                             " expected entries");
        for (const auto& t : toks) dist.push_back(parse_number(t, lineno, "distance"));
    }
    try {
        return Instance(n, m, p, std::move(dist));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string write_matrix(const Instance& inst) {
    std::ostringstream os;
    os << inst.n_clients() << ' ' << inst.n_facilities() << ' ' << inst.p() << '\n';
    for (int i = 0; i < inst.n_clients(); ++i) {
        for (int j = 0; j < inst.n_facilities(); ++j) {
            if (j > 0) os << ' ';
            char buf[32];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, inst.distance(i, j));
            os << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
        }
        os << '\n';
    }
    return os.str();
}

Instance random_instance(int n, int m, int p, std::uint32_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("random_instance: n, m must be >= 1");
    if (p < 1 || p > m) throw std::invalid_argument("random_instance: need 1 <= p <= m");
    std::mt19937 rng(seed);
    std::vector<double> dist(static_cast<std::size_t>(n) * m);
    // modulo instead of uniform_int_distribution keeps draws identical
    // across standard library implementations
    for (auto& d : dist) d = static_cast<double>(rng() % 101u);
    return Instance(n, m, p, std::move(dist));
}

} // namespace pcenter
