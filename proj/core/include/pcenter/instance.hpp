#ifndef PCENTER_INSTANCE_HPP
#define PCENTER_INSTANCE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcenter {

/// Thrown when an instance file cannot be parsed. Messages name the
/// offending line where one exists.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An undirected weighted graph as read from an OR-Library pmed file.
/// Vertex indices are 1-based as in the file format.
struct GraphInstance {
    struct Edge {
        int u = 0;
        int v = 0;
        double weight = 0.0;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    int p = 0;
};

/// A p-center instance: N clients, M candidate facility sites, a budget p
/// and an N x M matrix of nonnegative finite distances.
///
/// Label vectors remember the original 1-based indices of the surviving
/// clients/facilities so that reduced instances stay traceable.
/// Immutable after construction.
class Instance {
public:
    Instance(int n_clients, int n_facilities, int p, std::vector<double> distances,
             std::vector<int> client_labels = {}, std::vector<int> facility_labels = {});

    int n_clients() const { return n_clients_; }
    int n_facilities() const { return n_facilities_; }
    int p() const { return p_; }

    double distance(int client, int facility) const {
        return distances_[static_cast<std::size_t>(client) * n_facilities_ + facility];
    }
    std::span<const double> row(int client) const {
        return {distances_.data() + static_cast<std::size_t>(client) * n_facilities_,
                static_cast<std::size_t>(n_facilities_)};
    }
    std::span<const double> distances() const { return distances_; }

    const std::vector<int>& client_labels() const { return client_labels_; }
    const std::vector<int>& facility_labels() const { return facility_labels_; }

    /// Copy with a different distance matrix; dimensions, p and labels kept.
    Instance with_distances(std::vector<double> distances) const;

private:
    int n_clients_;
    int n_facilities_;
    int p_;
    std::vector<double> distances_;
    std::vector<int> client_labels_;
    std::vector<int> facility_labels_;
};

/// Parse the OR-Library pmed format: a header "n e p" followed by exactly
/// e edge lines "u v w". Duplicate edges keep the minimum weight.
GraphInstance parse_orlib(std::string_view text);

/// Distances of a graph instance: all-pairs shortest paths, with every
/// vertex acting as both client and facility (N = M). Fails on
/// disconnected graphs, naming an unreachable pair.
Instance graph_to_instance(const GraphInstance& g);

/// Parse the plain matrix format: header "N M p", then N rows of M
/// numbers. Lines starting with '#' are ignored.
Instance parse_matrix(std::string_view text);

/// Serialize an instance in the matrix format accepted by parse_matrix.
std::string write_matrix(const Instance& inst);

/// Deterministic random instance with integer distances drawn uniformly
/// from 0..100 (mt19937 seeded with `seed`).
Instance random_instance(int n, int m, int p, std::uint32_t seed);

} // namespace pcenter

#endif
