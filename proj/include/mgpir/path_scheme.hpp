#pragma once

#include <stdexcept>
#include <utility>

#include "mgpir/base_scheme.hpp"

namespace mgpir {

/// Retrieval scheme for the path on N servers, edge i connecting servers i
/// and i+1. Files are two bits; one bit is downloaded from every server. To
/// fetch file theta the user XOR-chains logical bit 1 leftwards to server
/// theta and logical bit 2 rightwards from server theta+1, so each storing
/// server delivers exactly one of the two bits and the rate is 2/N.
class PathScheme final : public BaseScheme {
 public:
  explicit PathScheme(int num_servers) : graph_(path_graph(num_servers)) {
    if (num_servers < 2) throw std::invalid_argument("path scheme: need at least 2 servers");
  }

  const SimpleGraph& graph() const override { return graph_; }
  int file_len() const override { return 2; }
  int download_total() const override { return graph_.num_vertices; }
  Rational rate() const override { return rational(2, graph_.num_vertices); }

  std::pair<int, int> storing_servers(int edge) const override {
    check_theta(edge);
    return {edge, edge + 1};
  }

  BasePlan plan(int theta_edge, Orientation orientation) const override {
    check_theta(theta_edge);
    const int n = graph_.num_vertices;
    // logical roles of the two chains; flipped swaps them throughout
    const int left = orientation == Orientation::standard ? 1 : 2;
    const int right = 3 - left;

    BasePlan p;
    p.theta_edge = theta_edge;
    p.orientation = orientation;
    p.per_server.resize(n);
    p.per_server[0] = {{{1, left}}};
    for (int i = 2; i <= theta_edge; ++i) {
      p.per_server[i - 1] = {{{i - 1, left}, {i, left}}};
    }
    for (int i = theta_edge + 1; i <= n - 1; ++i) {
      p.per_server[i - 1] = {{{i - 1, right}, {i, right}}};
    }
    p.per_server[n - 1] = {{{n - 1, right}}};

    LedgerEntry first;  // chain S_1..S_theta telescopes to w_theta(left)
    first.logical_index = left;
    first.delivering_server = theta_edge;
    for (int s = 1; s <= theta_edge; ++s) first.contributors.emplace_back(s, 1);
    LedgerEntry second;  // chain S_{theta+1}..S_N telescopes to w_theta(right)
    second.logical_index = right;
    second.delivering_server = theta_edge + 1;
    for (int s = theta_edge + 1; s <= n; ++s) second.contributors.emplace_back(s, 1);
    p.ledger = {std::move(first), std::move(second)};
    return p;
  }

 private:
  void check_theta(int edge) const {
    if (edge < 1 || edge > graph_.num_edges()) {
      throw std::invalid_argument("path scheme: theta out of range");
    }
  }

  SimpleGraph graph_;
};

/// Negative control: a reliable path variant that downloads both chains on
/// the left side, so both bits of the desired file arrive via server theta.
/// It deliberately violates the symmetric retrieval property.
class SkewedPathScheme final : public BaseScheme {
 public:
  explicit SkewedPathScheme(int num_servers) : graph_(path_graph(num_servers)) {
    if (num_servers < 2) throw std::invalid_argument("path scheme: need at least 2 servers");
  }

  const SimpleGraph& graph() const override { return graph_; }
  int file_len() const override { return 2; }
  int download_total() const override { return 2 * graph_.num_vertices; }
  Rational rate() const override { return rational(1, graph_.num_vertices); }

  std::pair<int, int> storing_servers(int edge) const override { return {edge, edge + 1}; }

  BasePlan plan(int theta_edge, Orientation) const override {
    if (theta_edge < 1 || theta_edge > graph_.num_edges()) {
      throw std::invalid_argument("path scheme: theta out of range");
    }
    const int n = graph_.num_vertices;
    BasePlan p;
    p.theta_edge = theta_edge;
    p.per_server.resize(n);
    p.per_server[0] = {{{1, 1}}, {{1, 2}}};
    for (int i = 2; i <= n - 1; ++i) {
      p.per_server[i - 1] = {{{i - 1, 1}, {i, 1}}, {{i - 1, 2}, {i, 2}}};
    }
    p.per_server[n - 1] = {{{n - 1, 1}}, {{n - 1, 2}}};
    for (int bit = 1; bit <= 2; ++bit) {
      LedgerEntry e;
      e.logical_index = bit;
      e.delivering_server = theta_edge;  // both bits credited to the same server
      for (int s = 1; s <= theta_edge; ++s) e.contributors.emplace_back(s, bit);
      p.ledger.push_back(std::move(e));
    }
    return p;
  }

 private:
  SimpleGraph graph_;
};

// -- convenience entry points for the path scheme ----------------------------

inline MaterializedBasePlan path_plan(int num_servers, int theta_edge, const PermutationPack& coin,
                                      Orientation orientation = Orientation::standard) {
  return materialize(PathScheme(num_servers).plan(theta_edge, orientation), coin);
}

/// Returns the two recovered bits (in logical order 1,2) plus the ledger.
inline std::pair<BitVector, std::vector<LedgerEntry>> path_decode(
    const std::vector<BitVector>& answers, const MaterializedBasePlan& plan) {
  return {base_decode(plan.plan, answers), plan.plan.ledger};
}

inline Rational path_rate(int num_servers) {
  if (num_servers < 2) throw std::invalid_argument("path rate: need at least 2 servers");
  return rational(2, num_servers);
}

}  // namespace mgpir
