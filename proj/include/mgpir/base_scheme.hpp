#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mgpir/bitvec.hpp"
#include "mgpir/graph.hpp"
#include "mgpir/model.hpp"
#include "mgpir/rational.hpp"

namespace mgpir {

/// Which of the two storing servers delivers the first half of the retrieved
/// bits. `flipped` swaps the logical bit roles throughout the plan.
enum class Orientation { standard, flipped };

/// A selector into a base-scheme file: edge index plus a logical bit index in
/// [1..L']. Base plans are expressed in this virtual coordinate system so the
/// multigraph construction can re-target them at XOR sums of file copies.
struct VirtualSelector {
  int edge = 0;
  int index = 0;
};

using VirtualSpec = std::vector<VirtualSelector>;

/// How one retrieved bit is assembled from the answers.
struct LedgerEntry {
  int logical_index = 0;     // bit of the retrieved file, in [1..L']
  int delivering_server = 0; // storing server credited with this bit
  std::vector<std::pair<int, int>> contributors;  // (server, spec position), 1-indexed
};

/// A base-scheme retrieval plan in virtual coordinates, together with the
/// decode ledger. Deterministic given (theta, orientation).
struct BasePlan {
  int theta_edge = 0;
  Orientation orientation = Orientation::standard;
  std::vector<std::vector<VirtualSpec>> per_server;  // [server-1] -> ordered specs
  std::vector<LedgerEntry> ledger;                   // exactly L' entries

  int download() const {
    int d = 0;
    for (const auto& specs : per_server) d += static_cast<int>(specs.size());
    return d;
  }
};

/// Contract every pluggable base scheme implements. The multigraph lift
/// consumes plans through this interface; it requires an even file length and
/// a ledger that attributes every retrieved bit to one of the two storing
/// servers.
class BaseScheme {
 public:
  virtual ~BaseScheme() = default;

  virtual const SimpleGraph& graph() const = 0;
  virtual int file_len() const = 0;        // L'
  virtual int download_total() const = 0;  // D'
  virtual Rational rate() const = 0;
  virtual std::pair<int, int> storing_servers(int edge) const = 0;
  virtual BasePlan plan(int theta_edge, Orientation orientation) const = 0;
};

/// Applies the ledger: XORs each entry's contributing answer bits. Answers
/// are one BitVector per server, in server order.
inline BitVector base_decode(const BasePlan& plan, const std::vector<BitVector>& answers) {
  int file_len = 0;
  for (const auto& e : plan.ledger) file_len = std::max(file_len, e.logical_index);
  BitVector out(file_len);
  for (const auto& e : plan.ledger) {
    int acc = 0;
    for (const auto& [server, pos] : e.contributors) {
      const BitVector& a = answers[server - 1];
      if (pos < 1 || pos > a.size()) throw std::invalid_argument("decode: answer length mismatch");
      acc ^= a.get(pos);
    }
    out.set(e.logical_index, acc);
  }
  return out;
}

/// A base plan lowered to physical per-server queries: virtual selector
/// (e, k) becomes file (e,1) at the coin's physical position of k.
struct MaterializedBasePlan {
  BasePlan plan;
  std::vector<ServerQuery> queries;
};

inline MaterializedBasePlan materialize(const BasePlan& plan, const PermutationPack& coin) {
  MaterializedBasePlan out{plan, {}};
  out.queries.resize(plan.per_server.size());
  for (std::size_t s = 0; s < plan.per_server.size(); ++s) {
    out.queries[s].server = static_cast<int>(s) + 1;
    for (const auto& spec : plan.per_server[s]) {
      AnswerBitSpec phys;
      phys.reserve(spec.size());
      for (const auto& sel : spec) {
        const FileId f{sel.edge, 1};
        phys.push_back({f, coin.apply(f, sel.index)});
      }
      out.queries[s].bits.push_back(std::move(phys));
    }
  }
  return out;
}

}  // namespace mgpir
