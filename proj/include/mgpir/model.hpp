#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mgpir/bitvec.hpp"
#include "mgpir/graph.hpp"
#include "mgpir/rng.hpp"

namespace mgpir {

/// Identifies one stored file: the j-th copy of edge i's file group.
struct FileId {
  int edge = 0;
  int copy = 1;
  auto operator<=>(const FileId&) const = default;
};

inline std::string to_string(const FileId& f) {
  return "(" + std::to_string(f.edge) + "," + std::to_string(f.copy) + ")";
}

/// One stored bit: `index` is 1-indexed into the file's bit vector.
struct BitSelector {
  FileId file;
  int index = 0;
  auto operator<=>(const BitSelector&) const = default;
};

/// One answer bit: the XOR of the selected stored bits. Nonempty, no
/// duplicate selectors.
using AnswerBitSpec = std::vector<BitSelector>;

/// Everything one server is asked to send, in order.
struct ServerQuery {
  int server = 0;
  std::vector<AnswerBitSpec> bits;
};

inline std::vector<FileId> all_files(const MultiGraph& g) {
  std::vector<FileId> out;
  for (int e = 1; e <= g.base.num_edges(); ++e)
    for (int c = 1; c <= g.multiplicity; ++c) out.push_back({e, c});
  return out;
}

/// The user's private randomness: one independent permutation of [L] per
/// file. perm[k-1] is the physical position of logical bit k.
class PermutationPack {
 public:
  PermutationPack() = default;

  static PermutationPack identity(const MultiGraph& g, int file_len) {
    PermutationPack p;
    p.init(g, file_len);
    std::vector<int> id(file_len);
    for (int i = 0; i < file_len; ++i) id[i] = i + 1;
    for (auto& perm : p.perms_) perm = id;
    return p;
  }

  static PermutationPack random(const MultiGraph& g, int file_len, Rng& rng) {
    PermutationPack p = identity(g, file_len);
    for (auto& perm : p.perms_) rng.shuffle(perm);
    return p;
  }

  int file_len() const { return file_len_; }

  const std::vector<int>& perm(const FileId& f) const { return perms_[linear(f)]; }

  void set_perm(const FileId& f, std::vector<int> perm) {
    if (static_cast<int>(perm.size()) != file_len_) {
      throw std::invalid_argument("permutation pack: wrong length");
    }
    perms_[linear(f)] = std::move(perm);
  }

  /// Physical position of logical bit `logical` of file `f`.
  int apply(const FileId& f, int logical) const { return perms_[linear(f)][logical - 1]; }

  /// Logical position stored at physical position `physical`.
  int invert(const FileId& f, int physical) const {
    const auto& p = perms_[linear(f)];
    for (int k = 0; k < file_len_; ++k) {
      if (p[k] == physical) return k + 1;
    }
    throw std::logic_error("permutation pack: not a permutation");
  }

 private:
  void init(const MultiGraph& g, int file_len) {
    num_edges_ = g.base.num_edges();
    multiplicity_ = g.multiplicity;
    file_len_ = file_len;
    perms_.resize(static_cast<std::size_t>(num_edges_) * multiplicity_);
  }

  std::size_t linear(const FileId& f) const {
    if (f.edge < 1 || f.edge > num_edges_ || f.copy < 1 || f.copy > multiplicity_) {
      throw std::out_of_range("permutation pack: no such file " + to_string(f));
    }
    return static_cast<std::size_t>(f.edge - 1) * multiplicity_ + (f.copy - 1);
  }

  int num_edges_ = 0;
  int multiplicity_ = 0;
  int file_len_ = 0;
  std::vector<std::vector<int>> perms_;
};

/// All permutations of [len], in lexicographic order; used by the exhaustive
/// privacy audit to enumerate a file's coin space.
inline std::vector<std::vector<int>> all_permutations(int len) {
  std::vector<int> p(len);
  for (int i = 0; i < len; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// The stored contents: one bit vector of length L per file of the topology.
class Database {
 public:
  Database(MultiGraph graph, int file_len)
      : graph_(std::move(graph)),
        file_len_(file_len),
        files_(static_cast<std::size_t>(graph_.file_count()), BitVector(file_len)) {
    if (file_len < 1) throw std::invalid_argument("database: file length must be >= 1");
  }

  const MultiGraph& graph() const { return graph_; }
  int file_len() const { return file_len_; }

  const BitVector& file(const FileId& f) const { return files_[linear(f)]; }
  BitVector& file(const FileId& f) { return files_[linear(f)]; }

 private:
  std::size_t linear(const FileId& f) const {
    if (f.edge < 1 || f.edge > graph_.base.num_edges() || f.copy < 1 ||
        f.copy > graph_.multiplicity) {
      throw std::out_of_range("database: no such file " + to_string(f));
    }
    return static_cast<std::size_t>(f.edge - 1) * graph_.multiplicity + (f.copy - 1);
  }

  MultiGraph graph_;
  int file_len_;
  std::vector<BitVector> files_;
};

/// Deterministic: the same (graph, file_len, seed) always yields the same
/// contents.
inline Database random_database(const MultiGraph& graph, int file_len, std::uint64_t seed) {
  Database db(graph, file_len);
  Rng rng(Rng::mix({0x6d6770697264626eULL, seed}));
  for (const FileId& f : all_files(graph)) {
    for (int k = 1; k <= file_len; ++k) db.file(f).set(k, rng.bit());
  }
  return db;
}

/// Evaluates one server's answer: bit k of the result is the XOR of the
/// stored bits selected by the k-th spec. Rejects selectors for files the
/// server does not store.
inline BitVector evaluate_answer(const ServerQuery& query, const Database& db) {
  const MultiGraph& g = db.graph();
  if (query.server < 1 || query.server > g.base.num_vertices) {
    throw std::invalid_argument("answer: no such server");
  }
  BitVector out(static_cast<int>(query.bits.size()));
  for (std::size_t k = 0; k < query.bits.size(); ++k) {
    if (query.bits[k].empty()) throw std::invalid_argument("answer: empty spec");
    int acc = 0;
    for (const BitSelector& s : query.bits[k]) {
      if (!g.base.incident(query.server, s.file.edge)) {
        throw std::invalid_argument("answer: server " + std::to_string(query.server) +
                                    " does not store file " + to_string(s.file));
      }
      acc ^= db.file(s.file).get(s.index);
    }
    out.set(static_cast<int>(k) + 1, acc);
  }
  return out;
}

inline std::vector<BitVector> evaluate_all(const std::vector<ServerQuery>& queries,
                                           const Database& db) {
  std::vector<BitVector> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(evaluate_answer(q, db));
  return out;
}

/// Canonical form of a server's observable query: the spec sequence is kept
/// (its order is observable), selectors inside each spec are sorted.
struct CanonicalQuery {
  int server = 0;
  std::vector<AnswerBitSpec> bits;

  bool operator==(const CanonicalQuery&) const = default;

  /// Unambiguous text encoding usable as a map key.
  std::string key() const {
    std::string s;
    for (const auto& spec : bits) {
      for (std::size_t i = 0; i < spec.size(); ++i) {
        if (i) s.push_back('+');
        s += std::to_string(spec[i].file.edge);
        s.push_back('.');
        s += std::to_string(spec[i].file.copy);
        s.push_back('.');
        s += std::to_string(spec[i].index);
      }
      s.push_back(';');
    }
    return s;
  }
};

inline CanonicalQuery canonical_query(const ServerQuery& q) {
  CanonicalQuery c{q.server, q.bits};
  for (auto& spec : c.bits) {
    std::sort(spec.begin(), spec.end());
    for (std::size_t i = 1; i < spec.size(); ++i) {
      if (spec[i] == spec[i - 1]) throw std::invalid_argument("query: duplicate selector");
    }
  }
  return c;
}

// -- transcript serialization -------------------------------------------------

inline nlohmann::json selector_json(const BitSelector& s) {
  return {{"edge", s.file.edge}, {"copy", s.file.copy}, {"index", s.index}};
}

inline nlohmann::json transcript_json(const FileId& theta, const std::vector<ServerQuery>& queries,
                                      const std::vector<BitVector>& answers) {
  nlohmann::json per_server = nlohmann::json::array();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    nlohmann::json bits = nlohmann::json::array();
    for (const auto& spec : queries[i].bits) {
      nlohmann::json js = nlohmann::json::array();
      for (const auto& sel : spec) js.push_back(selector_json(sel));
      bits.push_back(js);
    }
    per_server.push_back({{"server", queries[i].server},
                          {"bits", bits},
                          {"answer", answers[i].to_string()}});
  }
  return {{"theta", {{"edge", theta.edge}, {"copy", theta.copy}}}, {"per_server", per_server}};
}

}  // namespace mgpir
