#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outerlabel/outerplanar.hpp"

namespace outerlabel {

class ChainNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ConfigKind { kC1, kC2, kC3 };
std::string to_string(ConfigKind k);

/// C1: (u1,u2). C2: (u1,u2,u3) with d(u1)=2, d(u2)=3. C3: (u1..u5) with
/// d(u3)=4 and d(u2)=d(u4)=2.
struct Configuration {
  ConfigKind kind = ConfigKind::kC1;
  std::vector<Vertex> witnesses;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// First configuration found, trying C1, then C2, then C3; within a kind the
/// instance with the smallest lowest witness id wins. Throws
/// PreconditionError unless δ = 2.
std::optional<Configuration> find_configuration(const OuterplanarEmbedding& emb);
/// Every instance of the given kind, in tie-break order.
std::vector<Configuration> all_configurations(const OuterplanarEmbedding& emb, ConfigKind kind);
bool is_valid_configuration(const OuterplanarEmbedding& emb, const Configuration& c);

/// Faces [u1 u2 u3], ..., [u_{2t-1} u_{2t} u_{2t+1}] read off `spine`, which
/// runs along a block boundary in stored orientation.
struct Chain {
  std::vector<Vertex> spine;
  bool closed = false;  // (u1, u_{2t+1}) is an inner edge
  Vertex w_first = -1;  // only neighbor of u1 outside the chain, when unique
  Vertex w_last = -1;   // same for u_{2t+1}

  int t() const { return static_cast<int>(spine.size() - 1) / 2; }
  Vertex first() const { return spine.front(); }
  Vertex last() const { return spine.back(); }
  /// 1-based spine access, u(1) .. u(2t+1).
  Vertex u(int i) const { return spine[static_cast<size_t>(i - 1)]; }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Maximal chains (t ≥ 2). A run of ears that wraps all the way around a
/// block is reported once, starting at its smallest spine vertex, with the
/// last ear left out so that the spine is a simple path.
std::vector<Chain> enumerate_chains(const OuterplanarEmbedding& emb);

/// Every closed sub-chain whose end vertices each have exactly one neighbor
/// outside the chain, ignoring the C1/C2 preconditions. Tie-break order.
std::vector<Chain> closed_chain_candidates(const OuterplanarEmbedding& emb);

/// Requires Δ = 4, δ = 2 and neither C1 nor C2 (PreconditionError
/// otherwise). Throws ChainNotFound if no candidate exists.
Chain find_closed_chain(const OuterplanarEmbedding& emb);

/// Checks the chain invariants against the host; closed chains are also
/// checked for unique attachments.
bool is_valid_chain(const OuterplanarEmbedding& emb, const Chain& c);

}  // namespace outerlabel
