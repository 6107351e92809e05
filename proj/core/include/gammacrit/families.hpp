#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammacrit/graph.hpp"

namespace gammacrit {

/// Closed-form values the literature predicts for an instance. Attached as
/// data only; no solver reads them.
struct Prediction {
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> sd;
  std::optional<std::size_t> q;
};

struct FamilyInstance {
  Graph graph;
  std::string family_id;
  std::map<std::string, long long> params;
  Prediction predicted;
  /// Structural names ("x", "v_1", "u_3", ...) to vertex indices.
  std::map<std::string, Vertex> labels;
  std::vector<std::string> tags;
};

// All constructors throw Error{BadParams} on out-of-range parameters.

/// P_n on 0-1-...-(n-1), n >= 1.
FamilyInstance make_path(std::size_t n);
/// C_n, n >= 3.
FamilyInstance make_cycle(std::size_t n);
/// K_{1,t}: center 0, leaves 1..t, t >= 1.
FamilyInstance make_star(std::size_t t);
/// K_{s,t}, 1 <= s <= t: part one is 0..s-1.
FamilyInstance make_complete_bipartite(std::size_t s, std::size_t t);
/// K_n, n >= 1.
FamilyInstance make_complete(std::size_t n);
/// Wheel: hub 0 joined to the cycle 1..rim, rim >= 3.
FamilyInstance make_wheel(std::size_t rim);
/// Star K_{1,t} with t-d edges subdivided; 1 <= d <= t.
FamilyInstance make_wounded_spider(std::size_t t, std::size_t d);
/// Star K_{1,t} with every edge subdivided, t >= 1.
FamilyInstance make_spider(std::size_t t);
/// k four-cycles sharing one vertex v, k >= 1.
FamilyInstance make_g_k(std::size_t k);
/// K_{3,k+5} plus a pendant leaf on each vertex of the 3-side, k >= 0.
FamilyInstance make_a_k(std::size_t k);
/// G with one pendant leaf per vertex. Throws Error{Disconnected}.
FamilyInstance make_corona_k1(const Graph& g, const std::string& base_name = "G");

/// Builds a family instance from a string id and named integer parameters,
/// e.g. ("g_k", {{"k", 2}}). Throws Error{BadParams} for unknown ids or
/// missing parameters.
FamilyInstance make_family(const std::string& family_id,
                           const std::map<std::string, long long>& params);
std::vector<std::string> family_ids();

// ---- Family F: labelled trees grown from P_4 by two attachment operations.

enum class Status : std::uint8_t { A = 0, B = 1 };

enum class FamilyOpKind : std::uint8_t {
  /// At an A-vertex v: attach path x-y-z via vx; x,y get B, z gets A.
  AttachThree,
  /// At a B-vertex v: attach path x-y via vx; x gets B, y gets A.
  AttachTwo,
};

struct FamilyOp {
  FamilyOpKind kind;
  Vertex at;

  friend bool operator==(const FamilyOp&, const FamilyOp&) = default;
};

struct StatusTree {
  Graph graph;
  std::vector<Status> status;
  std::vector<FamilyOp> trace;

  VertexList a_vertices() const;
  VertexList b_vertices() const;
};

/// P_4 0-1-2-3 with leaves A and supports B.
StatusTree family_f_base();

/// Throws Error{StatusMismatch | IndexOutOfRange}.
StatusTree family_f_apply(const StatusTree& t, FamilyOp op);

/// Replays a trace from the base.
StatusTree family_f_replay(const std::vector<FamilyOp>& trace);

/// Closure of the base under both operations up to max_n vertices, one
/// representative per underlying tree, sorted by the tree's canonical code.
/// Throws Error{BadParams} for max_n < 4.
std::vector<StatusTree> family_f_enumerate(std::size_t max_n);

}  // namespace gammacrit
