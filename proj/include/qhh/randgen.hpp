// Reproducible random instances for the property-test harness.
//
// Everything is driven by a single mt19937_64 stream, so a seed pins the
// whole scenario: the same seed yields the same presentations, the same
// gluing endpoints, and therefore the same verification workload.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qhh/field.hpp"
#include "qhh/glue.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

struct RandOptions {
  int max_vertices = 6;
  int max_arrows = 8;
  int max_relation_len = 4;
  int max_dim = 14;   // quotients above this are redrawn
  bool rsz = false;   // force radical square zero relations
};

// Gluing scenario shape requested from the generator.
enum class BlockShape { Same, Different };
enum class IncidenceShape { Generic, SourceSink };

struct GlueCase {
  Presentation A;
  int e1 = -1, en = -1;
};

class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  // A finite-dimensional monomial presentation within the option bounds.
  // Vertices are named v0, v1, ... and arrows a0, a1, ...; no isolated
  // vertex is produced unless the quiver has no arrows at all.
  Presentation presentation(const RandOptions& opt = {});

  // A presentation together with a glueable vertex pair of the requested
  // shape that passes the characteristic assumption over `field`.
  GlueCase glue_case(BlockShape block, IncidenceShape inc,
                     const FieldSpec& field, const RandOptions& opt = {});

  std::mt19937_64& rng() { return rng_; }

 private:
  int uniform(int lo, int hi);  // inclusive bounds
  Quiver random_quiver(const RandOptions& opt, bool two_groups);
  std::optional<Presentation> sample_on(const Quiver& q,
                                        const RandOptions& opt,
                                        bool force_rsz);

  std::mt19937_64 rng_;
};

}  // namespace qhh
