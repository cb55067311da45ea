#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "poisson/clark.hpp"
#include "poisson/engine.hpp"
#include "poisson/error.hpp"
#include "poisson/events.hpp"

namespace poisson {

/// Malformed configuration; the message carries "source:line".
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kConfigFormatVersion = 1;

/// One declared event: `count region=<lo:hi,...> rel=<eq|ge|le> k=<n>` or
/// `linear f=<weight> K=<threshold>`.
struct EventDecl {
  std::string name;
  std::string kind;
  std::string region;  ///< per-axis lo:hi, comma separated; empty = whole space
  Relation relation = Relation::eq;
  long k = 0;
  std::string weight;
  double threshold = 0.0;
  std::string spec;  ///< normalized declaration text
};

const std::vector<std::string>& known_suites();

struct RunConfig {
  int dimension = 1;
  std::vector<double> sides{1.0};
  double mass = 1.0;
  double lambda = 1.0;
  McSpec mc;
  QuadSpec quad{32, 7, QuadMode::monte_carlo};
  std::vector<std::string> suites;
  std::vector<EventDecl> events;

  std::vector<std::string> boundary_events;
  std::vector<std::string> margulis_russo_events;
  double margulis_russo_dlambda = 0.05;
  std::string deviation_event;
  std::vector<double> deviation_lambdas{1.0, 1.5, 2.0};
  std::vector<std::string> profile_family;
  std::vector<double> profile_p{1.0, 2.0, kInfinity};
  std::size_t clark_n_outer = 1000;
  std::vector<std::size_t> clark_grids{8, 32, 128};
  std::size_t clark_n_inner = 200;
  std::string out_dir = "reports";

  PointSpace space() const;
  Model model() const;
  EventSet event(const std::string& name) const;
  /// The declaration of a count event, or nullptr.
  const EventDecl* find(const std::string& name) const;
  Region region_of(const EventDecl& decl) const;
  /// Normalized key = value text; the provenance hash is taken over it.
  std::string canonical() const;
  void validate() const;
};

/// Parses the flat `key = value` format; `#` starts a comment.
RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);
/// The configuration used when no file is given.
RunConfig default_config();
/// POISSON_SEED overrides mc.seed.
void apply_environment(RunConfig& config);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);

}  // namespace poisson
