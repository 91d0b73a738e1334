#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qsiegel/catalog.hpp"
#include "qsiegel/representation.hpp"

namespace qsiegel {

/// Input format of the command line tool:
///   {"algebra": {"kind": "sym_real", "n": 2},
///    "representation": {"kind": "standard", "copies": 1},
///    "W": {"basis": [[...2n reals...], ...]},
///    "tolerances": {"zero": 1e-10, ...},
///    "sampling": {"samples": 20, "seed": 7},
///    "e1": [...]}
/// Only "algebra" and "W" are required.
struct DomainSpec {
  std::string algebra_kind;
  int algebra_param = 1;
  int copies = 1;
  Mat w_basis;
  Tolerances tol = kDefaultTolerances;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<Vec> e1;

  EuclideanJordanAlgebra algebra() const;
  JordanRepresentation representation() const;
  RealSubspace w() const;
};

/// Throws Error(SpecError) on schema violations, including dependent W
/// basis vectors.
DomainSpec parse_spec(const nlohmann::json& j);
DomainSpec load_spec(const std::string& path);

nlohmann::ordered_json spec_to_json(const DomainSpec& spec);
DomainSpec spec_from_catalog(const CatalogEntry& entry, const WVariant& variant);

}  // namespace qsiegel
