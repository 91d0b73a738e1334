#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsiegel/representation.hpp"
#include "qsiegel/subspace.hpp"

namespace qsiegel {

struct WVariant {
  std::string name;
  /// Columns are real coordinates (Re v, Im v) of spanning vectors.
  Mat basis;
  bool expected_mf = false;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string algebra_kind;
  int algebra_param = 1;
  int copies = 1;
  std::vector<WVariant> variants;
  /// Primitive idempotent of the main2 construction, when there is one.
  std::optional<Vec> e1;

  EuclideanJordanAlgebra algebra() const;
  JordanRepresentation representation() const;
  RealSubspace subspace(const WVariant& v) const;
  const WVariant& variant(std::string_view name) const;
};

std::vector<std::string> catalog_list();

/// Throws UnknownEntry.
const CatalogEntry& catalog_get(std::string_view name);

const std::vector<CatalogEntry>& catalog_entries();

}  // namespace qsiegel
