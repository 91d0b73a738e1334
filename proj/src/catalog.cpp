#include "qsiegel/catalog.hpp"

#include <cmath>

#include "qsiegel/error.hpp"

namespace qsiegel {

namespace {

// Columns from row-wise literals; each inner list is one spanning vector.
Mat vectors(int m, std::initializer_list<std::initializer_list<double>> rows) {
  Mat out(m, static_cast<Eigen::Index>(rows.size()));
  Eigen::Index c = 0;
  for (const auto& r : rows) {
    Eigen::Index i = 0;
    for (double v : r) out(i++, c) = v;
    ++c;
  }
  return out;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  const double h = 1.0 / std::sqrt(2.0);

  {
    CatalogEntry e{"heisenberg-rank1", "U = R, V = C, R_x = x/2", "rank1", 1, 1, {}, std::nullopt};
    e.variants = {
        {"W=C", vectors(2, {{1, 0}, {0, 1}}), true, "open orbit, S = {0}"},
        {"W=R", vectors(2, {{1, 0}}), true, "S = R, Q real on S"},
        {"W=0", Mat(2, 0), false, "S = C, Im Q(1, i) = -1"},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"heisenberg-rank1x2", "U = R, V = C^2, two copies of R_x = x/2",
                   "rank1", 1, 2, {}, std::nullopt};
    e.variants = {
        {"W=R^2", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), true, "real form"},
        {"W=Cx0", vectors(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}), false, "S = 0 x C"},
        {"W=CxR", vectors(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}}), true,
         "P = C x 0 gives k >= 1 strata at the cone boundary"},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"diag2", "U = R^2, V = C^2, componentwise action", "diagonal", 2, 1, {},
                   Vec::Unit(2, 0)};
    e.variants = {
        {"W=V", Mat::Identity(4, 4), true, "S = {0}, P = V"},
        {"W=R^2", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), true, "real form"},
        {"W=RxC", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}), true,
         "main2 subspace for e1 = (1, 0)"},
        {"W=span(1,1)", vectors(4, {{h, h, 0, 0}}), false,
         "S contains e1 and i(1,-1); Q(e1, i(1,-1)) = (-i, 0)"},
        {"W=0", Mat(4, 0), false, "S = V"},
    };
    out.push_back(std::move(e));
  }
  {
    Vec e1 = Vec::Zero(3);
    e1(0) = 1.0;
    CatalogEntry e{"sym2-main2", "U = Sym(2,R), V = C^2, R_x v = xv/2", "sym_real", 2, 1,
                   {}, e1};
    e.variants = {
        {"W=P+S", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}), true,
         "e1 = E11: S = R x 0, P = 0 x C"},
        {"W=R^2", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), true, "real form"},
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"sym2-skew", "U = Sym(2,R), V = C^2, skew real subspace", "sym_real", 2,
                   1, {}, std::nullopt};
    e.variants = {
        {"W=span((1,0),(0,i))", vectors(4, {{1, 0, 0, 0}, {0, 0, 0, 1}}), false,
         "Q((1,0), (0,i)) has imaginary off-diagonal part"},
    };
    out.push_back(std::move(e));
  }
  {
    Vec e1 = Vec::Zero(4);
    e1(0) = 1.0;
    CatalogEntry e{"herm2-main2", "U = Herm(2,C), V = C^2, R_x v = xv/2", "herm_complex", 2,
                   1, {}, e1};
    e.variants = {
        {"W=P+S", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}), true,
         "e1 = E11: S = R x 0, P = 0 x C"},
        {"W=R^2", vectors(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), false,
         "Q(e1, e2) has a nonzero imaginary part in Herm(2,C)"},
    };
    out.push_back(std::move(e));
  }
  {
    Vec e1 = Vec::Zero(6);
    e1(0) = 1.0;
    CatalogEntry e{"sym3-main2", "U = Sym(3,R), V = C^3, R_x v = xv/2", "sym_real", 3, 1,
                   {}, e1};
    e.variants = {
        {"W=P+S",
         vectors(6, {{1, 0, 0, 0, 0, 0},
                     {0, 1, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0, 0},
                     {0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 1}}),
         true, "e1 = E11: S = R x 0 x 0, P = 0 x C^2"},
        {"W=R^3", vectors(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}),
         true, "real form"},
        {"W=RxRxC",
         vectors(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                     {0, 0, 0, 0, 0, 1}}),
         true, "mixed real and complex factors"},
    };
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

EuclideanJordanAlgebra CatalogEntry::algebra() const {
  return EuclideanJordanAlgebra::from_kind(algebra_kind, algebra_param);
}

JordanRepresentation CatalogEntry::representation() const {
  return JordanRepresentation::standard(algebra(), copies);
}

RealSubspace CatalogEntry::subspace(const WVariant& v) const {
  return v.basis.cols() == 0 ? RealSubspace::zero(v.basis.rows())
                             : RealSubspace::span(v.basis);
}

const WVariant& CatalogEntry::variant(std::string_view vname) const {
  for (const auto& v : variants) {
    if (v.name == vname) return v;
  }
  throw Error(ErrorCode::UnknownEntry,
              "entry '" + name + "' has no W variant '" + std::string(vname) + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_get(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::UnknownEntry, "no catalog entry '" + std::string(name) + "'");
}

}  // namespace qsiegel
