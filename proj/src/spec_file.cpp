#include "qsiegel/spec_file.hpp"

#include <fstream>

#include "qsiegel/error.hpp"

namespace qsiegel {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::SpecError, what); }

int positive_int(const nlohmann::json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(std::string("'") + key + "' must be a positive integer");
  }
  return v.get<int>();
}

Vec real_vector(const nlohmann::json& arr, const std::string& what) {
  if (!arr.is_array()) fail(what + " must be an array of numbers");
  Vec out(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) fail(what + " must contain only numbers");
    out(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  }
  if (!out.allFinite()) fail(what + " has non-finite entries");
  return out;
}

}  // namespace

EuclideanJordanAlgebra DomainSpec::algebra() const {
  return EuclideanJordanAlgebra::from_kind(algebra_kind, algebra_param);
}

JordanRepresentation DomainSpec::representation() const {
  return JordanRepresentation::standard(algebra(), copies);
}

RealSubspace DomainSpec::w() const {
  return w_basis.cols() == 0 ? RealSubspace::zero(w_basis.rows())
                             : RealSubspace::span(w_basis, tol.rank);
}

DomainSpec parse_spec(const nlohmann::json& j) {
  if (!j.is_object()) fail("spec must be a JSON object");
  DomainSpec s;
  try {
    if (!j.contains("algebra") || !j["algebra"].is_object()) fail("missing 'algebra' object");
    const auto& a = j["algebra"];
    if (!a.contains("kind") || !a["kind"].is_string()) fail("algebra.kind must be a string");
    s.algebra_kind = a["kind"].get<std::string>();
    if (s.algebra_kind == "rank1") {
      s.algebra_param = 1;
    } else if (s.algebra_kind == "diagonal") {
      if (!a.contains("r")) fail("diagonal algebras need 'r'");
      s.algebra_param = positive_int(a, "r");
    } else if (s.algebra_kind == "sym_real" || s.algebra_kind == "herm_complex") {
      if (!a.contains("n")) fail(s.algebra_kind + " algebras need 'n'");
      s.algebra_param = positive_int(a, "n");
    } else {
      fail("unknown algebra kind '" + s.algebra_kind + "'");
    }

    if (j.contains("representation")) {
      const auto& r = j["representation"];
      if (!r.is_object()) fail("'representation' must be an object");
      if (r.contains("kind") && r["kind"] != "standard") {
        fail("only the 'standard' representation kind is supported");
      }
      if (r.contains("copies")) s.copies = positive_int(r, "copies");
    }

    const auto alg = s.algebra();
    const int m = 2 * alg.matrix_size() * s.copies;
    if (!j.contains("W") || !j["W"].is_object() || !j["W"].contains("basis")) {
      fail("missing 'W.basis'");
    }
    const auto& basis = j["W"]["basis"];
    if (!basis.is_array()) fail("W.basis must be an array of vectors");
    s.w_basis = Mat(m, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Vec v = real_vector(basis[k], "W.basis[" + std::to_string(k) + "]");
      if (v.size() != m) {
        fail("W.basis[" + std::to_string(k) + "] has length " + std::to_string(v.size()) +
             ", expected " + std::to_string(m));
      }
      s.w_basis.col(static_cast<Eigen::Index>(k)) = v;
    }

    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      if (!t.is_object()) fail("'tolerances' must be an object");
      auto read = [&](const char* key, double& dst) {
        if (!t.contains(key)) return;
        if (!t[key].is_number() || t[key].get<double>() <= 0.0) {
          fail(std::string("tolerances.") + key + " must be a positive number");
        }
        dst = t[key].get<double>();
      };
      read("zero", s.tol.zero);
      read("rank", s.tol.rank);
      read("cone", s.tol.cone);
      read("eig", s.tol.eig);
      read("sub", s.tol.sub);
      read("psd", s.tol.psd);
    }
    if (s.w_basis.cols() > 0 && RealSubspace::span(s.w_basis, s.tol.rank).dim() != s.w_basis.cols()) {
      fail("W.basis vectors are linearly dependent");
    }

    if (j.contains("sampling")) {
      const auto& sm = j["sampling"];
      if (!sm.is_object()) fail("'sampling' must be an object");
      if (sm.contains("samples")) s.samples = positive_int(sm, "samples");
      if (sm.contains("seed")) {
        if (!sm["seed"].is_number_unsigned()) fail("sampling.seed must be a non-negative integer");
        s.seed = sm["seed"].get<std::uint64_t>();
      }
    }
    if (j.contains("e1")) {
      s.e1 = real_vector(j["e1"], "e1");
      if (s.e1->size() != alg.dim()) fail("e1 has the wrong length");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SpecError) throw;
    fail(e.what());
  }
  return s;
}

DomainSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_spec(j);
}

nlohmann::ordered_json spec_to_json(const DomainSpec& spec) {
  nlohmann::ordered_json j;
  j["algebra"]["kind"] = spec.algebra_kind;
  if (spec.algebra_kind == "diagonal") j["algebra"]["r"] = spec.algebra_param;
  if (spec.algebra_kind == "sym_real" || spec.algebra_kind == "herm_complex") {
    j["algebra"]["n"] = spec.algebra_param;
  }
  j["representation"]["kind"] = "standard";
  j["representation"]["copies"] = spec.copies;
  auto basis = nlohmann::ordered_json::array();
  for (Eigen::Index k = 0; k < spec.w_basis.cols(); ++k) {
    basis.push_back(std::vector<double>(spec.w_basis.col(k).data(),
                                        spec.w_basis.col(k).data() + spec.w_basis.rows()));
  }
  j["W"]["basis"] = basis;
  if (spec.samples || spec.seed) {
    if (spec.samples) j["sampling"]["samples"] = *spec.samples;
    if (spec.seed) j["sampling"]["seed"] = *spec.seed;
  }
  if (spec.e1) j["e1"] = std::vector<double>(spec.e1->data(), spec.e1->data() + spec.e1->size());
  return j;
}

DomainSpec spec_from_catalog(const CatalogEntry& entry, const WVariant& variant) {
  DomainSpec s;
  s.algebra_kind = entry.algebra_kind;
  s.algebra_param = entry.algebra_param;
  s.copies = entry.copies;
  s.w_basis = variant.basis;
  s.e1 = entry.e1;
  return s;
}

}  // namespace qsiegel
