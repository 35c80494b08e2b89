#include "hyperalg/document.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <vector>

namespace hyperalg::io {

namespace {

Coefficients<double> coeffs_from_json(const json& arr, int dimension) {
  if (!arr.is_array()) throw DocumentError("coefficients must be an array");
  if (static_cast<int>(arr.size()) != dimension)
    throw DocumentError("expected " + std::to_string(dimension) + " coefficients, got " + std::to_string(arr.size()));
  Coefficients<double> c(dimension);
  for (int i = 0; i < dimension; ++i) {
    if (!arr[static_cast<std::size_t>(i)].is_number()) throw DocumentError("coefficients must be numbers");
    c[i] = arr[static_cast<std::size_t>(i)].get<double>();
  }
  return c;
}

json coeffs_to_json(const Elementd& x) {
  json arr = json::array();
  for (int i = 0; i < x.dimension(); ++i) arr.push_back(x[i]);
  return arr;
}

Elementd make_element(const AlgebraParamsd& alg, const json& arr) {
  try {
    return Elementd(alg, coeffs_from_json(arr, alg.dimension()));
  } catch (const AlgebraError& e) {
    throw DocumentError(e.what());
  }
}

}  // namespace

json read_document(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

void write_document(const json& doc) { std::cout << doc.dump(2) << '\n'; }

AlgebraParamsd algebra_from_json(const json& doc) {
  try {
    const auto& a = doc.at("algebra");
    const auto kind_name = a.at("kind").get<std::string>();
    AlgebraKind kind;
    if (kind_name == "quaternion")
      kind = AlgebraKind::Quaternion;
    else if (kind_name == "octonion")
      kind = AlgebraKind::Octonion;
    else
      throw DocumentError("unknown algebra kind '" + kind_name + "'");
    const auto params = a.at("params").get<std::vector<double>>();
    return AlgebraParamsd::from_span(kind, params);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("bad algebra: ") + e.what());
  } catch (const AlgebraError& e) {
    throw DocumentError(e.what());
  }
}

json to_json(const AlgebraParamsd& algebra) {
  json params = json::array();
  for (double p : algebra.params()) params.push_back(p);
  return {{"kind", to_string(algebra.kind())}, {"params", params}};
}

Elementd element_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("coeffs")) throw DocumentError("element document needs 'algebra' and 'coeffs'");
  return make_element(algebra_from_json(doc), doc["coeffs"]);
}

json to_json(const Elementd& x) { return {{"algebra", to_json(x.algebra())}, {"coeffs", coeffs_to_json(x)}}; }

NoncommutativePolynomial<double> polynomial_from_json(const json& doc) {
  const auto alg = algebra_from_json(doc);
  NoncommutativePolynomial<double> f(alg);
  if (doc.contains("monomials")) {
    if (!doc["monomials"].is_array()) throw DocumentError("'monomials' must be an array of chains");
    for (const auto& chain_doc : doc["monomials"]) {
      if (!chain_doc.is_array() || chain_doc.size() < 2)
        throw DocumentError("a monomial chain needs at least two coefficient arrays");
      std::vector<Elementd> chain;
      for (const auto& c : chain_doc) chain.push_back(make_element(alg, c));
      f.add_monomial(std::move(chain));
    }
  }
  if (doc.contains("constant")) f.set_constant(make_element(alg, doc["constant"]));
  return f;
}

json to_json(const NoncommutativePolynomial<double>& f) {
  json monomials = json::array();
  for (const auto& m : f.monomials()) {
    json chain = json::array();
    for (const auto& c : m.chain) chain.push_back(coeffs_to_json(c));
    monomials.push_back(chain);
  }
  return {{"algebra", to_json(f.algebra())}, {"monomials", monomials}, {"constant", coeffs_to_json(f.constant())}};
}

json to_json(const RootSet<double>& roots) {
  if (roots.is_finite()) {
    json list = json::array();
    for (const auto& r : roots.roots()) list.push_back(to_json(r));
    return {{"variant", "finite"}, {"roots", list}};
  }
  const auto& fam = roots.family();
  json reals = json::array();
  for (const auto& r : fam.real_roots) reals.push_back(to_json(r));
  return {{"variant", "family"},
          {"algebra", to_json(fam.algebra)},
          {"generator",
           {{"scalar_part", fam.scalar_part},
            {"quadric_radius", fam.quadric_radius},
            {"modulus", fam.modulus},
            {"angles", fam.angles}}},
          {"real_roots", reals}};
}

json to_json(const PolarForm<double>& polar) {
  return {{"variant", to_string(polar.variant)},
          {"modulus", polar.modulus},
          {"angle", polar.angle},
          {"scalar_sign", polar.scalar_sign},
          {"axis", to_json(polar.axis)}};
}

json to_json(const QuadRootClass<double>& cls) {
  json out = {{"tag", to_string(cls.tag)}};
  out["criterion_value"] = cls.criterion_value ? json(*cls.criterion_value) : json(nullptr);
  if (cls.tag == QuadRootTag::Ellipsoidal || cls.tag == QuadRootTag::Hyperboloidal) {
    out["scalar_part"] = cls.scalar_part;
    out["pure_norm"] = cls.pure_norm;
    out["quadric_radius"] = cls.quadric_radius();
  }
  return out;
}

}  // namespace hyperalg::io
