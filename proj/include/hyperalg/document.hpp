#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hyperalg/hyperalg.hpp"

// JSON documents exchanged by the command-line tool. One document per file or stream.
//
//   element:    {"algebra": {"kind": "quaternion"|"octonion", "params": [..]}, "coeffs": [..]}
//   polynomial: {"algebra": {..}, "monomials": [[coeffs, coeffs, ..], ..], "constant": coeffs}
//   root set:   {"variant": "finite", "roots": [element, ..]}
//               {"variant": "family", "algebra": {..},
//                "generator": {"scalar_part", "quadric_radius", "modulus", "angles"},
//                "real_roots": [element, ..]}
namespace hyperalg::io {

using json = nlohmann::json;

/// Malformed or invalid document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_document(const std::string& path);
void write_document(const json& doc);

AlgebraParamsd algebra_from_json(const json& doc);
json to_json(const AlgebraParamsd& algebra);

Elementd element_from_json(const json& doc);
json to_json(const Elementd& x);

NoncommutativePolynomial<double> polynomial_from_json(const json& doc);
json to_json(const NoncommutativePolynomial<double>& f);

json to_json(const RootSet<double>& roots);
json to_json(const PolarForm<double>& polar);
json to_json(const QuadRootClass<double>& cls);

}  // namespace hyperalg::io
