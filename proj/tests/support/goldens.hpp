#pragma once

#include <string>
#include <vector>

#include "postlie/bimould.hpp"
#include "postlie/glhopf.hpp"
#include "postlie/verifier.hpp"

namespace postlie::golden {

/// "v1.v2 (x) v3" style pairs with coefficients.
struct TensorTerm {
  std::string left, right;
  Q coeff;
};
Tensor2 tensor_of(const std::vector<TensorTerm>& ts);

/// Reference values.
Poly tr_ari_v2v3_v3();
Poly glp_ari_v2v3_v1v0();
/// The same product as computed; differs from the reference one in two coefficients.
Poly glp_ari_v2v3_v1v0_computed();
Tensor2 coprod_ihara_v1v2v3v0();
/// Reference value without the two boundary terms.
Tensor2 coprod_ari_v2v2v1v3();
Poly tr_ihara_v0v1_v1();
/// Rows m = 1..10, entries n = 1..m.
std::vector<std::vector<Q>> b1_table();
Bimould rho_d_c30();
Bimould rho_d_c21();
Bimould urit_example();
BiPoly lazard_uri_c30_c21();
BRelation threshold_example_i();
BRelation threshold_example_ii();

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};
/// Every reference example compared with the computed value.
std::vector<Check> check_all();

}  // namespace postlie::golden
