#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "postlie/combinat.hpp"
#include "postlie/postlie.hpp"

namespace postlie {

using Json = nlohmann::ordered_json;

enum class SuiteKind { Proved, Conjecture };

struct Failure {
  Json params;
  std::string expected;
  std::string actual;
};

/// Result of one verification suite. `pass()` iff there are no failures.
struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  long count = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  SuiteKind kind = SuiteKind::Proved;
  /// Sub-reports of a merged report.
  std::vector<VerificationReport> parts;

  bool pass() const;
  /// Elapsed time is written only if `timing` is set, so output stays byte-identical.
  Json to_json(bool timing = false) const;
  static VerificationReport from_json(const Json& j);
  std::string to_text(bool timing = false) const;
};

/// Concatenates reports; the kind is Conjecture if any part is.
VerificationReport merge_reports(const std::string& suite, std::vector<VerificationReport> parts);

/// Polynomial with integer coefficients in the symbols B(m,n), of degree <= 2.
/// A monomial is (m1,n1,m2,n2) with (m1,n1) <= (m2,n2); degree one has m1 = n1 = 0.
class BRelation {
 public:
  using Mono = std::array<int, 4>;
  void add(int m, int n, long long c);
  void add(int m1, int n1, int m2, int n2, long long c);
  const std::map<Mono, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Q evaluate(const MultFamily& B) const;
  std::string to_string() const;
  friend bool operator==(const BRelation&, const BRelation&) = default;
  BRelation operator-() const;

 private:
  std::map<Mono, long long> terms_;
};

/// LHS - RHS of the first threshold shuffle identity as a polynomial in B.
BRelation threshold_relation_i(const Composition& sigma, const Composition& theta, int d1, int d2);
/// The vanishing sum of the second threshold shuffle identity.
BRelation threshold_relation_ii(const Composition& sigma, const Composition& tau,
                                const Composition& theta, int d1, int d2);

bool verify_threshold_shuffle_i(const Composition& sigma, const Composition& theta, int d1, int d2,
                                const MultFamily& B);
bool verify_threshold_shuffle_ii(const Composition& sigma, const Composition& tau,
                                 const Composition& theta, int d1, int d2, const MultFamily& B);

/// Named families: "uri", "bt:<t>" (t rational), "constant".
MultFamily family_by_name(const std::string& name);

/// All instances of both identities with total composition weight <= bound.
VerificationReport verify_threshold_conjecture(int bound, const std::string& family, int jobs = 1);

/// Both post-Lie axioms on spanning Lie triples of total weight <= max_weight.
VerificationReport verify_axioms(const Structure& s, int max_weight, int jobs = 1);

/// Coassociativity of the dual coproduct and both antipode relations of its antipode.
VerificationReport verify_hopf(const Structure& s, int max_weight, int jobs = 1);

/// (A (*) B | C) = (A (x) B | Delta(C)) over all basis triples of weight <= max_weight.
VerificationReport verify_duality(const Structure& s, int max_weight, int jobs = 1);

/// Closed forms against the generic recursion and the dualization: exhaustive up to
/// max_weight, plus `random_count` random instances of weight random_weight.
VerificationReport verify_oracles(int max_weight, int random_weight, int random_count,
                                  std::uint64_t seed, int jobs = 1);

/// The depth-graded part of <|_u equals <|_a on word <| letter instances.
VerificationReport verify_depth_graded(int max_weight, int jobs = 1);

/// Restrictions to Q<v0,v1>, the orthogonal subalgebra of v1, the period relation and the
/// two-letter ari bracket formula.
VerificationReport verify_embeddings_and_orthogonals(int max_weight, int jobs = 1);

/// rho_C(f <|_a g) = arit(rho_C f)(rho_C g) on brackets of generators.
VerificationReport verify_bimould_iso(int max_weight, int max_depth, int jobs = 1);
/// rho_D(f <|_u g) = urit(rho_D f)(rho_D g) on brackets of generators.
VerificationReport verify_bimould_iso_conjecture(int max_weight, int max_depth, int jobs = 1);

/// ind_max filtration of A (*)_a w and of the right factors of Delta_a, on random instances.
VerificationReport verify_filtration(int max_weight, int count, std::uint64_t seed, int jobs = 1);
/// k-level of the right factors of Delta_a on random words.
VerificationReport verify_k_level(int max_weight, int count, std::uint64_t seed, int jobs = 1);

/// The multiplicity, binomial and composition-count identities, exhaustive in fixed bounds.
VerificationReport verify_combinatorial(int jobs = 1);

}  // namespace postlie
