#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "postlie/postlie.hpp"

namespace postlie {

/// A (*) B = A_(1) (A_(2) <| b1) ... (A_(m+1) <| bm).
Poly glp(const TriangleEngine& e, const Poly& A, const Poly& B);
Poly glp_ihara_fast(const Poly& A, const Word& w, const std::set<Letter>& V0);
Poly glp_ari_fast(const Poly& A, const Word& w);

/// (A1 (x) A2) sh. (B1 (x) B2) = (A1 sh B1) (x) (A2 B2).
Tensor2 shuffle_bullet(const Tensor2& a, const Tensor2& b);

/// Closed form reduced cotriangles; the uri case goes through dualization.
Tensor2 cotr_irr_ihara(const Word& A, const std::set<Letter>& V0);
Tensor2 cotr_irr_ari(const Word& A);

class Dualizer;
Tensor2 cotr_irr(const Dualizer& d, const Poly& A);

/// Nested-split formula (deconcatenation splits glued with shuffle_bullet).
Tensor2 coprod_I(const Poly& A, const std::set<Letter>& V0);
/// Goncharov-type formula with the I symbol.
Tensor2 coprod_I_gon(const Poly& A, const std::set<Letter>& V0);
Tensor2 coprod_a(const Poly& A);
/// sum over A = A1 A2 ... An of (A1 (x) 1) sh. f(A2) sh. ... sh. f(An).
Tensor2 coprod_from_cotr(const Word& A, const std::function<Tensor2(const Word&)>& cotr);

class WeightBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded dualization of (*): per weight, all products W1 (*) W2 are tabulated once.
class Dualizer {
 public:
  Dualizer(std::shared_ptr<const TriangleEngine> e, int max_weight);
  const TriangleEngine& engine() const { return *e_; }
  int max_weight() const { return max_weight_; }
  /// (W1 (*) W2 | C) summed into a tensor; throws WeightBoundError above the bound.
  Tensor2 coproduct(const Poly& A) const;
  /// (w <| b | A) w (x) b over words w and letters b.
  Tensor2 cotriangle(const Poly& A) const;

 private:
  using Column = std::vector<std::tuple<Word, Word, Q>>;
  using Table = std::unordered_map<Word, Column, WordHash>;
  const Table& glp_table(int wt) const;
  const Table& tr_table(int wt) const;
  std::shared_ptr<const TriangleEngine> e_;
  int max_weight_;
  mutable std::mutex mtx_;
  mutable std::map<int, std::unique_ptr<Table>> glp_tables_, tr_tables_;
};

Tensor2 coprod_dualized(const Dualizer& d, const Poly& A);

int ind_max(const Word& w);
int k_level(const Word& w, Letter k);
enum class FiltrationMode { IndMaxLower, IndMaxUpper, KLevel };
/// IndMaxLower: every word of `result` has ind_max >= ind_max(w).
/// IndMaxUpper: every right factor of `t` has ind_max <= ind_max(w).
/// KLevel: every right factor of `t` has k_level <= k_level(w) for all k.
bool filtration_check(const Word& w, const Poly& result, FiltrationMode mode);
bool filtration_check(const Word& w, const Tensor2& t, FiltrationMode mode);

}  // namespace postlie
