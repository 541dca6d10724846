#pragma once

#include <memory>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "postlie/combinat.hpp"
#include "postlie/freealg.hpp"

namespace postlie {

struct Structure {
  enum class Kind { Ihara, Ari, Uri };
  Kind kind = Kind::Ari;
  std::set<Letter> v0{0};  // only used by Ihara

  static Structure ihara(std::set<Letter> v0 = {0}) { return {Kind::Ihara, std::move(v0)}; }
  static Structure ari() { return {Kind::Ari, {0}}; }
  static Structure uri() { return {Kind::Uri, {0}}; }
  bool in_v0(Letter v) const { return v0.count(v) > 0; }
  std::string name() const;
};

Index word_index(const Word& w);
/// A(l): replaces the letter indices of w by l.
Word substitute(const Word& w, const Index& l);

/// Triangle map of one structure with its memo tables. Thread-safe.
class TriangleEngine {
 public:
  explicit TriangleEngine(Structure s, bool uri_conjectural = false, int cache_max_weight = 12);

  const Structure& structure() const { return s_; }
  bool uri_conjectural() const { return conjectural_; }

  /// Linear map T(w, v) with t <| v = sum c_w T(w, v) for Lie t.
  Poly base_word(const Word& w, Letter v) const;
  /// t <| v for a Lie element t (a constant term c contributes c v).
  Poly lie_on_letter(const Poly& t, Letter v) const;
  /// t <| p for a Lie element t, acting as a derivation on products.
  Poly lie_on_poly(const Poly& t, const Poly& p) const;
  /// w <| v by the recursion over Lie factors (or the conjectural formula for uri if enabled).
  Poly word_on_letter(const Word& w, Letter v) const;
  /// (t1 ... tm) <| v for Lie elements t_i.
  Poly factors_on_letter(const std::vector<Poly>& ts, Letter v) const;

 private:
  Structure s_;
  bool conjectural_;
  int cache_max_weight_;
  using Key = std::pair<Word, Letter>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return WordHash{}(k.first) * 131 + k.second; }
  };
  mutable std::shared_mutex base_mtx_, word_mtx_;
  mutable std::unordered_map<Key, Poly, KeyHash> base_cache_, word_cache_;
};

/// A <| B via the extension rules; word <| letter through the engine.
Poly extend_tr(const TriangleEngine& e, const Poly& A, const Poly& B);

Poly tr_letter_ihara(const Poly& A, Letter v, const std::set<Letter>& V0);
Poly tr_letter_ari(const Poly& A, Letter s);
Poly tr_letter_uri(Letter k, Letter a);

/// {x,y} = x<|y - y<|x + [x,y]; throws std::invalid_argument on non-Lie input.
Poly post_lie_bracket(const TriangleEngine& e, const Poly& x, const Poly& y);

/// (t1 t2) <| v_a for Lie t1, t2 by the double-composition formula.
Poly uri_two_factor(const Poly& t1, const Poly& t2, Letter a);
/// (a1...an) <| v_a by the iterated leaf replacement formula (unproven).
Poly tr_uri_conjectural(const Word& w, Letter a);

}  // namespace postlie
