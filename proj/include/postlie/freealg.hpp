#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace postlie {

using Q = mpq_class;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// wt(v0) = 1, wt(vi) = i.
inline int letter_weight(Letter v) { return v == 0 ? 1 : static_cast<int>(v); }
int weight(const Word& w);
inline int depth(const Word& w) { return static_cast<int>(w.size()); }

/// Canonical order: weight, then depth, then lexicographic on indices.
bool word_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};
struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept;
};

Word concat(const Word& a, const Word& b);
Word reversed(const Word& w);

/// Element of Q<V>: finite map word -> nonzero rational.
class Poly {
 public:
  using Map = std::unordered_map<Word, Q, WordHash>;

  Poly() = default;
  static Poly one() { return word({}); }
  static Poly letter(Letter v) { return word({v}); }
  static Poly word(const Word& w, const Q& c = 1);

  void add(const Word& w, const Q& c);
  Q coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  /// Terms in canonical order.
  std::vector<std::pair<Word, Q>> sorted() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Q& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Q(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Accumulate c * q into this.
  void add_scaled(const Poly& q, const Q& c);

 private:
  Map terms_;
};

/// Element of Q<V> (x) Q<V>.
class Tensor2 {
 public:
  using Key = std::pair<Word, Word>;
  using Map = std::unordered_map<Key, Q, WordPairHash>;

  void add(const Word& a, const Word& b, const Q& c);
  Q coeff(const Word& a, const Word& b) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  std::vector<std::pair<Key, Q>> sorted() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms_ == b.terms_; }
  void add_scaled(const Tensor2& t, const Q& c);

 private:
  Map terms_;
};

/// Element of the n-fold tensor power; arity fixed per value.
class TensorN {
 public:
  explicit TensorN(int arity = 1) : arity_(arity) {}
  int arity() const { return arity_; }
  void add(const std::vector<Word>& ws, const Q& c);
  const std::map<std::vector<Word>, Q>& terms() const { return terms_; }
  friend bool operator==(const TensorN& a, const TensorN& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  int arity_;
  std::map<std::vector<Word>, Q> terms_;
};

Poly conc(const Poly& p, const Poly& q);
Poly shuffle(const Poly& p, const Poly& q);
Poly shuffle_words(const Word& a, const Word& b);
Tensor2 coproduct_sh(const Poly& p);
Tensor2 deconcat(const Poly& p);
Poly antipode(const Poly& p);
Q pairing(const Poly& p, const Poly& q);
Q pairing(const Tensor2& a, const Tensor2& b);
TensorN iterated_coproduct(const Poly& p, int n);

/// Calls f(parts) for every distribution of the letters of w into n ordered
/// slots (order kept inside each slot). Each call is one Sweedler summand.
void for_each_split(const Word& w, int n, const std::function<void(const std::vector<Word>&)>& f);

Poly bracket(const Poly& p, const Poly& q);
/// [...[[v,a1],a2],...,an] computed as S(A_(1)) v A_(2), A = a1...an.
Poly nested_bracket(Letter v, const std::vector<Poly>& a);
/// Right-nested [x1,[x2,...,[xn, t]]].
Poly right_nested(const std::vector<Poly>& xs, const Poly& t);
bool is_lie_element(const Poly& p);

std::vector<Word> basis_words(int weight);
/// Words of weight in [0, max_weight], canonical order.
std::vector<Word> words_up_to(int max_weight);

/// Componentwise tensor product helpers.
Tensor2 tensor(const Poly& a, const Poly& b);
Tensor2 coproduct_sh_conc(const Tensor2& a, const Tensor2& b);  // componentwise conc

std::string word_to_string(const Word& w);

}  // namespace postlie
