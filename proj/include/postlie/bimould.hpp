#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "postlie/postlie.hpp"

namespace postlie {

/// Sparse polynomial in X1, Y1, X2, Y2, ... over Q.
/// Variable index 2(i-1) is X_i and 2i-1 is Y_i.
class MPoly {
 public:
  using Exp = std::vector<int>;  // trailing zeros trimmed
  using Map = std::map<Exp, Q>;

  MPoly() = default;
  static MPoly constant(const Q& c);
  static MPoly var(int idx);
  static MPoly X(int i) { return var(2 * (i - 1)); }
  static MPoly Y(int i) { return var(2 * i - 1); }
  static MPoly monomial(const Exp& e, const Q& c = 1);

  void add(Exp e, const Q& c);
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  /// Highest variable index with a nonzero exponent, or -1.
  int max_var() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Q& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Q(-1); }
  friend MPoly operator*(const Q& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(int n) const;
  std::string to_string() const;

 private:
  Map terms_;
};

/// Replaces variable j by images[j]; throws if a used variable has no image.
MPoly substitute(const MPoly& p, const std::vector<MPoly>& images);
/// Renames X_i -> X_{i+k}, Y_i -> Y_{i+k}.
MPoly shift_depth(const MPoly& p, int k);
/// p = (var a - var b) q + r with r free of var a; returns {q, r}.
std::pair<MPoly, MPoly> divide_linear(const MPoly& p, int a, int b);

/// Sequence of components A_d in X1..Xd, Y1..Yd.
class Bimould {
 public:
  Bimould() = default;
  explicit Bimould(std::vector<MPoly> comps);
  static Bimould unit();

  const MPoly& operator[](int d) const;
  void set(int d, MPoly p);
  void add(int d, const MPoly& p);
  /// Largest depth with a nonzero component, or -1.
  int depth() const { return static_cast<int>(comps_.size()) - 1; }
  bool is_zero() const { return comps_.empty(); }

  Bimould& operator+=(const Bimould& o);
  Bimould& operator-=(const Bimould& o);
  Bimould& operator*=(const Q& c);
  friend Bimould operator+(Bimould a, const Bimould& b) { return a += b; }
  friend Bimould operator-(Bimould a, const Bimould& b) { return a -= b; }
  friend Bimould operator-(Bimould a) { return a *= Q(-1); }
  friend Bimould operator*(const Q& c, Bimould a) { return a *= c; }
  friend bool operator==(const Bimould& a, const Bimould& b) { return a.comps_ == b.comps_; }

  /// Drops all components of depth > d.
  Bimould truncated(int d) const;

 private:
  void trim();
  std::vector<MPoly> comps_;
};

/// C_{k,m} = ad(v0)^m(v_k), k >= 1, m >= 0.
struct BiLetter {
  int k;
  int m;
  friend bool operator==(const BiLetter&, const BiLetter&) = default;
};

/// Words over the letters C_{k,m}. Stored as a Poly whose letters are codes of BiLetters,
/// so conc, shuffle, brackets and is_lie_element apply unchanged. Weights of such
/// words are meaningless.
using BiPoly = Poly;

Letter c_code(const BiLetter& c);
BiLetter c_decode(Letter code);
BiPoly c_letter(int k, int m);
BiPoly c_word(const std::vector<BiLetter>& cs, const Q& coeff = 1);
std::vector<BiLetter> c_letters(const Word& w);
std::string biword_to_string(const Word& w);

/// Expansion in Q<V>.
Poly expand_c(const BiPoly& p);
/// C_{k1,m1}...C_{kd,md} -> X1^{k1-1} Y1^{m1} ... Xd^{kd-1} Yd^{md} in depth d.
Bimould rho_cbi(const BiPoly& p);
/// Inverse of rho_cbi on the components of depth <= max_depth.
BiPoly rho_cbi_inverse(const Bimould& A, int max_depth);
/// The algebra morphism dual to the Hoffman logarithm:
/// C_{k,m} -> sum (-1)^{d+1}/d * m!/(n1!...nd!) C_{l1,n1}...C_{ld,nd} over l in C(k), n weak of m.
BiPoly log_star(const BiPoly& p);
Bimould rho_dbi(const BiPoly& p);

Bimould mu(const Bimould& A, const Bimould& B);
Bimould mu_bracket(const Bimould& A, const Bimould& B);

/// Reverses the variable order in every component: X_t -> X_{d+1-t}, Y_t -> Y_{d+1-t}.
Bimould mirror(const Bimould& A);

/// The two substitution sums of arit, first minus second, without mirroring.
Bimould arit_raw(const Bimould& B, const Bimould& A);
/// arit_raw plus the two correction families of urit.
/// Throws std::domain_error if a divided difference is not a polynomial.
Bimould urit_raw(const Bimould& B, const Bimould& A);
/// The two correction families alone.
Bimould urit_corrections(const Bimould& B, const Bimould& A);
/// arit(B)(A) = mirror(arit_raw(mirror B, mirror A)); this is the convention with
/// rho_cbi(f <|_a g) = arit(rho_cbi f)(rho_cbi g). It equals -arit_raw(B, A).
Bimould arit(const Bimould& B, const Bimould& A);
/// urit(B)(A) = mirror(urit_raw(mirror B, mirror A)).
Bimould urit(const Bimould& B, const Bimould& A);

/// Preimage under rho_cbi is a Lie element at every depth <= max_depth.
bool is_alternal(const Bimould& A, int max_depth);

/// t <| C_{s,n} by the closed C-letter formulas; t a Lie element over C^bi.
BiPoly lazard_tr(const Structure& s, const BiPoly& t, const BiLetter& c);
/// t <| g for Lie t and any g over C^bi (t acts as a derivation).
BiPoly lazard_tr(const Structure& s, const BiPoly& t, const BiPoly& g);

std::string to_string(const Bimould& A);

}  // namespace postlie
