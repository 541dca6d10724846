#include "postlie/postlie.hpp"

#include <mutex>
#include <stdexcept>

namespace postlie {

std::string Structure::name() const {
  switch (kind) {
    case Kind::Ihara: return "ihara";
    case Kind::Ari: return "ari";
    case Kind::Uri: return "uri";
  }
  return "?";
}

Index word_index(const Word& w) { return Index(w.begin(), w.end()); }

Word substitute(const Word& w, const Index& l) {
  if (w.size() != l.size()) throw std::invalid_argument("substitute: length mismatch");
  return Word(l.begin(), l.end());
}

namespace {

Poly letters_poly(const std::vector<Letter>& xs, const Poly& t) {
  std::vector<Poly> ps;
  ps.reserve(xs.size());
  for (Letter x : xs) ps.push_back(Poly::letter(x));
  return right_nested(ps, t);
}

/// sum_{alpha in C(n)} mu_{a,alpha} [v_alpha1,[...,[v_alphal, t]]]
Poly uri_chain_sum(int a, int n, const Poly& t) {
  Poly r;
  if (n < 1) return r;
  for (const auto& alpha : compositions(n)) {
    Q mu = uri_mult(a, alpha);
    if (sgn(mu) == 0) continue;
    r.add_scaled(letters_poly(std::vector<Letter>(alpha.begin(), alpha.end()), t), mu);
  }
  return r;
}

}  // namespace

TriangleEngine::TriangleEngine(Structure s, bool uri_conjectural, int cache_max_weight)
    : s_(std::move(s)), conjectural_(uri_conjectural), cache_max_weight_(cache_max_weight) {}

Poly TriangleEngine::base_word(const Word& w, Letter v) const {
  if (w.empty()) return Poly::letter(v);
  Key key{w, v};
  {
    std::shared_lock lock(base_mtx_);
    auto it = base_cache_.find(key);
    if (it != base_cache_.end()) return it->second;
  }
  Poly r;
  switch (s_.kind) {
    case Structure::Kind::Ihara:
      if (!s_.in_v0(v)) r = bracket(Poly::letter(v), Poly::word(w));
      break;
    case Structure::Kind::Ari:
      if (v != 0) {
        Index k = word_index(w);
        int ks = abs_sum(k);
        for (const auto& l : lowerings(k)) {
          Q m = ari_mult(k, l);
          Letter s = v + static_cast<Letter>(ks - abs_sum(l));
          r.add_scaled(bracket(Poly::letter(s), Poly::word(substitute(w, l))), m);
        }
      }
      break;
    case Structure::Kind::Uri:
      if (v != 0) {
        Index k = word_index(w);
        int ks = abs_sum(k);
        for (const auto& l : lowerings(k)) {
          Q m = ari_mult(k, l);
          r.add_scaled(uri_chain_sum(static_cast<int>(v), static_cast<int>(v) + ks - abs_sum(l),
                                     Poly::word(substitute(w, l))),
                       m);
        }
      }
      break;
  }
  if (weight(w) + letter_weight(v) <= cache_max_weight_) {
    std::unique_lock lock(base_mtx_);
    base_cache_.emplace(key, r);
  }
  return r;
}

Poly TriangleEngine::lie_on_letter(const Poly& t, Letter v) const {
  Poly r;
  for (const auto& [w, c] : t.terms()) r.add_scaled(base_word(w, v), c);
  return r;
}

Poly TriangleEngine::lie_on_poly(const Poly& t, const Poly& p) const {
  std::unordered_map<Letter, Poly> on_letter;
  Poly r;
  Q c0 = t.coeff({});
  if (sgn(c0) != 0) r.add_scaled(p, c0);
  for (const auto& [u, c] : p.terms()) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      auto it = on_letter.find(u[j]);
      if (it == on_letter.end()) {
        Poly tl;
        for (const auto& [w, x] : t.terms())
          if (!w.empty()) tl.add_scaled(base_word(w, u[j]), x);
        it = on_letter.emplace(u[j], std::move(tl)).first;
      }
      for (const auto& [m, x] : it->second.terms()) {
        Word nw(u.begin(), u.begin() + j);
        nw.insert(nw.end(), m.begin(), m.end());
        nw.insert(nw.end(), u.begin() + j + 1, u.end());
        r.add(nw, c * x);
      }
    }
  }
  return r;
}

Poly TriangleEngine::factors_on_letter(const std::vector<Poly>& ts, Letter v) const {
  if (ts.empty()) return Poly::letter(v);
  if (ts.size() == 1) return lie_on_letter(ts[0], v);
  std::vector<Poly> rest(ts.begin() + 1, ts.end());
  bool all_letters = true;
  Word rest_word;
  for (const auto& p : rest) {
    if (p.size() != 1 || p.terms().begin()->first.size() != 1 || p.terms().begin()->second != 1) {
      all_letters = false;
      break;
    }
    rest_word.push_back(p.terms().begin()->first[0]);
  }
  Poly inner = all_letters ? word_on_letter(rest_word, v) : factors_on_letter(rest, v);
  Poly r = lie_on_poly(ts[0], inner);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Poly moved = lie_on_poly(ts[0], rest[i]);
    if (moved.is_zero()) continue;
    std::vector<Poly> mod = rest;
    mod[i] = std::move(moved);
    r -= factors_on_letter(mod, v);
  }
  return r;
}

Poly TriangleEngine::word_on_letter(const Word& w, Letter v) const {
  if (w.empty()) return Poly::letter(v);
  if (s_.kind == Structure::Kind::Uri && conjectural_) return tr_uri_conjectural(w, v);
  Key key{w, v};
  {
    std::shared_lock lock(word_mtx_);
    auto it = word_cache_.find(key);
    if (it != word_cache_.end()) return it->second;
  }
  Poly r;
  if (w.size() == 1) {
    r = base_word(w, v);
  } else {
    std::vector<Poly> ts;
    for (Letter x : w) ts.push_back(Poly::letter(x));
    r = factors_on_letter(ts, v);
  }
  if (weight(w) + letter_weight(v) <= cache_max_weight_) {
    std::unique_lock lock(word_mtx_);
    word_cache_.emplace(key, r);
  }
  return r;
}

Poly extend_tr(const TriangleEngine& e, const Poly& A, const Poly& B) {
  Poly r;
  for (const auto& [b, cb] : B.terms()) {
    if (b.empty()) {
      r.add({}, cb * A.coeff({}));
      continue;
    }
    int m = static_cast<int>(b.size());
    for (const auto& [a, ca] : A.terms()) {
      for_each_split(a, m, [&](const std::vector<Word>& parts) {
        Poly prod = Poly::one();
        for (int j = 0; j < m && !prod.is_zero(); ++j) prod = conc(prod, e.word_on_letter(parts[j], b[j]));
        r.add_scaled(prod, ca * cb);
      });
    }
  }
  return r;
}

Poly tr_letter_ihara(const Poly& A, Letter v, const std::set<Letter>& V0) {
  Poly r;
  for (const auto& [w, c] : A.terms()) {
    if (w.empty()) {
      r.add({v}, c);
      continue;
    }
    if (V0.count(v)) continue;
    std::vector<Poly> as;
    for (Letter x : w) as.push_back(Poly::letter(x));
    r.add_scaled(nested_bracket(v, as), c);
  }
  return r;
}

Poly tr_letter_ari(const Poly& A, Letter s) {
  Poly r;
  if (s == 0) {
    r.add({0}, A.coeff({}));
    return r;
  }
  for (const auto& [w, c] : A.terms()) {
    if (w.empty()) {
      r.add({s}, c);
      continue;
    }
    Index k = word_index(w);
    int ks = abs_sum(k);
    for (const auto& l : lowerings(k)) {
      std::vector<Poly> as;
      for (int x : l) as.push_back(Poly::letter(static_cast<Letter>(x)));
      r.add_scaled(nested_bracket(s + static_cast<Letter>(ks - abs_sum(l)), as), c * ari_mult(k, l));
    }
  }
  return r;
}

Poly tr_letter_uri(Letter k, Letter a) {
  Poly r;
  if (a == 0) return r;
  for (const auto& l : lowerings({static_cast<int>(k)})) {
    Q m = ari_mult({static_cast<int>(k)}, l);
    for (const auto& alpha : compositions(static_cast<int>(a + k) - l[0])) {
      Q mu = uri_mult(static_cast<int>(a), alpha);
      if (sgn(mu) == 0) continue;
      r.add_scaled(letters_poly(std::vector<Letter>(alpha.begin(), alpha.end()),
                                Poly::letter(static_cast<Letter>(l[0]))),
                   m * mu);
    }
  }
  return r;
}

Poly post_lie_bracket(const TriangleEngine& e, const Poly& x, const Poly& y) {
  if (!is_lie_element(x) || !is_lie_element(y)) throw std::invalid_argument("post_lie_bracket: non-Lie input");
  return e.lie_on_poly(x, y) - e.lie_on_poly(y, x) + bracket(x, y);
}

Poly uri_two_factor(const Poly& t1, const Poly& t2, Letter a) {
  Poly r;
  if (a == 0) return r;
  int ia = static_cast<int>(a);
  for (const auto& [u1, c1] : t1.terms()) {
    Index k1 = word_index(u1);
    for (const auto& [u2, c2] : t2.terms()) {
      Index k2 = word_index(u2);
      for (const auto& l2 : lowerings(k2)) {
        Q m2 = ari_mult(k2, l2);
        Poly core2 = Poly::word(substitute(u2, l2));
        for (const auto& alpha : compositions(ia + abs_sum(k2) - abs_sum(l2))) {
          Q mu = uri_mult(ia, alpha);
          if (sgn(mu) == 0) continue;
          for (std::size_t i = 0; i < alpha.size(); ++i) {
            std::vector<Letter> right(alpha.begin() + i + 1, alpha.end());
            Poly Y = letters_poly(right, core2);
            for (const auto& l1 : lowerings(k1)) {
              Q m1 = ari_mult(k1, l1);
              Poly X = uri_chain_sum(alpha[i], alpha[i] + abs_sum(k1) - abs_sum(l1), Poly::word(substitute(u1, l1)));
              if (X.is_zero()) continue;
              std::vector<Letter> left(alpha.begin(), alpha.begin() + i);
              r.add_scaled(letters_poly(left, bracket(X, Y)), c1 * c2 * m1 * m2 * mu);
            }
          }
        }
      }
    }
  }
  return r;
}

namespace {

/// Nested chain [x1,[x2,...,[xl, core]]] whose left entries are leaves or chains.
struct Chain {
  struct Left {
    Letter leaf = 0;
    std::shared_ptr<const Chain> sub;  // null for a leaf
  };
  std::vector<Left> lefts;
  Letter core = 0;
};

using ChainTerm = std::pair<Q, std::shared_ptr<const Chain>>;

/// t <| v_alpha for t = v_k as a sum of chains.
std::vector<ChainTerm> letter_chains(int k, int alpha) {
  std::vector<ChainTerm> out;
  for (const auto& l : lowerings({k})) {
    Q m = ari_mult({k}, l);
    for (const auto& beta : compositions(alpha + k - l[0])) {
      Q mu = uri_mult(alpha, beta);
      if (sgn(mu) == 0) continue;
      auto c = std::make_shared<Chain>();
      for (int b : beta) c->lefts.push_back({static_cast<Letter>(b), nullptr});
      c->core = static_cast<Letter>(l[0]);
      out.emplace_back(m * mu, c);
    }
  }
  return out;
}

/// All ways of replacing exactly one leaf of c by a chain of t = v_k.
void replace_one_leaf(const std::shared_ptr<const Chain>& c, int k, const Q& coeff, std::vector<ChainTerm>& out) {
  for (std::size_t i = 0; i < c->lefts.size(); ++i) {
    const auto& left = c->lefts[i];
    if (!left.sub) {
      for (const auto& [x, sub] : letter_chains(k, static_cast<int>(left.leaf))) {
        auto nc = std::make_shared<Chain>(*c);
        nc->lefts[i].sub = sub;
        out.emplace_back(coeff * x, nc);
      }
    } else {
      std::vector<ChainTerm> inner;
      replace_one_leaf(left.sub, k, Q(1), inner);
      for (const auto& [x, sub] : inner) {
        auto nc = std::make_shared<Chain>(*c);
        nc->lefts[i].sub = sub;
        out.emplace_back(coeff * x, nc);
      }
    }
  }
}

Poly eval_chain(const Chain& c) {
  Poly r = Poly::letter(c.core);
  for (auto it = c.lefts.rbegin(); it != c.lefts.rend(); ++it)
    r = bracket(it->sub ? eval_chain(*it->sub) : Poly::letter(it->leaf), r);
  return r;
}

}  // namespace

Poly tr_uri_conjectural(const Word& w, Letter a) {
  if (w.empty()) return Poly::letter(a);
  if (a == 0) return {};
  std::vector<ChainTerm> terms = letter_chains(static_cast<int>(w.back()), static_cast<int>(a));
  for (std::size_t r = 2; r <= w.size(); ++r) {
    int k = static_cast<int>(w[w.size() - r]);
    std::vector<ChainTerm> next;
    for (const auto& [x, c] : terms) replace_one_leaf(c, k, x, next);
    terms = std::move(next);
  }
  Poly out;
  for (const auto& [x, c] : terms) out.add_scaled(eval_chain(*c), x);
  return out;
}

}  // namespace postlie
