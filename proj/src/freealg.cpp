#include "postlie/freealg.hpp"

#include <algorithm>

namespace postlie {

int weight(const Word& w) {
  int s = 0;
  for (Letter v : w) s += letter_weight(v);
  return s;
}

bool word_less(const Word& a, const Word& b) {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ w.size();
  for (Letter v : w) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t WordPairHash::operator()(const std::pair<Word, Word>& p) const noexcept {
  WordHash h;
  return h(p.first) * 31 + h(p.second) + 0x51ed27;
}

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

// ---- Poly ----

Poly Poly::word(const Word& w, const Q& c) {
  Poly p;
  p.add(w, c);
  return p;
}

void Poly::add(const Word& w, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Q Poly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Q(0) : it->second;
}

std::vector<std::pair<Word, Q>> Poly::sorted() const {
  std::vector<std::pair<Word, Q>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
  return v;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

void Poly::add_scaled(const Poly& q, const Q& c) {
  if (sgn(c) == 0) return;
  for (const auto& [w, x] : q.terms_) add(w, x * c);
}

// ---- Tensor2 ----

void Tensor2::add(const Word& a, const Word& b, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Q Tensor2::coeff(const Word& a, const Word& b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? Q(0) : it->second;
}

std::vector<std::pair<Tensor2::Key, Q>> Tensor2::sorted() const {
  std::vector<std::pair<Key, Q>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    int wx = weight(x.first.first) + weight(x.first.second);
    int wy = weight(y.first.first) + weight(y.first.second);
    if (wx != wy) return wx < wy;
    if (x.first.first != y.first.first) return word_less(x.first.first, y.first.first);
    return word_less(x.first.second, y.first.second);
  });
  return v;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

void Tensor2::add_scaled(const Tensor2& t, const Q& c) {
  if (sgn(c) == 0) return;
  for (const auto& [k, x] : t.terms_) add(k.first, k.second, x * c);
}

void TensorN::add(const std::vector<Word>& ws, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(ws, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

// ---- operations ----

Poly conc(const Poly& p, const Poly& q) {
  Poly r;
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms()) r.add(concat(a, b), x * y);
  return r;
}

namespace {

void shuffle_rec(const Word& a, std::size_t i, const Word& b, std::size_t j, Word& cur, Poly& out, const Q& c) {
  if (i == a.size() && j == b.size()) {
    out.add(cur, c);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffle_rec(a, i + 1, b, j, cur, out, c);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffle_rec(a, i, b, j + 1, cur, out, c);
    cur.pop_back();
  }
}

}  // namespace

Poly shuffle_words(const Word& a, const Word& b) {
  Poly out;
  Word cur;
  cur.reserve(a.size() + b.size());
  shuffle_rec(a, 0, b, 0, cur, out, Q(1));
  return out;
}

Poly shuffle(const Poly& p, const Poly& q) {
  Poly out;
  Word cur;
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms()) {
      cur.clear();
      shuffle_rec(a, 0, b, 0, cur, out, x * y);
    }
  return out;
}

void for_each_split(const Word& w, int n, const std::function<void(const std::vector<Word>&)>& f) {
  std::vector<Word> parts(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      f(parts);
      return;
    }
    for (int s = 0; s < n; ++s) {
      parts[s].push_back(w[i]);
      rec(i + 1);
      parts[s].pop_back();
    }
  };
  rec(0);
}

Tensor2 coproduct_sh(const Poly& p) {
  Tensor2 t;
  for (const auto& [w, c] : p.terms())
    for_each_split(w, 2, [&](const std::vector<Word>& parts) { t.add(parts[0], parts[1], c); });
  return t;
}

Tensor2 deconcat(const Poly& p) {
  Tensor2 t;
  for (const auto& [w, c] : p.terms())
    for (std::size_t i = 0; i <= w.size(); ++i)
      t.add(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()), c);
  return t;
}

Poly antipode(const Poly& p) {
  Poly r;
  for (const auto& [w, c] : p.terms()) r.add(reversed(w), w.size() % 2 ? Q(-c) : c);
  return r;
}

Q pairing(const Poly& p, const Poly& q) {
  const Poly& small = p.size() <= q.size() ? p : q;
  const Poly& big = p.size() <= q.size() ? q : p;
  Q s = 0;
  for (const auto& [w, c] : small.terms()) s += c * big.coeff(w);
  return s;
}

Q pairing(const Tensor2& a, const Tensor2& b) {
  Q s = 0;
  for (const auto& [k, c] : a.terms()) s += c * b.coeff(k.first, k.second);
  return s;
}

TensorN iterated_coproduct(const Poly& p, int n) {
  TensorN t(n);
  for (const auto& [w, c] : p.terms()) for_each_split(w, n, [&](const std::vector<Word>& parts) { t.add(parts, c); });
  return t;
}

Poly bracket(const Poly& p, const Poly& q) { return conc(p, q) - conc(q, p); }

Poly nested_bracket(Letter v, const std::vector<Poly>& a) {
  Poly A = Poly::one();
  for (const auto& x : a) A = conc(A, x);
  Poly r;
  for (const auto& [w, c] : A.terms())
    for_each_split(w, 2, [&](const std::vector<Word>& parts) {
      Word u = reversed(parts[0]);
      u.push_back(v);
      u.insert(u.end(), parts[1].begin(), parts[1].end());
      r.add(u, parts[0].size() % 2 ? Q(-c) : c);
    });
  return r;
}

Poly right_nested(const std::vector<Poly>& xs, const Poly& t) {
  Poly r = t;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) r = bracket(*it, r);
  return r;
}

bool is_lie_element(const Poly& p) {
  if (sgn(p.coeff({})) != 0) return false;
  Tensor2 d = coproduct_sh(p);
  for (const auto& [w, c] : p.terms()) {
    d.add(w, {}, -c);
    d.add({}, w, -c);
  }
  return d.is_zero();
}

std::vector<Word> basis_words(int wt) {
  std::vector<Word> out;
  if (wt < 0) return out;
  Word cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    // v0 and v1 both weigh 1
    for (Letter v = 0; v <= static_cast<Letter>(rest); ++v) {
      if (letter_weight(v) > rest) continue;
      cur.push_back(v);
      rec(rest - letter_weight(v));
      cur.pop_back();
    }
  };
  rec(wt);
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<Word> words_up_to(int max_weight) {
  std::vector<Word> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto b = basis_words(w);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Tensor2 tensor(const Poly& a, const Poly& b) {
  Tensor2 t;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) t.add(x, y, c * d);
  return t;
}

Tensor2 coproduct_sh_conc(const Tensor2& a, const Tensor2& b) {
  Tensor2 t;
  for (const auto& [k, c] : a.terms())
    for (const auto& [l, d] : b.terms()) t.add(concat(k.first, l.first), concat(k.second, l.second), c * d);
  return t;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += 'v' + std::to_string(w[i]);
  }
  return s;
}

}  // namespace postlie
